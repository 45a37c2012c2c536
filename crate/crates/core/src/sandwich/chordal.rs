//! Chordality: maximum cardinality search, perfect elimination orderings,
//! and chordless cycle / induced path search.

use fixedbitset::FixedBitSet;

use crate::graph::{bfs_path, Graph, Vertex};

/// Visit order of maximum cardinality search; ties go to the smallest vertex.
/// Reversed, it is a perfect elimination ordering iff the graph is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// True when every vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<Vertex> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        // it suffices that the earliest later neighbour sees all the others
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// Perfect elimination ordering from MCS, or `None` when the graph is not chordal.
pub fn elimination_ordering(g: &Graph) -> Option<Vec<Vertex>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

/// Every cycle of length at least four has a chord.
pub fn is_chordal(g: &Graph) -> bool {
    g.vertex_count() <= 3 || elimination_ordering(g).is_some()
}

/// A chordless cycle of length >= 4, or `None` iff the graph is chordal.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    if is_chordal(g) {
        return None;
    }
    let cycle = shortest_chordless_cycle(g);
    debug_assert!(cycle.is_some(), "non-chordal graph without a chordless cycle");
    cycle
}

/// A shortest chordless cycle (length >= 4), first in vertex order among the
/// shortest. The cycle is returned as `[v, x, ..., y]` with `x < y` the two
/// cycle neighbours of its smallest-indexed apex `v`.
///
/// For every vertex `v` and non-adjacent pair of its neighbours `x, y`, a
/// shortest `x`-`y` path avoiding the rest of `N[v]` closes a chordless cycle
/// through `v`; every chordless cycle arises this way from any of its vertices.
pub fn shortest_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<Vertex>> = None;
    for v in 0..n {
        let nb: Vec<Vertex> = g.neighbors(v).collect();
        let closed = {
            let mut s = g.neighborhood(v).clone();
            s.insert(v);
            s
        };
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let path = bfs_path(g, &[x], y, |_, z| !closed.contains(z), |z| z != x);
                if let Some(path) = path {
                    if best.as_ref().is_none_or(|b| path.len() + 1 < b.len()) {
                        let mut cycle = Vec::with_capacity(path.len() + 1);
                        cycle.push(v);
                        cycle.extend(path);
                        if cycle.len() == 4 {
                            return Some(cycle);
                        }
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Every chordless cycle of length >= 4, each once, starting at its smallest
/// vertex and oriented so the second vertex is smaller than the last.
pub fn chordless_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    fn extend(g: &Graph, path: &mut Vec<Vertex>, on_path: &mut FixedBitSet, out: &mut Vec<Vec<Vertex>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        let k = path.len() - 1;
        for x in g.neighbors(last) {
            if x <= s || on_path.contains(x) {
                continue;
            }
            // x may touch only `last` among p1..pk
            if path[1..k].iter().any(|&p| g.has_edge(p, x)) {
                continue;
            }
            if g.has_edge(s, x) {
                if k >= 2 && path[1] < x {
                    let mut c = path.clone();
                    c.push(x);
                    out.push(c);
                }
                continue;
            }
            path.push(x);
            on_path.insert(x);
            extend(g, path, on_path, out);
            on_path.set(x, false);
            path.pop();
        }
    }

    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        for p1 in g.neighbors(s).filter(|&p| p > s) {
            let mut path = vec![s, p1];
            let mut on_path = FixedBitSet::with_capacity(n);
            on_path.insert(s);
            on_path.insert(p1);
            extend(g, &mut path, &mut on_path, &mut out);
        }
    }
    out
}

/// Every induced path from `u` to `v` with at least two interior vertices,
/// for a non-adjacent pair `u, v`. Adding the pair `(u, v)` closes each such
/// path into a chordless cycle of length >= 4.
pub fn induced_paths(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vec<Vertex>> {
    fn extend(g: &Graph, v: Vertex, path: &mut Vec<Vertex>, on_path: &mut FixedBitSet, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if g.has_edge(last, v) {
            if path.len() >= 3 {
                let mut p = path.clone();
                p.push(v);
                out.push(p);
            }
            return;
        }
        let k = path.len() - 1;
        for x in g.neighbors(last) {
            if x == v || on_path.contains(x) || path[..k].iter().any(|&p| g.has_edge(p, x)) {
                continue;
            }
            path.push(x);
            on_path.insert(x);
            extend(g, v, path, on_path, out);
            on_path.set(x, false);
            path.pop();
        }
    }

    assert!(!g.has_edge(u, v) && u != v);
    let mut out = Vec::new();
    let mut on_path = FixedBitSet::with_capacity(g.vertex_count());
    on_path.insert(u);
    extend(g, v, &mut vec![u], &mut on_path, &mut out);
    out
}
