//! Brute-force reference implementations used only by tests.
//!
//! Nothing in here shares code with the `phylocompat` library: graphs are
//! plain `u64` adjacency masks (at most 64 vertices, in practice at most
//! ~11), and every check follows the textbook definition directly, trading
//! speed for obviousness.

/// Undirected simple graph on at most 64 vertices, one bitmask row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "oracle graphs are limited to 64 vertices");
        Self { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add(u, v);
        }
        g
    }

    pub fn add(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of the unordered pair `{u, v}` in lexicographic pair order.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Catalan number via the product formula, independent of any enumeration.
pub fn catalan(m: u64) -> u64 {
    // C_m = prod_{k=2..m} (m + k) / k, computed exactly in u128
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for k in 2..=m as u128 {
        num *= m as u128 + k;
        den *= k;
    }
    (num / den) as u64
}

/// Does the vertex subset `mask` induce a single cycle of length >= 4?
fn induces_long_cycle(g: &SmallGraph, mask: u64) -> bool {
    let size = mask.count_ones();
    if size < 4 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    for v in 0..g.n {
        if mask >> v & 1 == 1 && (g.adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    // every vertex has degree two inside the subset; connected means one cycle
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in 0..g.n {
            if frontier >> v & 1 == 1 {
                next |= g.adj[v] & mask;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == mask
}

/// Exhaustive search over all vertex subsets for an induced cycle of length >= 4.
pub fn has_chordless_cycle_bruteforce(g: &SmallGraph) -> bool {
    assert!(g.n <= 20, "subset enumeration is exponential");
    (0u64..1 << g.n).any(|mask| induces_long_cycle(g, mask))
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn is_chordal_by_elimination(g: &SmallGraph) -> bool {
    let mut alive: u64 = if g.n == 64 { !0 } else { (1u64 << g.n) - 1 };
    while alive != 0 {
        let mut removed = false;
        for v in 0..g.n {
            if alive >> v & 1 == 0 {
                continue;
            }
            let nb = g.adj[v] & alive;
            let simplicial = (0..g.n)
                .filter(|&w| nb >> w & 1 == 1)
                .all(|w| nb & !(1u64 << w) & !g.adj[w] == 0);
            if simplicial {
                alive &= !(1u64 << v);
                removed = true;
                break;
            }
        }
        if !removed {
            return false;
        }
    }
    true
}

/// A sandwich instance in oracle form: mandatory edges and conflicts.
#[derive(Clone, Debug)]
pub struct SmallInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub conflicts: Vec<(usize, usize)>,
}

impl SmallInstance {
    fn conflict_graph(&self) -> SmallGraph {
        SmallGraph::from_edges(self.n, &self.conflicts)
    }

    /// Pairs neither in E nor in F.
    pub fn free_pairs(&self) -> Vec<(usize, usize)> {
        let e = SmallGraph::from_edges(self.n, &self.edges);
        let f = self.conflict_graph();
        all_pairs(self.n)
            .into_iter()
            .filter(|&(u, v)| !e.has(u, v) && !f.has(u, v))
            .collect()
    }

    /// Bitmask over lexicographic pair indices of the mandatory edges.
    pub fn edge_mask(&self) -> u64 {
        assert!(pair_count(self.n) <= 64);
        self.edges
            .iter()
            .fold(0, |acc, &(u, v)| acc | 1 << pair_index(self.n, u, v))
    }

    pub fn conflict_mask(&self) -> u64 {
        assert!(pair_count(self.n) <= 64);
        self.conflicts
            .iter()
            .fold(0, |acc, &(u, v)| acc | 1 << pair_index(self.n, u, v))
    }
}

fn graph_from_pair_mask(n: usize, mask: u64) -> SmallGraph {
    let mut g = SmallGraph::new(n);
    for (i, (u, v)) in all_pairs(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add(u, v);
        }
    }
    g
}

/// Every proper chordal completion, as a pair-index bitmask of its full edge
/// set (E plus fill), sorted ascending. Exponential in the number of free pairs.
pub fn all_proper_completions(inst: &SmallInstance) -> Vec<u64> {
    let free = inst.free_pairs();
    assert!(free.len() <= 22, "too many free pairs for exhaustive enumeration");
    let base = inst.edge_mask();
    let free_bits: Vec<u64> = free.iter().map(|&(u, v)| 1u64 << pair_index(inst.n, u, v)).collect();
    let mut out = Vec::new();
    for subset in 0u64..1 << free.len() {
        let mut mask = base;
        for (i, bit) in free_bits.iter().enumerate() {
            if subset >> i & 1 == 1 {
                mask |= bit;
            }
        }
        if is_chordal_by_elimination(&graph_from_pair_mask(inst.n, mask)) {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

/// Smallest proper completion found by trying subsets of free pairs in
/// increasing cardinality; `None` when no proper completion exists.
pub fn first_completion_by_cardinality(inst: &SmallInstance) -> Option<Vec<(usize, usize)>> {
    let free = inst.free_pairs();
    assert!(free.len() <= 26, "too many free pairs for exhaustive enumeration");
    let base = SmallGraph::from_edges(inst.n, &inst.edges);
    for size in 0..=free.len() {
        let mut found = None;
        for_each_combination(free.len(), size, &mut |idx| {
            if found.is_some() {
                return;
            }
            let mut g = base.clone();
            for &i in idx {
                g.add(free[i].0, free[i].1);
            }
            if is_chordal_by_elimination(&g) {
                found = Some(idx.iter().map(|&i| free[i]).collect());
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Inclusion-minimal elements of a family of pair masks.
pub fn inclusion_minimal(masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
        .collect()
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// All simple paths from `u` to `v` (as vertex sequences), by plain DFS.
pub fn simple_paths(g: &SmallGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn rec(g: &SmallGraph, cur: &mut Vec<usize>, used: u64, v: usize, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        if last == v {
            out.push(cur.clone());
            return;
        }
        for w in 0..g.n {
            if g.has(last, w) && used >> w & 1 == 0 {
                cur.push(w);
                rec(g, cur, used | 1 << w, v, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &mut vec![u], 1 << u, v, &mut out);
    out
}

/// True when no two non-consecutive vertices of the open path are adjacent.
pub fn path_is_chordless(g: &SmallGraph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in i + 2..path.len() {
            if g.has(path[i], path[j]) {
                return false;
            }
        }
    }
    true
}

/// True when the closed cycle (last vertex adjacent to the first) has no chord.
pub fn cycle_is_chordless(g: &SmallGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if g.has(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// All chordless u-v paths with at least one interior vertex, every interior
/// vertex satisfying `interior_ok`. Brute force over all simple paths.
pub fn chordless_paths_with_interior(
    g: &SmallGraph,
    u: usize,
    v: usize,
    interior_ok: impl Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    simple_paths(g, u, v)
        .into_iter()
        .filter(|p| p.len() >= 3)
        .filter(|p| p[1..p.len() - 1].iter().all(|&t| interior_ok(t)))
        .filter(|p| path_is_chordless(g, p))
        .collect()
}

/// Number of triangulations of the polygon `0..k` whose chords all satisfy
/// `allowed`, by the interval recurrence over the triangle on side (0, k-1).
pub fn triangulation_count_dp(k: usize, allowed: impl Fn(usize, usize) -> bool) -> u64 {
    assert!(k >= 3);
    // ok(i, j) for a polygon side or an allowed chord
    let ok = |i: usize, j: usize| j == i + 1 || (i == 0 && j == k - 1) || allowed(i, j);
    let mut count = vec![vec![0u64; k]; k];
    for i in 0..k - 1 {
        count[i][i + 1] = 1;
    }
    for len in 2..k {
        for i in 0..k - len {
            let j = i + len;
            if !ok(i, j) {
                continue;
            }
            count[i][j] = (i + 1..j)
                .filter(|&m| ok(i, m) && ok(m, j))
                .map(|m| count[i][m] * count[m][j])
                .sum();
        }
    }
    count[0][k - 1]
}

/// Triangulations of the k-cycle found by testing every (k-3)-subset of its
/// chords for chordality. Each result is a sorted list of chords (i, j), i < j.
pub fn polygon_triangulations_bruteforce(k: usize) -> Vec<Vec<(usize, usize)>> {
    let chords: Vec<(usize, usize)> = all_pairs(k)
        .into_iter()
        .filter(|&(i, j)| j != i + 1 && !(i == 0 && j == k - 1))
        .collect();
    let mut out = Vec::new();
    let target = k.saturating_sub(3);
    for_each_combination(chords.len(), target, &mut |idx| {
        let mut g = SmallGraph::new(k);
        for i in 0..k {
            g.add(i, (i + 1) % k);
        }
        for &c in idx {
            g.add(chords[c].0, chords[c].1);
        }
        if is_chordal_by_elimination(&g) {
            out.push(idx.iter().map(|&c| chords[c]).collect());
        }
    });
    out
}

/// Convexity straight from the definition: for each block, the minimal
/// subtree is the union of all tree paths between its leaves; the blocks'
/// subtrees must be pairwise vertex-disjoint. `tree` is an adjacency list.
pub fn convex_by_paths(tree: &[Vec<usize>], blocks: &[Vec<usize>]) -> bool {
    fn path(tree: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; tree.len()];
        let mut stack = vec![a];
        parent[a] = a;
        while let Some(x) = stack.pop() {
            for &y in &tree[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut out = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            out.push(cur);
        }
        out
    }
    let mut owner = vec![usize::MAX; tree.len()];
    for (bi, block) in blocks.iter().enumerate() {
        let mut span: Vec<usize> = block.clone();
        for &a in block {
            for &b in block {
                span.extend(path(tree, a, b));
            }
        }
        span.sort_unstable();
        span.dedup();
        for x in span {
            if owner[x] != usize::MAX && owner[x] != bi {
                return false;
            }
            owner[x] = bi;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_small_values() {
        let got: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn pair_index_is_dense() {
        for n in 2..10 {
            let idx: Vec<usize> = all_pairs(n).iter().map(|&(u, v)| pair_index(n, u, v)).collect();
            assert_eq!(idx, (0..pair_count(n)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn cycle_detection_agrees_with_elimination_on_cycles() {
        for k in 3..9 {
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            let g = SmallGraph::from_edges(k, &edges);
            assert_eq!(has_chordless_cycle_bruteforce(&g), k >= 4);
            assert_eq!(is_chordal_by_elimination(&g), k < 4);
        }
    }

    #[test]
    fn dp_matches_bruteforce_enumeration() {
        for k in 3..9 {
            assert_eq!(
                triangulation_count_dp(k, |_, _| true),
                polygon_triangulations_bruteforce(k).len() as u64
            );
        }
    }
}
