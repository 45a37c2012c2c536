//! Dense undirected simple graphs over vertices `0..n`.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[Vertex; 2]", into = "[Vertex; 2]")]
pub struct Pair(Vertex, Vertex);

impl Pair {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Pair(u, v)
        } else {
            Pair(v, u)
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl From<[Vertex; 2]> for Pair {
    fn from([u, v]: [Vertex; 2]) -> Self {
        Pair::new(u, v)
    }
}

impl From<Pair> for [Vertex; 2] {
    fn from(p: Pair) -> Self {
        [p.0, p.1]
    }
}

impl From<(Vertex, Vertex)> for Pair {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Pair::new(u, v)
    }
}

/// Adjacency-matrix graph; rows are bitsets so neighbourhood algebra is cheap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges<I, P>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = P>,
        P: Into<Pair>,
    {
        let mut g = Self::new(n);
        for p in edges {
            let p = p.into();
            g.add_edge(p.0, p.1);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert_ne!(u, v, "self-loop {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Pair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.ones().filter(|&v| v > u).map(|v| Pair(u, v)));
        }
        out
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Union of the edge sets; both graphs must have the same order.
    pub fn union(&self, other: &Graph) -> Graph {
        assert_eq!(self.vertex_count(), other.vertex_count());
        let mut g = self.clone();
        for (row, o) in g.adj.iter_mut().zip(&other.adj) {
            row.union_with(o);
        }
        g
    }
}

/// Breadth-first shortest path from any of `sources` to `target`.
///
/// A step into `y` is taken only when `may_enter(x, y)` holds; `target` is
/// accepted only through `may_finish(x)` from its predecessor `x`. Sources are
/// seeded in the given order and neighbours scanned ascending, so the result is
/// deterministic. The returned path starts at a source and ends at `target`.
pub(crate) fn bfs_path(
    g: &Graph,
    sources: &[Vertex],
    target: Vertex,
    mut may_enter: impl FnMut(Vertex, Vertex) -> bool,
    mut may_finish: impl FnMut(Vertex) -> bool,
) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        if parent[s] == usize::MAX {
            parent[s] = s;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if g.has_edge(x, target) && may_finish(x) {
            let mut path = vec![target, x];
            let mut cur = x;
            while parent[cur] != cur {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if y != target && parent[y] == usize::MAX && may_enter(x, y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}
