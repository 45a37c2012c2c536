//! Clique trees of chordal graphs.

use std::fmt::Write as _;

use super::TreeError;
use crate::graph::{Graph, Vertex};
use crate::sandwich::chordal::elimination_ordering;

/// Perfect elimination ordering: each vertex's later neighbours form a clique.
pub fn perfect_elimination_ordering(g: &Graph) -> Result<Vec<Vertex>, TreeError> {
    elimination_ordering(g).ok_or(TreeError::NotChordal)
}

/// Maximal cliques of a chordal graph joined into a tree in which the cliques
/// containing any given vertex form a connected subtree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    /// Sorted vertex lists, in lexicographic order.
    pub cliques: Vec<Vec<Vertex>>,
    /// Tree edges between clique indices, `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    /// The edges form a spanning tree on the cliques, and for every vertex
    /// the cliques containing it induce a connected subtree.
    pub fn has_running_intersection(&self) -> bool {
        let m = self.cliques.len();
        if m == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != m - 1 {
            return false;
        }
        let mut uf = UnionFind::new(m);
        for &(a, b) in &self.edges {
            if a >= m || b >= m || !uf.union(a, b) {
                return false;
            }
        }
        let max_vertex = self.cliques.iter().flatten().copied().max().map_or(0, |v| v + 1);
        (0..max_vertex).all(|x| {
            let holding = self.cliques.iter().filter(|c| c.binary_search(&x).is_ok()).count();
            let joined = self
                .edges
                .iter()
                .filter(|&&(a, b)| {
                    self.cliques[a].binary_search(&x).is_ok() && self.cliques[b].binary_search(&x).is_ok()
                })
                .count();
            // a sub-forest of a tree is connected iff it has one edge fewer than nodes
            holding == 0 || joined + 1 == holding
        })
    }

    pub fn to_dot(&self, names: impl Fn(Vertex) -> String) -> String {
        let mut out = String::from("graph clique_tree {\n  node [shape=box];\n");
        for (i, c) in self.cliques.iter().enumerate() {
            let label: Vec<String> = c.iter().map(|&v| names(v)).collect();
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.join(" "));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut cur = x;
        while self.parent[cur] != r {
            let next = self.parent[cur];
            self.parent[cur] = r;
            cur = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Maximal cliques from the elimination ordering, joined by a maximum-weight
/// spanning tree on intersection sizes (zero-weight edges join components).
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree, TreeError> {
    let order = perfect_elimination_ordering(g)?;
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<Vertex>> = order
        .iter()
        .map(|&v| {
            let mut c: Vec<Vertex> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let is_subset = |a: &[Vertex], b: &[Vertex]| a.iter().all(|x| b.binary_search(x).is_ok());
    let cliques: Vec<Vec<Vertex>> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d.len() > c.len() && is_subset(c, d)))
        .cloned()
        .collect();

    let m = cliques.len();
    let mut weighted = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let w = cliques[i]
                .iter()
                .filter(|x| cliques[j].binary_search(x).is_ok())
                .count();
            weighted.push((w, i, j));
        }
    }
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut uf = UnionFind::new(m);
    let mut edges: Vec<(usize, usize)> = weighted
        .into_iter()
        .filter(|&(_, i, j)| uf.union(i, j))
        .map(|(_, i, j)| (i, j))
        .collect();
    edges.sort_unstable();

    let tree = CliqueTree { cliques, edges };
    if !tree.has_running_intersection() {
        return Err(TreeError::Internal(
            "clique tree lacks the running-intersection property".into(),
        ));
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_graph_cliques_are_edges() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]);
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.cliques, vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![3, 4]]);
        assert_eq!(t.edges.len(), 3);
        assert!(t.has_running_intersection());
    }

    #[test]
    fn complete_graph_is_one_clique() {
        let mut g = Graph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v);
            }
        }
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.cliques, vec![vec![0, 1, 2, 3]]);
        assert!(t.edges.is_empty());
    }

    #[test]
    fn disconnected_and_isolated() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]);
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(t.cliques, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(t.edges.len(), 2);
        assert!(t.has_running_intersection());
    }

    #[test]
    fn rejects_non_chordal() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(build_clique_tree(&g), Err(TreeError::NotChordal));
        assert_eq!(perfect_elimination_ordering(&g), Err(TreeError::NotChordal));
    }

    #[test]
    fn running_intersection_detects_breaks() {
        let bad = CliqueTree {
            cliques: vec![vec![0, 1], vec![2, 3], vec![1, 2]],
            edges: vec![(0, 1), (1, 2)],
        };
        assert!(!bad.has_running_intersection());
        let good = CliqueTree {
            cliques: bad.cliques.clone(),
            edges: vec![(0, 2), (1, 2)],
        };
        assert!(good.has_running_intersection());
    }
}
