//! Perfect phylogenies: building a tree from a proper chordal completion and
//! checking character convexity on arbitrary trees.

mod clique;
mod newick;

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::characters::{Character, CharacterSet};
use crate::intersection::{build_instance, vertex_index, StateVertex};
use crate::sandwich::SandwichError;
use crate::solver::Completion;

pub use clique::{build_clique_tree, perfect_elimination_ordering, CliqueTree};
pub use newick::parse_newick;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("completion is not a proper chordal completion of the character set")]
    InvalidCompletion,
    #[error("species {0:?} does not label a leaf of the tree")]
    SpeciesMissing(String),
    #[error("not a valid phylogenetic tree: {0}")]
    NotATree(String),
    #[error("newick parse error at byte {pos}: {msg}")]
    Newick { pos: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Sandwich(#[from] SandwichError),
}

/// Unrooted tree whose leaves carry distinct species labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhyloTree {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl PhyloTree {
    /// Validates: connected and acyclic, labels only on leaves and unique.
    pub fn new(labels: Vec<Option<String>>, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(TreeError::NotATree(format!("bad edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let t = Self { adj, labels };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), TreeError> {
        let n = self.adj.len();
        let edge_count: usize = self.adj.iter().map(Vec::len).sum::<usize>() / 2;
        if n > 0 && (edge_count != n - 1 || self.reachable_from(0).len() != n) {
            return Err(TreeError::NotATree("not connected and acyclic".into()));
        }
        let mut seen = BTreeSet::new();
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                if self.adj[v].len() > 1 {
                    return Err(TreeError::NotATree(format!("internal node labelled {l:?}")));
                }
                if !seen.insert(l.as_str()) {
                    return Err(TreeError::NotATree(format!("label {l:?} used twice")));
                }
            }
        }
        Ok(())
    }

    fn reachable_from(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < out.len() {
            for &y in &self.adj[out[i]] {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    /// Node carrying `species`.
    pub fn leaf_of(&self, species: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(species))
    }

    /// Species labels, sorted.
    pub fn leaf_labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.labels.iter().flatten().map(String::as_str).collect();
        out.sort_unstable();
        out
    }

    /// Keeps the nodes for which `keep` holds, rejoining nothing; callers must
    /// only drop leaves.
    fn retain(&self, keep: &[bool]) -> PhyloTree {
        let mut map = vec![usize::MAX; self.adj.len()];
        let mut labels = Vec::new();
        for v in 0..self.adj.len() {
            if keep[v] {
                map[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in self.edges() {
            if keep[a] && keep[b] {
                adj[map[a]].push(map[b]);
                adj[map[b]].push(map[a]);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        PhyloTree { adj, labels }
    }

    /// Repeatedly removes unlabelled nodes of degree <= 1.
    pub fn prune_unlabelled_leaves(&self) -> PhyloTree {
        let n = self.adj.len();
        let mut keep = vec![true; n];
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1 && self.labels[v].is_none()).collect();
        while let Some(v) = queue.pop_front() {
            if !keep[v] {
                continue;
            }
            keep[v] = false;
            for &y in &self.adj[v] {
                if keep[y] {
                    degree[y] -= 1;
                    if degree[y] <= 1 && self.labels[y].is_none() {
                        queue.push_back(y);
                    }
                }
            }
        }
        self.retain(&keep)
    }

    /// Contracts unlabelled nodes of degree exactly two into a single edge.
    pub fn suppress_degree_two(&self) -> PhyloTree {
        let mut adj = self.adj.clone();
        let mut keep = vec![true; adj.len()];
        for v in 0..adj.len() {
            if self.labels[v].is_none() && adj[v].len() == 2 {
                let (a, b) = (adj[v][0], adj[v][1]);
                for (x, y) in [(a, b), (b, a)] {
                    let row = &mut adj[x];
                    let i = row.iter().position(|&z| z == v).expect("symmetric adjacency");
                    row[i] = y;
                }
                adj[v].clear();
                keep[v] = false;
            }
        }
        let tmp = PhyloTree {
            adj,
            labels: self.labels.clone(),
        };
        tmp.retain(&keep)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tree {\n");
        for (v, l) in self.labels.iter().enumerate() {
            match l {
                Some(l) => {
                    let _ = writeln!(out, "  {v} [label=\"{l}\", shape=plaintext];");
                }
                None => {
                    let _ = writeln!(out, "  {v} [label=\"\", shape=point];");
                }
            }
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Convexity on `tree`: the minimal subtrees spanning each state's species are
/// pairwise vertex-disjoint.
pub fn is_convex(tree: &PhyloTree, cs: &CharacterSet, c: &Character) -> Result<bool, TreeError> {
    let n = tree.node_count();
    let mut owner = vec![usize::MAX; n];
    for (state, block) in c.blocks().iter().enumerate() {
        let leaves = block
            .iter()
            .map(|&s| {
                let name = cs.species()[s].as_str();
                tree.leaf_of(name)
                    .ok_or_else(|| TreeError::SpeciesMissing(name.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for v in spanning_subtree(tree, &leaves) {
            if owner[v] != usize::MAX && owner[v] != state {
                return Ok(false);
            }
            owner[v] = state;
        }
    }
    Ok(true)
}

/// Nodes of the minimal subtree containing `terminals`: root the tree at the
/// first terminal and walk each other terminal up until a marked node.
fn spanning_subtree(tree: &PhyloTree, terminals: &[usize]) -> Vec<usize> {
    let Some(&root) = terminals.first() else {
        return Vec::new();
    };
    let n = tree.node_count();
    let mut parent = vec![usize::MAX; n];
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in tree.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut marked = vec![false; n];
    marked[root] = true;
    let mut out = vec![root];
    for &t in &terminals[1..] {
        let mut cur = t;
        while !marked[cur] {
            marked[cur] = true;
            out.push(cur);
            cur = parent[cur];
        }
    }
    out
}

/// Builds a perfect phylogeny from a proper chordal completion of the
/// character set's intersection graph.
///
/// The internal nodes are the clique tree of the completed graph. Each species
/// hangs as a leaf off a clique containing all of its state vertices (they are
/// pairwise adjacent, so such a maximal clique exists); a species covered by
/// no character hangs off the first clique. Unlabelled leaves are pruned.
pub fn build_phylogeny(cs: &CharacterSet, completion: &Completion) -> Result<PhyloTree, TreeError> {
    let inst = build_instance(cs);
    if !completion.is_valid_for(&inst) {
        return Err(TreeError::InvalidCompletion);
    }
    let completed = inst.with_fill(&completion.fill)?;
    let ct = build_clique_tree(completed.edges())?;

    let hubs = ct.cliques.len().max(1);
    let mut labels: Vec<Option<String>> = vec![None; hubs];
    let mut edges: Vec<(usize, usize)> = ct.edges.clone();
    for (s, species) in cs.species().iter().enumerate() {
        let states: Vec<usize> = cs
            .characters()
            .iter()
            .enumerate()
            .filter_map(|(ci, c)| {
                c.state_of(s)
                    .map(|si| vertex_index(cs, StateVertex::new(ci, si)).expect("state in range"))
            })
            .collect();
        let hub = if ct.cliques.is_empty() {
            0
        } else {
            ct.cliques
                .iter()
                .position(|clique| states.iter().all(|v| clique.binary_search(v).is_ok()))
                .ok_or_else(|| TreeError::Internal(format!("no clique holds every state of {species}")))?
        };
        let leaf = labels.len();
        labels.push(Some(species.to_string()));
        edges.push((hub, leaf));
    }
    let tree = PhyloTree::new(labels, &edges)?.prune_unlabelled_leaves();

    for c in cs.characters() {
        if !is_convex(&tree, cs, c)? {
            return Err(TreeError::Internal(format!(
                "character {} not convex on built tree",
                c.name()
            )));
        }
    }
    Ok(tree)
}
