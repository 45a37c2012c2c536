//! Chordal sandwich instances `(V, E, F)` and the machinery that works on them:
//! chordality tests, chordless cycles, forbidden-path / forcing-cycle search,
//! and the closure operation that propagates forced and forbidden pairs.

pub mod chordal;
pub mod closure;
pub mod properties;

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Pair, Vertex};

pub use chordal::{find_chordless_cycle, is_chordal, shortest_chordless_cycle};
pub use closure::{closure, find_f_path, find_g_cycle, ClosedInstance, ClosureOutcome, GCycle, Infeasible};
pub use properties::{verify_closure_properties, ClosurePropertyReport};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SandwichError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("self pair on vertex {0}")]
    SelfPair(Vertex),
    #[error("pair ({}, {}) is both an edge and a conflict", .0.lo(), .0.hi())]
    EdgeConflictOverlap(Pair),
    #[error("pair ({}, {}) is an edge", .0.lo(), .0.hi())]
    CalledOnEdge(Pair),
    #[error("pair ({}, {}) is not an edge", .0.lo(), .0.hi())]
    CalledOnNonEdge(Pair),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("malformed instance JSON: {0}")]
    Json(String),
}

/// Display name of a vertex: colour (character) plus state index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    #[serde(rename = "char")]
    pub colour: String,
    pub state: usize,
}

impl VertexLabel {
    pub fn new(colour: impl Into<String>, state: usize) -> Self {
        Self {
            colour: colour.into(),
            state,
        }
    }

    /// `a1` for colour `a`, state 1; `c1_0` when the colour ends in a digit.
    pub fn name(&self) -> String {
        if self.colour.ends_with(|c: char| c.is_ascii_digit()) {
            format!("{}_{}", self.colour, self.state)
        } else {
            format!("{}{}", self.colour, self.state)
        }
    }
}

/// A graph `G = (V, E, F)` with mandatory edges `E` and conflicts `F`, `E ∩ F = ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichInstance {
    labels: Vec<VertexLabel>,
    edges: Graph,
    conflicts: Graph,
}

impl SandwichInstance {
    pub fn new<E, F>(labels: Vec<VertexLabel>, edges: E, conflicts: F) -> Result<Self, SandwichError>
    where
        E: IntoIterator<Item = Pair>,
        F: IntoIterator<Item = Pair>,
    {
        let n = labels.len();
        let mut inst = Self {
            labels,
            edges: Graph::new(n),
            conflicts: Graph::new(n),
        };
        for p in edges {
            inst.check_pair(p)?;
            inst.edges.add_edge(p.lo(), p.hi());
        }
        for p in conflicts {
            inst.check_pair(p)?;
            if inst.edges.has_edge(p.lo(), p.hi()) {
                return Err(SandwichError::EdgeConflictOverlap(p));
            }
            inst.conflicts.add_edge(p.lo(), p.hi());
        }
        Ok(inst)
    }

    /// Instance on `n` vertices labelled `v0 .. v{n-1}`.
    pub fn unlabelled<E, F>(n: usize, edges: E, conflicts: F) -> Result<Self, SandwichError>
    where
        E: IntoIterator<Item = Pair>,
        F: IntoIterator<Item = Pair>,
    {
        Self::new((0..n).map(|i| VertexLabel::new("v", i)).collect(), edges, conflicts)
    }

    fn check_pair(&self, p: Pair) -> Result<(), SandwichError> {
        let n = self.vertex_count();
        if p.hi() >= n {
            return Err(SandwichError::VertexOutOfRange(p.hi()));
        }
        if p.lo() == p.hi() {
            return Err(SandwichError::SelfPair(p.lo()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn name(&self, v: Vertex) -> String {
        self.labels[v].name()
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l.name() == name)
    }

    pub fn edges(&self) -> &Graph {
        &self.edges
    }

    pub fn conflicts(&self) -> &Graph {
        &self.conflicts
    }

    pub fn is_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.has_edge(u, v)
    }

    pub fn is_conflict(&self, u: Vertex, v: Vertex) -> bool {
        self.conflicts.has_edge(u, v)
    }

    /// Neither an edge nor a conflict.
    pub fn is_free(&self, u: Vertex, v: Vertex) -> bool {
        u != v && !self.is_edge(u, v) && !self.is_conflict(u, v)
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: Vertex) -> &FixedBitSet {
        self.edges.neighborhood(v)
    }

    /// `F(v)`.
    pub fn conflicts_of(&self, v: Vertex) -> &FixedBitSet {
        self.conflicts.neighborhood(v)
    }

    pub fn free_pairs(&self) -> Vec<Pair> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.is_free(u, v) {
                    out.push(Pair::new(u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), SandwichError> {
        let p = Pair::new(u, v);
        self.check_pair(p)?;
        if self.is_conflict(u, v) {
            return Err(SandwichError::EdgeConflictOverlap(p));
        }
        self.edges.add_edge(u, v);
        Ok(())
    }

    pub fn add_conflict(&mut self, u: Vertex, v: Vertex) -> Result<(), SandwichError> {
        let p = Pair::new(u, v);
        self.check_pair(p)?;
        if self.is_edge(u, v) {
            return Err(SandwichError::EdgeConflictOverlap(p));
        }
        self.conflicts.add_edge(u, v);
        Ok(())
    }

    /// Same vertices, edge set replaced by `E ∪ fill`.
    pub fn with_fill(&self, fill: &[Pair]) -> Result<Self, SandwichError> {
        let mut out = self.clone();
        for p in fill {
            out.add_edge(p.lo(), p.hi())?;
        }
        Ok(out)
    }

    /// Sub-instance induced on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        Self {
            labels: vertices.iter().map(|&v| self.labels[v].clone()).collect(),
            edges: self.edges.induced(vertices),
            conflicts: self.conflicts.induced(vertices),
        }
    }

    pub fn pair_names(&self, p: Pair) -> [String; 2] {
        [self.name(p.lo()), self.name(p.hi())]
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            vertices: self.labels.clone(),
            edges: self.edges.edges(),
            conflicts: self.conflicts.edges(),
        }
    }

    pub fn from_json(json: InstanceJson) -> Result<Self, SandwichError> {
        Self::new(json.vertices, json.edges, json.conflicts)
    }

    pub fn parse_json(text: &str) -> Result<Self, SandwichError> {
        let json: InstanceJson = serde_json::from_str(text).map_err(|e| SandwichError::Json(e.to_string()))?;
        Self::from_json(json)
    }

    /// Graphviz rendering: edges solid, conflict pairs dotted, vertices
    /// grouped by colour through a `colour` attribute.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph sandwich {\n  node [shape=circle];\n");
        for (v, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\", colour=\"{}\"];", l.name(), l.colour);
        }
        for p in self.edges.edges() {
            let _ = writeln!(out, "  {} -- {};", p.lo(), p.hi());
        }
        for p in self.conflicts.edges() {
            let _ = writeln!(out, "  {} -- {} [style=dotted];", p.lo(), p.hi());
        }
        out.push_str("}\n");
        out
    }
}

/// Serialized instance: `{vertices:[{char,state}], edges:[[i,j]], conflicts:[[i,j]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<Pair>,
    pub conflicts: Vec<Pair>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(u: usize, v: usize) -> Pair {
        Pair::new(u, v)
    }

    #[test]
    fn rejects_overlap_and_bad_pairs() {
        assert_eq!(
            SandwichInstance::unlabelled(3, [p(0, 1)], [p(1, 0)]),
            Err(SandwichError::EdgeConflictOverlap(p(0, 1)))
        );
        assert_eq!(
            SandwichInstance::unlabelled(3, [p(0, 3)], []),
            Err(SandwichError::VertexOutOfRange(3))
        );
        assert_eq!(
            SandwichInstance::unlabelled(3, [p(1, 1)], []),
            Err(SandwichError::SelfPair(1))
        );
        let mut inst = SandwichInstance::unlabelled(3, [p(0, 1)], [p(1, 2)]).unwrap();
        assert!(inst.add_edge(2, 1).is_err());
        assert!(inst.add_conflict(0, 1).is_err());
        inst.add_edge(0, 2).unwrap();
        assert!(inst.free_pairs().is_empty());
    }

    #[test]
    fn names() {
        assert_eq!(VertexLabel::new("a", 1).name(), "a1");
        assert_eq!(VertexLabel::new("c1", 0).name(), "c1_0");
    }

    #[test]
    fn json_shape() {
        let inst = SandwichInstance::new(
            vec![
                VertexLabel::new("a", 0),
                VertexLabel::new("a", 1),
                VertexLabel::new("b", 0),
            ],
            [p(0, 2)],
            [p(0, 1)],
        )
        .unwrap();
        let text = serde_json::to_string(&inst.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"vertices":[{"char":"a","state":0},{"char":"a","state":1},{"char":"b","state":0}],"edges":[[0,2]],"conflicts":[[0,1]]}"#
        );
        assert_eq!(SandwichInstance::parse_json(&text).unwrap(), inst);
        assert!(matches!(
            SandwichInstance::parse_json("{}"),
            Err(SandwichError::Json(_))
        ));
        let dot = inst.to_dot();
        assert!(dot.contains("0 -- 1 [style=dotted];"));
        assert!(dot.contains("0 -- 2;"));
    }
}
