//! Propagation of forbidden and forced pairs to a fixpoint.
//!
//! Two local patterns drive everything:
//!
//! * an *f-path* for `(u, v)`: a chordless path `u t1 .. tk v`, `k >= 1`,
//!   whose interior vertices all conflict with `u` or `v`. Every proper
//!   completion containing `(u, v)` would need a triangle on `(u, v)` whose
//!   apex conflicts with one of them, so a non-edge `(u, v)` becomes a
//!   conflict, and an edge `(u, v)` makes the instance infeasible.
//! * a *g-cycle* `g(u, v, w)` for an edge `(u, v)`: a chordless cycle
//!   `u w t1 .. tk v u`, `k >= 1`, with `w ∉ F(v)` and every `ti` in
//!   `F(u) ∪ F(v)`. The triangle on `(u, v)` can then only use apex `w`,
//!   so `(v, w)` is forced.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{SandwichError, SandwichInstance};
use crate::graph::{bfs_path, Pair, Vertex};

/// Shortest path `u .. v` with at least one interior vertex, all interior
/// vertices in `F(u) ∪ F(v)`. Chordless because it is shortest inside the
/// subgraph induced on `{u, v} ∪ F(u) ∪ F(v)` (apart from a direct `u`-`v`
/// edge, which the walk never takes).
fn conflict_path(inst: &SandwichInstance, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let mut interior: FixedBitSet = inst.conflicts_of(u).clone();
    interior.union_with(inst.conflicts_of(v));
    bfs_path(inst.edges(), &[u], v, |_, y| interior.contains(y), |x| x != u)
}

/// An f-path for the non-edge `(u, v)`, if one exists.
pub fn find_f_path(inst: &SandwichInstance, u: Vertex, v: Vertex) -> Result<Option<Vec<Vertex>>, SandwichError> {
    let n = inst.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(SandwichError::VertexOutOfRange(x));
        }
    }
    if u == v {
        return Err(SandwichError::SelfPair(u));
    }
    if inst.is_edge(u, v) {
        return Err(SandwichError::CalledOnEdge(Pair::new(u, v)));
    }
    Ok(conflict_path(inst, u, v))
}

/// A `g(u, v, w)` cycle: `(v, w)` is forced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GCycle {
    pub w: Vertex,
    /// `[u, w, t1, .., tk, v]`; the closing edge `(v, u)` is implicit.
    pub cycle: Vec<Vertex>,
}

/// A g-cycle through the edge `(u, v)` (oriented: the cycle leaves `u`
/// through `w` and the forced pair is `(v, w)`).
///
/// The first hop goes from `u` to a neighbour `w ∉ N(v) ∪ F(v)`; the walk then
/// stays inside `(F(u) ∪ F(v)) \ N[u]` until it reaches a neighbour of `v`.
/// A multi-source breadth-first search from all admissible `w` finds a
/// shortest such walk, which is chordless.
pub fn find_g_cycle(inst: &SandwichInstance, u: Vertex, v: Vertex) -> Result<Option<GCycle>, SandwichError> {
    let n = inst.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(SandwichError::VertexOutOfRange(x));
        }
    }
    if !inst.is_edge(u, v) {
        return Err(SandwichError::CalledOnNonEdge(Pair::new(u, v)));
    }
    Ok(g_cycle(inst, u, v))
}

fn g_cycle(inst: &SandwichInstance, u: Vertex, v: Vertex) -> Option<GCycle> {
    let starts: Vec<Vertex> = inst
        .neighbors(u)
        .ones()
        .filter(|&w| w != v && !inst.is_edge(v, w) && !inst.is_conflict(v, w))
        .collect();
    if starts.is_empty() {
        return None;
    }
    let mut interior: FixedBitSet = inst.conflicts_of(u).clone();
    interior.union_with(inst.conflicts_of(v));
    interior.difference_with(inst.neighbors(u));
    interior.set(u, false);
    let path = bfs_path(
        inst.edges(),
        &starts,
        v,
        |_, y| interior.contains(y),
        |x| !starts.contains(&x),
    )?;
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(u);
    cycle.extend(&path);
    Some(GCycle { w: path[0], cycle })
}

/// Result of a closure run that reached its fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedInstance {
    pub instance: SandwichInstance,
    /// Pairs added to `E`, in discovery order.
    pub added_forced: Vec<Pair>,
    /// Pairs added to `F`, in discovery order.
    pub added_forbidden: Vec<Pair>,
}

/// Proof that no proper chordal completion exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Infeasible {
    /// A chordless cycle of the propagated graph; one of its edges `(u, v)`
    /// has an f-path along the rest of the cycle, so every triangulation of
    /// the cycle uses a conflict pair.
    pub witness: Vec<Vertex>,
    /// Propagation state when the contradiction was found.
    pub instance: SandwichInstance,
    pub added_forced: Vec<Pair>,
    pub added_forbidden: Vec<Pair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureOutcome {
    Closed(ClosedInstance),
    Infeasible(Infeasible),
}

impl ClosureOutcome {
    pub fn closed(&self) -> Option<&ClosedInstance> {
        match self {
            ClosureOutcome::Closed(c) => Some(c),
            ClosureOutcome::Infeasible(_) => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, ClosureOutcome::Infeasible(_))
    }

    pub fn added_forced(&self) -> &[Pair] {
        match self {
            ClosureOutcome::Closed(c) => &c.added_forced,
            ClosureOutcome::Infeasible(i) => &i.added_forced,
        }
    }

    pub fn added_forbidden(&self) -> &[Pair] {
        match self {
            ClosureOutcome::Closed(c) => &c.added_forbidden,
            ClosureOutcome::Infeasible(i) => &i.added_forbidden,
        }
    }

    /// `{forced:[...], forbidden:[...], infeasible_witness:[...]|null}` with vertex names.
    pub fn report(&self) -> ClosureReport {
        let inst = match self {
            ClosureOutcome::Closed(c) => &c.instance,
            ClosureOutcome::Infeasible(i) => &i.instance,
        };
        let names = |ps: &[Pair]| ps.iter().map(|&p| inst.pair_names(p)).collect();
        ClosureReport {
            forced: names(self.added_forced()),
            forbidden: names(self.added_forbidden()),
            infeasible_witness: match self {
                ClosureOutcome::Closed(_) => None,
                ClosureOutcome::Infeasible(i) => Some(i.witness.iter().map(|&v| inst.name(v)).collect()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub forced: Vec<[String; 2]>,
    pub forbidden: Vec<[String; 2]>,
    pub infeasible_witness: Option<Vec<String>>,
}

/// Order in which dirty pairs are examined. Both orders reach the same fixpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    /// Smallest pair first.
    #[default]
    Lexicographic,
    /// Largest pair first.
    Reverse,
}

/// Applies the f-path and g-cycle rules until neither fires.
pub fn closure(inst: &SandwichInstance) -> ClosureOutcome {
    closure_with(inst, Schedule::Lexicographic)
}

pub fn closure_with(inst: &SandwichInstance, schedule: Schedule) -> ClosureOutcome {
    let n = inst.vertex_count();
    let mut g = inst.clone();
    let mut forced = Vec::new();
    let mut forbidden = Vec::new();
    if n <= 3 || g.edges().edge_count() == 0 {
        return ClosureOutcome::Closed(ClosedInstance {
            instance: g,
            added_forced: forced,
            added_forbidden: forbidden,
        });
    }

    let all_pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |v| Pair::new(u, v)));
    let mut dirty: BTreeSet<Pair> = all_pairs().collect();

    loop {
        let next = match schedule {
            Schedule::Lexicographic => dirty.pop_first(),
            Schedule::Reverse => dirty.pop_last(),
        };
        let Some(p) = next else { break };
        let (u, v) = (p.lo(), p.hi());
        if g.is_conflict(u, v) {
            continue;
        }
        if !g.is_edge(u, v) {
            if conflict_path(&g, u, v).is_some() {
                g.add_conflict(u, v).expect("non-edge");
                forbidden.push(p);
                // only queries touching u or v see a different F(.)
                for x in 0..n {
                    for y in [u, v] {
                        if x != y {
                            dirty.insert(Pair::new(x, y));
                        }
                    }
                }
            }
            continue;
        }
        if let Some(path) = conflict_path(&g, u, v) {
            return ClosureOutcome::Infeasible(Infeasible {
                witness: path,
                instance: g,
                added_forced: forced,
                added_forbidden: forbidden,
            });
        }
        let found = g_cycle(&g, u, v)
            .map(|c| Pair::new(v, c.w))
            .or_else(|| g_cycle(&g, v, u).map(|c| Pair::new(u, c.w)));
        if let Some(f) = found {
            g.add_edge(f.lo(), f.hi()).expect("forced pair is not a conflict");
            forced.push(f);
            // a new edge can open paths anywhere
            dirty.extend(all_pairs());
        }
    }

    ClosureOutcome::Closed(ClosedInstance {
        instance: g,
        added_forced: forced,
        added_forbidden: forbidden,
    })
}
