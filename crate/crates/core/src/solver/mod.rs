//! Exact search for proper chordal completions.
//!
//! Every search node first runs the closure, then picks a shortest chordless
//! cycle of the current edge set and branches over its non-conflicting
//! chords. Any chordal supergraph must contain one of those chords; branch
//! `i` adds chord `i` and forbids chords `0..i`, so the branches partition the
//! remaining completions and each minimal completion is reached exactly once.

mod triangulation;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Pair;
use crate::sandwich::chordal::{is_chordal, shortest_chordless_cycle};
use crate::sandwich::closure::{closure, ClosureOutcome};
use crate::sandwich::SandwichInstance;

pub use triangulation::{cycle_has_proper_triangulation, triangulations_of_cycle, MAX_CYCLE_LEN};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("cycle length {len} outside the enumerable range 3..={max}")]
    CycleLength { len: usize, max: usize },
}

/// Fill edges `E' \ E` of a proper chordal completion.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Completion {
    pub fill: Vec<Pair>,
}

impl Completion {
    pub fn new(mut fill: Vec<Pair>) -> Self {
        fill.sort_unstable();
        fill.dedup();
        Self { fill }
    }

    pub fn is_empty(&self) -> bool {
        self.fill.is_empty()
    }

    /// Re-checks the certificate from scratch: fill avoids `E` and `F`, and
    /// `E ∪ fill` is chordal.
    pub fn is_valid_for(&self, inst: &SandwichInstance) -> bool {
        let mut g = inst.edges().clone();
        for p in &self.fill {
            if p.lo() == p.hi()
                || p.hi() >= inst.vertex_count()
                || inst.is_edge(p.lo(), p.hi())
                || inst.is_conflict(p.lo(), p.hi())
            {
                return false;
            }
            g.add_edge(p.lo(), p.hi());
        }
        is_chordal(&g)
    }

    /// Removing any single fill edge breaks chordality.
    pub fn is_minimal_for(&self, inst: &SandwichInstance) -> bool {
        let full = match inst.with_fill(&self.fill) {
            Ok(g) => g.edges().clone(),
            Err(_) => return false,
        };
        self.fill.iter().all(|p| {
            let mut g = full.clone();
            g.remove_edge(p.lo(), p.hi());
            !is_chordal(&g)
        })
    }

    pub fn named(&self, inst: &SandwichInstance) -> Vec<[String; 2]> {
        self.fill.iter().map(|&p| inst.pair_names(p)).collect()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Compatible,
    Incompatible,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

/// Which part of the solver settled an incompatible instance.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Refutation {
    /// The closure at the root found a forbidden cycle.
    Closure,
    /// Exhaustive branching was needed.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub refuted_by: Option<Refutation>,
    /// Excluded from serialization so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub status: Status,
    pub completion: Option<Completion>,
    pub stats: SolveStats,
}

struct Search {
    budget: u64,
    nodes: u64,
}

enum Step {
    Continue,
    Stop,
}

impl Search {
    fn new(budget: u64) -> Self {
        Self { budget, nodes: 0 }
    }

    fn tick(&mut self) -> Result<(), SolverError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(SolverError::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    /// Depth-first over the branching tree; `leaf` receives every chordal
    /// leaf and may stop the search.
    fn run(
        &mut self,
        inst: &SandwichInstance,
        leaf: &mut dyn FnMut(&SandwichInstance) -> Step,
    ) -> Result<Step, SolverError> {
        self.tick()?;
        let closed = match closure(inst) {
            ClosureOutcome::Closed(c) => c.instance,
            ClosureOutcome::Infeasible(_) => return Ok(Step::Continue),
        };
        let Some(cycle) = shortest_chordless_cycle(closed.edges()) else {
            return Ok(leaf(&closed));
        };
        let k = cycle.len();
        let mut chords = Vec::new();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (a, b) = (cycle[i], cycle[j]);
                if !closed.is_conflict(a, b) {
                    chords.push(Pair::new(a, b));
                }
            }
        }
        chords.sort_unstable();
        let mut child = closed;
        for c in chords {
            let mut branch = child.clone();
            branch.add_edge(c.lo(), c.hi()).expect("chord is not a conflict");
            if let Step::Stop = self.run(&branch, leaf)? {
                return Ok(Step::Stop);
            }
            child.add_conflict(c.lo(), c.hi()).expect("chord is not an edge");
        }
        Ok(Step::Continue)
    }
}

fn fill_of(original: &SandwichInstance, completed: &SandwichInstance) -> Completion {
    Completion::new(
        completed
            .edges()
            .edges()
            .into_iter()
            .filter(|p| !original.is_edge(p.lo(), p.hi()))
            .collect(),
    )
}

/// Decides whether a proper chordal completion exists, within `budget` search nodes.
pub fn solve(inst: &SandwichInstance, budget: u64) -> SolveReport {
    let start = Instant::now();
    let mut search = Search::new(budget);
    let mut found = None;
    let result = search.run(inst, &mut |leaf| {
        found = Some(fill_of(inst, leaf));
        Step::Stop
    });
    let (status, refuted_by) = match (result, &found) {
        (Err(_), _) => (Status::Inconclusive, None),
        (Ok(_), Some(_)) => (Status::Compatible, None),
        (Ok(_), None) => {
            let by = if search.nodes == 1 {
                Refutation::Closure
            } else {
                Refutation::Search
            };
            (Status::Incompatible, Some(by))
        }
    };
    if let Some(c) = &found {
        assert!(c.is_valid_for(inst), "solver produced an invalid completion");
    }
    SolveReport {
        status,
        completion: found,
        stats: SolveStats {
            nodes: search.nodes,
            refuted_by,
            elapsed: start.elapsed(),
        },
    }
}

/// All inclusion-minimal proper completions, up to `limit` of them, in
/// lexicographic order of their fill lists.
pub fn enumerate_minimal_completions(
    inst: &SandwichInstance,
    limit: usize,
    budget: u64,
) -> Result<Vec<Completion>, SolverError> {
    let mut found = BTreeSet::new();
    let mut search = Search::new(budget);
    search.run(inst, &mut |leaf| {
        let c = fill_of(inst, leaf);
        if c.is_minimal_for(inst) {
            found.insert(c);
        }
        if found.len() >= limit {
            Step::Stop
        } else {
            Step::Continue
        }
    })?;
    Ok(found.into_iter().take(limit).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(u: usize, v: usize) -> Pair {
        Pair::new(u, v)
    }

    fn square(conflicts: &[Pair]) -> SandwichInstance {
        SandwichInstance::unlabelled(4, [p(0, 1), p(1, 2), p(2, 3), p(3, 0)], conflicts.iter().copied()).unwrap()
    }

    #[test]
    fn square_completions() {
        let r = solve(&square(&[]), DEFAULT_NODE_BUDGET);
        assert_eq!(r.status, Status::Compatible);
        assert_eq!(r.completion.unwrap().fill.len(), 1);

        let all = enumerate_minimal_completions(&square(&[]), 10, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(
            all,
            vec![Completion::new(vec![p(0, 2)]), Completion::new(vec![p(1, 3)])]
        );

        let r = solve(&square(&[p(0, 2), p(1, 3)]), DEFAULT_NODE_BUDGET);
        assert_eq!(r.status, Status::Incompatible);
        assert_eq!(r.stats.refuted_by, Some(Refutation::Closure));
        assert!(r.completion.is_none());
    }

    #[test]
    fn chordal_input_has_empty_fill() {
        let inst = SandwichInstance::unlabelled(3, [p(0, 1), p(1, 2)], [p(0, 2)]).unwrap();
        let r = solve(&inst, 10);
        assert_eq!(r.status, Status::Compatible);
        assert!(r.completion.unwrap().is_empty());
        let all = enumerate_minimal_completions(&inst, 10, 10).unwrap();
        assert_eq!(all, vec![Completion::new(vec![])]);
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        // two disjoint free 5-cycles need several nodes
        let mut edges = Vec::new();
        for base in [0, 5] {
            for i in 0..5 {
                edges.push(p(base + i, base + (i + 1) % 5));
            }
        }
        let inst = SandwichInstance::unlabelled(10, edges, []).unwrap();
        let r = solve(&inst, 1);
        assert_eq!(r.status, Status::Inconclusive);
        assert!(r.completion.is_none());
        assert_eq!(
            enumerate_minimal_completions(&inst, 100, 1),
            Err(SolverError::BudgetExhausted(1))
        );
        assert_eq!(solve(&inst, DEFAULT_NODE_BUDGET).status, Status::Compatible);
    }

    #[test]
    fn validity_checks_reject_bad_fill() {
        let inst = square(&[p(0, 2)]);
        assert!(!Completion::new(vec![p(0, 2)]).is_valid_for(&inst));
        assert!(!Completion::new(vec![]).is_valid_for(&inst));
        assert!(!Completion::new(vec![p(0, 1)]).is_valid_for(&inst));
        assert!(Completion::new(vec![p(1, 3)]).is_valid_for(&inst));
        assert!(Completion::new(vec![p(1, 3)]).is_minimal_for(&inst));
    }

    #[test]
    fn report_json_has_no_timing() {
        let r = solve(&square(&[]), 100);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""status":"compatible""#));
        assert!(!json.contains("elapsed"));
    }
}
