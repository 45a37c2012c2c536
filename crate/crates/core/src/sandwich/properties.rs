//! Checks of the structure a closed instance must have: every cycle created
//! by adding one unclassified pair can still be properly triangulated, and
//! every chordless cycle already present has at least two proper
//! triangulations. Exhaustive over cycles, so meant for small instances.

use serde::Serialize;

use super::chordal::{chordless_cycles, induced_paths};
use super::SandwichInstance;
use crate::graph::{Pair, Vertex};
use crate::solver::{cycle_has_proper_triangulation, MAX_CYCLE_LEN};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClosurePropertyReport {
    pub unclassified_pairs: usize,
    pub created_cycles_checked: usize,
    pub chordless_cycles_checked: usize,
    /// Pair and created cycle with no proper triangulation.
    pub property1_violations: Vec<(Pair, Vec<Vertex>)>,
    /// Chordless cycle with fewer than two proper triangulations, and the count.
    pub property2_violations: Vec<(Vec<Vertex>, usize)>,
    /// Cycles longer than the enumeration budget, left unchecked.
    pub skipped_cycles: Vec<Vec<Vertex>>,
}

impl ClosurePropertyReport {
    pub fn holds(&self) -> bool {
        self.property1_violations.is_empty() && self.property2_violations.is_empty()
    }
}

pub fn verify_closure_properties(inst: &SandwichInstance) -> ClosurePropertyReport {
    let e = inst.edges();
    let f = inst.conflicts();
    let mut report = ClosurePropertyReport::default();

    for p in inst.free_pairs() {
        report.unclassified_pairs += 1;
        for cycle in induced_paths(e, p.lo(), p.hi()) {
            if cycle.len() > MAX_CYCLE_LEN {
                report.skipped_cycles.push(cycle);
                continue;
            }
            report.created_cycles_checked += 1;
            let count = cycle_has_proper_triangulation(&cycle, f).expect("length checked");
            if count == 0 {
                report.property1_violations.push((p, cycle));
            }
        }
    }

    for cycle in chordless_cycles(e) {
        if cycle.len() > MAX_CYCLE_LEN {
            report.skipped_cycles.push(cycle);
            continue;
        }
        report.chordless_cycles_checked += 1;
        let count = cycle_has_proper_triangulation(&cycle, f).expect("length checked");
        if count < 2 {
            report.property2_violations.push((cycle, count));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sandwich::closure;

    #[test]
    fn chordal_and_fully_classified_is_vacuous() {
        let inst = SandwichInstance::unlabelled(
            4,
            [Pair::new(0, 1), Pair::new(1, 2), Pair::new(0, 2)],
            [Pair::new(2, 3), Pair::new(0, 3), Pair::new(1, 3)],
        )
        .unwrap();
        let r = verify_closure_properties(&inst);
        assert!(r.holds());
        assert_eq!((r.unclassified_pairs, r.chordless_cycles_checked), (0, 0));
    }

    #[test]
    fn unclosed_instance_can_fail() {
        // a 4-cycle with one diagonal forbidden has a single proper triangulation
        let inst = SandwichInstance::unlabelled(
            4,
            [Pair::new(0, 1), Pair::new(1, 2), Pair::new(2, 3), Pair::new(3, 0)],
            [Pair::new(0, 2)],
        )
        .unwrap();
        let r = verify_closure_properties(&inst);
        assert_eq!(r.property2_violations, vec![(vec![0, 1, 2, 3], 1)]);
        // closure forces the other diagonal, after which nothing is left to violate
        let closed = closure(&inst);
        assert!(verify_closure_properties(&closed.closed().unwrap().instance).holds());
    }
}
