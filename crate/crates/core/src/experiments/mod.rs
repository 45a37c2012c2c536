//! Bundled datasets, k-subset compatibility scans, the five-character
//! counterexample check, and random generators.

mod datasets;
mod random;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::characters::{CharacterError, CharacterSet};
use crate::intersection::build_instance;
use crate::sandwich::chordal::is_chordal;
use crate::sandwich::SandwichError;
use crate::solver::{enumerate_minimal_completions, solve, Status};

pub use datasets::{dataset, dataset_source, Dataset, Payload, DATASET_NAMES};
pub use random::{random_characters, random_instance};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExperimentError {
    #[error("unknown dataset {0:?}")]
    UnknownDataset(String),
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("could not start worker pool: {0}")]
    Workers(String),
    #[error(transparent)]
    Characters(#[from] CharacterError),
    #[error(transparent)]
    Sandwich(#[from] SandwichError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub k: usize,
    pub total: usize,
    pub compatible: usize,
    pub incompatible_subsets: Vec<Vec<String>>,
    /// Subsets whose search hit the node budget.
    pub inconclusive_subsets: Vec<Vec<String>>,
    pub full_set_status: Status,
}

fn names(cs: &CharacterSet) -> Vec<String> {
    cs.names().into_iter().map(String::from).collect()
}

/// Solves every `k`-subset and the full set. `workers` threads share the
/// subsets; the report does not depend on the worker count.
pub fn scan_subsets(cs: &CharacterSet, k: usize, budget: u64, workers: usize) -> Result<ScanReport, ExperimentError> {
    let subsets: Vec<CharacterSet> = cs.k_subsets(k)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| ExperimentError::Workers(e.to_string()))?;
    let statuses: Vec<Status> = pool.install(|| {
        subsets
            .par_iter()
            .map(|s| solve(&build_instance(s), budget).status)
            .collect()
    });

    let mut report = ScanReport {
        k,
        total: subsets.len(),
        compatible: 0,
        incompatible_subsets: Vec::new(),
        inconclusive_subsets: Vec::new(),
        full_set_status: solve(&build_instance(cs), budget).status,
    };
    for (s, status) in subsets.iter().zip(statuses) {
        match status {
            Status::Compatible => report.compatible += 1,
            Status::Incompatible => report.incompatible_subsets.push(names(s)),
            Status::Inconclusive => report.inconclusive_subsets.push(names(s)),
        }
    }
    Ok(report)
}

/// Outcome of checking the five-character counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct F4Report {
    pub holds: bool,
    pub scan: Option<ScanReport>,
    pub acde_chordal: Option<bool>,
    pub abcd_minimal_completions: Vec<Vec<[String; 2]>>,
    pub abce_minimal_completions: Vec<Vec<[String; 2]>>,
    /// One line per claim that did not reproduce.
    pub diffs: Vec<String>,
}

fn pair_set(pairs: &[[&str; 2]]) -> BTreeSet<[String; 2]> {
    pairs.iter().map(|p| sorted_pair(p[0], p[1])).collect()
}

fn sorted_pair(a: &str, b: &str) -> [String; 2] {
    if a <= b {
        [a.to_string(), b.to_string()]
    } else {
        [b.to_string(), a.to_string()]
    }
}

/// Runs [`verify_f4_counterexample_on`] against the bundled `sec4` dataset.
pub fn verify_f4_counterexample(budget: u64) -> F4Report {
    let cs = dataset("sec4")
        .ok()
        .and_then(|d| d.characters().cloned())
        .expect("bundled sec4 dataset parses");
    verify_f4_counterexample_on(&cs, budget)
}

/// Checks, on characters `a..e`: every 4-subset is compatible, the full set
/// is not, `{a,c,d,e}` is already chordal, and `{a,b,c,d}` / `{a,b,c,e}` each
/// have exactly one minimal proper completion, the triangles
/// `a1 b0 c1` and `a0 b1 c0` respectively.
pub fn verify_f4_counterexample_on(cs: &CharacterSet, budget: u64) -> F4Report {
    let mut diffs = Vec::new();
    let mut report = F4Report {
        holds: false,
        scan: None,
        acde_chordal: None,
        abcd_minimal_completions: Vec::new(),
        abce_minimal_completions: Vec::new(),
        diffs: Vec::new(),
    };

    match scan_subsets(cs, 4, budget, 1) {
        Ok(scan) => {
            if scan.total != 5 || scan.compatible != 5 {
                diffs.push(format!(
                    "4-subsets: expected 5/5 compatible, got {}/{} (incompatible: {:?})",
                    scan.compatible, scan.total, scan.incompatible_subsets
                ));
            }
            if scan.full_set_status != Status::Incompatible {
                diffs.push(format!(
                    "full set: expected incompatible, got {:?}",
                    scan.full_set_status
                ));
            }
            report.scan = Some(scan);
        }
        Err(e) => diffs.push(format!("scan failed: {e}")),
    }

    match cs.restrict(&["a", "c", "d", "e"]) {
        Ok(sub) => {
            let chordal = is_chordal(build_instance(&sub).edges());
            if !chordal {
                diffs.push("{a,c,d,e}: intersection graph is not chordal".into());
            }
            report.acde_chordal = Some(chordal);
        }
        Err(e) => diffs.push(format!("{{a,c,d,e}}: {e}")),
    }

    let expectations: [(&[&str], [[&str; 2]; 3]); 2] = [
        (&["a", "b", "c", "d"], [["a1", "b0"], ["b0", "c1"], ["c1", "a1"]]),
        (&["a", "b", "c", "e"], [["a0", "b1"], ["b1", "c0"], ["c0", "a0"]]),
    ];
    for (i, (subset, expected)) in expectations.iter().enumerate() {
        let label = format!("{{{}}}", subset.join(","));
        let found = cs.restrict(subset).map_err(|e| e.to_string()).and_then(|sub| {
            let inst = build_instance(&sub);
            enumerate_minimal_completions(&inst, 16, budget)
                .map(|cs| {
                    cs.iter()
                        .map(|c| {
                            let mut v: Vec<[String; 2]> =
                                c.named(&inst).into_iter().map(|[a, b]| sorted_pair(&a, &b)).collect();
                            v.sort();
                            v
                        })
                        .collect::<Vec<_>>()
                })
                .map_err(|e| e.to_string())
        });
        match found {
            Ok(completions) => {
                let want = pair_set(expected);
                let matches = completions.len() == 1 && completions[0].iter().cloned().collect::<BTreeSet<_>>() == want;
                if !matches {
                    diffs.push(format!(
                        "{label}: expected exactly one minimal completion {want:?}, got {completions:?}"
                    ));
                }
                if i == 0 {
                    report.abcd_minimal_completions = completions;
                } else {
                    report.abce_minimal_completions = completions;
                }
            }
            Err(e) => diffs.push(format!("{label}: {e}")),
        }
    }

    report.holds = diffs.is_empty();
    report.diffs = diffs;
    report
}
