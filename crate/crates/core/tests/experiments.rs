use phylocompat::experiments::{dataset_source, DATASET_NAMES};
use phylocompat::sandwich::chordal::chordless_cycles;
use phylocompat::{
    build_instance, closure, cycle_has_proper_triangulation, dataset, is_chordal, parse_characters, random_characters,
    scan_subsets, solve, verify_closure_properties, verify_f4_counterexample, verify_f4_counterexample_on,
    CharacterSet, ExperimentError, Pair, Status,
};

const BUDGET: u64 = 1_000_000;

fn named(inst: &phylocompat::SandwichInstance, pairs: &[Pair]) -> Vec<[String; 2]> {
    let mut v: Vec<[String; 2]> = pairs
        .iter()
        .map(|&p| {
            let mut n = inst.pair_names(p);
            n.sort();
            n
        })
        .collect();
    v.sort();
    v
}

#[test]
fn every_dataset_loads() {
    for name in DATASET_NAMES {
        let d = dataset(name).unwrap();
        assert_eq!(d.name, name);
        assert!(!dataset_source(name).unwrap().is_empty());
    }
    assert!(matches!(dataset("fig8"), Err(ExperimentError::UnknownDataset(_))));
}

#[test]
fn fig6_closure() {
    let inst = dataset("fig6").unwrap().instance().unwrap().clone();
    assert_eq!(
        (
            inst.vertex_count(),
            inst.edges().edge_count(),
            inst.conflicts().edge_count()
        ),
        (5, 5, 2)
    );
    let out = closure(&inst);
    let c = out.closed().expect("fig6 closes");
    assert_eq!(named(&inst, &c.added_forbidden), [["a1", "b1"]]);
    assert_eq!(named(&inst, &c.added_forced), [["a0", "c0"], ["b0", "c0"]]);
    assert_eq!(c.instance.edges().edge_count(), 7);
    assert_eq!(c.instance.conflicts().edge_count(), 3);
    assert!(c.instance.free_pairs().is_empty());
    assert!(is_chordal(c.instance.edges()));
    assert!(verify_closure_properties(&c.instance).holds());
}

#[test]
fn fig7_cycles_are_locally_fine_but_globally_infeasible() {
    let inst = dataset("fig7").unwrap().instance().unwrap().clone();
    let cycles = chordless_cycles(inst.edges());
    assert_eq!(cycles.len(), 3);
    for c in &cycles {
        assert!(
            cycle_has_proper_triangulation(c, inst.conflicts()).unwrap() >= 1,
            "{c:?}"
        );
    }
    assert!(closure(&inst).is_infeasible());
    let r = solve(&inst, BUDGET);
    assert_eq!(r.status, Status::Incompatible);
    let report = closure(&inst).report();
    let mut witness = report.infeasible_witness.unwrap();
    witness.sort();
    assert_eq!(witness, ["b0", "b2", "c0", "c1"]);
}

#[test]
fn example1_is_compatible_without_fill() {
    let cs = dataset("example1").unwrap().characters().unwrap().clone();
    let r = solve(&build_instance(&cs), BUDGET);
    assert_eq!(r.status, Status::Compatible);
    assert!(r.completion.unwrap().is_empty());
    let closed = closure(&build_instance(&cs));
    assert!(verify_closure_properties(&closed.closed().unwrap().instance).holds());
    let scan = scan_subsets(&cs, 4, BUDGET, 2).unwrap();
    assert_eq!((scan.total, scan.compatible), (1, 1));
}

#[test]
fn sec4_claims_reproduce() {
    let r = verify_f4_counterexample(BUDGET);
    assert!(r.holds, "{:#?}", r.diffs);
    let cs = dataset("sec4").unwrap().characters().unwrap().clone();
    let full = scan_subsets(&cs, 5, BUDGET, 1).unwrap();
    assert_eq!((full.total, full.compatible), (1, 0));
    assert_eq!(full.full_set_status, Status::Incompatible);
    let abcd = build_instance(&cs.restrict(&["a", "b", "c", "d"]).unwrap());
    assert!(!is_chordal(abcd.edges()));
    assert_eq!(solve(&abcd, BUDGET).status, Status::Compatible);
}

#[test]
fn corrupted_sec4_fails_with_a_diff() {
    // x and y swapped in character a
    let text = dataset_source("sec4")
        .unwrap()
        .replace("a = xu|zt|y|v", "a = yu|zt|x|v");
    assert_ne!(text, dataset_source("sec4").unwrap());
    let cs = parse_characters(&text).unwrap();
    let r = verify_f4_counterexample_on(&cs, BUDGET);
    assert!(!r.holds);
    assert!(!r.diffs.is_empty());
}

fn subsets_all_compatible(cs: &CharacterSet, k: usize) -> bool {
    let r = scan_subsets(cs, k, BUDGET, 1).unwrap();
    assert!(r.inconclusive_subsets.is_empty());
    r.compatible == r.total
}

#[test]
fn small_subset_compatibility_implies_full_compatibility() {
    for (r, seeds, max_species, max_chars) in [(2usize, 60u64, 7usize, 5usize), (3, 60, 6, 4)] {
        for seed in 0..seeds {
            let ns = r + 1 + seed as usize % (max_species - r);
            let nc = r + 1 + (seed as usize / 3) % (max_chars - r);
            let cs = random_characters(seed, ns, nc, r).unwrap();
            if subsets_all_compatible(&cs, r) {
                assert_eq!(
                    solve(&build_instance(&cs), BUDGET).status,
                    Status::Compatible,
                    "r = {r}, seed {seed}:\n{cs}"
                );
            }
        }
    }
}

#[test]
fn single_state_characters_are_always_compatible() {
    for seed in 0..20 {
        let cs = random_characters(seed, 5, 4, 1).unwrap();
        assert_eq!(solve(&build_instance(&cs), BUDGET).status, Status::Compatible);
    }
}
