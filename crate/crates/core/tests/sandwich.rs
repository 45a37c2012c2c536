mod common;

use common::{full_mask, random_graph, random_small_instances, small_graph, small_instance};
use phylocompat::sandwich::chordal::{chordless_cycles, elimination_ordering, shortest_chordless_cycle};
use phylocompat::sandwich::closure::{closure_with, Schedule};
use phylocompat::{
    closure, cycle_has_proper_triangulation, find_chordless_cycle, find_f_path, find_g_cycle, is_chordal,
    verify_closure_properties, ClosureOutcome, Graph, SandwichInstance,
};
use phylocompat_oracle::{
    all_pairs, all_proper_completions, chordless_paths_with_interior, cycle_is_chordless,
    has_chordless_cycle_bruteforce, simple_paths, triangulation_count_dp, SmallGraph,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_valid_chordless_cycle(g: &SmallGraph, c: &[usize]) {
    assert!(c.len() >= 4, "{c:?}");
    for i in 0..c.len() {
        assert!(g.has(c[i], c[(i + 1) % c.len()]), "{c:?} is not a cycle");
    }
    assert!(cycle_is_chordless(g, c), "{c:?} has a chord");
}

fn check_chordality(g: &Graph) {
    let small = small_graph(g);
    let chordal = is_chordal(g);
    assert_eq!(chordal, !has_chordless_cycle_bruteforce(&small), "{:?}", small.edges());
    match find_chordless_cycle(g) {
        Some(c) => {
            assert!(!chordal);
            assert_valid_chordless_cycle(&small, &c);
        }
        None => assert!(chordal),
    }
    if let Some(c) = shortest_chordless_cycle(g) {
        assert_valid_chordless_cycle(&small, &c);
    }
    if let Some(order) = elimination_ordering(g) {
        // every vertex's later neighbours are pairwise adjacent
        let pos: Vec<usize> = (0..order.len())
            .map(|v| order.iter().position(|&x| x == v).unwrap())
            .collect();
        for &v in &order {
            let later: Vec<usize> = (0..g.vertex_count())
                .filter(|&w| small.has(v, w) && pos[w] > pos[v])
                .collect();
            for (i, &a) in later.iter().enumerate() {
                for &b in &later[i + 1..] {
                    assert!(small.has(a, b));
                }
            }
        }
    }
}

#[test]
fn chordality_on_every_graph_up_to_five_vertices() {
    for n in 1..=5 {
        let pairs = all_pairs(n);
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            check_chordality(&Graph::from_edges(n, edges));
        }
    }
}

#[test]
fn chordality_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..1500 {
        let n = 6 + i % 4;
        let g = random_graph(&mut rng, n, [0.3, 0.5, 0.7][i % 3]);
        check_chordality(&g);
    }
}

/// Vertex sets of size >= 4 that induce a single cycle.
fn chordless_cycle_sets(g: &SmallGraph) -> usize {
    let mut count = 0;
    for set in 0u64..1 << g.n {
        if set.count_ones() < 4 {
            continue;
        }
        let members: Vec<usize> = (0..g.n).filter(|&v| set >> v & 1 == 1).collect();
        if !members.iter().all(|&v| (g.adj[v] & set).count_ones() == 2) {
            continue;
        }
        // 2-regular: a single cycle iff connected
        let mut seen = 1u64 << members[0];
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = g.adj[v] & set & !seen;
            seen |= new;
            frontier |= new;
        }
        if seen == set {
            count += 1;
        }
    }
    count
}

#[test]
fn chordless_cycles_are_enumerated_exactly_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..300 {
        let g = random_graph(&mut rng, 5 + i % 4, 0.45);
        let small = small_graph(&g);
        let cycles = chordless_cycles(&g);
        for c in &cycles {
            assert_valid_chordless_cycle(&small, c);
        }
        let mut sets: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), cycles.len(), "a cycle was listed twice");
        assert_eq!(cycles.len(), chordless_cycle_sets(&small));
    }
}

#[test]
fn f_paths_agree_with_path_enumeration() {
    for inst in random_small_instances(300, 4, 8, 36, 100) {
        let e = small_graph(inst.edges());
        let f = small_graph(inst.conflicts());
        for (u, v) in all_pairs(inst.vertex_count()) {
            if e.has(u, v) {
                assert!(find_f_path(&inst, u, v).is_err());
                continue;
            }
            let expected = chordless_paths_with_interior(&e, u, v, |t| f.has(u, t) || f.has(v, t));
            match find_f_path(&inst, u, v).unwrap() {
                None => assert!(expected.is_empty(), "missed {:?} for ({u},{v})", expected[0]),
                Some(p) => {
                    assert!(expected.contains(&p), "returned {p:?} is not an f-path for ({u},{v})");
                }
            }
        }
    }
}

/// Cycles `u w t1 .. tk v` (k >= 1) chordless in E with `w` outside F(v)
/// and every `ti` in F(u) ∪ F(v).
fn g_cycles(e: &SmallGraph, f: &SmallGraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let mut without = e.clone();
    without.adj[u] &= !(1 << v);
    without.adj[v] &= !(1 << u);
    simple_paths(&without, u, v)
        .into_iter()
        .filter(|p| p.len() >= 4)
        .filter(|p| !f.has(p[1], v))
        .filter(|p| p[2..p.len() - 1].iter().all(|&t| f.has(u, t) || f.has(v, t)))
        .filter(|p| cycle_is_chordless(e, p))
        .collect()
}

#[test]
fn g_cycles_agree_with_cycle_enumeration() {
    for inst in random_small_instances(300, 4, 8, 36, 900) {
        let e = small_graph(inst.edges());
        let f = small_graph(inst.conflicts());
        for (a, b) in all_pairs(inst.vertex_count()) {
            for (u, v) in [(a, b), (b, a)] {
                if !e.has(u, v) {
                    assert!(find_g_cycle(&inst, u, v).is_err());
                    continue;
                }
                let expected = g_cycles(&e, &f, u, v);
                match find_g_cycle(&inst, u, v).unwrap() {
                    None => assert!(expected.is_empty(), "missed {:?} for ({u},{v})", expected[0]),
                    Some(g) => {
                        assert!(expected.contains(&g.cycle), "returned {:?} for ({u},{v})", g.cycle);
                        assert_eq!(g.w, g.cycle[1]);
                    }
                }
            }
        }
    }
}

fn check_closure(inst: &SandwichInstance) {
    let oracle = small_instance(inst);
    let before = all_proper_completions(&oracle);
    match closure(inst) {
        ClosureOutcome::Infeasible(i) => {
            assert!(before.is_empty(), "closure refuted a completable instance");
            let e = small_graph(i.instance.edges());
            assert!(i.witness.len() >= 4);
            for k in 0..i.witness.len() {
                assert!(e.has(i.witness[k], i.witness[(k + 1) % i.witness.len()]));
            }
            assert_eq!(
                cycle_has_proper_triangulation(&i.witness, i.instance.conflicts()).unwrap(),
                0
            );
        }
        ClosureOutcome::Closed(c) => {
            let closed = &c.instance;
            let after = all_proper_completions(&small_instance(closed));
            assert_eq!(before, after, "closure changed the completion set");
            // monotone, disjoint
            for p in inst.edges().edges() {
                assert!(closed.is_edge(p.lo(), p.hi()));
            }
            for p in inst.conflicts().edges() {
                assert!(closed.is_conflict(p.lo(), p.hi()));
            }
            for p in &c.added_forced {
                assert!(inst.is_free(p.lo(), p.hi()) && closed.is_edge(p.lo(), p.hi()));
            }
            for p in &c.added_forbidden {
                assert!(inst.is_free(p.lo(), p.hi()) && closed.is_conflict(p.lo(), p.hi()));
            }
            assert_eq!(full_mask(closed, &[]), full_mask(inst, &c.added_forced));
            // fixpoint
            for p in closed.free_pairs() {
                assert_eq!(find_f_path(closed, p.lo(), p.hi()).unwrap(), None);
            }
            for p in closed.edges().edges() {
                assert!(find_g_cycle(closed, p.lo(), p.hi()).unwrap().is_none());
                assert!(find_g_cycle(closed, p.hi(), p.lo()).unwrap().is_none());
            }
            // idempotent
            let again = closure(closed);
            assert!(again.added_forced().is_empty() && again.added_forbidden().is_empty());
            assert!(!again.is_infeasible());
            // confluent
            let rev = closure_with(inst, Schedule::Reverse);
            assert_eq!(rev.closed().map(|r| &r.instance), Some(closed));
            assert!(verify_closure_properties(closed).holds());
        }
    }
    let rev = closure_with(inst, Schedule::Reverse);
    assert_eq!(rev.is_infeasible(), closure(inst).is_infeasible());
}

#[test]
fn closure_preserves_completions() {
    for inst in random_small_instances(200, 4, 8, 14, 5000) {
        check_closure(&inst);
    }
}

#[test]
fn closure_of_intersection_graphs() {
    let mut checked = 0;
    for seed in 0..200 {
        let cs = phylocompat::random_characters(seed, 4 + seed as usize % 3, 3, 2 + seed as usize % 2).unwrap();
        let inst = phylocompat::build_instance(&cs);
        if inst.vertex_count() <= 9 && inst.free_pairs().len() <= 16 {
            check_closure(&inst);
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} instances were small enough");
}

#[test]
fn triangulation_counts_match_interval_recurrence() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 4..=9 {
        for _ in 0..40 {
            let conflicts = random_graph(&mut rng, k, 0.25);
            let cycle: Vec<usize> = (0..k).collect();
            let got = cycle_has_proper_triangulation(&cycle, &conflicts).unwrap();
            let expected = triangulation_count_dp(k, |i, j| !conflicts.has_edge(i, j));
            assert_eq!(got as u64, expected);
        }
    }
}
