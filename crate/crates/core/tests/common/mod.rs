//! Conversions between library types and the brute-force oracle's types.
#![allow(dead_code)]

use phylocompat::{Graph, Pair, SandwichInstance};
use phylocompat_oracle::{pair_index, SmallGraph, SmallInstance};
use rand::Rng;

pub fn small_graph(g: &Graph) -> SmallGraph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|p| (p.lo(), p.hi())).collect();
    SmallGraph::from_edges(g.vertex_count(), &edges)
}

pub fn small_instance(inst: &SandwichInstance) -> SmallInstance {
    let pairs = |g: &Graph| g.edges().iter().map(|p| (p.lo(), p.hi())).collect();
    SmallInstance {
        n: inst.vertex_count(),
        edges: pairs(inst.edges()),
        conflicts: pairs(inst.conflicts()),
    }
}

/// Pair mask of `E ∪ fill`, in the oracle's pair indexing.
pub fn full_mask(inst: &SandwichInstance, fill: &[Pair]) -> u64 {
    let n = inst.vertex_count();
    inst.edges()
        .edges()
        .iter()
        .chain(fill)
        .fold(0, |m, p| m | 1 << pair_index(n, p.lo(), p.hi()))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random instances on `lo..=hi` vertices with at most `max_free` free pairs,
/// so the exhaustive oracle stays cheap.
pub fn random_small_instances(count: usize, lo: usize, hi: usize, max_free: usize, seed: u64) -> Vec<SandwichInstance> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        s += 1;
        let n = lo + (s as usize % (hi - lo + 1));
        let pe = [0.3, 0.4, 0.5][s as usize % 3];
        let pf = [0.2, 0.3, 0.35][(s / 3) as usize % 3];
        let inst = phylocompat::random_instance(s, n, pe, pf);
        if inst.free_pairs().len() <= max_free {
            out.push(inst);
        }
    }
    out
}
