//! Seeded generators for property tests. ChaCha8 keeps streams identical
//! across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ExperimentError;
use crate::characters::CharacterSet;
use crate::graph::Pair;
use crate::sandwich::SandwichInstance;

/// `n_chars` full characters on species `s0 .. s{n-1}`, each a uniformly
/// random surjection onto exactly `r` states. Non-surjective draws are
/// rejected and redrawn.
pub fn random_characters(
    seed: u64,
    n_species: usize,
    n_chars: usize,
    r: usize,
) -> Result<CharacterSet, ExperimentError> {
    if r == 0 || n_species < r {
        return Err(ExperimentError::InfeasibleParameters(format!(
            "need 1 <= r <= n_species, got r = {r}, n_species = {n_species}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let species: Vec<String> = (0..n_species).map(|i| format!("s{i}")).collect();
    let names: Vec<String> = (0..n_chars).map(|i| format!("k{i}")).collect();
    let mut chars = Vec::with_capacity(n_chars);
    for name in &names {
        let states = loop {
            let s: Vec<usize> = (0..n_species).map(|_| rng.gen_range(0..r)).collect();
            let mut hit = vec![false; r];
            s.iter().for_each(|&x| hit[x] = true);
            if hit.iter().all(|&h| h) {
                break s;
            }
        };
        let blocks: Vec<Vec<&str>> = (0..r)
            .map(|b| {
                (0..n_species)
                    .filter(|&i| states[i] == b)
                    .map(|i| species[i].as_str())
                    .collect()
            })
            .collect();
        chars.push((name.as_str(), blocks));
    }
    let universe: Vec<&str> = species.iter().map(String::as_str).collect();
    Ok(CharacterSet::from_blocks(Some(&universe), &chars)?)
}

/// Unlabelled instance on `n` vertices: each pair independently becomes an
/// edge with probability `p_edge`, else a conflict with probability
/// `p_conflict / (1 - p_edge)`, else stays free.
pub fn random_instance(seed: u64, n: usize, p_edge: f64, p_conflict: f64) -> SandwichInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut conflicts = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let x: f64 = rng.gen();
            if x < p_edge {
                edges.push(Pair::new(u, v));
            } else if x < p_edge + p_conflict {
                conflicts.push(Pair::new(u, v));
            }
        }
    }
    SandwichInstance::unlabelled(n, edges, conflicts).expect("disjoint by construction")
}
