//! Triangulations of a single cycle, enumerated exhaustively.

use super::SolverError;
use crate::graph::{Graph, Vertex};

/// Longest cycle accepted by the enumerator; there are `C(k-2)` triangulations
/// of a `k`-cycle (16796 at `k = 12`).
pub const MAX_CYCLE_LEN: usize = 12;

/// Chord sets, as position pairs `(i, j)` with `i < j`, of every triangulation
/// of the cycle `0, 1, .., k-1`. Each set has exactly `k - 3` chords and is
/// sorted.
pub fn triangulations_of_cycle(k: usize) -> Result<Vec<Vec<(usize, usize)>>, SolverError> {
    if !(3..=MAX_CYCLE_LEN).contains(&k) {
        return Err(SolverError::CycleLength {
            len: k,
            max: MAX_CYCLE_LEN,
        });
    }
    let mut out = polygon(0, k - 1);
    for t in &mut out {
        t.sort_unstable();
    }
    Ok(out)
}

/// Triangulations of the sub-polygon `i, i+1, .., j` closed by the side `(i, j)`:
/// pick the apex `m` of the triangle on that side and recurse on both halves.
fn polygon(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in i + 1..j {
        let left = polygon(i, m);
        let right = polygon(m, j);
        for l in &left {
            for r in &right {
                let mut t = Vec::with_capacity(l.len() + r.len() + 2);
                if m > i + 1 {
                    t.push((i, m));
                }
                if j > m + 1 {
                    t.push((m, j));
                }
                t.extend_from_slice(l);
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
    out
}

/// Number of triangulations of `cycle` (closed: last vertex adjacent to the
/// first) that use no pair of `conflicts`. Zero means the cycle is forbidden.
pub fn cycle_has_proper_triangulation(cycle: &[Vertex], conflicts: &Graph) -> Result<usize, SolverError> {
    let k = cycle.len();
    let all = triangulations_of_cycle(k)?;
    Ok(all
        .iter()
        .filter(|t| t.iter().all(|&(i, j)| !conflicts.has_edge(cycle[i], cycle[j])))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(triangulations_of_cycle(3).unwrap(), vec![Vec::<(usize, usize)>::new()]);
        assert_eq!(triangulations_of_cycle(4).unwrap(), vec![vec![(1, 3)], vec![(0, 2)]]);
        assert_eq!(triangulations_of_cycle(5).unwrap().len(), 5);
        assert_eq!(triangulations_of_cycle(6).unwrap().len(), 14);
        assert!(triangulations_of_cycle(2).is_err());
        assert!(triangulations_of_cycle(MAX_CYCLE_LEN + 1).is_err());
    }

    #[test]
    fn counting_with_conflicts() {
        let none = Graph::new(4);
        assert_eq!(cycle_has_proper_triangulation(&[0, 1, 2, 3], &none).unwrap(), 2);
        let both = Graph::from_edges(4, [(0, 2), (1, 3)]);
        assert_eq!(cycle_has_proper_triangulation(&[0, 1, 2, 3], &both).unwrap(), 0);
        let one = Graph::from_edges(4, [(0, 2)]);
        assert_eq!(cycle_has_proper_triangulation(&[3, 0, 1, 2], &one).unwrap(), 1);
    }
}
