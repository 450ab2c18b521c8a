//! The two-colour construction for complete bipartite graphs in the
//! `2 <= s <= r <= 2^s` régime.
//!
//! Each X-vertex carries a binary vector of star colours. The first `s - 1`
//! stars get the threshold vectors (colour `a` up to position `i`, `b`
//! after); the remaining stars get pairwise-distinct unused vectors. Distinct
//! vectors give every X-pair a bi-chromatic two-path, and the thresholds
//! split every Y-coordinate pair.

use super::EdgeColouring;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;

/// Builds `K_{r,s}` in the [`families::complete_bipartite`] layout together
/// with its two-colouring. Errors when the parameters are outside the
/// characterization (the caller must use three colours instead).
pub fn colour_complete_bipartite_two(r: usize, s: usize) -> Result<(Graph, EdgeColouring)> {
    if !(2 <= s && s <= r) {
        return Err(Error::Precondition(format!(
            "colour_complete_bipartite_two requires 2 <= s <= r, got r = {r}, s = {s}"
        )));
    }
    if s < 64 && r > (1usize << s) {
        return Err(Error::Precondition(format!("r > 2^s for r = {r}, s = {s}")));
    }
    let g = families::complete_bipartite(r, s);
    let vectors = star_vectors(r, s);
    let mut colours = vec![0usize; g.m()];
    for (i, vec) in vectors.iter().enumerate() {
        for (j, &bit) in vec.iter().enumerate() {
            let e = g.edge_id(i, r + j).unwrap();
            colours[e] = if bit { 2 } else { 1 };
        }
    }
    let colouring = EdgeColouring::new(&g, colours)?;
    Ok((g, colouring))
}

/// The `r` star vectors; `false` is colour `a`, `true` is colour `b`.
/// Vectors `1..s-1` are thresholds, the rest fill in canonical numeric order
/// skipping already-used patterns.
pub fn star_vectors(r: usize, s: usize) -> Vec<Vec<bool>> {
    let mut vectors: Vec<Vec<bool>> = Vec::with_capacity(r);
    for i in 1..s {
        // a up to position i, b after
        vectors.push((0..s).map(|j| j >= i).collect());
    }
    let used: std::collections::BTreeSet<u64> = vectors.iter().map(|v| pack(v)).collect();
    let mut next: u64 = 0;
    while vectors.len() < r {
        if !used.contains(&next) {
            vectors.push((0..s).map(|j| (next >> j) & 1 == 1).collect());
        }
        next += 1;
    }
    vectors.truncate(r);
    vectors
}

fn pack(v: &[bool]) -> u64 {
    v.iter()
        .enumerate()
        .fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_loose_connected;

    #[test]
    fn k22_two_colours() {
        let (g, c) = colour_complete_bipartite_two(2, 2).unwrap();
        assert_eq!(c.k(), 2);
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
    }

    #[test]
    fn k42_two_colours() {
        let (g, c) = colour_complete_bipartite_two(4, 2).unwrap();
        assert_eq!(c.k(), 2);
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
    }

    #[test]
    fn k52_rejected_by_pigeonhole() {
        assert!(colour_complete_bipartite_two(5, 2).is_err());
    }

    #[test]
    fn vectors_pairwise_distinct_and_thresholds_split_coordinates() {
        for (r, s) in [(2, 2), (4, 2), (8, 3), (5, 3), (16, 4)] {
            let vs = star_vectors(r, s);
            assert_eq!(vs.len(), r);
            for i in 0..r {
                for j in i + 1..r {
                    assert_ne!(vs[i], vs[j], "stars {i} and {j} for K_{{{r},{s}}}");
                }
            }
            // Claim 2: among the first s-1 vectors each coordinate pair is split.
            for k in 0..s {
                for l in k + 1..s {
                    assert!(
                        (0..s - 1).any(|i| vs[i][k] != vs[i][l]),
                        "coordinates ({k}, {l}) never split for K_{{{r},{s}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn boundary_r_equals_two_pow_s() {
        let (g, c) = colour_complete_bipartite_two(4, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
        let (g, c) = colour_complete_bipartite_two(8, 3).unwrap();
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
    }
}
