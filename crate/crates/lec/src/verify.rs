//! Ground truth for colourings: is a coloured graph loose edge-connected?
//!
//! A pair `(u, v)` qualifies through a direct edge, a bi-chromatic path of
//! length two, or a path of length at least three carrying at least three
//! distinct colours.

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Edge,
    BichromaticTwoPath,
    LoosePath,
}

/// A qualifying path for one vertex pair.
#[derive(Debug, Clone)]
pub struct LooseWitness {
    pub u: usize,
    pub v: usize,
    pub kind: WitnessKind,
    /// Vertex sequence from `u` to `v`.
    pub path: Vec<usize>,
    /// Edge colours along the path.
    pub colours: Vec<usize>,
}

fn witness(g: &Graph, c: &EdgeColouring, path: Vec<usize>) -> LooseWitness {
    let colours: Vec<usize> = path
        .windows(2)
        .map(|w| c.colour(g.edge_id(w[0], w[1]).unwrap()))
        .collect();
    let kind = match path.len() {
        2 => WitnessKind::Edge,
        3 => WitnessKind::BichromaticTwoPath,
        _ => WitnessKind::LoosePath,
    };
    LooseWitness {
        u: path[0],
        v: *path.last().unwrap(),
        kind,
        path,
        colours,
    }
}

/// Finds a qualifying path for `(u, v)`, or `None`.
///
/// Search order: direct edge, all two-edge paths, then a pruned DFS over
/// simple paths. Once three distinct colours accumulate the walk only needs
/// to reach `v` through unvisited vertices, which is a plain reachability
/// question.
pub fn is_loose_pair(
    g: &Graph,
    c: &EdgeColouring,
    u: usize,
    v: usize,
) -> Result<Option<LooseWitness>> {
    if u == v || u >= g.n() || v >= g.n() {
        return Err(Error::Precondition("is_loose_pair needs two distinct vertices".into()));
    }
    if g.has_edge(u, v) {
        return Ok(Some(witness(g, c, vec![u, v])));
    }
    for &w in g.neighbours(u) {
        if g.has_edge(w, v) {
            let c1 = c.colour(g.edge_id(u, w).unwrap());
            let c2 = c.colour(g.edge_id(w, v).unwrap());
            if c1 != c2 {
                return Ok(Some(witness(g, c, vec![u, w, v])));
            }
        }
    }
    // DFS over simple paths tracking the set of distinct colours (at most two
    // matter; a third ends the counting).
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    let mut path = vec![u];
    let found = dfs_loose(g, c, v, &mut path, &mut visited, &mut Vec::new());
    Ok(found.map(|p| witness(g, c, p)))
}

fn dfs_loose(
    g: &Graph,
    c: &EdgeColouring,
    target: usize,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    seen_colours: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let here = *path.last().unwrap();
    if seen_colours.len() >= 3 {
        // Loose already; any completion to the target works.
        if let Some(rest) = reach(g, here, target, visited) {
            let mut full = path.clone();
            full.extend(rest.into_iter().skip(1));
            return Some(full);
        }
        return None;
    }
    // Without three colours yet, the target must still be reachable at all.
    if reach(g, here, target, visited).is_none() {
        return None;
    }
    for &w in g.neighbours(here) {
        if visited[w] {
            continue;
        }
        let col = c.colour(g.edge_id(here, w).unwrap());
        let fresh = !seen_colours.contains(&col);
        if fresh {
            seen_colours.push(col);
        }
        // A completed path qualifies only with >= 3 colours and >= 3 edges;
        // three distinct colours force at least three edges. The target is
        // only ever an endpoint, never an interior vertex.
        if w == target {
            if seen_colours.len() >= 3 {
                path.push(w);
                let full = path.clone();
                path.pop();
                if fresh {
                    seen_colours.pop();
                }
                return Some(full);
            }
            if fresh {
                seen_colours.pop();
            }
            continue;
        }
        visited[w] = true;
        path.push(w);
        let r = dfs_loose(g, c, target, path, visited, seen_colours);
        path.pop();
        visited[w] = false;
        if fresh {
            seen_colours.pop();
        }
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Shortest unvisited-vertex path from `from` to `target` (inclusive), if any.
fn reach(g: &Graph, from: usize, target: usize, visited: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([from]);
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        if x == target {
            let mut path = vec![target];
            let mut cur = target;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbours(x) {
            if !seen[w] && (!visited[w] || w == target) {
                seen[w] = true;
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Naive all-simple-paths search; the independent oracle for
/// [`is_loose_pair`] on small graphs.
pub fn is_loose_pair_naive(g: &Graph, c: &EdgeColouring, u: usize, v: usize) -> bool {
    fn walk(
        g: &Graph,
        c: &EdgeColouring,
        target: usize,
        path: &mut Vec<usize>,
        visited: &mut Vec<bool>,
    ) -> bool {
        let here = *path.last().unwrap();
        if here == target {
            let cols: std::collections::BTreeSet<usize> = path
                .windows(2)
                .map(|w| c.colour(g.edge_id(w[0], w[1]).unwrap()))
                .collect();
            let len = path.len() - 1;
            return len == 1 || (len == 2 && cols.len() == 2) || (len >= 3 && cols.len() >= 3);
        }
        for &w in g.neighbours(here) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            path.push(w);
            let ok = walk(g, c, target, path, visited);
            path.pop();
            visited[w] = false;
            if ok {
                return true;
            }
        }
        false
    }
    let mut visited = vec![false; g.n()];
    visited[u] = true;
    walk(g, c, v, &mut vec![u], &mut visited)
}

/// Outcome of [`verify_loose_connected`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Accepted,
    /// Lexicographically first failing pair.
    Rejected { u: usize, v: usize },
}

impl VerifyOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, VerifyOutcome::Accepted)
    }
}

/// Checks every unordered pair in lexicographic order.
pub fn verify_loose_connected(g: &Graph, c: &EdgeColouring) -> Result<VerifyOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if is_loose_pair(g, c, u, v)?.is_none() {
                return Ok(VerifyOutcome::Rejected { u, v });
            }
        }
    }
    Ok(VerifyOutcome::Accepted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::EdgeColouring;
    use crate::families;

    #[test]
    fn monochromatic_triangle_accepted() {
        let g = families::complete(3);
        let c = EdgeColouring::new(&g, vec![1, 1, 1]).unwrap();
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
    }

    #[test]
    fn c4_alternating_accepted() {
        let g = families::cycle(4);
        // Edge order is (0,1),(0,3),(1,2),(2,3); alternate around the cycle.
        let c = EdgeColouring::new(&g, vec![1, 2, 2, 1]).unwrap();
        assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
    }

    #[test]
    fn c5_two_coloured_rejected() {
        let g = families::cycle(5);
        // Around the cycle 0-1-2-3-4-0: colours 1,2,1,2,1.
        // Edge order: (0,1),(0,4),(1,2),(2,3),(3,4).
        let c = EdgeColouring::new(&g, vec![1, 1, 2, 1, 2]).unwrap();
        let out = verify_loose_connected(&g, &c).unwrap();
        assert!(!out.is_accepted());
    }

    #[test]
    fn adjacent_pair_is_edge_witness() {
        let g = families::complete(4);
        let c = EdgeColouring::new(&g, vec![1; 6]).unwrap();
        let w = is_loose_pair(&g, &c, 0, 1).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::Edge);
    }

    #[test]
    fn rainbow_path_is_loose_witness() {
        let g = families::path(4);
        let c = EdgeColouring::new(&g, vec![1, 2, 3]).unwrap();
        let w = is_loose_pair(&g, &c, 0, 3).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::LoosePath);
        assert_eq!(w.path, vec![0, 1, 2, 3]);
    }

    #[test]
    fn two_coloured_long_path_is_not_loose() {
        let g = families::path(4);
        let c = EdgeColouring::new(&g, vec![1, 2, 1]).unwrap();
        assert!(is_loose_pair(&g, &c, 0, 3).unwrap().is_none());
        assert!(!is_loose_pair_naive(&g, &c, 0, 3));
    }

    #[test]
    fn pruned_matches_naive_on_colour_variants() {
        let g = families::bowtie();
        for pattern in [[1, 1, 1, 1, 1, 1], [1, 2, 1, 2, 1, 2], [1, 2, 3, 1, 2, 3]] {
            let c = EdgeColouring::new(&g, pattern.to_vec()).unwrap();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    assert_eq!(
                        is_loose_pair(&g, &c, u, v).unwrap().is_some(),
                        is_loose_pair_naive(&g, &c, u, v),
                        "pair ({u}, {v}) pattern {pattern:?}"
                    );
                }
            }
        }
    }
}
