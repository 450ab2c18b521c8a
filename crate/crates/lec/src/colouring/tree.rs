//! Queue-driven tree colouring: each edge receives the minimum colour absent
//! from the edges adjacent or semi-adjacent to it, swept breadth-first from a
//! start vertex. On a tree this uses exactly `rw(G)` colours.
//!
//! The component-level variant also runs inside composite graphs, where edges
//! of the cut-edge graph interleave with block edges. There the constraints
//! split in two tiers: colours forced by unique tree paths are hard, colours
//! seen across block edges are preferences (blocks provide alternative loose
//! routes, certified by the verifier).

use super::{EdgeColouring, PartialColouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use std::collections::{BTreeSet, VecDeque};

/// Colours a tree with exactly `rw(g)` colours.
pub fn colour_tree(g: &Graph) -> Result<EdgeColouring> {
    if !g.is_connected() || g.m() + 1 != g.n() {
        return Err(Error::Precondition("colour_tree requires a tree".into()));
    }
    if g.m() == 0 {
        return Err(Error::Precondition("colour_tree requires at least one edge".into()));
    }
    let rw = g.reduced_max_weight()?.rw;
    let tree_edge = vec![true; g.m()];
    let mut pc = PartialColouring::unset(g.m());
    fsb_colour_component(g, &mut pc, &tree_edge, 0, rw)?;
    let colouring = pc.finish(g)?;
    if colouring.k() != rw {
        return Err(Error::Internal(format!(
            "tree colouring used {} colours, expected rw = {rw}",
            colouring.k()
        )));
    }
    Ok(colouring)
}

/// Colours every uncoloured tree edge reachable from `start` through tree
/// edges. Pre-coloured edges are immutable constraints. Colours are drawn
/// from `1..=cap`.
pub(crate) fn fsb_colour_component(
    g: &Graph,
    pc: &mut PartialColouring,
    tree_edge: &[bool],
    start: usize,
    cap: usize,
) -> Result<()> {
    let mut reached = vec![false; g.n()];
    reached[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbours(v) {
            let e = g.edge_id(v, w).unwrap();
            if !tree_edge[e] {
                continue;
            }
            if !pc.is_coloured(e) {
                let colour = pick_colour(g, pc, tree_edge, e, cap)?;
                pc.set(e, colour);
            }
            if !reached[w] {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(())
}

fn pick_colour(
    g: &Graph,
    pc: &PartialColouring,
    tree_edge: &[bool],
    e: EdgeId,
    cap: usize,
) -> Result<usize> {
    let (hard, soft) = forbidden_sets(g, pc, tree_edge, e);
    if let Some(c) = (1..=cap).find(|c| !hard.contains(c) && !soft.contains(c)) {
        return Ok(c);
    }
    if let Some(c) = (1..=cap).find(|c| !hard.contains(c)) {
        return Ok(c);
    }
    let (u, v) = g.endpoints(e);
    Err(Error::Internal(format!(
        "no admissible colour for tree edge ({u}, {v}) within 1..={cap}"
    )))
}

/// Colours on coloured edges adjacent or semi-adjacent to `e`, split into the
/// hard tier (constraints through tree edges only) and the soft tier
/// (everything else).
fn forbidden_sets(
    g: &Graph,
    pc: &PartialColouring,
    tree_edge: &[bool],
    e: EdgeId,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let mut hard = BTreeSet::new();
    let mut soft = BTreeSet::new();
    let (a, b) = g.endpoints(e);
    for x in [a, b] {
        for &w in g.neighbours(x) {
            let h = g.edge_id(x, w).unwrap();
            if h == e {
                continue;
            }
            if let Some(c) = pc.get(h) {
                if tree_edge[h] {
                    hard.insert(c);
                } else {
                    soft.insert(c);
                }
            }
            // Edges at the far end of h are semi-adjacent to e.
            for &z in g.neighbours(w) {
                let f = g.edge_id(w, z).unwrap();
                if f == e || f == h {
                    continue;
                }
                if let Some(c) = pc.get(f) {
                    if tree_edge[f] && tree_edge[h] {
                        hard.insert(c);
                    } else {
                        soft.insert(c);
                    }
                }
            }
        }
    }
    (hard, soft)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::verify::verify_loose_connected;

    #[test]
    fn single_edge_uses_one_colour() {
        let g = families::path(2);
        let c = colour_tree(&g).unwrap();
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn star_k13_rainbow() {
        let g = families::star(3);
        let c = colour_tree(&g).unwrap();
        assert_eq!(c.k(), 3);
        let mut cols: Vec<_> = (0..3).map(|e| c.colour(e)).collect();
        cols.sort_unstable();
        assert_eq!(cols, vec![1, 2, 3]);
    }

    #[test]
    fn path_four_coloured_in_order() {
        // Start vertex 0 is an endpoint; the sweep produces 1, 2, 3 in order.
        let g = families::path(4);
        let c = colour_tree(&g).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(
            (0..3).map(|e| c.colour(e)).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn uses_exactly_rw_and_verifies_on_small_trees() {
        for g in [
            families::path(7),
            families::star(5),
            crate::graph::Graph::new(7, &[(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6)])
                .unwrap(),
        ] {
            let rw = g.reduced_max_weight().unwrap().rw;
            let c = colour_tree(&g).unwrap();
            assert_eq!(c.k(), rw);
            assert!(verify_loose_connected(&g, &c).unwrap().is_accepted());
        }
    }

    #[test]
    fn non_tree_rejected() {
        assert!(colour_tree(&families::cycle(4)).is_err());
    }
}
