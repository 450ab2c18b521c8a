//! Three-colour constructions for 2-connected graphs, dispatched on the
//! circumference: the explicit family schemes for circumference 4 and 5, and
//! the alternating longest-cycle scheme for circumference at least 6.

use super::{EdgeColouring, PartialColouring};
use crate::circumference::{circumference, longest_cycle, DEFAULT_BUDGET};
use crate::classify::{classify_small_block, BlockClass};
use crate::decompose::block_decomposition;
use crate::error::{Error, Result};
use crate::families::C5Variant;
use crate::graph::Graph;

/// Colours a 2-connected graph with at most three colours. Uses one colour
/// exactly when the input is the triangle.
pub fn colour_two_connected(g: &Graph) -> Result<EdgeColouring> {
    let decomp = block_decomposition(g)?;
    if !decomp.is_two_connected(g) {
        return Err(Error::Precondition(
            "colour_two_connected requires a 2-connected graph".into(),
        ));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    let mut pc = PartialColouring::unset(g.m());
    colour_block(g, &all, None, &mut pc)?;
    pc.finish(g)
}

/// Colours one 2-connected block of `g` (given by its vertex set) in place.
///
/// When `pin = Some((v, (a, b)))` and `v` has degree 2 in the block, the two
/// block edges at `v` receive colours `a` and `b` (the cut vertex becomes
/// "typed"); vertices of higher degree are universal and need no pin.
pub(crate) fn colour_block(
    g: &Graph,
    block_vertices: &[usize],
    pin: Option<(usize, (usize, usize))>,
    pc: &mut PartialColouring,
) -> Result<()> {
    let (bg, back) = g.induced(block_vertices);
    let cir = circumference(&bg, DEFAULT_BUDGET)?;
    let local: Vec<(usize, usize, usize)> = if cir >= 6 {
        long_cycle_scheme(&bg)?
    } else if cir == 3 {
        // The triangle: one colour standalone, rainbow when a pin demands
        // distinct colours at a cut vertex.
        match pin_local(&bg, &back, pin) {
            Some((_, (a, b))) => {
                let c = (1..=3).find(|x| *x != a && *x != b).unwrap();
                // Orient so the pinned vertex's edges carry (a, b).
                let v = pin_local(&bg, &back, pin).unwrap().0;
                let others: Vec<usize> = (0..3).filter(|&x| x != v).collect();
                vec![
                    (v, others[0], a),
                    (v, others[1], b),
                    (others[0], others[1], c),
                ]
            }
            None => bg
                .edges()
                .iter()
                .map(|&(u, v)| (u, v, 1))
                .collect(),
        }
    } else {
        let classified = classify_small_block(&bg)?;
        let scheme = family_scheme(&classified.class)?;
        // Transport reference-space colours through the certificate mapping.
        let mapped: Vec<(usize, usize, usize)> = scheme
            .iter()
            .map(|&(i, j, c)| (classified.mapping[i], classified.mapping[j], c))
            .collect();
        apply_pin(&bg, mapped, pin_local(&bg, &back, pin))?
    };
    for (u, v, c) in local {
        let e = g
            .edge_id(back[u], back[v])
            .ok_or_else(|| Error::Internal("scheme edge missing from graph".into()))?;
        if !pc.is_coloured(e) {
            pc.set(e, c);
        }
    }
    Ok(())
}

fn pin_local(
    bg: &Graph,
    back: &[usize],
    pin: Option<(usize, (usize, usize))>,
) -> Option<(usize, (usize, usize))> {
    let (v, pair) = pin?;
    let local = back.iter().position(|&x| x == v)?;
    if bg.degree(local) == 2 {
        Some((local, pair))
    } else {
        None
    }
}

/// Recolours a three-colour scheme by the unique permutation sending the two
/// block-edge colours at the pinned vertex onto the required pair.
fn apply_pin(
    bg: &Graph,
    scheme: Vec<(usize, usize, usize)>,
    pin: Option<(usize, (usize, usize))>,
) -> Result<Vec<(usize, usize, usize)>> {
    let Some((v, (a, b))) = pin else {
        return Ok(scheme);
    };
    let at_v: Vec<usize> = scheme
        .iter()
        .filter(|&&(x, y, _)| x == v || y == v)
        .map(|&(_, _, c)| c)
        .collect();
    if at_v.len() != 2 || at_v[0] == at_v[1] {
        return Err(Error::Internal(
            "pinned vertex does not have two distinctly coloured block edges".into(),
        ));
    }
    let (p, q) = (at_v[0], at_v[1]);
    // Two candidate permutations of {1,2,3}; take the lexicographically first.
    let mut candidates = Vec::new();
    for (pa, pb) in [(a, b), (b, a)] {
        let mut perm = [0usize; 4];
        perm[p] = pa;
        perm[q] = pb;
        let rest_from = (1..=3).find(|&c| c != p && c != q).unwrap();
        let rest_to = (1..=3).find(|&c| c != pa && c != pb).unwrap();
        perm[rest_from] = rest_to;
        candidates.push(perm);
    }
    candidates.sort();
    let perm = candidates[0];
    Ok(scheme
        .into_iter()
        .map(|(x, y, c)| (x, y, perm[c]))
        .collect())
}

/// Alternating colouring of a longest cycle; chords and off-cycle edges get
/// colour 1. Soundness rests on the verifier, not on the pattern.
fn long_cycle_scheme(bg: &Graph) -> Result<Vec<(usize, usize, usize)>> {
    let cyc = longest_cycle(bg, DEFAULT_BUDGET)?
        .ok_or_else(|| Error::Internal("2-connected graph without a cycle".into()))?;
    let k = cyc.len();
    let mut out = Vec::with_capacity(bg.m());
    let mut on_cycle = vec![false; bg.m()];
    for i in 0..k {
        let (u, v) = (cyc[i], cyc[(i + 1) % k]);
        on_cycle[bg.edge_id(u, v).unwrap()] = true;
        out.push((u, v, (i % 3) + 1));
    }
    for (e, &(u, v)) in bg.edges().iter().enumerate() {
        if !on_cycle[e] {
            out.push((u, v, 1));
        }
    }
    Ok(out)
}

/// Reference-space colourings for the small families; colours are 1 = a,
/// 2 = b, 3 = c in construction order.
fn family_scheme(class: &BlockClass) -> Result<Vec<(usize, usize, usize)>> {
    let (a, b, c) = (1, 2, 3);
    Ok(match class {
        BlockClass::K3 => vec![(0, 1, a), (0, 2, a), (1, 2, a)],
        BlockClass::K4 => {
            // Rainbow over opposite pairs: both "diagonals" of any 4-cycle
            // share a colour.
            vec![
                (0, 2, a),
                (1, 3, a),
                (0, 3, b),
                (1, 2, b),
                (0, 1, c),
                (2, 3, c),
            ]
        }
        BlockClass::K2s { s } | BlockClass::K2sPrime { s } | BlockClass::K2sPlus { s } => {
            let mut out = Vec::new();
            for i in 0..*s {
                let v = 2 + i;
                let (xc, yc) = match i {
                    0 => (a, b),
                    1 => (b, c),
                    _ => (c, a),
                };
                out.push((0, v, xc));
                out.push((1, v, yc));
            }
            if matches!(class, BlockClass::K2sPrime { .. }) {
                out.push((0, 1, a));
            }
            if matches!(class, BlockClass::K2sPlus { .. }) {
                out.push((3, 4, a));
            }
            out
        }
        BlockClass::Prs { r, s }
        | BlockClass::PrsPrime { r, s }
        | BlockClass::PrsDoublePrime { r, s } => {
            let mut out = vec![(1, 2, c)];
            for i in 0..*r {
                let u = 3 + i;
                out.push((0, u, if i == 0 { a } else { b }));
                out.push((1, u, if i == 0 { b } else { c }));
            }
            for j in 0..*s {
                let v = 3 + r + j;
                out.push((0, v, if j == 0 { c } else { a }));
                out.push((2, v, if j == 0 { a } else { b }));
            }
            if matches!(class, BlockClass::PrsPrime { .. }) {
                out.push((0, 1, b));
            }
            if matches!(class, BlockClass::PrsDoublePrime { .. }) {
                out.push((0, 1, c));
                out.push((0, 2, b));
            }
            out
        }
        BlockClass::C5Diagonals { variant } => {
            // Pentagon 0-1-2-3-4 coloured 1,2,3,1,2 around; chords as fixed.
            let mut out = vec![
                (0, 1, 1),
                (1, 2, 2),
                (2, 3, 3),
                (3, 4, 1),
                (0, 4, 2),
            ];
            let chords: &[(usize, usize, usize)] = match variant {
                C5Variant::TwoNonAdjacent => &[(0, 2, 3), (1, 3, 3)],
                C5Variant::ThreePath => &[(0, 2, 3), (2, 4, 1), (1, 4, 3)],
                C5Variant::ThreeMixed => &[(0, 2, 3), (2, 4, 1), (1, 3, 3)],
                C5Variant::Four => &[(0, 2, 3), (2, 4, 1), (1, 4, 3), (1, 3, 3)],
                C5Variant::Five => &[(0, 2, 3), (2, 4, 1), (1, 4, 3), (1, 3, 3), (0, 3, 1)],
            };
            out.extend_from_slice(chords);
            out
        }
        BlockClass::Large => {
            return Err(Error::Internal("family_scheme called for a large block".into()))
        }
    })
}
