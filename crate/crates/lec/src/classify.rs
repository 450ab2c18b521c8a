//! Recognition of the 2-connected classes with circumference 3, 4, 5 and of
//! leaf-decorated typed subgraphs.
//!
//! Small blocks are matched by invariant fingerprint (order, size, degrees,
//! circumference) followed by explicit isomorphism against the parameterized
//! reference construction; the witnessing vertex mapping is kept with the
//! result.

use crate::circumference::{circumference, longest_cycle, DEFAULT_BUDGET};
use crate::decompose::block_decomposition;
use crate::error::{Error, Result};
use crate::families::{self, C5Variant};
use crate::graph::Graph;
use crate::iso::find_isomorphism;

/// Classes of 2-connected graphs with circumference at most 5, plus `Large`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockClass {
    K3,
    K4,
    /// `K_{2,s}`, `s >= 2`; `K_{2,2}` is the 4-cycle.
    K2s { s: usize },
    /// `K'_{2,s}`, `s >= 2`; `K'_{2,2}` is the diamond.
    K2sPrime { s: usize },
    /// `K+_{2,s}`, `s >= 3` (one edge between two spokes).
    K2sPlus { s: usize },
    /// `P_{r,s}`, `r >= s >= 1`; `P_{1,1}` is the plain 5-cycle.
    Prs { r: usize, s: usize },
    /// `P'_{r,s}` (ordered: the `xy` edge breaks the r/s symmetry).
    PrsPrime { r: usize, s: usize },
    /// `P''_{r,s}`, `r >= s >= 1`.
    PrsDoublePrime { r: usize, s: usize },
    /// Pentagon with 2..=5 diagonals in the shapes not covered by the
    /// `P`-families.
    C5Diagonals { variant: C5Variant },
    /// Circumference at least 6.
    Large,
}

impl BlockClass {
    pub fn tag(&self) -> String {
        match self {
            BlockClass::K3 => "K3".into(),
            BlockClass::K4 => "K4".into(),
            BlockClass::K2s { s } => format!("K_{{2,{s}}}"),
            BlockClass::K2sPrime { s } => format!("K'_{{2,{s}}}"),
            BlockClass::K2sPlus { s } => format!("K+_{{2,{s}}}"),
            BlockClass::Prs { r, s } => format!("P_{{{r},{s}}}"),
            BlockClass::PrsPrime { r, s } => format!("P'_{{{r},{s}}}"),
            BlockClass::PrsDoublePrime { r, s } => format!("P''_{{{r},{s}}}"),
            BlockClass::C5Diagonals { variant } => match variant {
                C5Variant::TwoNonAdjacent => "C5~2".into(),
                C5Variant::ThreePath => "C5^3".into(),
                C5Variant::ThreeMixed => "C5~3".into(),
                C5Variant::Four => "C5^4".into(),
                C5Variant::Five => "C5^5".into(),
            },
        }
    }
}

/// Classification result with its certificate.
#[derive(Debug, Clone)]
pub struct ClassifiedBlock {
    pub class: BlockClass,
    /// `mapping[i]` = input vertex playing reference vertex `i`'s role;
    /// empty for `Large`.
    pub mapping: Vec<usize>,
    /// Alternative names for classes that coincide at small parameters.
    pub aliases: Vec<String>,
}

/// Reference construction for a (non-`Large`) class.
pub fn reference_graph(class: &BlockClass) -> Option<Graph> {
    Some(match class {
        BlockClass::K3 => families::complete(3),
        BlockClass::K4 => families::complete(4),
        BlockClass::K2s { s } => families::k2s(*s),
        BlockClass::K2sPrime { s } => families::k2s_prime(*s),
        BlockClass::K2sPlus { s } => families::k2s_plus(*s),
        BlockClass::Prs { r, s } => families::p_rs(*r, *s),
        BlockClass::PrsPrime { r, s } => families::p_rs_prime(*r, *s),
        BlockClass::PrsDoublePrime { r, s } => families::p_rs_doubleprime(*r, *s),
        BlockClass::C5Diagonals { variant } => families::c5_variant(*variant),
        BlockClass::Large => return None,
    })
}

fn aliases_for(class: &BlockClass) -> Vec<String> {
    match class {
        BlockClass::K2s { s: 2 } => vec!["C4".into()],
        BlockClass::K2sPrime { s: 2 } => vec!["diamond".into()],
        BlockClass::Prs { r: 1, s: 1 } => vec!["C5".into()],
        BlockClass::PrsPrime { r: 1, s: 1 } => vec!["C5^1".into()],
        BlockClass::PrsDoublePrime { r: 1, s: 1 } => vec!["C5^2".into()],
        BlockClass::C5Diagonals {
            variant: C5Variant::TwoNonAdjacent,
        } => vec!["K+_{2,3}".into()],
        BlockClass::C5Diagonals {
            variant: C5Variant::Five,
        } => vec!["K5".into()],
        _ => Vec::new(),
    }
}

/// Classifies a 2-connected graph. Exact per the characterization for
/// circumference 3, 4, 5; `Large` for 6 and above.
pub fn classify_small_block(b: &Graph) -> Result<ClassifiedBlock> {
    let decomp = block_decomposition(b)?;
    if !decomp.is_two_connected(b) {
        return Err(Error::Precondition(
            "classify_small_block requires a 2-connected graph".into(),
        ));
    }
    let cir = circumference(b, DEFAULT_BUDGET)?;
    if cir >= 6 {
        return Ok(ClassifiedBlock {
            class: BlockClass::Large,
            mapping: Vec::new(),
            aliases: Vec::new(),
        });
    }
    let n = b.n();
    let mut candidates: Vec<BlockClass> = Vec::new();
    match cir {
        3 => candidates.push(BlockClass::K3),
        4 => {
            candidates.push(BlockClass::K4);
            if n >= 4 {
                let s = n - 2;
                candidates.push(BlockClass::K2s { s });
                candidates.push(BlockClass::K2sPrime { s });
            }
        }
        5 => {
            if n == 5 {
                for variant in C5Variant::ALL {
                    candidates.push(BlockClass::C5Diagonals { variant });
                }
            }
            if n >= 5 {
                let s = n - 2;
                if s >= 3 {
                    candidates.push(BlockClass::K2sPlus { s });
                }
                let total = n - 3;
                for s in 1..=total.saturating_sub(1) {
                    let r = total - s;
                    if r >= s {
                        candidates.push(BlockClass::Prs { r, s });
                        candidates.push(BlockClass::PrsDoublePrime { r, s });
                    }
                    candidates.push(BlockClass::PrsPrime { r, s });
                }
            }
        }
        _ => {
            return Err(Error::Internal(format!(
                "2-connected graph with circumference {cir}"
            )))
        }
    }
    for class in candidates {
        let reference = reference_graph(&class).unwrap();
        if reference.n() != b.n() || reference.m() != b.m() {
            continue;
        }
        if let Some(mapping) = find_isomorphism(&reference, b) {
            let aliases = aliases_for(&class);
            return Ok(ClassifiedBlock {
                class,
                mapping,
                aliases,
            });
        }
    }
    Err(Error::Internal(format!(
        "2-connected graph with circumference {cir} matches no class; n = {n}, m = {}",
        b.m()
    )))
}

/// The typed families: `R` over the triangle, `Q` between the 4-cycle and
/// `K_4`, `P` between the 5-cycle and `K_5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeFamily {
    R,
    Q,
    P,
}

/// A recognized type-(t, F) structure.
#[derive(Debug, Clone)]
pub struct TypedSubgraph {
    pub family: TypeFamily,
    /// Maximum leaf count over core vertices.
    pub t: usize,
    /// Hamiltonian cycle of the core block, canonically rotated.
    pub core_cycle: Vec<usize>,
    /// Core edges off the cycle.
    pub diagonals: Vec<(usize, usize)>,
    /// Leaves attached to each core vertex, parallel to `core_cycle`.
    pub leaves: Vec<Vec<usize>>,
}

impl TypedSubgraph {
    pub fn core_len(&self) -> usize {
        self.core_cycle.len()
    }

    /// Position of `v` on the core cycle.
    pub fn core_position(&self, v: usize) -> Option<usize> {
        self.core_cycle.iter().position(|&x| x == v)
    }

    pub fn leaf_count(&self, position: usize) -> usize {
        self.leaves[position].len()
    }

    /// Leaf counts sorted descending (isomorphism-invariant shape).
    pub fn leaf_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.leaves.iter().map(Vec::len).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

/// Recognizes the unique typed decomposition when the graph is one
/// Hamiltonian block on 3..=5 vertices plus leaves on that block; `None`
/// otherwise.
pub fn recognize_type_tf(h: &Graph) -> Option<TypedSubgraph> {
    if h.n() < 3 || !h.is_connected() {
        return None;
    }
    let decomp = block_decomposition(h).ok()?;
    let non_trivial: Vec<usize> = decomp
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_trivial)
        .map(|(i, _)| i)
        .collect();
    if non_trivial.len() != 1 {
        return None;
    }
    let block = &decomp.blocks[non_trivial[0]];
    let in_block = {
        let mut mask = vec![false; h.n()];
        for &v in &block.vertices {
            mask[v] = true;
        }
        mask
    };
    // Everything outside the block must be a leaf on the block.
    for v in 0..h.n() {
        if !in_block[v] {
            if h.degree(v) != 1 || !in_block[h.neighbours(v)[0]] {
                return None;
            }
        }
    }
    typed_from_block(h, &block.vertices)
}

/// Builds the typed view given the core block's vertex set. The block must be
/// Hamiltonian with 3..=5 vertices.
pub(crate) fn typed_from_block(h: &Graph, block_vertices: &[usize]) -> Option<TypedSubgraph> {
    let nb = block_vertices.len();
    if !(3..=5).contains(&nb) {
        return None;
    }
    let (bg, back) = h.induced(block_vertices);
    let cyc = longest_cycle(&bg, DEFAULT_BUDGET).ok()??;
    if cyc.len() != nb {
        return None;
    }
    let family = match nb {
        3 => TypeFamily::R,
        4 => TypeFamily::Q,
        _ => TypeFamily::P,
    };
    // Canonical rotation: minimum vertex first, then the smaller neighbour.
    let core_local = canonical_cycle(&cyc);
    let core_cycle: Vec<usize> = core_local.iter().map(|&i| back[i]).collect();
    let mut diagonals = Vec::new();
    for i in 0..nb {
        for j in i + 1..nb {
            let (u, v) = (core_cycle[i], core_cycle[j]);
            if h.has_edge(u, v) && !cycle_has_edge(&core_cycle, u, v) {
                diagonals.push((u.min(v), u.max(v)));
            }
        }
    }
    diagonals.sort_unstable();
    let core_set: std::collections::BTreeSet<usize> = core_cycle.iter().copied().collect();
    let mut leaves = vec![Vec::new(); nb];
    for (pos, &cv) in core_cycle.iter().enumerate() {
        for &w in h.neighbours(cv) {
            if !core_set.contains(&w) {
                if h.degree(w) != 1 {
                    return None;
                }
                leaves[pos].push(w);
            }
        }
    }
    let t = leaves.iter().map(Vec::len).max().unwrap_or(0);
    Some(TypedSubgraph {
        family,
        t,
        core_cycle,
        diagonals,
        leaves,
    })
}

fn canonical_cycle(cyc: &[usize]) -> Vec<usize> {
    let k = cyc.len();
    let start = (0..k).min_by_key(|&i| cyc[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| cyc[(start + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| cyc[(start + k - i) % k]).collect();
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

fn cycle_has_edge(cycle: &[usize], u: usize, v: usize) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        (a == u && b == v) || (a == v && b == u)
    })
}

/// Whether this block, decorated with leaves, forms a typed subgraph: a
/// Hamiltonian block on at most 5 vertices.
pub(crate) fn is_d_family_block(h: &Graph, block_vertices: &[usize]) -> bool {
    let nb = block_vertices.len();
    if !(3..=5).contains(&nb) {
        return false;
    }
    let (bg, _) = h.induced(block_vertices);
    circumference(&bg, DEFAULT_BUDGET).map_or(false, |c| c == nb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::iso::certifies;

    fn check_certificate(b: &Graph, result: &ClassifiedBlock) {
        let reference = reference_graph(&result.class).unwrap();
        assert!(
            certifies(&reference, b, &result.mapping),
            "mapping fails to certify {:?}",
            result.class
        );
    }

    #[test]
    fn c4_is_k22() {
        let c = classify_small_block(&families::cycle(4)).unwrap();
        assert_eq!(c.class, BlockClass::K2s { s: 2 });
        assert_eq!(c.aliases, vec!["C4".to_string()]);
        check_certificate(&families::cycle(4), &c);
    }

    #[test]
    fn diamond_is_k22_prime() {
        let d = families::k2s_prime(2);
        let c = classify_small_block(&d).unwrap();
        assert_eq!(c.class, BlockClass::K2sPrime { s: 2 });
        assert_eq!(c.aliases, vec!["diamond".to_string()]);
        check_certificate(&d, &c);
    }

    #[test]
    fn c7_is_large() {
        let c = classify_small_block(&families::cycle(7)).unwrap();
        assert_eq!(c.class, BlockClass::Large);
    }

    #[test]
    fn k3_k4_k5() {
        assert_eq!(
            classify_small_block(&families::complete(3)).unwrap().class,
            BlockClass::K3
        );
        assert_eq!(
            classify_small_block(&families::complete(4)).unwrap().class,
            BlockClass::K4
        );
        assert_eq!(
            classify_small_block(&families::complete(5)).unwrap().class,
            BlockClass::C5Diagonals {
                variant: C5Variant::Five
            }
        );
    }

    #[test]
    fn k2s_plus_3_reports_c5_variant_with_alias() {
        let c = classify_small_block(&families::k2s_plus(3)).unwrap();
        assert_eq!(
            c.class,
            BlockClass::C5Diagonals {
                variant: C5Variant::TwoNonAdjacent
            }
        );
        assert!(c.aliases.contains(&"K+_{2,3}".to_string()));
        check_certificate(&families::k2s_plus(3), &c);
    }

    #[test]
    fn p_families_classified() {
        let c = classify_small_block(&families::p_rs(2, 1)).unwrap();
        assert_eq!(c.class, BlockClass::Prs { r: 2, s: 1 });
        check_certificate(&families::p_rs(2, 1), &c);

        let c = classify_small_block(&families::p_rs_prime(1, 2)).unwrap();
        assert!(matches!(c.class, BlockClass::PrsPrime { .. }));
        check_certificate(&families::p_rs_prime(1, 2), &c);

        let c = classify_small_block(&families::cycle(5)).unwrap();
        assert_eq!(c.class, BlockClass::Prs { r: 1, s: 1 });
        assert_eq!(c.aliases, vec!["C5".to_string()]);
    }

    #[test]
    fn not_two_connected_rejected() {
        assert!(classify_small_block(&families::path(4)).is_err());
        assert!(classify_small_block(&families::bowtie()).is_err());
    }

    #[test]
    fn recognize_r2() {
        let typed = recognize_type_tf(&families::r_t(2)).unwrap();
        assert_eq!(typed.family, TypeFamily::R);
        assert_eq!(typed.t, 2);
        assert_eq!(typed.leaf_profile(), vec![2, 2, 2]);
        assert!(typed.diagonals.is_empty());
    }

    #[test]
    fn recognize_c4_plus_leaf() {
        let g = families::attach_leaves(&families::cycle(4), &[1, 0, 0, 0]);
        let typed = recognize_type_tf(&g).unwrap();
        assert_eq!(typed.family, TypeFamily::Q);
        assert_eq!(typed.t, 1);
    }

    #[test]
    fn bowtie_not_typed() {
        assert!(recognize_type_tf(&families::bowtie()).is_none());
    }

    #[test]
    fn deep_tree_not_typed() {
        // Triangle with a path of length 2: middle vertex is not a leaf.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]).unwrap();
        assert!(recognize_type_tf(&g).is_none());
    }

    #[test]
    fn typed_references_recognized_for_all_small_t() {
        for t in 1..=6 {
            let r = recognize_type_tf(&families::r_t(t)).unwrap();
            assert_eq!((r.family, r.t), (TypeFamily::R, t));
            let q = recognize_type_tf(&families::q_t(t)).unwrap();
            assert_eq!((q.family, q.t), (TypeFamily::Q, t));
            let p = recognize_type_tf(&families::p_t(t)).unwrap();
            assert_eq!((p.family, p.t), (TypeFamily::P, t));
        }
    }

    #[test]
    fn diamond_with_leaves_has_diagonal() {
        let g = families::attach_leaves(&families::k2s_prime(2), &[1, 1, 0, 0]);
        let typed = recognize_type_tf(&g).unwrap();
        assert_eq!(typed.family, TypeFamily::Q);
        assert_eq!(typed.diagonals.len(), 1);
        let (u, v) = typed.diagonals[0];
        assert_eq!((u, v), (0, 1));
    }

    #[test]
    fn leaf_relabelling_invariance() {
        let a = families::attach_leaves(&families::cycle(4), &[2, 1, 0, 1]);
        // Same shape, different construction order.
        let b = families::attach_leaves(&families::cycle(4), &[1, 2, 1, 0]);
        let ta = recognize_type_tf(&a).unwrap();
        let tb = recognize_type_tf(&b).unwrap();
        assert_eq!(ta.family, tb.family);
        assert_eq!(ta.t, tb.t);
        assert_eq!(ta.leaf_profile(), tb.leaf_profile());
    }
}
