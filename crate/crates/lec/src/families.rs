//! Reference constructions: named families from the characterization theorems
//! and leaf-decorated test graphs.
//!
//! Vertex layouts are fixed so classification certificates and colouring
//! schemes can address roles by index.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    Graph::new(n, &pairs).unwrap()
}

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &pairs).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3);
    let mut pairs: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
    pairs.push((0, k - 1));
    Graph::new(k, &pairs).unwrap()
}

/// Star `K_{1,s}`: centre 0, leaves `1..=s`.
pub fn star(s: usize) -> Graph {
    let pairs: Vec<_> = (1..=s).map(|v| (0, v)).collect();
    Graph::new(s + 1, &pairs).unwrap()
}

/// `K_{r,s}`: side X is `0..r`, side Y is `r..r+s`.
pub fn complete_bipartite(r: usize, s: usize) -> Graph {
    let mut pairs = Vec::new();
    for x in 0..r {
        for y in 0..s {
            pairs.push((x, r + y));
        }
    }
    Graph::new(r + s, &pairs).unwrap()
}

/// `K_{2,s}` in the paper's layout: hubs x = 0, y = 1, spokes `v_i = 2..2+s`.
pub fn k2s(s: usize) -> Graph {
    assert!(s >= 2);
    let mut pairs = Vec::new();
    for i in 0..s {
        pairs.push((0, 2 + i));
        pairs.push((1, 2 + i));
    }
    Graph::new(s + 2, &pairs).unwrap()
}

/// `K'_{2,s} = K_{2,s} + xy`. `K'_{2,2}` is the diamond.
pub fn k2s_prime(s: usize) -> Graph {
    assert!(s >= 2);
    let mut pairs = vec![(0, 1)];
    for i in 0..s {
        pairs.push((0, 2 + i));
        pairs.push((1, 2 + i));
    }
    Graph::new(s + 2, &pairs).unwrap()
}

/// `K+_{2,s} = K_{2,s} + v2v3` (an edge between two spokes), `s >= 3`.
pub fn k2s_plus(s: usize) -> Graph {
    assert!(s >= 3);
    let mut pairs = vec![(3, 4)];
    for i in 0..s {
        pairs.push((0, 2 + i));
        pairs.push((1, 2 + i));
    }
    Graph::new(s + 2, &pairs).unwrap()
}

/// `P_{r,s}`: x = 0, y = 1, z = 2, `u_i = 3..3+r`, `v_j = 3+r..3+r+s`.
/// Edges: yz, xu_i, yu_i, xv_j, zv_j.
pub fn p_rs(r: usize, s: usize) -> Graph {
    assert!(r >= 1 && s >= 1);
    let mut pairs = vec![(1, 2)];
    for i in 0..r {
        pairs.push((0, 3 + i));
        pairs.push((1, 3 + i));
    }
    for j in 0..s {
        pairs.push((0, 3 + r + j));
        pairs.push((2, 3 + r + j));
    }
    Graph::new(3 + r + s, &pairs).unwrap()
}

/// `P'_{r,s} = P_{r,s} + xy`.
pub fn p_rs_prime(r: usize, s: usize) -> Graph {
    let g = p_rs(r, s);
    let mut pairs = g.edges().to_vec();
    pairs.push((0, 1));
    Graph::new(g.n(), &pairs).unwrap()
}

/// `P''_{r,s} = P_{r,s} + xy + xz`.
pub fn p_rs_doubleprime(r: usize, s: usize) -> Graph {
    let g = p_rs(r, s);
    let mut pairs = g.edges().to_vec();
    pairs.push((0, 1));
    pairs.push((0, 2));
    Graph::new(g.n(), &pairs).unwrap()
}

/// The five-vertex circumference-5 graphs that are not members of the
/// `P`-parameterized families: the pentagon with `d` diagonals for
/// `d = 2..=5`, in the two non-isomorphic shapes where `d` admits them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C5Variant {
    /// Two diagonals sharing no vertex.
    TwoNonAdjacent,
    /// Three diagonals forming a path in the pentagram.
    ThreePath,
    /// Three diagonals: an adjacent pair plus a disjoint one.
    ThreeMixed,
    /// Four diagonals.
    Four,
    /// All five diagonals: `K_5`.
    Five,
}

impl C5Variant {
    pub const ALL: [C5Variant; 5] = [
        C5Variant::TwoNonAdjacent,
        C5Variant::ThreePath,
        C5Variant::ThreeMixed,
        C5Variant::Four,
        C5Variant::Five,
    ];

    pub fn diagonal_count(self) -> usize {
        match self {
            C5Variant::TwoNonAdjacent => 2,
            C5Variant::ThreePath | C5Variant::ThreeMixed => 3,
            C5Variant::Four => 4,
            C5Variant::Five => 5,
        }
    }
}

/// Pentagon `0-1-2-3-4` plus the variant's diagonals.
pub fn c5_variant(v: C5Variant) -> Graph {
    let mut pairs = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
    let chords: &[(usize, usize)] = match v {
        C5Variant::TwoNonAdjacent => &[(0, 2), (1, 3)],
        C5Variant::ThreePath => &[(0, 2), (2, 4), (1, 4)],
        C5Variant::ThreeMixed => &[(0, 2), (2, 4), (1, 3)],
        C5Variant::Four => &[(0, 2), (2, 4), (1, 4), (1, 3)],
        C5Variant::Five => &[(0, 2), (2, 4), (1, 4), (1, 3), (0, 3)],
    };
    pairs.extend_from_slice(chords);
    Graph::new(5, &pairs).unwrap()
}

/// Attaches `counts[v]` new leaves to each vertex `v` of `core`.
pub fn attach_leaves(core: &Graph, counts: &[usize]) -> Graph {
    assert_eq!(counts.len(), core.n());
    let mut pairs = core.edges().to_vec();
    let mut next = core.n();
    for (v, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            pairs.push((v, next));
            next += 1;
        }
    }
    Graph::new(next, &pairs).unwrap()
}

/// `R_t`: triangle with `t` leaves on every vertex.
pub fn r_t(t: usize) -> Graph {
    attach_leaves(&complete(3), &[t, t, t])
}

/// `Q_t`: 4-cycle with `t` leaves on every vertex.
pub fn q_t(t: usize) -> Graph {
    attach_leaves(&cycle(4), &[t; 4])
}

/// `P_t`: 5-cycle with `t` leaves on every vertex.
pub fn p_t(t: usize) -> Graph {
    attach_leaves(&cycle(5), &[t; 5])
}

/// Cycle `C_k` with `t` leaves on every vertex.
pub fn leafy_cycle(k: usize, t: usize) -> Graph {
    attach_leaves(&cycle(k), &vec![t; k])
}

pub fn petersen() -> Graph {
    let pairs = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
    ];
    Graph::new(10, &pairs).unwrap()
}

/// Two triangles joined by a single bridge.
pub fn dumbbell() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)],
    )
    .unwrap()
}

/// Two triangles sharing one vertex (the friendship graph F2).
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn c5_with_two_adjacent_diagonals_is_p11_doubleprime() {
        // The adjacent-pair shape is covered by P''_{1,1}; only the listed
        // variants are extra.
        let adj = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (2, 4)]).unwrap();
        assert!(find_isomorphism(&adj, &p_rs_doubleprime(1, 1)).is_some());
    }

    #[test]
    fn k2s_plus_3_is_c5_with_two_nonadjacent_diagonals() {
        assert!(
            find_isomorphism(&k2s_plus(3), &c5_variant(C5Variant::TwoNonAdjacent)).is_some()
        );
    }

    #[test]
    fn three_diagonal_variants_not_isomorphic() {
        assert!(find_isomorphism(
            &c5_variant(C5Variant::ThreePath),
            &c5_variant(C5Variant::ThreeMixed)
        )
        .is_none());
    }

    #[test]
    fn five_variant_is_k5() {
        assert!(find_isomorphism(&c5_variant(C5Variant::Five), &complete(5)).is_some());
    }

    #[test]
    fn typed_references_have_expected_sizes() {
        assert_eq!(r_t(3).n(), 12);
        assert_eq!(r_t(3).m(), 12);
        assert_eq!(q_t(2).n(), 12);
        assert_eq!(p_t(1).n(), 10);
        assert_eq!(leafy_cycle(6, 2).m(), 18);
    }
}
