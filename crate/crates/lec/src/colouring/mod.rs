//! Edge colourings and every constructive colouring from the theory.

mod bipartite;
mod dot;
mod sweep;
mod tree;
mod two_connected;
mod typed;

pub use bipartite::colour_complete_bipartite_two;
pub use dot::dot_export;
pub use sweep::{colour_diameter_two, colour_general};
pub use tree::colour_tree;
pub use two_connected::colour_two_connected;
pub use typed::{colour_leafy_long_cycle, colour_type_p, colour_type_q, colour_type_r, PalettePin};

pub(crate) use sweep::sweep_colouring;
pub(crate) use tree::fsb_colour_component;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use serde::{Deserialize, Serialize};

/// A total edge colouring with colours `1..=k`, every colour used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    colours: Vec<usize>,
    k: usize,
}

impl EdgeColouring {
    /// Validates totality and the colour range; `k` is the count of used
    /// colours and the used set must be exactly `1..=k`.
    pub fn new(g: &Graph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != g.m() {
            return Err(Error::InvalidGraph(format!(
                "colouring covers {} of {} edges",
                colours.len(),
                g.m()
            )));
        }
        let k = colours.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for &c in &colours {
            if c == 0 {
                return Err(Error::Precondition("partial colouring".into()));
            }
            used[c] = true;
        }
        if let Some(gap) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidGraph(format!(
                "colour {gap} unused while {k} is present"
            )));
        }
        Ok(EdgeColouring { colours, k })
    }

    /// Number of colours.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colour(&self, e: EdgeId) -> usize {
        self.colours[e]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }
}

/// Mutable colouring under construction; 0 marks an uncoloured edge.
#[derive(Debug, Clone)]
pub(crate) struct PartialColouring {
    pub colours: Vec<usize>,
}

impl PartialColouring {
    pub fn unset(m: usize) -> Self {
        PartialColouring {
            colours: vec![0; m],
        }
    }

    pub fn get(&self, e: EdgeId) -> Option<usize> {
        match self.colours[e] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn set(&mut self, e: EdgeId, c: usize) {
        debug_assert_ne!(c, 0);
        debug_assert_eq!(self.colours[e], 0, "edge {e} coloured twice");
        self.colours[e] = c;
    }

    pub fn is_coloured(&self, e: EdgeId) -> bool {
        self.colours[e] != 0
    }

    /// Remaps used colours onto `1..=k` preserving order, then freezes.
    pub fn finish(self, g: &Graph) -> Result<EdgeColouring> {
        let mut used: Vec<usize> = self.colours.iter().copied().filter(|&c| c != 0).collect();
        used.sort_unstable();
        used.dedup();
        if self.colours.iter().any(|&c| c == 0) {
            return Err(Error::Internal("construction left an edge uncoloured".into()));
        }
        let remap = |c: usize| used.binary_search(&c).unwrap() + 1;
        let colours = self.colours.iter().map(|&c| remap(c)).collect();
        EdgeColouring::new(g, colours)
    }
}

/// Serialized form of a colouring, keyed by original vertex labels.
#[derive(Debug, Serialize, Deserialize)]
pub struct ColouringJson {
    pub k: usize,
    pub edges: Vec<ColouredEdgeJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ColouredEdgeJson {
    pub u: String,
    pub v: String,
    pub c: usize,
}

/// Stable-ordered JSON view (edges in canonical edge order).
pub fn colouring_to_json(g: &Graph, c: &EdgeColouring) -> ColouringJson {
    ColouringJson {
        k: c.k(),
        edges: g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| ColouredEdgeJson {
                u: g.label(u).to_string(),
                v: g.label(v).to_string(),
                c: c.colour(e),
            })
            .collect(),
    }
}

/// Reads a colouring for `g` from its JSON form. Every edge of `g` must be
/// covered exactly once; unknown labels or missing edges are errors.
pub fn colouring_from_json(g: &Graph, json: &ColouringJson) -> Result<EdgeColouring> {
    let mut by_label = std::collections::HashMap::new();
    for v in 0..g.n() {
        by_label.insert(g.label(v).to_string(), v);
    }
    let mut colours = vec![0usize; g.m()];
    for item in &json.edges {
        let &u = by_label
            .get(&item.u)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex label '{}'", item.u)))?;
        let &v = by_label
            .get(&item.v)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex label '{}'", item.v)))?;
        let e = g.edge_id(u, v).ok_or_else(|| {
            Error::InvalidGraph(format!("edge ({}, {}) not in graph", item.u, item.v))
        })?;
        if colours[e] != 0 {
            return Err(Error::InvalidGraph(format!(
                "edge ({}, {}) coloured twice",
                item.u, item.v
            )));
        }
        if item.c == 0 {
            return Err(Error::InvalidGraph("colours are 1-based".into()));
        }
        colours[e] = item.c;
    }
    if colours.iter().any(|&c| c == 0) {
        return Err(Error::Precondition("partial colouring".into()));
    }
    let k = colours.iter().copied().max().unwrap_or(0);
    if json.k != k {
        return Err(Error::InvalidGraph(format!(
            "declared k = {} but maximum colour is {k}",
            json.k
        )));
    }
    EdgeColouring::new(g, colours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_partial_and_gapped() {
        let g = families::path(3);
        assert!(EdgeColouring::new(&g, vec![1]).is_err());
        assert!(EdgeColouring::new(&g, vec![1, 0]).is_err());
        assert!(EdgeColouring::new(&g, vec![1, 3]).is_err());
        assert!(EdgeColouring::new(&g, vec![1, 2]).is_ok());
    }

    #[test]
    fn finish_compacts() {
        let g = families::path(3);
        let mut pc = PartialColouring::unset(2);
        pc.set(0, 2);
        pc.set(1, 7);
        let c = pc.finish(&g).unwrap();
        assert_eq!(c.colours(), &[1, 2]);
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn json_round_trip() {
        let g = families::cycle(4);
        let c = EdgeColouring::new(&g, vec![1, 2, 1, 2]).unwrap();
        let json = colouring_to_json(&g, &c);
        let back = colouring_from_json(&g, &json).unwrap();
        assert_eq!(back, c);
    }
}
