//! Immutable simple undirected graphs with dense 0-based vertex indices.
//!
//! Edge-list input may use arbitrary string labels; labels are remapped to
//! `0..n-1` in order of first appearance and kept for human-facing output.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Index of an edge in [`Graph::edges`] order.
pub type EdgeId = usize;

/// An immutable simple undirected graph.
///
/// Invariants: no self-loops, no parallel edges, adjacency symmetric and
/// consistent with the edge set, vertices are `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Normalized `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges)
    }
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n-1`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|v| v.to_string()).collect();
        Self::with_labels(n, pairs, labels)
    }

    /// Builds a graph with explicit vertex labels (`labels.len() == n`).
    pub fn with_labels(n: usize, pairs: &[(usize, usize)], labels: Vec<String>) -> Result<Self> {
        if labels.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                n
            )));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Edge index of `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u == v || u >= self.n || v >= self.n {
            return None;
        }
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edge ids incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<EdgeId> {
        self.adj[v]
            .iter()
            .map(|&w| self.edge_id(v, w).expect("adjacency consistent"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Exact diameter, or [`Diameter::Infinite`] when disconnected.
    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        let mut best = 0;
        for s in 0..self.n {
            let dist = self.bfs_distances(s);
            for &d in &dist {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    /// Per-edge weights `w(uv) = deg(u) + deg(v)` and the reduced maximum
    /// weight `rw(G) = max w(e) - 1`. Errors on an empty edge set.
    pub fn reduced_max_weight(&self) -> Result<EdgeWeightStats> {
        if self.edges.is_empty() {
            return Err(Error::Precondition(
                "reduced maximum weight requires at least one edge".into(),
            ));
        }
        let weights: Vec<usize> = self
            .edges
            .iter()
            .map(|&(u, v)| self.degree(u) + self.degree(v))
            .collect();
        let rw = weights.iter().max().unwrap() - 1;
        Ok(EdgeWeightStats { weights, rw })
    }

    /// Exact recognition of the families the solver dispatches on.
    /// Requires a connected graph.
    pub fn basic_family(&self) -> Result<BasicFamily> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n;
        let m = self.m();
        if n >= 1 && m == n * (n - 1) / 2 {
            return Ok(BasicFamily::Complete(n));
        }
        if m + 1 == n {
            return Ok(BasicFamily::Tree);
        }
        if let Some((r, s)) = self.complete_bipartition() {
            return Ok(BasicFamily::CompleteBipartite(r, s));
        }
        Ok(BasicFamily::Other)
    }

    /// `Some((r, s))` with `r >= s` when the graph is complete bipartite.
    fn complete_bipartition(&self) -> Option<(usize, usize)> {
        if self.n < 2 {
            return None;
        }
        // Two-colour by BFS; the bipartition of a connected graph is unique.
        let mut side = vec![usize::MAX; self.n];
        side[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
        let a = side.iter().filter(|&&s| s == 0).count();
        let b = self.n - a;
        if a == 0 || b == 0 || self.m() != a * b {
            return None;
        }
        Some((a.max(b), a.min(b)))
    }

    /// Subgraph induced by `verts`; returns the graph and the map from new
    /// indices to original vertices.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut order: Vec<usize> = verts.to_vec();
        order.sort_unstable();
        order.dedup();
        let back: HashMap<usize, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (back.get(&u), back.get(&v)) {
                pairs.push((a, b));
            }
        }
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let g = Graph::with_labels(order.len(), &pairs, labels).expect("induced subgraph valid");
        (g, order)
    }

    // ---------------------------------------------------------------- input

    /// Parses the declared `format`.
    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::EdgeList => Self::parse_edge_list(text),
            Format::Graph6 => Self::parse_graph6(text),
        }
    }

    /// Edge-list format: one `u v` pair per line, `#` starts a comment line,
    /// blank lines ignored. Labels are remapped to `0..n-1` in order of first
    /// appearance.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let a = tokens.next().unwrap();
            let b = tokens
                .next()
                .ok_or_else(|| Error::parse(line, raw.len() + 1, "expected two vertex labels"))?;
            if let Some(extra) = tokens.next() {
                let col = raw.find(extra).map(|c| c + 1).unwrap_or(1);
                return Err(Error::parse(line, col, "trailing tokens after edge"));
            }
            let mut id_of = |tok: &str| -> usize {
                *index.entry(tok.to_string()).or_insert_with(|| {
                    labels.push(tok.to_string());
                    labels.len() - 1
                })
            };
            let u = id_of(a);
            let v = id_of(b);
            if u == v {
                return Err(Error::parse(line, 1, format!("self-loop at '{a}'")));
            }
            let key = (u.min(v), u.max(v));
            if let Some(first) = seen.get(&key) {
                return Err(Error::parse(
                    line,
                    1,
                    format!("duplicate edge '{a} {b}' (first seen on line {first})"),
                ));
            }
            seen.insert(key, line);
            pairs.push(key);
        }
        let n = labels.len();
        Graph::with_labels(n, &pairs, labels)
    }

    /// Canonical edge-list serialization: edges sorted by normalized index
    /// pair, original labels, one pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        out
    }

    /// Decodes the standard graph6 encoding (single graph, n <= 62).
    pub fn parse_graph6(text: &str) -> Result<Self> {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::parse(1, 1, "empty graph6 input"))?;
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let bytes = line.as_bytes();
        if bytes.is_empty() {
            return Err(Error::parse(1, 1, "empty graph6 input"));
        }
        if bytes[0] == b'~' {
            return Err(Error::parse(
                1,
                1,
                "graph6 inputs with n > 62 are not supported; use edge-list",
            ));
        }
        if !(63..=126).contains(&bytes[0]) {
            return Err(Error::parse(1, 1, "invalid graph6 size byte"));
        }
        let n = (bytes[0] - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if bytes.len() != 1 + nbytes {
            return Err(Error::parse(
                1,
                bytes.len(),
                format!(
                    "graph6 body has {} bytes, expected {} for n = {}",
                    bytes.len() - 1,
                    nbytes,
                    n
                ),
            ));
        }
        let mut bits = Vec::with_capacity(nbytes * 6);
        for (i, &b) in bytes[1..].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Error::parse(1, i + 2, "invalid graph6 byte"));
            }
            let x = b - 63;
            for k in (0..6).rev() {
                bits.push((x >> k) & 1 == 1);
            }
        }
        let mut pairs = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    pairs.push((u, v));
                }
                idx += 1;
            }
        }
        Graph::new(n, &pairs)
    }

    /// Encodes to graph6 (n <= 62).
    pub fn to_graph6(&self) -> Result<String> {
        if self.n > 62 {
            return Err(Error::Precondition(
                "graph6 output limited to n <= 62".into(),
            ));
        }
        let n = self.n;
        let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for v in 1..n {
            for u in 0..v {
                bits.push(self.has_edge(u, v));
            }
        }
        let mut out = String::new();
        out.push((63 + n as u8) as char);
        for chunk in bits.chunks(6) {
            let mut x = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    x |= 1 << (5 - k);
                }
            }
            out.push((63 + x) as char);
        }
        Ok(out)
    }
}

/// Input/output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// Diameter of a graph; infinite when disconnected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

/// Result of [`Graph::reduced_max_weight`].
#[derive(Debug, Clone)]
pub struct EdgeWeightStats {
    /// `w(e) = deg(u) + deg(v)` indexed by edge id.
    pub weights: Vec<usize>,
    /// `rw(G) = max w(e) - 1`.
    pub rw: usize,
}

/// Families with dedicated solver branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicFamily {
    Complete(usize),
    /// `CompleteBipartite(r, s)` with `r >= s`.
    CompleteBipartite(usize, usize),
    Tree,
    Other,
}
