//! Hypergraphs `g = {V, E}` with hyperedges of any order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::Rng;

use crate::boolfn::parse_header;
use crate::{Error, Result};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 32;

/// Subset of `{1..n}` as a bitmask, vertex `i` at bit `i - 1`.
///
/// Ordered by size first, then by mask, so edge lists print lowest order first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    /// Builds a set from 1-based vertex indices.
    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::Vertex { vertex: v, n: MAX_VERTICES });
            }
            mask |= 1 << (v - 1);
        }
        Ok(VertexSet(mask))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << (v - 1))
    }

    /// All of `{1..n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn mask(self) -> usize {
        self.0 as usize
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn max_vertex(self) -> usize {
        (u32::BITS - self.0.leading_zeros()) as usize
    }

    /// True if every vertex of the set is excited in basis label `x`.
    pub fn is_subset_of_label(self, x: usize) -> bool {
        x & self.mask() == self.mask()
    }

    /// 1-based vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniformityClass {
    Empty,
    Uniform(usize),
    Mixed(BTreeSet<usize>),
}

impl fmt::Display for UniformityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniformityClass::Empty => f.write_str("empty"),
            UniformityClass::Uniform(k) => write!(f, "uniform {k}"),
            UniformityClass::Mixed(orders) => {
                f.write_str("mixed")?;
                for k in orders {
                    write!(f, " {k}")?;
                }
                Ok(())
            }
        }
    }
}

fn check_vertex_count(n: usize) -> Result<()> {
    if (1..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount { n, max: MAX_VERTICES })
    }
}

impl Hypergraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Hypergraph { n, edges: BTreeSet::new() })
    }

    /// Builds a hypergraph from an edge list; duplicates are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut h = Self::empty(n)?;
        for e in edges {
            h.check_edge(e)?;
            if !h.edges.insert(e) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
        }
        Ok(h)
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_lists(n: usize, edges: &[&[usize]]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| {
                if let Some(&v) = e.iter().find(|&&v| v == 0 || v > n) {
                    return Err(Error::Vertex { vertex: v, n });
                }
                VertexSet::from_vertices(e)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, sets)
    }

    pub(crate) fn from_set_unchecked(n: usize, edges: BTreeSet<VertexSet>) -> Self {
        Hypergraph { n, edges }
    }

    /// Every nonempty subset of `{1..n}` is an edge with probability 1/2,
    /// i.e. a uniform draw over all `2^(2^n - 1)` hypergraphs.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        Self::random_with_density(n, 0.5, rng)
    }

    pub fn random_with_density<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        crate::boolfn::check_qubits(n)?;
        let edges = (1u32..1 << n).filter(|_| rng.random_bool(p)).map(VertexSet).collect();
        Ok(Hypergraph { n, edges })
    }

    /// All `2^(2^n - 1)` hypergraphs on `n` vertices (`n <= 5`).
    pub fn all(n: usize) -> impl Iterator<Item = Hypergraph> {
        assert!((1..=5).contains(&n), "exhaustive enumeration limited to n <= 5");
        let subsets: Vec<VertexSet> = (1u32..1 << n).map(VertexSet).collect();
        (0u64..1 << subsets.len()).map(move |bits| Hypergraph {
            n,
            edges: subsets.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).map(|(_, &e)| e).collect(),
        })
    }

    /// All `2^C(n,k)` k-uniform hypergraphs on `n` vertices, empty one first.
    pub fn all_uniform(n: usize, k: usize) -> impl Iterator<Item = Hypergraph> {
        assert!(k >= 1 && k <= n && n <= 8);
        let subsets: Vec<VertexSet> = (1u32..1 << n).filter(|m| m.count_ones() as usize == k).map(VertexSet).collect();
        assert!(subsets.len() < 64, "too many {k}-subsets to enumerate");
        (0u64..1 << subsets.len()).map(move |bits| Hypergraph {
            n,
            edges: subsets.iter().enumerate().filter(|(j, _)| bits >> j & 1 == 1).map(|(_, &e)| e).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<VertexSet> {
        &self.edges
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    fn check_edge(&self, e: VertexSet) -> Result<()> {
        if e.is_empty() {
            return Err(Error::EmptyEdge);
        }
        if e.max_vertex() > self.n {
            return Err(Error::Vertex { vertex: e.max_vertex(), n: self.n });
        }
        Ok(())
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::Vertex { vertex: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `e` if absent, removes it if present.
    pub fn toggle_edge(&self, e: VertexSet) -> Result<Hypergraph> {
        self.check_edge(e)?;
        let mut out = self.clone();
        if !out.edges.remove(&e) {
            out.edges.insert(e);
        }
        Ok(out)
    }

    pub fn classify_uniformity(&self) -> UniformityClass {
        let orders: BTreeSet<usize> = self.edges.iter().map(|e| e.len()).collect();
        match orders.len() {
            0 => UniformityClass::Empty,
            1 => UniformityClass::Uniform(*orders.first().unwrap()),
            _ => UniformityClass::Mixed(orders),
        }
    }

    /// `N(i) = { e \ {i} : i in e }`. Contains the empty tuple when `{i}` is
    /// itself an edge.
    pub fn neighbourhood(&self, i: usize) -> Result<BTreeSet<VertexSet>> {
        self.check_vertex(i)?;
        Ok(self.edges.iter().filter(|e| e.contains(i)).map(|e| e.without(i)).collect())
    }

    /// Connectivity of the vertex set through the edges. Isolated vertices
    /// make the hypergraph disconnected.
    pub fn is_connected(&self) -> bool {
        let mut reached = VertexSet::singleton(1).mask();
        loop {
            let next = self.edges.iter().filter(|e| e.mask() & reached != 0).fold(reached, |acc, e| acc | e.mask());
            if next == reached {
                return reached == VertexSet::full(self.n).mask();
            }
            reached = next;
        }
    }

    /// Relabels vertex `v` as `perm[v - 1]` (1-based targets).
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        assert_eq!(perm.len(), self.n);
        let edges =
            self.edges.iter().map(|e| VertexSet::from_vertices(&e.vertices().map(|v| perm[v - 1]).collect::<Vec<_>>()));
        Hypergraph::new(self.n, edges.collect::<Result<Vec<_>>>()?)
    }

    /// Parses the edge-list format: `n <int>` followed by `e v1 v2 ... vk`
    /// lines with strictly increasing vertices. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut h: Option<Hypergraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some(graph) = h.as_mut() else {
                let n = parse_header(content, line)?;
                h = Some(Hypergraph::empty(n).map_err(|e| Error::Parse { line, msg: e.to_string() })?);
                continue;
            };
            let mut tokens = content.split_whitespace();
            if tokens.next() != Some("e") {
                return Err(Error::Parse { line, msg: format!("expected `e v1 ... vk`, got {content:?}") });
            }
            let vertices = tokens
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse { line, msg: format!("bad vertex index: {e}") })?;
            if vertices.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(&v) = vertices.iter().find(|&&v| v == 0 || v > graph.n) {
                return Err(Error::Vertex { vertex: v, n: graph.n });
            }
            if vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse { line, msg: "vertices must be strictly increasing".into() });
            }
            let e = VertexSet::from_vertices(&vertices)?;
            if !graph.edges.insert(e) {
                return Err(Error::DuplicateEdge(e.to_string()));
            }
        }
        h.ok_or(Error::Parse { line: 1, msg: "missing `n <int>` header".into() })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in &self.edges {
            out.push('e');
            for v in e.vertices() {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Graphviz rendering. Order-1 edges become a double circle on the
    /// vertex; order >= 3 edges become a point-shaped hub joined to members.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph hypergraph {\n  node [shape=circle];\n");
        for v in 1..=self.n {
            if self.edges.contains(&VertexSet::singleton(v)) {
                writeln!(out, "  {v} [peripheries=2];").unwrap();
            } else {
                writeln!(out, "  {v};").unwrap();
            }
        }
        let mut hub = 0;
        for e in &self.edges {
            match e.len() {
                1 => {}
                2 => {
                    let mut vs = e.vertices();
                    let (a, b) = (vs.next().unwrap(), vs.next().unwrap());
                    writeln!(out, "  {a} -- {b};").unwrap();
                }
                _ => {
                    writeln!(out, "  h{hub} [shape=point, label=\"\"];").unwrap();
                    for v in e.vertices() {
                        writeln!(out, "  h{hub} -- {v};").unwrap();
                    }
                    hub += 1;
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    All,
    UniformK(usize),
}

/// Largest exponent for which [`count_states`] materializes `2^e`.
pub const MAX_COUNT_EXPONENT: u64 = 1 << 24;

pub const MAX_COUNT_VERTICES: usize = 64;

/// Exponent `e` such that the number of states is `2^e`: `C(n,k)` for
/// k-uniform hypergraphs, `2^n - 1` for all of them.
pub fn count_exponent(n: usize, mode: CountMode) -> Result<BigUint> {
    if !(1..=MAX_COUNT_VERTICES).contains(&n) {
        return Err(Error::QubitCount { n, max: MAX_COUNT_VERTICES });
    }
    match mode {
        CountMode::All => Ok((BigUint::from(1u8) << n) - 1u8),
        CountMode::UniformK(k) if k == 0 || k > n => Err(Error::UniformOrder { k, n }),
        CountMode::UniformK(k) => {
            let k = k.min(n - k);
            let mut c = BigUint::from(1u8);
            for j in 0..k {
                c = c * (n - j) / (j + 1);
            }
            Ok(c)
        }
    }
}

/// Number of hypergraph states, exactly.
pub fn count_states(n: usize, mode: CountMode) -> Result<BigUint> {
    let exponent = count_exponent(n, mode)?;
    match u64::try_from(&exponent) {
        Ok(e) if e <= MAX_COUNT_EXPONENT => Ok(BigUint::from(1u8) << e),
        _ => Err(Error::CountTooLarge { exponent: exponent.to_string() }),
    }
}
