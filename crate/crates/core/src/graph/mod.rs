//! Explicit subgraphs of the de Bruijn digraph `B_k(m)`.
//!
//! A subgraph of order `m` is stored as a sorted array of edge codes, each
//! edge being an `(m+1)`-tuple encoded big-endian in base `k`. Because the
//! encoding preserves lexicographic order, the out-edges of a vertex `v`
//! are exactly the contiguous code range `v*k .. v*k + k`, so adjacency is
//! a pair of offsets into the edge array. Vertices of the ambient graph
//! that touch no edge are never materialized.

mod euler;
mod scc;

use std::env;
use std::fmt;

use crate::error::{Error, Result};
use crate::tuples::{
    self, check_alphabet, code_space, cyclic_window_codes, negated_reverse_code, reverse_code,
    Symbol, ZkTuple,
};

pub use euler::{circuit_to_sequence, eulerian_circuit, EulerianCircuit};

/// Default ceiling on the number of edges a builder may materialize.
pub const DEFAULT_EDGE_CAP: u64 = 1 << 26;

/// Environment variable that overrides [`DEFAULT_EDGE_CAP`].
pub const EDGE_CAP_ENV: &str = "OSEQ_EDGE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCap(pub u64);

impl Default for EdgeCap {
    fn default() -> Self {
        EdgeCap(DEFAULT_EDGE_CAP)
    }
}

impl EdgeCap {
    /// Reads `OSEQ_EDGE_CAP`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match env::var(EDGE_CAP_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<u64>()
                .map(EdgeCap)
                .map_err(|_| Error::Domain(format!("{EDGE_CAP_ENV}=`{raw}` is not an integer"))),
            Err(_) => Ok(EdgeCap::default()),
        }
    }

    pub(crate) fn check(self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::CapExceeded {
                what,
                needed,
                cap: self.0 as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// Per-vertex `(in, out)` degrees, keyed by vertex code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeMap {
    vertices: Vec<u64>,
    in_deg: Vec<u32>,
    out_deg: Vec<u32>,
}

impl DegreeMap {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn get(&self, vertex_code: u64) -> Option<(u32, u32)> {
        self.vertices
            .binary_search(&vertex_code)
            .ok()
            .map(|i| (self.in_deg[i], self.out_deg[i]))
    }

    /// `(vertex code, in-degree, out-degree)` in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32, u32)> + '_ {
        self.vertices
            .iter()
            .zip(self.in_deg.iter().zip(self.out_deg.iter()))
            .map(|(&v, (&i, &o))| (v, i, o))
    }

    pub fn total_in(&self) -> u64 {
        self.in_deg.iter().map(|&d| d as u64).sum()
    }

    pub fn total_out(&self) -> u64 {
        self.out_deg.iter().map(|&d| d as u64).sum()
    }
}

/// Strongly connected components of the materialized vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub count: usize,
    /// Vertices per component, largest component first.
    pub vertex_sizes: Vec<usize>,
    /// Edges per component (counted at the edge's source), same order.
    pub edge_sizes: Vec<usize>,
}

impl ComponentReport {
    pub fn is_connected(&self) -> bool {
        self.count <= 1
    }
}

impl fmt::Display for ComponentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.edge_sizes.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "{} components (edges per component: {})",
            self.count,
            sizes.join(", ")
        )
    }
}

/// A subgraph of `B_k(order)` given by a set of `(order+1)`-tuple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DbSubgraph {
    k: u32,
    order: usize,
    edges: Vec<u64>,
    degrees: DegreeMap,
    /// Out-edges of vertex `i` are `edges[out_offsets[i]..out_offsets[i + 1]]`.
    out_offsets: Vec<usize>,
    /// Vertex index of each edge's head.
    targets: Vec<u32>,
    duplicates_removed: usize,
}

fn check_order(k: u32, order: usize) -> Result<()> {
    check_alphabet(k)?;
    if order == 0 {
        return Err(Error::Domain("subgraph order must be at least 1".into()));
    }
    if code_space(k, order + 1).is_none() {
        return Err(Error::Domain(format!(
            "{k}-ary {}-tuples do not fit a 64-bit code",
            order + 1
        )));
    }
    Ok(())
}

impl DbSubgraph {
    /// Builds from raw edge codes. Codes must be below `k^(order+1)`.
    pub(crate) fn from_codes(k: u32, order: usize, mut edges: Vec<u64>) -> Self {
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        let duplicates_removed = before - edges.len();

        let kk = k as u64;
        let vmod = kk.pow(order as u32);
        let mut vertices: Vec<u64> = Vec::with_capacity(edges.len() * 2);
        vertices.extend(edges.iter().map(|&e| e / kk));
        vertices.extend(edges.iter().map(|&e| e % vmod));
        vertices.sort_unstable();
        vertices.dedup();

        let mut in_deg = vec![0u32; vertices.len()];
        let mut out_deg = vec![0u32; vertices.len()];
        let mut out_offsets = Vec::with_capacity(vertices.len() + 1);
        let mut pos = 0usize;
        for (i, &v) in vertices.iter().enumerate() {
            while pos < edges.len() && edges[pos] / kk < v {
                pos += 1;
            }
            out_offsets.push(pos);
            let start = pos;
            while pos < edges.len() && edges[pos] / kk == v {
                pos += 1;
            }
            out_deg[i] = (pos - start) as u32;
        }
        out_offsets.push(edges.len());
        let targets: Vec<u32> = edges
            .iter()
            .map(|&e| {
                vertices
                    .binary_search(&(e % vmod))
                    .expect("edge suffix is a materialized vertex") as u32
            })
            .collect();
        for &t in &targets {
            in_deg[t as usize] += 1;
        }

        DbSubgraph {
            k,
            order,
            edges,
            degrees: DegreeMap {
                vertices,
                in_deg,
                out_deg,
            },
            out_offsets,
            targets,
            duplicates_removed,
        }
    }

    pub fn empty(k: u32, order: usize) -> Result<Self> {
        check_order(k, order)?;
        Ok(Self::from_codes(k, order, Vec::new()))
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Order `m` of the ambient de Bruijn digraph (vertices are `m`-tuples).
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    /// Number of duplicate input edges dropped while building.
    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }

    pub fn edge_codes(&self) -> &[u64] {
        &self.edges
    }

    pub fn vertex_codes(&self) -> &[u64] {
        &self.degrees.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = ZkTuple> + '_ {
        self.edges
            .iter()
            .map(move |&c| ZkTuple::from_code(self.k, self.order + 1, c))
    }

    pub fn vertices(&self) -> impl Iterator<Item = ZkTuple> + '_ {
        self.degrees
            .vertices
            .iter()
            .map(move |&c| ZkTuple::from_code(self.k, self.order, c))
    }

    pub fn degree_map(&self) -> &DegreeMap {
        &self.degrees
    }

    /// `(in, out)` degree of a vertex; `(0, 0)` for vertices not materialized.
    pub fn degree(&self, vertex: &ZkTuple) -> (u32, u32) {
        if vertex.k() != self.k || vertex.len() != self.order {
            return (0, 0);
        }
        vertex
            .code()
            .and_then(|c| self.degrees.get(c))
            .unwrap_or((0, 0))
    }

    pub fn contains_code(&self, code: u64) -> bool {
        self.edges.binary_search(&code).is_ok()
    }

    pub fn contains(&self, edge: &ZkTuple) -> bool {
        edge.k() == self.k
            && edge.len() == self.order + 1
            && edge.code().is_some_and(|c| self.contains_code(c))
    }

    /// Bulk membership lookup: a bitset over the code space when that
    /// space is small, binary search otherwise.
    fn edge_lookup(&self) -> EdgeLookup<'_> {
        const BITSET_LIMIT: u64 = 1 << 32;
        match code_space(self.k, self.order + 1) {
            Some(space) if space <= BITSET_LIMIT && space <= 64 * self.edges.len() as u64 + 4096 => {
                let mut bits = vec![0u64; space.div_ceil(64) as usize];
                for &e in &self.edges {
                    bits[(e / 64) as usize] |= 1 << (e % 64);
                }
                EdgeLookup::Bits(bits)
            }
            _ => EdgeLookup::Sorted(&self.edges),
        }
    }

    pub(crate) fn out_range(&self, vertex_index: usize) -> std::ops::Range<usize> {
        self.out_offsets[vertex_index]..self.out_offsets[vertex_index + 1]
    }

    /// Target vertex index of every edge, parallel to `edge_codes()`.
    pub(crate) fn edge_targets(&self) -> &[u32] {
        &self.targets
    }

    /// First edge whose reverse is also an edge (a palindromic edge pairs
    /// with itself), or `None` when the subgraph is antisymmetric.
    pub fn antisymmetry_violation(&self) -> Option<(ZkTuple, ZkTuple)> {
        let len = self.order + 1;
        let lookup = self.edge_lookup();
        self.edges.iter().find_map(|&e| {
            let r = reverse_code(e, self.k, len);
            lookup.contains(r).then(|| {
                (
                    ZkTuple::from_code(self.k, len, e),
                    ZkTuple::from_code(self.k, len, r),
                )
            })
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_violation().is_none()
    }

    /// First edge `e` with `-e^R` also an edge, if any.
    pub fn antinegasymmetry_violation(&self) -> Option<(ZkTuple, ZkTuple)> {
        let len = self.order + 1;
        let lookup = self.edge_lookup();
        self.edges.iter().find_map(|&e| {
            let r = negated_reverse_code(e, self.k, len);
            lookup.contains(r).then(|| {
                (
                    ZkTuple::from_code(self.k, len, e),
                    ZkTuple::from_code(self.k, len, r),
                )
            })
        })
    }

    pub fn is_antinegasymmetric(&self) -> bool {
        self.antinegasymmetry_violation().is_none()
    }

    pub fn unbalanced_vertices(&self) -> Vec<ZkTuple> {
        self.degrees
            .iter()
            .filter(|&(_, i, o)| i != o)
            .map(|(v, _, _)| ZkTuple::from_code(self.k, self.order, v))
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.degrees.in_deg == self.degrees.out_deg
    }

    pub fn components(&self) -> ComponentReport {
        scc::strong_components(self)
    }

    pub fn is_connected(&self) -> bool {
        self.components().is_connected()
    }
}

enum EdgeLookup<'a> {
    Bits(Vec<u64>),
    Sorted(&'a [u64]),
}

impl EdgeLookup<'_> {
    fn contains(&self, code: u64) -> bool {
        match self {
            EdgeLookup::Bits(bits) => bits[(code / 64) as usize] >> (code % 64) & 1 == 1,
            EdgeLookup::Sorted(edges) => edges.binary_search(&code).is_ok(),
        }
    }
}

/// Builds a subgraph of `B_k(order)` from explicit edge tuples.
/// Duplicate edges are dropped and counted in
/// [`DbSubgraph::duplicates_removed`].
pub fn build_subgraph<I>(k: u32, order: usize, edges: I) -> Result<DbSubgraph>
where
    I: IntoIterator<Item = ZkTuple>,
{
    check_order(k, order)?;
    let mut codes = Vec::new();
    for edge in edges {
        edge.ensure_alphabet(k)?;
        if edge.len() != order + 1 {
            return Err(Error::LengthMismatch {
                expected: order + 1,
                found: edge.len(),
            });
        }
        codes.push(tuples::encode(edge.symbols(), k));
    }
    Ok(DbSubgraph::from_codes(k, order, codes))
}

/// The full de Bruijn digraph `B_k(order)`.
pub fn full_de_bruijn(k: u32, order: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    check_order(k, order)?;
    let total = tuples::checked_pow(k, order + 1)?;
    cap.check("de Bruijn digraph", total)?;
    Ok(DbSubgraph::from_codes(k, order, (0..total as u64).collect()))
}

/// `B*_k(order)`: the de Bruijn digraph without its palindromic edges.
pub fn b_star(k: u32, order: usize, cap: EdgeCap) -> Result<DbSubgraph> {
    check_order(k, order)?;
    let total = tuples::checked_pow(k, order + 1)?;
    cap.check("de Bruijn digraph", total)?;
    let len = order + 1;
    let codes = (0..total as u64)
        .filter(|&c| reverse_code(c, k, len) != c)
        .collect();
    Ok(DbSubgraph::from_codes(k, order, codes))
}

/// The edge-graph `E_n(S)`: the subgraph of `B_k(n-1)` whose edges are the
/// cyclic `n`-windows of one period of `S`.
pub fn edge_graph_of_sequence(symbols: &[Symbol], k: u32, n: usize) -> Result<DbSubgraph> {
    if n < 2 {
        return Err(Error::Domain("window length must be at least 2".into()));
    }
    check_order(k, n - 1)?;
    if symbols.is_empty() {
        return Err(Error::Domain("sequence period must be at least 1".into()));
    }
    if let Some(&bad) = symbols.iter().find(|&&s| s as u32 >= k) {
        return Err(Error::SymbolOutOfRange {
            symbol: bad as u32,
            k,
        });
    }
    let codes: Vec<u64> = cyclic_window_codes(symbols, k, n)
        .into_iter()
        .map(|(fwd, _)| fwd)
        .collect();
    let mut order: Vec<usize> = (0..codes.len()).collect();
    order.sort_unstable_by_key(|&i| (codes[i], i));
    if let Some(w) = order.windows(2).find(|w| codes[w[0]] == codes[w[1]]) {
        return Err(Error::DuplicateWindow {
            first: w[0],
            second: w[1],
        });
    }
    Ok(DbSubgraph::from_codes(k, n - 1, codes))
}
