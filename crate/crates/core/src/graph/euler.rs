//! Deterministic Eulerian circuits (Hierholzer).
//!
//! The walk starts at the smallest materialized vertex and always takes the
//! smallest unused out-edge. Sub-tours are spliced by the usual stack
//! discipline: an edge is emitted when its head vertex is exhausted, and
//! the emitted list is reversed at the end.

use crate::error::{Error, Result};
use crate::tuples::{Symbol, ZkTuple};

use super::DbSubgraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianCircuit {
    k: u32,
    order: usize,
    edges: Vec<u64>,
    start: u64,
}

impl EulerianCircuit {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_codes(&self) -> &[u64] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = ZkTuple> + '_ {
        self.edges
            .iter()
            .map(move |&c| ZkTuple::from_code(self.k, self.order + 1, c))
    }

    pub fn start_vertex(&self) -> ZkTuple {
        ZkTuple::from_code(self.k, self.order, self.start)
    }
}

pub fn eulerian_circuit(g: &DbSubgraph) -> Result<EulerianCircuit> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("subgraph has no edges".into()));
    }
    if !g.is_balanced() {
        return Err(Error::Precondition(format!(
            "subgraph is not balanced ({} vertices with in-degree != out-degree)",
            g.unbalanced_vertices().len()
        )));
    }
    let report = g.components();
    if !report.is_connected() {
        return Err(Error::Disconnected(report));
    }

    let targets = g.edge_targets();
    let n = g.vertex_count();
    if g.edge_count() >= u32::MAX as usize {
        return Err(Error::Precondition("too many edges for a 32-bit edge index".into()));
    }
    // per vertex: [next unused out-edge, end of out-edges]
    let mut cursor: Vec<[u32; 2]> = (0..n)
        .map(|v| {
            let r = g.out_range(v);
            [r.start as u32, r.end as u32]
        })
        .collect();
    let start = (0..n)
        .find(|&v| !g.out_range(v).is_empty())
        .expect("nonempty balanced graph has a vertex with an out-edge");

    let codes = g.edge_codes();
    let mut circuit: Vec<u64> = Vec::with_capacity(g.edge_count());
    // edges on the current trail; the walker stands at the head of the last one
    let mut stack: Vec<u32> = Vec::new();
    loop {
        let v = match stack.last() {
            Some(&e) => targets[e as usize] as usize,
            None => start,
        };
        let c = &mut cursor[v];
        if c[0] < c[1] {
            stack.push(c[0]);
            c[0] += 1;
        } else {
            match stack.pop() {
                Some(e) => circuit.push(codes[e as usize]),
                None => break,
            }
        }
    }
    circuit.reverse();

    if circuit.len() != g.edge_count() {
        return Err(Error::Internal(format!(
            "circuit covers {} of {} edges",
            circuit.len(),
            g.edge_count()
        )));
    }
    Ok(EulerianCircuit {
        k: g.k(),
        order: g.order(),
        edges: circuit,
        start: g.vertex_codes()[start],
    })
}

/// One period of the sequence traced by a circuit: the first symbol of each
/// edge, in circuit order.
pub fn circuit_to_sequence(c: &EulerianCircuit) -> Vec<Symbol> {
    let lead = (c.k as u64).pow(c.order as u32);
    c.edges.iter().map(|&e| (e / lead) as Symbol).collect()
}
