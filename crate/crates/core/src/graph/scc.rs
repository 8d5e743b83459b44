//! Iterative Tarjan over the materialized vertices of a [`DbSubgraph`].

use super::{ComponentReport, DbSubgraph};

const UNVISITED: u32 = u32::MAX;

pub(super) fn strong_components(g: &DbSubgraph) -> ComponentReport {
    let n = g.vertex_count();
    let targets = g.edge_targets();

    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut comp = vec![UNVISITED; n];
    let mut comp_count = 0u32;
    let mut counter = 0u32;
    // (vertex, next out-edge position)
    let mut calls: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root as u32);
        on_stack[root] = true;
        calls.push((root, g.out_range(root).start));

        while let Some(&mut (v, ref mut pos)) = calls.last_mut() {
            let end = g.out_range(v).end;
            if *pos < end {
                let w = targets[*pos] as usize;
                *pos += 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    calls.push((w, g.out_range(w).start));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow") as usize;
                    on_stack[w] = false;
                    comp[w] = comp_count;
                    if w == v {
                        break;
                    }
                }
                comp_count += 1;
            }
        }
    }

    let count = comp_count as usize;
    let mut vertex_sizes = vec![0usize; count];
    let mut edge_sizes = vec![0usize; count];
    for (v, &c) in comp.iter().enumerate() {
        let c = c as usize;
        vertex_sizes[c] += 1;
        edge_sizes[c] += g.out_range(v).len();
    }
    let mut pairs: Vec<(usize, usize)> = edge_sizes.into_iter().zip(vertex_sizes).collect();
    pairs.sort_unstable_by(|a, b| b.cmp(a));
    ComponentReport {
        count,
        vertex_sizes: pairs.iter().map(|p| p.1).collect(),
        edge_sizes: pairs.iter().map(|p| p.0).collect(),
    }
}
