//! Simple-graph (m = 2) predicates: bipartiteness and induced odd cycles.

use std::collections::VecDeque;

use super::{Hypergraph, VertexSet};
use crate::error::{Error, Result};
use crate::{guard, lattice_size, DEFAULT_MAX_SPACE};

fn require_graph(g: &Hypergraph) -> Result<()> {
    if g.m() != 2 {
        return Err(Error::WrongUniformity {
            expected: 2,
            actual: g.m(),
        });
    }
    Ok(())
}

fn adjacency(g: &Hypergraph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n() + 1];
    for e in g.edges() {
        adj[e[0]] |= 1 << (e[1] - 1);
        adj[e[1]] |= 1 << (e[0] - 1);
    }
    adj
}

/// BFS 2-coloring. Vertices in no edge go to the first side.
pub(super) fn bipartition(g: &Hypergraph) -> Result<Option<(VertexSet, VertexSet)>> {
    require_graph(g)?;
    let adj = adjacency(g);
    let mut side: Vec<Option<bool>> = vec![None; g.n() + 1];
    for root in 1..=g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let here = side[u].unwrap();
            for v in VertexSet::from_mask(adj[u]).iter() {
                match side[v] {
                    None => {
                        side[v] = Some(!here);
                        queue.push_back(v);
                    }
                    Some(s) if s == here => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let a = (1..=g.n()).filter(|&v| side[v] == Some(false)).collect();
    let b = (1..=g.n()).filter(|&v| side[v] == Some(true)).collect();
    Ok(Some((a, b)))
}

/// Every odd vertex set of size at least 3 whose induced subgraph is exactly
/// a cycle, in canonical order.
pub(super) fn induced_odd_cycles(g: &Hypergraph) -> Result<Vec<VertexSet>> {
    require_graph(g)?;
    guard(
        "induced cycle scan",
        lattice_size(2, g.n()),
        DEFAULT_MAX_SPACE,
    )?;
    let adj = adjacency(g);
    let mut cycles: Vec<VertexSet> = (0..1u64 << g.n())
        .filter(|s| s.count_ones() >= 3 && s.count_ones() % 2 == 1)
        .filter(|&s| induces_cycle(&adj, s))
        .map(VertexSet::from_mask)
        .collect();
    cycles.sort();
    Ok(cycles)
}

/// True when the subgraph induced on `set` is 2-regular and connected.
fn induces_cycle(adj: &[u64], set: u64) -> bool {
    let members = VertexSet::from_mask(set);
    if members.iter().any(|v| (adj[v] & set).count_ones() != 2) {
        return false;
    }
    let first = members.iter().next().unwrap();
    let mut reached = 1u64 << (first - 1);
    loop {
        let next = VertexSet::from_mask(reached)
            .iter()
            .fold(reached, |acc, v| acc | (adj[v] & set));
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}
