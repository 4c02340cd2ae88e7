//! Named hypergraph families and the size/uniformity extension steps used to
//! place an associated prime of any height `q` with `3 <= m <= q <= n`.

use itertools::Itertools;

use super::{Hypergraph, VertexSet};
use crate::error::{Error, Result};

/// The 3-uniform hypergraph on `n` vertices whose dual square has the
/// maximal ideal `(x_1..x_n)` as an associated prime.
///
/// A chain of triangles `{1,2,3}, {3,4,5}, ...` closed up differently per
/// residue of `n` mod 4:
///
/// | n mod 4 | closing edge  | extra edge |
/// |---------|---------------|------------|
/// | 1       | `{n,1,2}`     | none       |
/// | 3       | `{n,1,2}`     | `{4,5,6}`  |
/// | 2       | `{n-1,n,1}`   | none       |
/// | 0       | `{n-1,n,1}`   | `{2,3,4}`  |
///
/// `n = 3` gives the single edge `{1,2,3}`.
pub fn construct_t2(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "family needs n >= 3, got {n}"
        )));
    }
    if n == 3 {
        return Hypergraph::new(3, 3, vec![vec![1, 2, 3]]);
    }
    // Chain triangles end at n when n is odd and at n - 1 when n is even.
    let chain_end = if n % 2 == 1 { n } else { n - 1 };
    let mut edges: Vec<Vec<usize>> = (1..chain_end)
        .step_by(2)
        .map(|i| vec![i, i + 1, i + 2])
        .collect();
    match n % 4 {
        1 => edges.push(vec![n, 1, 2]),
        3 => {
            edges.push(vec![n, 1, 2]);
            edges.push(vec![4, 5, 6]);
        }
        2 => edges.push(vec![n - 1, n, 1]),
        _ => {
            edges.push(vec![n - 1, n, 1]);
            edges.push(vec![2, 3, 4]);
        }
    }
    Hypergraph::new(n, 3, edges)
}

/// Every m-subset of `1..=n` as an edge.
pub fn complete(n: usize, m: usize) -> Result<Hypergraph> {
    if n < m {
        return Err(Error::InvalidArgument(format!(
            "complete hypergraph needs n >= m, got n = {n}, m = {m}"
        )));
    }
    Hypergraph::new(n, m, (1..=n).combinations(m).collect())
}

/// The ten-edge 3-uniform hypergraph on nine vertices whose dual cube has
/// associated primes that the dual square lacks.
pub fn third_power_gap_example() -> Hypergraph {
    let edges = [
        [2, 4, 8],
        [3, 5, 6],
        [4, 7, 9],
        [6, 8, 9],
        [3, 4, 7],
        [1, 2, 9],
        [1, 4, 6],
        [1, 8, 9],
        [2, 5, 9],
        [3, 4, 6],
    ];
    Hypergraph::new(9, 3, edges.iter().map(|e| e.to_vec()).collect())
        .expect("fixed example is well formed")
}

/// Grows a connected 3-uniform hypergraph on `1..=q` to `n` vertices by
/// adding the edge `{1, 2, j}` for every new vertex `j`.
pub fn pad_connected_3(h: &Hypergraph, n: usize) -> Result<Hypergraph> {
    if h.m() != 3 {
        return Err(Error::WrongUniformity {
            expected: 3,
            actual: h.m(),
        });
    }
    if !h.is_connected() {
        return Err(Error::InvalidArgument(
            "padding requires a connected hypergraph".into(),
        ));
    }
    pad_to_n(h, &[1, 2], n)
}

/// Raises a 3-uniform hypergraph on `s` vertices to uniformity `m` by adding
/// the `m - 3` new vertices `s+1..=s+m-3` to every edge.
pub fn lift_to_m(h: &Hypergraph, m: usize) -> Result<Hypergraph> {
    if h.m() != 3 {
        return Err(Error::WrongUniformity {
            expected: 3,
            actual: h.m(),
        });
    }
    if m < 3 {
        return Err(Error::InvalidArgument(format!(
            "target uniformity must be >= 3, got {m}"
        )));
    }
    let s = h.n();
    let q = s + m - 3;
    let edges = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().chain(s + 1..=q).collect())
        .collect();
    Hypergraph::new(q, m, edges)
}

/// Adds vertices `q+1..=n` to an m-uniform hypergraph on `1..=q`, joining each
/// new vertex `j` through the edge `prefix ∪ {j}`. `prefix` must hold `m - 1`
/// distinct existing vertices.
pub fn pad_to_n(h: &Hypergraph, prefix: &[usize], n: usize) -> Result<Hypergraph> {
    let q = h.n();
    if n < q {
        return Err(Error::InvalidArgument(format!(
            "cannot pad {q} vertices down to {n}"
        )));
    }
    if prefix.len() != h.m() - 1 {
        return Err(Error::InvalidArgument(format!(
            "prefix needs m - 1 = {} vertices, got {}",
            h.m() - 1,
            prefix.len()
        )));
    }
    if prefix.iter().any(|&v| v == 0 || v > q) || !prefix.iter().all_unique() {
        return Err(Error::InvalidArgument(format!(
            "prefix {prefix:?} must be distinct vertices of 1..={q}"
        )));
    }
    let mut edges = h.edges().to_vec();
    edges.extend((q + 1..=n).map(|j| prefix.iter().copied().chain([j]).collect()));
    Hypergraph::new(n, h.m(), edges)
}

/// Connected m-uniform hypergraph on `n` vertices with an associated prime of
/// height `q` on `x_1..x_q`.
///
/// Builds the 3-uniform core on `q - m + 3` vertices, lifts it to
/// uniformity `m` (now on `q` vertices), then pads to `n` vertices using the
/// first `m - 1` vertices as the shared prefix. Returns the hypergraph and
/// the target prime's variables.
pub fn connected_family(m: usize, q: usize, n: usize) -> Result<(Hypergraph, VertexSet)> {
    if !(3 <= m && m <= q && q <= n) {
        return Err(Error::InvalidArgument(format!(
            "need 3 <= m <= q <= n, got m = {m}, q = {q}, n = {n}"
        )));
    }
    let core = construct_t2(q - m + 3)?;
    let lifted = lift_to_m(&core, m)?;
    let prefix: Vec<usize> = (1..m).collect();
    let padded = pad_to_n(&lifted, &prefix, n)?;
    Ok((padded, VertexSet::full(q)))
}
