//! Balancedness by exhaustive submatrix search.
//!
//! A hypergraph is balanced when its incidence matrix has no square
//! submatrix with an odd number k >= 3 of columns in which every row and
//! every column contains exactly two ones. The scan is exhaustive and
//! refuses instances whose search space exceeds the default guard.

use itertools::Itertools;
use serde::Serialize;

use super::{Hypergraph, VertexSet};
use crate::error::Result;
use crate::rng::binomial;
use crate::{guard, DEFAULT_MAX_SPACE};

/// An odd square submatrix with all row and column sums equal to 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnbalancedWitness {
    pub rows: VertexSet,
    pub edges: Vec<Vec<usize>>,
}

impl UnbalancedWitness {
    /// Re-checks the row and column sums against `h`.
    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let k = self.rows.len();
        if k < 3 || k.is_multiple_of(2) || self.edges.len() != k || !self.edges.iter().all_unique()
        {
            return false;
        }
        let mut masks = Vec::with_capacity(k);
        for e in &self.edges {
            let set = VertexSet::from_iter(e.iter().copied());
            if !h.has_edge(set) {
                return false;
            }
            masks.push(set.mask());
        }
        let columns_ok = masks
            .iter()
            .all(|&c| (c & self.rows.mask()).count_ones() == 2);
        let rows_ok = self
            .rows
            .iter()
            .all(|v| masks.iter().filter(|&&c| c >> (v - 1) & 1 == 1).count() == 2);
        columns_ok && rows_ok
    }
}

/// Upper bound on the (column set, row set) pairs the scan may visit:
/// the sum over odd `k >= 3` of `C(e, k) * C(n, k)`.
fn scan_size(n: usize, e: usize) -> u128 {
    (3..=n.min(e))
        .step_by(2)
        .map(|k| {
            let cols = binomial(e, k).map_or(u128::MAX, u128::from);
            let rows = binomial(n, k).map_or(u128::MAX, u128::from);
            cols.saturating_mul(rows)
        })
        .fold(0u128, u128::saturating_add)
}

pub(super) fn is_balanced(h: &Hypergraph) -> Result<(bool, Option<UnbalancedWitness>)> {
    guard(
        "balancedness scan",
        scan_size(h.n(), h.num_edges()),
        DEFAULT_MAX_SPACE,
    )?;
    let masks = h.edge_masks();
    for k in (3..=h.n().min(masks.len())).step_by(2) {
        for cols in (0..masks.len()).combinations(k) {
            // A usable row meets exactly two of the chosen columns.
            let candidates: Vec<usize> = (1..=h.n())
                .filter(|&v| {
                    cols.iter()
                        .filter(|&&j| masks[j] >> (v - 1) & 1 == 1)
                        .count()
                        == 2
                })
                .collect();
            if candidates.len() < k {
                continue;
            }
            for rows in candidates.into_iter().combinations(k) {
                let row_mask = VertexSet::from_iter(rows.iter().copied()).mask();
                if cols
                    .iter()
                    .all(|&j| (masks[j] & row_mask).count_ones() == 2)
                {
                    let witness = UnbalancedWitness {
                        rows: VertexSet::from_mask(row_mask),
                        edges: cols.iter().map(|&j| h.edges()[j].clone()).collect(),
                    };
                    return Ok((false, Some(witness)));
                }
            }
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::hypergraph::complete;

    #[test]
    fn triangle_is_unbalanced() {
        let k3 = complete(3, 2).unwrap();
        let (balanced, witness) = k3.is_balanced().unwrap();
        assert!(!balanced);
        let w = witness.unwrap();
        assert_eq!(w.rows, VertexSet::full(3));
        assert_eq!(w.edges, k3.edges());
        assert!(w.is_valid_for(&k3));
    }

    #[test]
    fn unbalanced_but_embedded_free_example() {
        let h = Hypergraph::new(
            6,
            3,
            vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 1], vec![2, 3, 4]],
        )
        .unwrap();
        let (balanced, witness) = h.is_balanced().unwrap();
        assert!(!balanced);
        let w = witness.unwrap();
        assert_eq!(w.rows.to_vec(), vec![1, 3, 5]);
        assert_eq!(w.edges, vec![vec![1, 2, 3], vec![1, 5, 6], vec![3, 4, 5]]);
        assert!(w.is_valid_for(&h));
    }

    #[test]
    fn even_cycle_is_balanced() {
        let c4 =
            Hypergraph::new(4, 2, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]]).unwrap();
        assert_eq!(c4.is_balanced().unwrap(), (true, None));
    }

    #[test]
    fn size_guard() {
        let h = complete(15, 2).unwrap();
        assert!(matches!(h.is_balanced(), Err(Error::GuardExceeded { .. })));
        // Dense graphs on eight vertices stay within the guard.
        assert!(complete(8, 2).unwrap().is_balanced().is_ok());
        assert_eq!(scan_size(3, 3), 1);
        assert_eq!(scan_size(5, 4), 4 * 10);
    }

    #[test]
    fn witness_validation_rejects_tampering() {
        let k3 = complete(3, 2).unwrap();
        let w = UnbalancedWitness {
            rows: VertexSet::from_iter([1, 2]),
            edges: vec![vec![1, 2], vec![1, 3]],
        };
        assert!(!w.is_valid_for(&k3));
    }
}
