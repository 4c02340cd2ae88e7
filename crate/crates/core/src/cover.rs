//! k-covers of a hypergraph and their decompositions into 1-covers.
//!
//! A k-cover is a non-zero vector `a` in `N^n` with `sum_{v in e} a_v >= k`
//! for every edge `e`. The minimal 0/1 1-covers are the minimal vertex
//! covers; a vector splits into two 1-covers exactly when some minimal
//! vertex cover `M` fits under it and `a - M` is still a 1-cover. (Any
//! first part dominates a minimal cover, and whatever sits above that cover
//! can move into the second part.) The same argument applies at every
//! level of a k-part split.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// A vector of non-negative integers indexed by the vertices `1..=n`.
///
/// Covers, witnesses and exponent vectors all share this shape. Ordering is
/// plain lexicographic on the entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoverVector(Vec<u32>);

impl CoverVector {
    pub fn new(entries: Vec<u32>) -> Self {
        CoverVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        CoverVector(vec![0; n])
    }

    /// The 0/1 indicator vector of `set` in dimension `n`.
    pub fn indicator(set: VertexSet, n: usize) -> Self {
        CoverVector((1..=n).map(|v| set.contains(v) as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Entry for vertex `v` (1-indexed).
    pub fn get(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    /// Vertices with a non-zero entry.
    pub fn support(&self) -> VertexSet {
        self.at_least(1)
    }

    /// Vertices whose entry is at least `t`.
    pub fn at_least(&self, t: u32) -> VertexSet {
        VertexSet::from_mask(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a >= t)
                .fold(0u64, |acc, (i, _)| acc | 1 << i),
        )
    }

    /// Componentwise `min(a, cap)`.
    pub fn truncated(&self, cap: u32) -> Self {
        CoverVector(self.0.iter().map(|&a| a.min(cap)).collect())
    }

    pub fn add(&self, other: &CoverVector) -> Self {
        assert_eq!(self.len(), other.len());
        CoverVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &CoverVector) -> Option<Self> {
        assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(CoverVector)
    }

    /// Adds `amount` to every entry in `set`.
    pub fn bumped(&self, set: VertexSet, amount: u32) -> Self {
        let mut out = self.clone();
        for v in set.iter() {
            out.0[v - 1] += amount;
        }
        out
    }

    /// Minimum entry sum over the edges of `h`.
    fn min_edge_sum(&self, h: &Hypergraph) -> u64 {
        h.edges()
            .iter()
            .map(|e| e.iter().map(|&v| self.get(v) as u64).sum::<u64>())
            .min()
            .unwrap_or(0)
    }
}

impl std::fmt::Debug for CoverVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for CoverVector {
    fn from(entries: Vec<u32>) -> Self {
        CoverVector(entries)
    }
}

fn check_len(h: &Hypergraph, v: &CoverVector) -> Result<()> {
    if v.len() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            actual: v.len(),
        });
    }
    Ok(())
}

/// True iff `v` is non-zero and every edge sums to at least `k`.
pub fn is_k_cover(h: &Hypergraph, v: &CoverVector, k: u32) -> Result<bool> {
    check_len(h, v)?;
    Ok(!v.is_zero() && v.min_edge_sum(h) >= k as u64)
}

/// Inclusion-minimal transversals as bitmasks, ordered by size and then by
/// sorted member list.
///
/// Built edge by edge: every transversal of the edges seen so far either
/// already meets the next edge or is extended by one of its vertices, and
/// non-minimal sets are pruned after each step.
pub(crate) fn minimal_transversal_masks(h: &Hypergraph) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &edge in h.edge_masks() {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                next.extend(VertexSet::from_mask(edge).iter().map(|v| t | 1 << (v - 1)));
            }
        }
        current = minimal_sets(next);
    }
    current.sort_by(|&a, &b| {
        (a.count_ones(), VertexSet::from_mask(a)).cmp(&(b.count_ones(), VertexSet::from_mask(b)))
    });
    current
}

/// Drops duplicates and every set that strictly contains another.
fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// All minimal vertex covers (the irreducible 1-covers) as 0/1 vectors, in
/// canonical order.
pub fn minimal_vertex_covers(h: &Hypergraph) -> Vec<CoverVector> {
    minimal_transversal_masks(h)
        .into_iter()
        .map(|m| CoverVector::indicator(VertexSet::from_mask(m), h.n()))
        .collect()
}

/// Precomputed edge and minimal-cover masks for repeated decomposition
/// queries against one hypergraph.
///
/// The bitmask queries take a vector already truncated at 2, given as its
/// support and its set of entries equal to 2.
#[derive(Clone, Debug)]
pub struct Decomposer {
    n: usize,
    edges: Vec<u64>,
    covers: Vec<u64>,
}

impl Decomposer {
    pub fn new(h: &Hypergraph) -> Self {
        Decomposer {
            n: h.n(),
            edges: h.edge_masks().to_vec(),
            covers: minimal_transversal_masks(h),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn cover_masks(&self) -> &[u64] {
        &self.covers
    }

    #[inline]
    pub fn hits_every_edge(&self, set: u64) -> bool {
        self.edges.iter().all(|&e| e & set != 0)
    }

    /// Whether the truncated vector is a 2-cover.
    #[inline]
    pub fn is_two_cover(&self, support: u64, twos: u64) -> bool {
        self.edges
            .iter()
            .all(|&e| (e & support).count_ones() + (e & twos).count_ones() >= 2)
    }

    /// First minimal cover `M` (canonical order) with `M ⊆ support` such that
    /// the vector minus `M` is still a 1-cover.
    ///
    /// After removing `M`, an entry stays positive iff it was 2 or lies
    /// outside `M`, so the remainder's support is `(support \ M) ∪ twos`.
    #[inline]
    pub fn first_split(&self, support: u64, twos: u64) -> Option<u64> {
        self.covers
            .iter()
            .copied()
            .find(|&m| m & !support == 0 && self.hits_every_edge((support & !m) | twos))
    }

    #[inline]
    pub fn splits(&self, support: u64, twos: u64) -> bool {
        self.first_split(support, twos).is_some()
    }

    /// Whether `v` is a sum of two 1-covers.
    pub fn splits_vector(&self, v: &CoverVector) -> bool {
        self.splits(v.support().mask(), v.at_least(2).mask())
    }

    fn split_rec(&self, x: &CoverVector, k: u32) -> Option<Vec<CoverVector>> {
        let support = x.support().mask();
        if k == 1 {
            return self.hits_every_edge(support).then(|| vec![x.clone()]);
        }
        // A sum of k 1-covers is a k-cover.
        let min_sum = self
            .edges
            .iter()
            .map(|&e| {
                VertexSet::from_mask(e)
                    .iter()
                    .map(|v| x.get(v))
                    .sum::<u32>()
            })
            .min()
            .unwrap_or(0);
        if min_sum < k {
            return None;
        }
        for &m in &self.covers {
            if m & !support != 0 {
                continue;
            }
            let part = CoverVector::indicator(VertexSet::from_mask(m), self.n);
            let rest = x.checked_sub(&part).expect("cover fits under support");
            if let Some(mut parts) = self.split_rec(&rest, k - 1) {
                parts.insert(0, part);
                return Some(parts);
            }
        }
        None
    }
}

/// Writes `x` as a sum of `k` 1-covers if possible.
///
/// The first `k - 1` parts are minimal vertex covers, each the earliest in
/// canonical order that admits a completion; the last part takes the
/// remainder. `x` must be a k-cover.
pub fn decompose_into_one_covers(
    h: &Hypergraph,
    x: &CoverVector,
    k: u32,
) -> Result<Option<Vec<CoverVector>>> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "number of parts must be >= 1".into(),
        ));
    }
    if !is_k_cover(h, x, k)? {
        return Err(Error::NotKCover {
            vector: x.entries().to_vec(),
            k,
        });
    }
    Ok(Decomposer::new(h).split_rec(x, k))
}

/// The 2-cover attached to an independent set `s`: 0 on `s`, 2 on its
/// neighborhood and 1 everywhere else.
pub fn cover_from_independent(h: &Hypergraph, s: VertexSet) -> Result<CoverVector> {
    let neighborhood = h.neighborhood(s)?;
    Ok(CoverVector::new(
        (1..=h.n())
            .map(|v| {
                if s.contains(v) {
                    0
                } else if neighborhood.contains(v) {
                    2
                } else {
                    1
                }
            })
            .collect(),
    ))
}

/// Checks whether every independent-set cover splits into two 1-covers.
///
/// Returns `(true, None)` when all do, otherwise `(false, Some(s))` for the
/// first failing set in [`Hypergraph::independent_sets`] order. A `true`
/// verdict is equivalent to the dual square having no embedded primes.
pub fn embedded_free_by_independent_sets(h: &Hypergraph) -> (bool, Option<VertexSet>) {
    let decomposer = Decomposer::new(h);
    let all = h.vertices().mask();
    for s in h.independent_sets() {
        let twos = h
            .neighborhood(s)
            .expect("stream yields independent sets")
            .mask();
        if !decomposer.splits(all & !s.mask(), twos) {
            return (false, Some(s));
        }
    }
    (true, None)
}

/// Writes a 2-cover `w` as `A_S + y` where `S` is the zero set of `w`.
///
/// `S` is always independent (an edge inside it would sum to 0) and `y` is
/// entrywise non-negative; `y` is zero exactly when `w` is itself `A_S`.
pub fn reduce_to_independent_cover(
    h: &Hypergraph,
    w: &CoverVector,
) -> Result<(VertexSet, CoverVector)> {
    if !is_k_cover(h, w, 2)? {
        return Err(Error::NotKCover {
            vector: w.entries().to_vec(),
            k: 2,
        });
    }
    let s = h.vertices().difference(w.support());
    let base = cover_from_independent(h, s)?;
    let rest = w.checked_sub(&base).ok_or_else(|| {
        Error::Inconsistency(format!(
            "{w:?} does not dominate the cover {base:?} of its zero set"
        ))
    })?;
    Ok((s, rest))
}
