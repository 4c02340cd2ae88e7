//! Monomial ideals over exponent vectors.
//!
//! An ideal is stored by its minimal generators in canonical order: total
//! degree first, then lexicographically with `x_1 > x_2 > ... > x_n`. The
//! zero ideal has no representation.

use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::cover::{minimal_vertex_covers, CoverVector};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::{guard, lattice_size, DEFAULT_MAX_SPACE};

/// `x_1^{a_1} ... x_n^{a_n}`, identified with the vector `(a_1, ..., a_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (1-indexed) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    /// Product of the variables in `set`.
    pub fn squarefree(set: VertexSet, n: usize) -> Self {
        Monomial((1..=n).map(|v| set.contains(v) as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_macaulay2())
    }
}

impl Monomial {
    /// `x_1^2*x_3`, or `1` for the unit monomial.
    pub fn to_macaulay2(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| match a {
                1 => format!("x_{}", i + 1),
                _ => format!("x_{}^{a}", i + 1),
            })
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

impl From<CoverVector> for Monomial {
    fn from(c: CoverVector) -> Self {
        Monomial(c.into_entries())
    }
}

impl From<Monomial> for CoverVector {
    fn from(m: Monomial) -> Self {
        CoverVector::new(m.0)
    }
}

/// A non-zero monomial ideal held by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        if raw.generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        if let Some(g) = raw.generators.iter().find(|g| g.len() != raw.n) {
            return Err(Error::LengthMismatch {
                expected: raw.n,
                actual: g.len(),
            });
        }
        MonomialIdeal::from_generators(raw.generators.into_iter().map(Monomial).collect())
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            n: ideal.n,
            generators: ideal.generators.into_iter().map(|g| g.0).collect(),
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.generators.iter().map(|g| g.to_macaulay2()).join(", ")
        )
    }
}

/// Sorts, deduplicates and drops every monomial divisible by another.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Only something of strictly lower degree can properly divide g.
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Minimalizes and canonically orders `gens`, which must be non-empty and
    /// all of one length.
    pub fn from_generators(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.first().ok_or(Error::EmptyIdeal)?.n();
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: g.n(),
            });
        }
        Ok(MonomialIdeal {
            n,
            generators: minimalize(gens),
        })
    }

    /// The prime `(x_i : i in set)`.
    pub fn prime(set: VertexSet, n: usize) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        MonomialIdeal::from_generators(set.iter().map(|i| Monomial::var(i, n)).collect())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization cannot fail")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_exponent(&self) -> u32 {
        self.generators
            .iter()
            .map(Monomial::max_exponent)
            .max()
            .unwrap_or(0)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, q: &Monomial) -> Result<bool> {
        self.check_dim(q.n())?;
        Ok(self.generators.iter().any(|g| g.divides(q)))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_dim(other.n)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides(g))))
    }

    /// `(self : q)`, generated by `g / gcd(g, q)`.
    pub fn colon(&self, q: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(q.n())?;
        MonomialIdeal::from_generators(
            self.generators
                .iter()
                .map(|g| g.quotient_by_gcd(q))
                .collect(),
        )
    }

    /// Generated by the pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        MonomialIdeal::from_generators(
            self.generators
                .iter()
                .cartesian_product(&other.generators)
                .map(|(a, b)| a.lcm(b))
                .collect(),
        )
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.n)?;
        MonomialIdeal::from_generators(
            self.generators
                .iter()
                .cartesian_product(&other.generators)
                .map(|(a, b)| a.mul(b))
                .collect(),
        )
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidArgument("ideal power must be >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// One squarefree generator per edge.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        h.edge_masks()
            .iter()
            .map(|&e| Monomial::squarefree(VertexSet::from_mask(e), h.n()))
            .collect(),
    )
    .expect("hypergraphs have at least one edge")
}

fn edge_prime(h: &Hypergraph, edge: u64) -> MonomialIdeal {
    MonomialIdeal::prime(VertexSet::from_mask(edge), h.n()).expect("edges are non-empty")
}

/// The Alexander dual, the intersection of the edge primes.
///
/// Computed both by intersecting primes and from the minimal vertex covers;
/// a disagreement is reported as [`Error::Inconsistency`].
pub fn alexander_dual(h: &Hypergraph) -> Result<MonomialIdeal> {
    let masks = h.edge_masks();
    let mut by_intersection = edge_prime(h, masks[0]);
    for &e in &masks[1..] {
        by_intersection = by_intersection.intersect(&edge_prime(h, e))?;
    }
    let by_covers = MonomialIdeal::from_generators(
        minimal_vertex_covers(h)
            .into_iter()
            .map(Monomial::from)
            .collect(),
    )?;
    if by_intersection != by_covers {
        return Err(Error::Inconsistency(format!(
            "dual by intersection {by_intersection:?} differs from cover dual {by_covers:?}"
        )));
    }
    Ok(by_covers)
}

/// `(I^∨)^k`.
pub fn dual_power_ordinary(h: &Hypergraph, k: u32) -> Result<MonomialIdeal> {
    alexander_dual(h)?.power(k)
}

/// `(I^∨)^(k)` with the default enumeration guard.
pub fn dual_power_symbolic(h: &Hypergraph, k: u32) -> Result<MonomialIdeal> {
    dual_power_symbolic_with_limit(h, k, DEFAULT_MAX_SPACE)
}

/// `(I^∨)^(k)`, the intersection of the k-th powers of the edge primes.
///
/// Also computed as the minimal k-covers found by scanning `{0..k}^n`, and
/// the two results are compared. The scan loses nothing: an entry above `k`
/// can always be lowered to `k` without breaking a k-cover. Errors when
/// `(k+1)^n` exceeds `limit`.
pub fn dual_power_symbolic_with_limit(
    h: &Hypergraph,
    k: u32,
    limit: u128,
) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("symbolic power must be >= 1".into()));
    }
    guard(
        "symbolic power scan",
        lattice_size(k as u128 + 1, h.n()),
        limit,
    )?;

    let mut by_intersection = edge_prime(h, h.edge_masks()[0]).power(k)?;
    for &e in &h.edge_masks()[1..] {
        by_intersection = by_intersection.intersect(&edge_prime(h, e).power(k)?)?;
    }

    let by_covers = MonomialIdeal::from_generators(minimal_k_covers_in_box(h, k))?;
    if by_intersection != by_covers {
        return Err(Error::Inconsistency(format!(
            "symbolic power by intersection {by_intersection:?} differs from k-cover scan {by_covers:?}"
        )));
    }
    Ok(by_covers)
}

/// k-covers in `{0..k}^n` that stop being k-covers when any positive entry
/// drops by one.
fn minimal_k_covers_in_box(h: &Hypergraph, k: u32) -> Vec<Monomial> {
    let n = h.n();
    let edge_sums = |a: &[u32]| -> Vec<u32> {
        h.edges()
            .iter()
            .map(|e| e.iter().map(|&v| a[v - 1]).sum())
            .collect()
    };
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let sums = edge_sums(&a);
        if sums.iter().all(|&s| s >= k) {
            let minimal = (1..=n).filter(|&v| a[v - 1] > 0).all(|v| {
                h.edges()
                    .iter()
                    .zip(&sums)
                    .any(|(e, &s)| s == k && e.contains(&v))
            });
            if minimal {
                out.push(Monomial::new(a.clone()));
            }
        }
        let mut i = 0;
        while i < n && a[i] == k {
            a[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        a[i] += 1;
    }
    out
}

/// A Macaulay2 script declaring the edge ideal of `h` and asking for the
/// associated primes of the `power`-th power of its Alexander dual.
pub fn macaulay2_script(h: &Hypergraph, power: u32) -> String {
    let ideal = edge_ideal(h);
    let mut out = String::new();
    writeln!(
        out,
        "-- {}-uniform hypergraph on {} vertices, {} edges",
        h.m(),
        h.n(),
        h.num_edges()
    )
    .unwrap();
    writeln!(out, "R = QQ[x_1..x_{}];", h.n()).unwrap();
    writeln!(
        out,
        "I = monomialIdeal({});",
        ideal
            .generators()
            .iter()
            .map(|g| g.to_macaulay2())
            .join(", ")
    )
    .unwrap();
    writeln!(out, "J = (dual I)^{power};").unwrap();
    writeln!(out, "associatedPrimes J").unwrap();
    out
}
