//! Associated primes of powers of the Alexander dual.
//!
//! Two independent routes are provided:
//!
//! * the **cover-witness search** for the square, which scans 2-covers `C`
//!   with entries in `{0,1,2}` that are not sums of two 1-covers and reads the
//!   prime off the set `S(C)` of single-variable bumps that do split;
//! * the **colon oracle**, which works on any monomial ideal by scanning
//!   every monomial `z` in an exponent box and testing whether `(I : z)` is a
//!   prime generated by variables.
//!
//! Both scans are exhaustive. Size guards turn oversize instances into
//! errors rather than partial answers.
//!
//! Why `{0,1,2}` suffices for the square: the minimal generators of
//! `(I^∨)^2` have exponents at most 2, and a colon witness can always be
//! chosen with exponents below the maximum generator exponent. Splitting into
//! two 1-covers depends only on `min(C, 2)` and is upward monotone, so the
//! condition "`W·C` does not split for every `W` outside the prime" reduces
//! to the single check at `C + 2·1_{S^c}`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::{CoverVector, Decomposer};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::ideal::{dual_power_ordinary, Monomial, MonomialIdeal};
use crate::{guard, lattice_size, DEFAULT_MAX_SPACE};

/// The prime `(x_i : i in variables)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialPrime(VertexSet);

impl MonomialPrime {
    pub fn new(variables: VertexSet) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::InvalidArgument(
                "a prime needs at least one variable".into(),
            ));
        }
        Ok(MonomialPrime(variables))
    }

    pub fn variables(&self) -> VertexSet {
        self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }
}

/// Ordered by height, then by the sorted variable list.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.height(), self.0).cmp(&(other.height(), other.0))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.0.iter().map(|v| format!("x_{v}")).collect();
        write!(f, "({})", vars.join(","))
    }
}

/// A prime together with the monomial (as an exponent vector) whose colon
/// produces it, when one is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessedPrime {
    pub prime: MonomialPrime,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<CoverVector>,
}

/// Associated primes of `(I^∨)^power`, split into the edge primes and the
/// rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssProfile {
    pub power: u32,
    pub minimal: Vec<MonomialPrime>,
    pub embedded: Vec<WitnessedPrime>,
}

impl AssProfile {
    /// Every prime of the profile in canonical order.
    pub fn primes(&self) -> Vec<MonomialPrime> {
        let mut all: Vec<MonomialPrime> = self
            .minimal
            .iter()
            .copied()
            .chain(self.embedded.iter().map(|w| w.prime))
            .collect();
        all.sort();
        all
    }

    pub fn embedded_primes(&self) -> Vec<MonomialPrime> {
        self.embedded.iter().map(|w| w.prime).collect()
    }

    pub fn contains(&self, prime: &MonomialPrime) -> bool {
        self.minimal.contains(prime) || self.embedded.iter().any(|w| &w.prime == prime)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serialization cannot fail")
    }
}

/// One prime per edge, each of height `m`, in canonical order.
pub fn minimal_primes(h: &Hypergraph) -> Vec<MonomialPrime> {
    let mut out: Vec<MonomialPrime> = h
        .edge_masks()
        .iter()
        .map(|&e| MonomialPrime(VertexSet::from_mask(e)))
        .collect();
    out.sort();
    out
}

fn vector_from_masks(n: usize, support: u64, twos: u64) -> CoverVector {
    CoverVector::new(
        (0..n)
            .map(|i| (support >> i & 1) as u32 + (twos >> i & 1) as u32)
            .collect(),
    )
}

/// The set `S(C)` of vertices whose single bump makes the truncated 2-cover
/// split, for a 2-cover that does not split itself.
///
/// Vertices already at 2 never qualify: bumping them leaves the truncation
/// unchanged.
fn bump_set(d: &Decomposer, all: u64, support: u64, twos: u64) -> u64 {
    let mut s = 0u64;
    let mut rest = all & !twos;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let bumped = if support & bit != 0 {
            d.splits(support, twos | bit)
        } else {
            d.splits(support | bit, twos)
        };
        if bumped {
            s |= bit;
        }
    }
    s
}

/// Whether the truncated 2-cover `(support, twos)` certifies the prime on
/// `S(C)`; returns that set when it does.
fn certified_prime(d: &Decomposer, all: u64, support: u64, twos: u64) -> Option<u64> {
    if !d.is_two_cover(support, twos) || d.splits(support, twos) {
        return None;
    }
    let s = bump_set(d, all, support, twos);
    if s == 0 {
        return None;
    }
    let outside = all & !s;
    (!d.splits(support | outside, twos | outside)).then_some(s)
}

fn merge_least(into: &mut BTreeMap<u64, CoverVector>, prime: u64, witness: CoverVector) {
    into.entry(prime)
        .and_modify(|w| {
            if witness < *w {
                *w = witness.clone();
            }
        })
        .or_insert(witness);
}

/// Embedded primes of `(I^∨)^2` with the default scan guard.
pub fn embedded_primes(h: &Hypergraph) -> Result<Vec<WitnessedPrime>> {
    embedded_primes_with_limit(h, DEFAULT_MAX_SPACE)
}

/// Embedded primes of `(I^∨)^2` by exhaustive witness search over
/// `{0,1,2}^n`, each with its lexicographically least witness.
///
/// Errors when `3^n` exceeds `limit`.
pub fn embedded_primes_with_limit(h: &Hypergraph, limit: u128) -> Result<Vec<WitnessedPrime>> {
    let n = h.n();
    guard("witness scan", lattice_size(3, n), limit)?;
    let d = Decomposer::new(h);
    let all = h.vertices().mask();
    let found = (0..=all)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, support: u64| {
            // Every subset of the support, as the set of entries equal to 2.
            let mut twos = support;
            loop {
                if let Some(s) = certified_prime(&d, all, support, twos) {
                    merge_least(&mut acc, s, vector_from_masks(n, support, twos));
                }
                if twos == 0 {
                    break;
                }
                twos = (twos - 1) & support;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (prime, witness) in b {
                merge_least(&mut a, prime, witness);
            }
            a
        });

    let mut out: Vec<WitnessedPrime> = found
        .into_iter()
        // A witness set equal to an edge gives a minimal prime, which is
        // reported separately.
        .filter(|(s, _)| !h.edge_masks().contains(s))
        .map(|(s, witness)| WitnessedPrime {
            prime: MonomialPrime(VertexSet::from_mask(s)),
            witness: Some(witness),
        })
        .collect();
    out.sort_by_key(|p| p.prime);
    Ok(out)
}

/// Associated primes of `(I^∨)^2` through the cover-witness search.
pub fn ass_square(h: &Hypergraph) -> Result<AssProfile> {
    ass_square_with_limit(h, DEFAULT_MAX_SPACE)
}

pub fn ass_square_with_limit(h: &Hypergraph, limit: u128) -> Result<AssProfile> {
    Ok(AssProfile {
        power: 2,
        minimal: minimal_primes(h),
        embedded: embedded_primes_with_limit(h, limit)?,
    })
}

/// A prime found by the colon oracle with its lexicographically least
/// witness monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OraclePrime {
    pub prime: MonomialPrime,
    pub witness: Monomial,
}

/// Membership table of `I` on the box `[0, b]^n`, indexed in mixed radix
/// with `x_1` least significant.
struct BoxMembership {
    n: usize,
    side: usize,
    strides: Vec<usize>,
    member: Vec<bool>,
}

impl BoxMembership {
    fn new(ideal: &MonomialIdeal, b: u32) -> Self {
        let n = ideal.n();
        let side = b as usize + 1;
        let strides: Vec<usize> = (0..n).map(|i| side.pow(i as u32)).collect();
        let cells = side.pow(n as u32);
        let mut member = vec![false; cells];
        for g in ideal.generators() {
            let idx: usize = g
                .exponents()
                .iter()
                .zip(&strides)
                .map(|(&a, &s)| a as usize * s)
                .sum();
            member[idx] = true;
        }
        // z is in I iff it is a generator or some z - e_i is; z - e_i always
        // has a smaller index, so one ascending pass suffices.
        let mut digits = vec![0usize; n];
        for idx in 0..cells {
            if !member[idx] {
                member[idx] = (0..n).any(|i| digits[i] > 0 && member[idx - strides[i]]);
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < side {
                    break;
                }
                *d = 0;
            }
        }
        BoxMembership {
            n,
            side,
            strides,
            member,
        }
    }

    fn digits(&self, mut idx: usize) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = idx % self.side;
                idx /= self.side;
                d as u32
            })
            .collect()
    }

    /// `(prime mask, witness)` if `(I : z)` is generated by variables.
    fn colon_prime(&self, idx: usize) -> Option<u64> {
        if self.member[idx] {
            return None;
        }
        let top = self.side - 1;
        let mut s = 0u64;
        let mut raised = idx;
        for i in 0..self.n {
            let digit = idx / self.strides[i] % self.side;
            // At the top of the box, x_i·z ∈ I would force z ∈ I already.
            if digit < top && self.member[idx + self.strides[i]] {
                s |= 1 << i;
            } else {
                raised += (top - digit) * self.strides[i];
            }
        }
        (s != 0 && !self.member[raised]).then_some(s)
    }
}

/// Associated primes of a monomial ideal by scanning every `z` with
/// exponents at most `expbound` and reading off `(I : z)`.
///
/// `expbound` must be at least the largest generator exponent and
/// `(expbound + 1)^n` must not exceed `limit`.
pub fn ass_oracle_with_limit(
    ideal: &MonomialIdeal,
    expbound: u32,
    limit: u128,
) -> Result<Vec<OraclePrime>> {
    if expbound < ideal.max_exponent() {
        return Err(Error::InvalidArgument(format!(
            "exponent bound {expbound} is below the largest generator exponent {}",
            ideal.max_exponent()
        )));
    }
    if ideal.n() > crate::hypergraph::MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "at most {} variables are supported",
            crate::hypergraph::MAX_VERTICES
        )));
    }
    guard(
        "colon oracle box",
        lattice_size(expbound as u128 + 1, ideal.n()),
        limit,
    )?;
    let table = BoxMembership::new(ideal, expbound);
    let cells = table.member.len();
    let found = (0..cells)
        .into_par_iter()
        .fold(BTreeMap::<u64, Vec<u32>>::new, |mut acc, idx| {
            if let Some(s) = table.colon_prime(idx) {
                let z = table.digits(idx);
                acc.entry(s)
                    .and_modify(|w| {
                        if z < *w {
                            *w = z.clone();
                        }
                    })
                    .or_insert(z);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (s, z) in b {
                a.entry(s)
                    .and_modify(|w| {
                        if z < *w {
                            *w = z.clone();
                        }
                    })
                    .or_insert(z);
            }
            a
        });
    let mut out: Vec<OraclePrime> = found
        .into_iter()
        .map(|(s, z)| OraclePrime {
            prime: MonomialPrime(VertexSet::from_mask(s)),
            witness: Monomial::new(z),
        })
        .collect();
    out.sort_by_key(|p| p.prime);
    Ok(out)
}

pub fn ass_oracle(ideal: &MonomialIdeal, expbound: u32) -> Result<Vec<OraclePrime>> {
    ass_oracle_with_limit(ideal, expbound, DEFAULT_MAX_SPACE)
}

/// Associated primes of `(I^∨)^k` for `k` in `1..=3` through the colon
/// oracle at exponent bound `k`.
pub fn ass_dual_power(h: &Hypergraph, k: u32) -> Result<AssProfile> {
    ass_dual_power_with_limit(h, k, DEFAULT_MAX_SPACE)
}

pub fn ass_dual_power_with_limit(h: &Hypergraph, k: u32, limit: u128) -> Result<AssProfile> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "power must be 1, 2 or 3, got {k}"
        )));
    }
    guard(
        "colon oracle box",
        lattice_size(k as u128 + 1, h.n()),
        limit,
    )?;
    let ideal = dual_power_ordinary(h, k)?;
    let found = ass_oracle_with_limit(&ideal, k, limit)?;
    let mut minimal = Vec::new();
    let mut embedded = Vec::new();
    for p in found {
        if h.has_edge(p.prime.variables()) {
            minimal.push(p.prime);
        } else {
            embedded.push(WitnessedPrime {
                prime: p.prime,
                witness: Some(p.witness.into()),
            });
        }
    }
    Ok(AssProfile {
        power: k,
        minimal,
        embedded,
    })
}

/// Associated primes of the dual square of a graph, read off from its edges
/// and its induced odd cycles. No witnesses are attached.
pub fn graph_ass_criterion(g: &Hypergraph) -> Result<AssProfile> {
    if g.m() != 2 {
        return Err(Error::WrongUniformity {
            expected: 2,
            actual: g.m(),
        });
    }
    let embedded = g
        .induced_odd_cycles()?
        .into_iter()
        .map(|c| WitnessedPrime {
            prime: MonomialPrime(c),
            witness: None,
        })
        .collect();
    Ok(AssProfile {
        power: 2,
        minimal: minimal_primes(g),
        embedded,
    })
}

/// Decides whether `prime` is associated to `(I^∨)^2` by looking only at the
/// subhypergraph induced on its variables.
///
/// On the induced subhypergraph `H'` with vertex set `P`, the prime on all of
/// `P` needs a witness whose bumps all split, which forces a 0/1 vector; it
/// is extended to `H` by setting 2 on every vertex outside `P`. Errors when
/// `2^|P|` exceeds the default scan guard.
pub fn is_prime_associated(
    h: &Hypergraph,
    prime: &MonomialPrime,
) -> Result<(bool, Option<CoverVector>)> {
    let p = prime.variables();
    if !p.is_subset(h.vertices()) {
        return Err(Error::InvalidArgument(format!(
            "prime variables {:?} exceed 1..={}",
            p.to_vec(),
            h.n()
        )));
    }
    let q = p.len();
    if q < h.m() {
        return Ok((false, None));
    }
    if q == h.m() {
        return Ok((h.has_edge(p), None));
    }
    guard(
        "induced witness scan",
        lattice_size(2, q),
        DEFAULT_MAX_SPACE,
    )?;
    let induced = h.induced(p)?;
    if induced.is_empty() {
        return Ok((false, None));
    }
    let sub = induced.to_hypergraph()?;
    let d = Decomposer::new(&sub);
    let all = sub.vertices().mask();
    // Ascending order of reversed bit patterns is lexicographic order on
    // 0/1 vectors; scan all and keep the least.
    let best = (0..=all)
        .into_par_iter()
        .filter(|&support| {
            d.is_two_cover(support, 0)
                && !d.splits(support, 0)
                && bump_set(&d, all, support, 0) == all
        })
        .map(|support| vector_from_masks(q, support, 0))
        .min();
    Ok(match best {
        None => (false, None),
        Some(local) => {
            let mut full = vec![2u32; h.n()];
            for (i, &v) in induced.vertices.iter().enumerate() {
                full[v - 1] = local.entries()[i];
            }
            (true, Some(CoverVector::new(full)))
        }
    })
}

/// Re-checks a reported embedded prime from its witness alone: the witness is
/// a 2-cover that does not split, exactly the prime's variables split when
/// bumped, and bumping everything else by 2 still does not split.
pub fn verify_witness(h: &Hypergraph, wp: &WitnessedPrime) -> bool {
    let Some(c) = &wp.witness else {
        return false;
    };
    if c.len() != h.n() {
        return false;
    }
    let d = Decomposer::new(h);
    let all = h.vertices().mask();
    let support = c.support().mask();
    let twos = c.at_least(2).mask();
    certified_prime(&d, all, support, twos) == Some(wp.prime.variables().mask())
}
