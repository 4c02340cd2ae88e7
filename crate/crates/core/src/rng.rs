//! Reproducible random hypergraphs.
//!
//! Corpora must come out identical in any implementation, so the generator
//! is fixed and spelled out here rather than borrowed from a crate whose
//! stream may change between versions.
//!
//! **Seeding.** The seed is passed through one SplitMix64 step:
//!
//! ```text
//! z = seed + 0x9E3779B97F4A7C15
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! state = z ^ (z >> 31)            (replaced by 0x9E3779B97F4A7C15 if 0)
//! ```
//!
//! **Stream.** xorshift64* (all arithmetic wrapping mod 2^64):
//!
//! ```text
//! x ^= x >> 12; x ^= x << 25; x ^= x >> 27; state = x
//! output = x * 0x2545F4914F6CDD1D
//! ```
//!
//! **Bounded draws.** `below(b)` rejects outputs `>= 2^64 - 1 - ((2^64 - 1) mod b)`
//! and returns the accepted output `mod b`.
//!
//! **Edge sampling.** The `C(n, m)` candidate edges are ranked in
//! lexicographic order. Floyd's algorithm picks `e` distinct ranks: for
//! `j` from `C - e` to `C - 1`, draw `t = below(j + 1)` and insert `t`, or
//! `j` when `t` was already chosen.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// xorshift64* seeded through SplitMix64.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(GOLDEN_GAMMA);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64Star {
            state: if z == 0 { GOLDEN_GAMMA } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform draw from `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let limit = u64::MAX - u64::MAX % bound;
        loop {
            let r = self.next_u64();
            if r < limit {
                return r % bound;
            }
        }
    }
}

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// The `rank`-th m-subset of `1..=n` in lexicographic order.
fn unrank_combination(n: usize, m: usize, mut rank: u64) -> Vec<usize> {
    let mut combo = Vec::with_capacity(m);
    let mut x = 1;
    while combo.len() < m {
        let remaining = m - combo.len();
        let block = binomial(n - x, remaining - 1).unwrap();
        if rank < block {
            combo.push(x);
        } else {
            rank -= block;
        }
        x += 1;
    }
    combo
}

/// `e` distinct m-edges on `n` vertices, drawn uniformly without replacement.
pub fn random_hypergraph(n: usize, m: usize, e: usize, seed: u64) -> Result<Hypergraph> {
    if n < m || m < 2 {
        return Err(Error::InvalidArgument(format!(
            "need n >= m >= 2, got n = {n}, m = {m}"
        )));
    }
    let total =
        binomial(n, m).ok_or_else(|| Error::InvalidArgument(format!("C({n}, {m}) overflows")))?;
    if e == 0 || e as u64 > total {
        return Err(Error::InvalidArgument(format!(
            "edge count {e} outside 1..={total}"
        )));
    }
    let mut rng = XorShift64Star::new(seed);
    let mut ranks = BTreeSet::new();
    for j in total - e as u64..total {
        let t = rng.below(j + 1);
        if !ranks.insert(t) {
            ranks.insert(j);
        }
    }
    let edges = ranks
        .into_iter()
        .map(|r| unrank_combination(n, m, r))
        .collect();
    Hypergraph::new(n, m, edges)
}

/// Shape of a random corpus.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    /// Uniformities to draw from, uniformly.
    pub uniformities: Vec<usize>,
    pub max_n: usize,
    pub max_edges: usize,
}

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub index: usize,
    pub seed: u64,
    pub hypergraph: Hypergraph,
}

/// Draws `trials` instances from one master stream.
///
/// Per instance: `m` from `uniformities`, then `n = m + below(max_n - m + 1)`,
/// `e = 1 + below(min(max_edges, C(n, m)))`, then a fresh 64-bit seed handed
/// to [`random_hypergraph`].
pub fn corpus(spec: &CorpusSpec, seed: u64, trials: usize) -> Result<Vec<CorpusInstance>> {
    if spec.uniformities.is_empty() || spec.max_edges == 0 {
        return Err(Error::InvalidArgument(
            "corpus needs uniformities and max_edges >= 1".into(),
        ));
    }
    if let Some(&m) = spec.uniformities.iter().find(|&&m| m < 2 || m > spec.max_n) {
        return Err(Error::InvalidArgument(format!(
            "uniformity {m} incompatible with max_n = {}",
            spec.max_n
        )));
    }
    let mut rng = XorShift64Star::new(seed);
    (0..trials)
        .map(|index| {
            let m = spec.uniformities[rng.below(spec.uniformities.len() as u64) as usize];
            let n = m + rng.below((spec.max_n - m + 1) as u64) as usize;
            let cap = binomial(n, m)
                .unwrap_or(u64::MAX)
                .min(spec.max_edges as u64);
            let e = 1 + rng.below(cap) as usize;
            let instance_seed = rng.next_u64();
            Ok(CorpusInstance {
                index,
                seed: instance_seed,
                hypergraph: random_hypergraph(n, m, e, instance_seed)?,
            })
        })
        .collect()
}
