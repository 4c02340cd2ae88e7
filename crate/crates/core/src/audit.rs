//! Cross-checks between the independent computations in this crate.
//!
//! Each check returns a [`Check`] rather than panicking, so that batch
//! drivers can report the first disagreement with context. The brute-force
//! checks use [`naive_two_split`], which shares no code with
//! [`Decomposer`].

use serde::Serialize;

use crate::ass::{
    ass_oracle, ass_square_with_limit, graph_ass_criterion, minimal_primes, verify_witness,
    AssProfile, MonomialPrime,
};
use crate::cover::{
    cover_from_independent, embedded_free_by_independent_sets, is_k_cover,
    reduce_to_independent_cover, CoverVector, Decomposer,
};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::ideal::dual_power_ordinary;
use crate::{guard, lattice_size, DEFAULT_MAX_SPACE};

/// Largest `n` for which the brute-force lattice audits run.
pub const BRUTE_FORCE_MAX_N: usize = 5;

/// The outcome of one named check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check {
            name,
            passed: true,
            detail: None,
        }
    }

    fn from_bool(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        Check {
            name,
            passed,
            detail: (!passed).then(detail),
        }
    }

    fn skipped(name: &'static str, why: String) -> Self {
        Check {
            name,
            passed: true,
            detail: Some(format!("skipped: {why}")),
        }
    }
}

/// Whether `x` is a sum of two 1-covers, by trying every `0 <= b <= x`.
pub fn naive_two_split(h: &Hypergraph, x: &CoverVector) -> bool {
    let hits = |v: &[u32]| h.edges().iter().all(|e| e.iter().any(|&i| v[i - 1] > 0));
    let x = x.entries();
    if !hits(x) {
        return false;
    }
    let mut b = vec![0u32; x.len()];
    let mut rest = x.to_vec();
    loop {
        if hits(&b) && hits(&rest) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == b.len() {
                return false;
            }
            if b[i] < x[i] {
                b[i] += 1;
                rest[i] -= 1;
                break;
            }
            b[i] = 0;
            rest[i] = x[i];
            i += 1;
        }
    }
}

/// Calls `f` on every vector in `{0..=top}^n`.
fn for_each_in_box(n: usize, top: u32, mut f: impl FnMut(&[u32])) {
    let mut v = vec![0u32; n];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i] < top {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn brute_force_guard(h: &Hypergraph) -> Result<()> {
    if h.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "brute-force audit",
            size: h.n() as u128,
            limit: BRUTE_FORCE_MAX_N as u128,
        });
    }
    Ok(())
}

/// The cover-witness profile and the colon oracle at exponent bound 2 find
/// the same primes.
pub fn criterion_matches_oracle(h: &Hypergraph, profile: &AssProfile) -> Result<Check> {
    let ideal = dual_power_ordinary(h, 2)?;
    let oracle: Vec<MonomialPrime> = ass_oracle(&ideal, 2)?
        .into_iter()
        .map(|p| p.prime)
        .collect();
    let criterion = profile.primes();
    Ok(Check::from_bool(
        "criterion_vs_oracle",
        criterion == oracle,
        || format!("criterion {criterion:?}, oracle {oracle:?}"),
    ))
}

/// No embedded primes exactly when every independent-set cover splits.
pub fn independent_sets_match(h: &Hypergraph, profile: &AssProfile) -> Check {
    let (free, failing) = embedded_free_by_independent_sets(h);
    Check::from_bool(
        "independent_set_equivalence",
        free == profile.embedded.is_empty(),
        || {
            format!(
                "independent-set verdict {free} (failing set {failing:?}), embedded {:?}",
                profile.embedded_primes()
            )
        },
    )
}

/// For graphs: bipartite, all-ones splits, and no embedded primes coincide,
/// and the odd-cycle criterion reproduces the profile.
pub fn graph_checks(h: &Hypergraph, profile: &AssProfile) -> Result<Vec<Check>> {
    if h.m() != 2 {
        return Ok(Vec::new());
    }
    let bipartite = h.is_bipartite()?.is_some();
    let all_ones = CoverVector::indicator(h.vertices(), h.n());
    let ones_split = Decomposer::new(h).splits_vector(&all_ones);
    let free = profile.embedded.is_empty();
    let criterion = graph_ass_criterion(h)?.primes();
    let found = profile.primes();
    Ok(vec![
        Check::from_bool(
            "bipartite_three_way",
            bipartite == ones_split && ones_split == free,
            || format!("bipartite {bipartite}, all-ones splits {ones_split}, embedded-free {free}"),
        ),
        Check::from_bool("graph_criterion", criterion == found, || {
            format!("odd-cycle criterion {criterion:?}, profile {found:?}")
        }),
    ])
}

/// Balanced hypergraphs have no embedded primes. Passes vacuously when the
/// balancedness scan is over its size guard.
pub fn balance_implication(h: &Hypergraph, profile: &AssProfile) -> Result<Check> {
    const NAME: &str = "balanced_implies_embedded_free";
    match h.is_balanced() {
        Ok((balanced, _)) => Ok(Check::from_bool(
            NAME,
            !balanced || profile.embedded.is_empty(),
            || format!("balanced but embedded {:?}", profile.embedded_primes()),
        )),
        Err(Error::GuardExceeded { size, limit, .. }) => Ok(Check::skipped(
            NAME,
            format!("balancedness scan size {size} over {limit}"),
        )),
        Err(e) => Err(e),
    }
}

/// Every embedded prime carries a witness that re-verifies on its own.
pub fn witnesses_valid(h: &Hypergraph, profile: &AssProfile) -> Check {
    let bad: Vec<_> = profile
        .embedded
        .iter()
        .filter(|w| !verify_witness(h, w))
        .collect();
    Check::from_bool("witness_validity", bad.is_empty(), || {
        format!("invalid {bad:?}")
    })
}

/// Minimal primes are exactly the edges and no prime has height below `m`.
pub fn height_floor(h: &Hypergraph, profile: &AssProfile) -> Check {
    let low: Vec<_> = profile
        .primes()
        .into_iter()
        .filter(|p| p.height() < h.m())
        .collect();
    let minimal_ok = profile.minimal == minimal_primes(h);
    Check::from_bool("height_floor", low.is_empty() && minimal_ok, || {
        format!("below height m: {low:?}; minimal primes match edges: {minimal_ok}")
    })
}

/// Every independent-set cover is a 2-cover, and every 2-cover in
/// `{0,1,2}^n` is an independent-set cover plus a non-negative remainder.
pub fn independent_cover_properties(h: &Hypergraph) -> Result<Check> {
    const NAME: &str = "independent_cover_properties";
    guard(
        "independent-cover audit",
        lattice_size(3, h.n()),
        DEFAULT_MAX_SPACE,
    )?;
    for s in h.independent_sets() {
        let a = cover_from_independent(h, s)?;
        if !is_k_cover(h, &a, 2)? {
            return Ok(Check::from_bool(NAME, false, || {
                format!("cover {a:?} of independent set {s:?} is not a 2-cover")
            }));
        }
    }
    let mut failure = None;
    for_each_in_box(h.n(), 2, |w| {
        if failure.is_some() {
            return;
        }
        let w = CoverVector::new(w.to_vec());
        if !is_k_cover(h, &w, 2).unwrap() {
            return;
        }
        match reduce_to_independent_cover(h, &w) {
            Ok((s, y)) => {
                let rebuilt = cover_from_independent(h, s).map(|a| a.add(&y));
                if !h.is_independent(s) || rebuilt.as_ref() != Ok(&w) {
                    failure = Some(format!("{w:?} reduced to {s:?} + {y:?}"));
                }
            }
            Err(e) => failure = Some(format!("{w:?}: {e}")),
        }
    });
    Ok(match failure {
        None => Check::pass(NAME),
        Some(detail) => Check::from_bool(NAME, false, || detail),
    })
}

/// On `{0..3}^n`: splitting depends only on the truncation at 2, and the
/// fast decomposer agrees with [`naive_two_split`]. Requires
/// `n <= BRUTE_FORCE_MAX_N`.
pub fn truncation_invariance(h: &Hypergraph) -> Result<Check> {
    const NAME: &str = "truncation_invariance";
    brute_force_guard(h)?;
    let d = Decomposer::new(h);
    let mut failure = None;
    for_each_in_box(h.n(), 3, |x| {
        if failure.is_some() {
            return;
        }
        let x = CoverVector::new(x.to_vec());
        let full = naive_two_split(h, &x);
        let truncated = naive_two_split(h, &x.truncated(2));
        let fast = d.splits_vector(&x);
        if full != truncated || full != fast {
            failure = Some(format!(
                "{x:?}: naive {full}, naive truncated {truncated}, decomposer {fast}"
            ));
        }
    });
    Ok(match failure {
        None => Check::pass(NAME),
        Some(detail) => Check::from_bool(NAME, false, || detail),
    })
}

/// For every non-splitting 2-cover `C` in `{0,1,2}^n` with non-empty bump
/// set `S`: `C + 2·1_{S^c}` fails to split exactly when `C + W` fails to
/// split for every `W` in `{0,1,2}^n` supported outside `S`. Requires
/// `n <= BRUTE_FORCE_MAX_N`.
pub fn finite_certification(h: &Hypergraph) -> Result<Check> {
    const NAME: &str = "finite_certification";
    brute_force_guard(h)?;
    let n = h.n();
    let mut failure = None;
    for_each_in_box(n, 2, |c| {
        if failure.is_some() {
            return;
        }
        let c = CoverVector::new(c.to_vec());
        if !is_k_cover(h, &c, 2).unwrap() || naive_two_split(h, &c) {
            return;
        }
        let s: Vec<bool> = (0..n)
            .map(|i| {
                let mut bumped = c.entries().to_vec();
                bumped[i] += 1;
                naive_two_split(h, &CoverVector::new(bumped))
            })
            .collect();
        if !s.contains(&true) {
            return;
        }
        let outside: Vec<usize> = (0..n).filter(|&i| !s[i]).collect();
        let mut single = c.entries().to_vec();
        for &i in &outside {
            single[i] += 2;
        }
        let single_check = !naive_two_split(h, &CoverVector::new(single));
        let mut all_check = true;
        for_each_in_box(outside.len(), 2, |w| {
            if !all_check {
                return;
            }
            let mut sum = c.entries().to_vec();
            for (&i, &a) in outside.iter().zip(w) {
                sum[i] += a;
            }
            if naive_two_split(h, &CoverVector::new(sum)) {
                all_check = false;
            }
        });
        if single_check != all_check {
            failure = Some(format!(
                "{c:?}: single check {single_check}, exhaustive check {all_check}"
            ));
        }
    });
    Ok(match failure {
        None => Check::pass(NAME),
        Some(detail) => Check::from_bool(NAME, false, || detail),
    })
}

/// The colon oracle finds the same primes at exponent bounds `k` and
/// `k + 1` for each `k` in `1..=3`.
pub fn expbound_stability(h: &Hypergraph) -> Result<Check> {
    const NAME: &str = "expbound_stability";
    for k in 1..=3 {
        let ideal = dual_power_ordinary(h, k)?;
        let at = |b| -> Result<Vec<MonomialPrime>> {
            Ok(ass_oracle(&ideal, b)?
                .into_iter()
                .map(|p| p.prime)
                .collect())
        };
        let (low, high) = (at(k)?, at(k + 1)?);
        if low != high {
            return Ok(Check::from_bool(NAME, false, || {
                format!(
                    "power {k}: bound {k} gives {low:?}, bound {} gives {high:?}",
                    k + 1
                )
            }));
        }
    }
    Ok(Check::pass(NAME))
}

/// All checks for one instance, with the cover-witness profile they share.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceAudit {
    pub profile: AssProfile,
    pub checks: Vec<Check>,
}

impl InstanceAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Runs every applicable check. The brute-force lattice checks are added
/// when `n <= BRUTE_FORCE_MAX_N`.
pub fn audit_instance(h: &Hypergraph, limit: u128) -> Result<InstanceAudit> {
    let profile = ass_square_with_limit(h, limit)?;
    let mut checks = vec![
        criterion_matches_oracle(h, &profile)?,
        independent_sets_match(h, &profile),
    ];
    checks.extend(graph_checks(h, &profile)?);
    checks.push(balance_implication(h, &profile)?);
    checks.push(witnesses_valid(h, &profile));
    checks.push(height_floor(h, &profile));
    checks.push(independent_cover_properties(h)?);
    if h.n() <= BRUTE_FORCE_MAX_N {
        checks.push(truncation_invariance(h)?);
        checks.push(finite_certification(h)?);
        checks.push(expbound_stability(h)?);
    }
    Ok(InstanceAudit { profile, checks })
}
