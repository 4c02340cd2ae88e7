//! The five subcommands. Each writes canonical JSON (or a script) and
//! reports failures through [`CliError`].

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use hyperdual::ass::{
    ass_dual_power_with_limit, ass_oracle_with_limit, ass_square_with_limit, AssProfile,
    MonomialPrime, WitnessedPrime,
};
use hyperdual::audit::{
    audit_instance, graph_checks, height_floor, independent_sets_match, witnesses_valid, Check,
};
use hyperdual::cover::{embedded_free_by_independent_sets, Decomposer};
use hyperdual::hypergraph::{complete, connected_family, construct_t2, UnbalancedWitness};
use hyperdual::ideal::{dual_power_ordinary, dual_power_symbolic_with_limit, macaulay2_script};
use hyperdual::rng::{corpus, CorpusSpec};
use hyperdual::{CoverVector, Error, Hypergraph, Monomial, MonomialIdeal, VertexSet};

use crate::{AnalyzeArgs, ConstructArgs, DifftestArgs, ExportArgs, Family, OracleArgs};

#[derive(Debug)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    Input(String),
    /// Two computation routes disagreed.
    Disagreement(String),
    Library(Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Disagreement(msg) => write!(f, "disagreement: {msg}"),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: Option<&Path>) -> CliResult<String> {
    match path {
        None => Err(CliError::Input("--input is required".into())),
        Some(p) if p == Path::new("-") => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
            Ok(text)
        }
        Some(p) => fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", p.display()))),
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    let mut text = text.to_owned();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Input(format!("writing {}: {e}", p.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("writing stdout: {e}"))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

fn read_hypergraph(path: Option<&Path>) -> CliResult<Hypergraph> {
    Ok(Hypergraph::from_json(&read_input(path)?)?)
}

#[derive(Serialize)]
struct Agreement {
    independent_sets: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph_criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bipartite_three_way: Option<bool>,
    witnesses_valid: bool,
    height_floor: bool,
}

#[derive(Serialize)]
struct Summary {
    connected: bool,
    /// `null` when the balancedness scan is over its size guard.
    balanced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unbalanced_witness: Option<UnbalancedWitness>,
    /// Present for graphs only.
    #[serde(skip_serializing_if = "Option::is_none")]
    bipartite: Option<bool>,
    all_ones_splits: bool,
    embedded_free_by_independent_sets: bool,
    failing_independent_set: Option<VertexSet>,
    agreement: Agreement,
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    hypergraph: &'a Hypergraph,
    profile: &'a AssProfile,
    summary: Summary,
}

pub fn analyze(args: &AnalyzeArgs) -> CliResult<()> {
    let limit = args.guard.limit();
    let h = read_hypergraph(args.io.input.as_deref())?;
    let profile = ass_square_with_limit(&h, limit)?;

    let (balanced, unbalanced_witness) = match h.is_balanced() {
        Ok((b, w)) => (Some(b), w),
        Err(Error::GuardExceeded { .. }) => (None, None),
        Err(e) => return Err(e.into()),
    };
    let bipartite = if h.m() == 2 {
        Some(h.is_bipartite()?.is_some())
    } else {
        None
    };
    let (free, failing) = embedded_free_by_independent_sets(&h);
    let all_ones = CoverVector::indicator(h.vertices(), h.n());

    let independent = independent_sets_match(&h, &profile);
    let graph = graph_checks(&h, &profile)?;
    let find = |name: &str| graph.iter().find(|c| c.name == name).map(|c| c.passed);
    let witnesses = witnesses_valid(&h, &profile);
    let heights = height_floor(&h, &profile);
    let failed: Vec<&Check> = [&independent, &witnesses, &heights]
        .into_iter()
        .chain(graph.iter())
        .filter(|c| !c.passed)
        .collect();

    let report = AnalyzeReport {
        hypergraph: &h,
        profile: &profile,
        summary: Summary {
            connected: h.is_connected(),
            balanced,
            unbalanced_witness,
            bipartite,
            all_ones_splits: Decomposer::new(&h).splits_vector(&all_ones),
            embedded_free_by_independent_sets: free,
            failing_independent_set: failing,
            agreement: Agreement {
                independent_sets: independent.passed,
                graph_criterion: find("graph_criterion"),
                bipartite_three_way: find("bipartite_three_way"),
                witnesses_valid: witnesses.passed,
                height_floor: heights.passed,
            },
        },
    };
    write_output(args.io.output.as_ref(), &to_json(&report))?;
    match failed.first() {
        None => Ok(()),
        Some(c) => Err(CliError::Disagreement(format!(
            "{}: {}",
            c.name,
            c.detail.clone().unwrap_or_default()
        ))),
    }
}

#[derive(Serialize)]
struct Constructed<'a> {
    #[serde(flatten)]
    hypergraph: &'a Hypergraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_prime: Option<VertexSet>,
}

fn require(value: Option<usize>, flag: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Input(format!("--{flag} is required")))
}

pub fn construct(args: &ConstructArgs) -> CliResult<()> {
    let f = &args.family;
    let (h, target) = match f.family {
        Some(Family::T2) => {
            let n = require(f.n, "n")?;
            (construct_t2(n)?, Some(VertexSet::full(n)))
        }
        Some(Family::Complete) => (complete(require(f.n, "n")?, require(f.m, "m")?)?, None),
        None => {
            let (m, q, n) = (
                require(f.m, "m")?,
                require(args.q, "q")?,
                require(f.n, "n")?,
            );
            let (h, target) = connected_family(m, q, n)?;
            (h, Some(target))
        }
    };
    let out = Constructed {
        hypergraph: &h,
        target_prime: target,
    };
    write_output(args.output.as_ref(), &to_json(&out))
}

#[derive(Serialize)]
struct HypergraphOracleReport {
    input: &'static str,
    power: u32,
    expbound: u32,
    profile: AssProfile,
    ordinary_equals_symbolic: bool,
}

#[derive(Serialize)]
struct OracleEntry {
    prime: MonomialPrime,
    witness: Monomial,
}

#[derive(Serialize)]
struct IdealOracleReport {
    input: &'static str,
    expbound: u32,
    primes: Vec<OracleEntry>,
}

pub fn oracle(args: &OracleArgs) -> CliResult<()> {
    let limit = args.guard.limit();
    let text = read_input(args.io.input.as_deref())?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))?;

    let report = if value.get("generators").is_some() {
        let ideal = MonomialIdeal::from_json(&text)?;
        let expbound = args.expbound.unwrap_or_else(|| ideal.max_exponent().max(1));
        let primes = ass_oracle_with_limit(&ideal, expbound, limit)?
            .into_iter()
            .map(|p| OracleEntry {
                prime: p.prime,
                witness: p.witness,
            })
            .collect();
        to_json(&IdealOracleReport {
            input: "ideal",
            expbound,
            primes,
        })
    } else if value.get("edges").is_some() {
        let h = Hypergraph::from_json(&text)?;
        let k = args.power;
        let expbound = args.expbound.unwrap_or(k);
        let profile = if expbound == k {
            ass_dual_power_with_limit(&h, k, limit)?
        } else {
            let reference = ass_dual_power_with_limit(&h, k, limit)?;
            let ideal = dual_power_ordinary(&h, k)?;
            let found = ass_oracle_with_limit(&ideal, expbound, limit)?;
            let (minimal, embedded): (Vec<_>, Vec<_>) = found
                .into_iter()
                .partition(|p| h.has_edge(p.prime.variables()));
            let profile = AssProfile {
                power: k,
                minimal: minimal.into_iter().map(|p| p.prime).collect(),
                embedded: embedded
                    .into_iter()
                    .map(|p| WitnessedPrime {
                        prime: p.prime,
                        witness: Some(p.witness.into()),
                    })
                    .collect(),
            };
            if profile.primes() != reference.primes() {
                return Err(CliError::Disagreement(format!(
                    "exponent bound {expbound} finds {:?}, bound {k} finds {:?}",
                    profile.primes(),
                    reference.primes()
                )));
            }
            profile
        };
        let ordinary = dual_power_ordinary(&h, k)?;
        let symbolic = dual_power_symbolic_with_limit(&h, k, limit)?;
        to_json(&HypergraphOracleReport {
            input: "hypergraph",
            power: k,
            expbound,
            profile,
            ordinary_equals_symbolic: ordinary == symbolic,
        })
    } else {
        return Err(CliError::Input(
            "input must be a hypergraph ({n, m, edges}) or an ideal ({n, generators})".into(),
        ));
    };
    write_output(args.io.output.as_ref(), &report)
}

#[derive(Serialize)]
struct Verdict<'a> {
    index: usize,
    seed: Option<u64>,
    hypergraph: &'a Hypergraph,
    passed: bool,
    embedded: Vec<MonomialPrime>,
    checks: &'a [Check],
}

pub fn difftest(args: &DifftestArgs) -> CliResult<()> {
    let limit = args.guard.limit();
    let instances: Vec<(Option<u64>, Hypergraph)> = if let Some(path) = &args.input {
        vec![(None, read_hypergraph(Some(path))?)]
    } else if let Some(family) = args.family {
        let h = match family {
            Family::T2 => construct_t2(args.n)?,
            Family::Complete => {
                let m = match args.m.as_slice() {
                    [m] => *m,
                    _ => {
                        return Err(CliError::Input(
                            "--family complete needs exactly one --m".into(),
                        ))
                    }
                };
                complete(args.n, m)?
            }
        };
        vec![(None, h)]
    } else {
        if args.trials == 0 {
            return Err(CliError::Input("--trials must be at least 1".into()));
        }
        let spec = CorpusSpec {
            uniformities: if args.m.is_empty() {
                vec![2, 3]
            } else {
                args.m.clone()
            },
            max_n: args.n,
            max_edges: args.edges,
        };
        corpus(&spec, args.seed, args.trials)?
            .into_iter()
            .map(|i| (Some(i.seed), i.hypergraph))
            .collect()
    };

    let mut lines = String::new();
    let mut first_failure = None;
    for (index, (seed, h)) in instances.iter().enumerate() {
        let audit = audit_instance(h, limit)?;
        let verdict = Verdict {
            index,
            seed: *seed,
            hypergraph: h,
            passed: audit.passed(),
            embedded: audit.profile.embedded_primes(),
            checks: &audit.checks,
        };
        lines.push_str(&to_json(&verdict));
        lines.push('\n');
        if first_failure.is_none() {
            if let Some(c) = audit.first_failure() {
                first_failure = Some(format!(
                    "instance {index} {}: {} ({})",
                    h.to_json(),
                    c.name,
                    c.detail.clone().unwrap_or_default()
                ));
            }
        }
    }
    write_output(args.output.as_ref(), &lines)?;
    match first_failure {
        None => {
            eprintln!(
                "difftest: {} instance(s), all checks agree",
                instances.len()
            );
            Ok(())
        }
        Some(msg) => Err(CliError::Disagreement(msg)),
    }
}

pub fn export(args: &ExportArgs) -> CliResult<()> {
    if args.power == 0 {
        return Err(CliError::Input("--power must be at least 1".into()));
    }
    let h = read_hypergraph(args.io.input.as_deref())?;
    write_output(args.io.output.as_ref(), &macaulay2_script(&h, args.power))
}
