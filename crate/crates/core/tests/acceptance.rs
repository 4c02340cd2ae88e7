//! End-to-end acceptance checks.
//!
//! Runs without the libtest harness so that every criterion prints exactly
//! one PASS/FAIL line, even on success. All comparisons are exact set
//! equalities or boolean identities; there are no numeric tolerances. The
//! process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use hyperdual::ass::{ass_dual_power, ass_oracle, ass_square, graph_ass_criterion, MonomialPrime};
use hyperdual::audit::{
    balance_implication, expbound_stability, finite_certification, independent_sets_match,
    naive_two_split, truncation_invariance,
};
use hyperdual::cover::{decompose_into_one_covers, embedded_free_by_independent_sets, Decomposer};
use hyperdual::hypergraph::{complete, connected_family, construct_t2, third_power_gap_example};
use hyperdual::ideal::{
    dual_power_ordinary, dual_power_symbolic, edge_ideal, Monomial, MonomialIdeal,
};
use hyperdual::rng::{corpus, CorpusSpec};
use hyperdual::{CoverVector, Hypergraph, VertexSet};

type Outcome = Result<String, String>;

fn oracle_primes(h: &Hypergraph, k: u32) -> Vec<MonomialPrime> {
    let ideal = dual_power_ordinary(h, k).expect("dual power");
    ass_oracle(&ideal, k)
        .expect("oracle")
        .into_iter()
        .map(|p| p.prime)
        .collect()
}

fn maximal_prime(n: usize) -> MonomialPrime {
    MonomialPrime::new(VertexSet::full(n)).unwrap()
}

/// Seed-1 corpus with `n <= 7`, `m` in {2,3}, `1 <= e <= 8`.
fn mixed_corpus() -> Vec<Hypergraph> {
    let spec = CorpusSpec {
        uniformities: vec![2, 3],
        max_n: 7,
        max_edges: 8,
    };
    corpus(&spec, 1, 200)
        .unwrap()
        .into_iter()
        .map(|i| i.hypergraph)
        .collect()
}

/// Seed-1 corpus of graphs on at most 8 vertices with any edge count.
fn graph_corpus() -> Vec<Hypergraph> {
    let spec = CorpusSpec {
        uniformities: vec![2],
        max_n: 8,
        max_edges: 28,
    };
    corpus(&spec, 1, 200)
        .unwrap()
        .into_iter()
        .map(|i| i.hypergraph)
        .collect()
}

fn families_contain_maximal_prime() -> Outcome {
    for n in [3, 5, 6, 7, 8, 9, 10, 11, 12, 13] {
        let h = construct_t2(n).map_err(|e| e.to_string())?;
        let criterion = ass_square(&h).map_err(|e| e.to_string())?.primes();
        if !criterion.contains(&maximal_prime(n)) {
            return Err(format!("n = {n}: no height-{n} prime in {criterion:?}"));
        }
        let oracle = oracle_primes(&h, 2);
        if criterion != oracle {
            return Err(format!(
                "n = {n}: criterion {criterion:?} != oracle {oracle:?}"
            ));
        }
    }
    Ok("10 family sizes, maximal prime present, criterion = oracle".into())
}

fn connected_constructions() -> Outcome {
    let cases = [
        (3, 3, 5),
        (3, 4, 6),
        (3, 5, 7),
        (4, 4, 6),
        (4, 5, 7),
        (4, 6, 8),
        (5, 5, 7),
        (5, 6, 9),
    ];
    for (m, q, n) in cases {
        let (h, target) = connected_family(m, q, n).map_err(|e| e.to_string())?;
        if h.m() != m || h.n() != n || !h.is_connected() {
            return Err(format!(
                "({m},{q},{n}): got m = {}, n = {}, connected = {}",
                h.m(),
                h.n(),
                h.is_connected()
            ));
        }
        if target != VertexSet::full(q) {
            return Err(format!("({m},{q},{n}): target {target:?}"));
        }
        let criterion = ass_square(&h).map_err(|e| e.to_string())?.primes();
        let oracle = oracle_primes(&h, 2);
        let prime = MonomialPrime::new(target).unwrap();
        if !oracle.contains(&prime) || criterion != oracle {
            return Err(format!(
                "({m},{q},{n}): criterion {criterion:?}, oracle {oracle:?}"
            ));
        }
        if let Some(low) = oracle.iter().find(|p| p.height() < m) {
            return Err(format!("({m},{q},{n}): prime {low:?} below height {m}"));
        }
    }
    Ok("8 constructions connected, target prime oracle-confirmed, heights >= m".into())
}

fn criterion_vs_oracle_on_corpus(instances: &[Hypergraph]) -> Outcome {
    for (i, h) in instances.iter().enumerate() {
        let criterion = ass_square(h).map_err(|e| e.to_string())?.primes();
        let oracle = oracle_primes(h, 2);
        if criterion != oracle {
            return Err(format!("instance {i} {h:?}: {criterion:?} vs {oracle:?}"));
        }
    }
    Ok(format!(
        "{} instances, prime sets identical",
        instances.len()
    ))
}

fn independent_set_equivalence(instances: &[Hypergraph]) -> Outcome {
    let mut with_embedded = 0;
    for (i, h) in instances.iter().enumerate() {
        let profile = ass_square(h).map_err(|e| e.to_string())?;
        let check = independent_sets_match(h, &profile);
        if !check.passed {
            return Err(format!("instance {i} {h:?}: {:?}", check.detail));
        }
        with_embedded += !profile.embedded.is_empty() as usize;
    }
    Ok(format!(
        "{} instances ({with_embedded} with embedded primes)",
        instances.len()
    ))
}

fn graph_criteria(graphs: &[Hypergraph]) -> Outcome {
    let mut bipartite_count = 0;
    for (i, g) in graphs.iter().enumerate() {
        let profile = ass_square(g).map_err(|e| e.to_string())?;
        let bipartite = g.is_bipartite().map_err(|e| e.to_string())?.is_some();
        let ones = CoverVector::indicator(g.vertices(), g.n());
        let splits = Decomposer::new(g).splits_vector(&ones);
        let free = profile.embedded.is_empty();
        if bipartite != splits || splits != free {
            return Err(format!(
                "graph {i} {g:?}: bipartite {bipartite}, splits {splits}, free {free}"
            ));
        }
        let criterion = graph_ass_criterion(g).map_err(|e| e.to_string())?.primes();
        if criterion != profile.primes() {
            return Err(format!(
                "graph {i} {g:?}: odd-cycle criterion {criterion:?} vs {:?}",
                profile.primes()
            ));
        }
        bipartite_count += bipartite as usize;
    }
    Ok(format!(
        "{} graphs ({bipartite_count} bipartite), three-way and odd-cycle criterion agree",
        graphs.len()
    ))
}

/// Intersection of k-th powers of edge primes, computed here from scratch.
fn symbolic_by_prime_powers(h: &Hypergraph, k: u32) -> MonomialIdeal {
    let mut acc: Option<MonomialIdeal> = None;
    for e in h.edges() {
        let prime = MonomialIdeal::prime(VertexSet::from_iter(e.iter().copied()), h.n()).unwrap();
        let power = prime.power(k).unwrap();
        acc = Some(match acc {
            None => power,
            Some(a) => a.intersect(&power).unwrap(),
        });
    }
    acc.unwrap()
}

fn symbolic_routes() -> Outcome {
    let spec = CorpusSpec {
        uniformities: vec![2, 3],
        max_n: 6,
        max_edges: 8,
    };
    let instances = corpus(&spec, 1, 50).unwrap();
    for inst in &instances {
        let h = &inst.hypergraph;
        for k in 1..=3 {
            // dual_power_symbolic itself asserts its two routes agree.
            let symbolic = dual_power_symbolic(h, k).map_err(|e| e.to_string())?;
            if symbolic != symbolic_by_prime_powers(h, k) {
                return Err(format!(
                    "instance {} k = {k}: symbolic routes differ",
                    inst.index
                ));
            }
            let ordinary = dual_power_ordinary(h, k).map_err(|e| e.to_string())?;
            if !ordinary.is_subset_of(&symbolic).unwrap() {
                return Err(format!(
                    "instance {} k = {k}: ordinary not inside symbolic",
                    inst.index
                ));
            }
            if k == 1 && ordinary != symbolic {
                return Err(format!("instance {}: k = 1 powers differ", inst.index));
            }
        }
    }
    Ok(format!("{} instances, k = 1..3", instances.len()))
}

fn named_examples() -> Outcome {
    let a = Hypergraph::new(
        6,
        3,
        vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 1], vec![2, 3, 4]],
    )
    .unwrap();
    let (balanced, _) = a.is_balanced().map_err(|e| e.to_string())?;
    if balanced || !ass_square(&a).unwrap().embedded.is_empty() {
        return Err("(a) expected unbalanced and embedded-free".into());
    }

    let b = Hypergraph::new(6, 3, vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 1]]).unwrap();
    let ones = CoverVector::indicator(b.vertices(), 6);
    let splits = decompose_into_one_covers(&b, &ones, 2).unwrap().is_some();
    let embedded = ass_square(&b).unwrap().embedded_primes();
    if !splits || !embedded.contains(&maximal_prime(6)) {
        return Err(format!(
            "(b) all-ones splits {splits}, embedded {embedded:?}"
        ));
    }

    let c = complete(10, 3).unwrap();
    let ones = CoverVector::indicator(c.vertices(), 10);
    let fast = decompose_into_one_covers(&c, &ones, 2).unwrap();
    let naive = naive_two_split(&c, &ones);
    if fast.is_some() || naive {
        return Err(format!("(c) decomposer {fast:?}, naive {naive}"));
    }
    Ok("(a) unbalanced, embedded-free; (b) all-ones splits, maximal prime embedded; (c) all-ones does not split".into())
}

fn cube_beyond_square() -> Outcome {
    let mut parts = Vec::new();
    for (name, h) in [
        ("complete(5,2)", complete(5, 2).unwrap()),
        ("nine-vertex", third_power_gap_example()),
    ] {
        let square = ass_dual_power(&h, 2).map_err(|e| e.to_string())?.primes();
        let cube = ass_dual_power(&h, 3).map_err(|e| e.to_string())?.primes();
        let strict = square.iter().all(|p| cube.contains(p)) && cube.len() > square.len();
        if !strict {
            return Err(format!("{name}: square {square:?}, cube {cube:?}"));
        }
        parts.push(format!("{name}: {} -> {} primes", square.len(), cube.len()));
    }
    // The nine-vertex example is the edge ideal displayed with ten generators.
    if edge_ideal(&third_power_gap_example()).len() != 10 {
        return Err("nine-vertex example does not have 10 edges".into());
    }
    Ok(parts.join("; "))
}

fn balance_on_corpus(instances: &[Hypergraph]) -> Outcome {
    let mut balanced = 0;
    for (i, h) in instances.iter().enumerate() {
        let profile = ass_square(h).map_err(|e| e.to_string())?;
        let check = balance_implication(h, &profile).map_err(|e| e.to_string())?;
        if !check.passed {
            return Err(format!("instance {i} {h:?}: {:?}", check.detail));
        }
        if check.detail.is_some() {
            return Err(format!("instance {i}: balancedness scan skipped"));
        }
        balanced += h.is_balanced().unwrap().0 as usize;
    }
    Ok(format!(
        "{} instances ({balanced} balanced), implication holds",
        instances.len()
    ))
}

fn lattice_audits(instances: &[Hypergraph]) -> Outcome {
    let small: Vec<&Hypergraph> = instances.iter().filter(|h| h.n() <= 5).collect();
    if small.is_empty() {
        return Err("no instances with n <= 5".into());
    }
    for h in &small {
        for check in [
            truncation_invariance(h),
            finite_certification(h),
            expbound_stability(h),
        ] {
            let check = check.map_err(|e| e.to_string())?;
            if !check.passed {
                return Err(format!("{h:?}: {} failed: {:?}", check.name, check.detail));
            }
        }
    }
    Ok(format!("{} instances with n <= 5", small.len()))
}

fn spot_check_colon_identity() -> Outcome {
    // The maximal prime of the six-vertex family is the colon of the square
    // by the alternating cover.
    let h = construct_t2(6).unwrap();
    let sq = dual_power_ordinary(&h, 2).unwrap();
    let colon = sq.colon(&Monomial::new(vec![1, 0, 1, 0, 1, 0])).unwrap();
    if colon != MonomialIdeal::prime(VertexSet::full(6), 6).unwrap() {
        return Err(format!("colon was {colon:?}"));
    }
    if embedded_free_by_independent_sets(&h).0 {
        return Err("six-vertex family reported embedded-free".into());
    }
    Ok(String::new())
}

fn main() {
    let mixed = mixed_corpus();
    let graphs = graph_corpus();
    let all: Vec<Hypergraph> = mixed.iter().chain(&graphs).cloned().collect();

    type Criterion<'a> = (&'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "family square contains the maximal prime",
            Duration::from_secs(60),
            Box::new(families_contain_maximal_prime),
        ),
        (
            "connected constructions carry the target prime",
            Duration::from_secs(120),
            Box::new(connected_constructions),
        ),
        (
            "criterion equals oracle on the mixed corpus",
            Duration::from_secs(600),
            Box::new(|| criterion_vs_oracle_on_corpus(&mixed)),
        ),
        (
            "independent-set test equals embedded-freeness",
            Duration::from_secs(600),
            Box::new(|| independent_set_equivalence(&mixed)),
        ),
        (
            "graph three-way equivalence and odd-cycle criterion",
            Duration::from_secs(600),
            Box::new(|| graph_criteria(&graphs)),
        ),
        (
            "symbolic power routes agree, ordinary inside symbolic",
            Duration::from_secs(600),
            Box::new(symbolic_routes),
        ),
        (
            "named examples",
            Duration::from_secs(60),
            Box::new(|| named_examples().and_then(|m| spot_check_colon_identity().map(|_| m))),
        ),
        (
            "cube has primes beyond the square",
            Duration::from_secs(600),
            Box::new(cube_beyond_square),
        ),
        (
            "balanced implies embedded-free",
            Duration::from_secs(600),
            Box::new(|| balance_on_corpus(&all)),
        ),
        (
            "truncation, finite certification, exponent-bound stability",
            Duration::from_secs(600),
            Box::new(|| lattice_audits(&all)),
        ),
    ];

    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > *budget => {
                Err(format!("{msg}; took {elapsed:.1?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2}: PASS  {name} [{elapsed:.2?}] {msg}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} [{elapsed:.2?}] {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
