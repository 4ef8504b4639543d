//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails its check or its time limit.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hgstate::boolfn::{evaluate_anf, MonomialSet};
use hgstate::entanglement::{alternating_trace, product_overlap, ProductOverlapOptions};
use hgstate::orbits::{class_inequivalence_report, local_pauli_orbit, OrbitKey};
use hgstate::rng::{self, SeededRng};
use hgstate::statesim::{Ckz, LocalPauli, Operator};
use hgstate::sweep::{connected_graph_e2, extraction_mismatches, stabilization_sweep, uniqueness_sweep};
use hgstate::{
    build_state, classify_balance, extract_fast, extract_layered, genuine_multipartite_geometric, mobius_transform,
    Balance, ComplexState, Exec, Hypergraph, Pauli, SignState, StateVector, TruthTable, VertexSet,
};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

type Verdict = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn(Exec) -> Verdict,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "five-ket table extracts to {1},{2,3},{1,2,3} and rebuilds",
        limit: Some(Duration::from_millis(1)),
        run: five_ket,
    },
    Criterion {
        id: 2,
        name: "single 3-edge: extraction, E2 = 0.25, three cuts at 0.75",
        limit: Some(Duration::from_millis(10)),
        run: single_edge,
    },
    Criterion {
        id: 3,
        name: "distinct sign vectors at n = 2, 3 are 8 and 128",
        limit: Some(Duration::from_secs(1)),
        run: counting,
    },
    Criterion {
        id: 4,
        name: "stabilization sweep n = 3 exhaustive, n = 10 random",
        limit: Some(Duration::from_secs(30)),
        run: stabilization,
    },
    Criterion {
        id: 5,
        name: "eigenspace uniqueness n = 3 exhaustive, n = 8 random",
        limit: Some(Duration::from_secs(30)),
        run: uniqueness,
    },
    Criterion {
        id: 6,
        name: "no local-Pauli equivalence across uniform classes, n = 3, 4",
        limit: Some(Duration::from_secs(60)),
        run: orbits,
    },
    Criterion {
        id: 7,
        name: "connected graph states at n = 3, 4 have E2 >= 1/2",
        limit: Some(Duration::from_secs(10)),
        run: graph_bound,
    },
    Criterion {
        id: 8,
        name: "layered and fast extraction agree",
        limit: Some(Duration::from_secs(30)),
        run: oracle_equivalence,
    },
    Criterion {
        id: 9,
        name: "parity and balance laws at n = 3",
        limit: Some(Duration::from_secs(5)),
        run: parity_balance,
    },
    Criterion { id: 10, name: "module invariants under three seeds", limit: None, run: properties },
];

fn main() {
    let exec = Exec::default();
    let mut failures = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let verdict = (c.run)(exec);
        let elapsed = start.elapsed();
        let late = c.limit.is_some_and(|l| elapsed > l);
        let limit = c.limit.map_or("none".to_string(), |l| format!("{l:?}"));
        let (status, detail) = match (&verdict, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {:>2} {status} {} [{elapsed:.2?}, limit {limit}] {detail}", c.id, c.name);
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: hgstate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn graph(n: usize, edges: &[&[usize]]) -> Result<Hypergraph, String> {
    lift(Hypergraph::from_lists(n, edges))
}

fn five_ket(_: Exec) -> Verdict {
    let tt = lift(TruthTable::from_kets(3, &["011", "100", "101", "110", "111"]))?;
    let h = lift(extract_layered(&tt))?;
    let rebuilt = lift(build_state(&h))?;
    check(h == graph(3, &[&[1], &[2, 3], &[1, 2, 3]])?, || format!("extracted {h}"))?;
    check(rebuilt.signs() == &tt, || "rebuilt signs differ".into())?;
    Ok(format!("edges {h}"))
}

fn single_edge(exec: Exec) -> Verdict {
    let tt = lift(TruthTable::from_hex("80", 3))?;
    let h = lift(extract_layered(&tt))?;
    check(h == graph(3, &[&[1, 2, 3]])?, || format!("extracted {h}"))?;
    let report = lift(genuine_multipartite_geometric(&lift(build_state(&h))?.into(), exec))?;
    check((report.e2 - 0.25).abs() <= 1e-9, || format!("E2 = {}", report.e2))?;
    check(report.cuts.len() == 3, || format!("{} cuts", report.cuts.len()))?;
    for c in &report.cuts {
        check((c.lambda_max - 0.75).abs() <= 1e-10, || format!("cut {} lambda {}", c.subset, c.lambda_max))?;
    }
    Ok(format!("E2 = {}", report.e2))
}

fn counting(_: Exec) -> Verdict {
    let mut counts = Vec::new();
    for (n, want) in [(2usize, 8usize), (3, 128)] {
        let distinct: BTreeSet<TruthTable> = Hypergraph::all(n)
            .map(|h| build_state(&h).map(SignState::into_signs))
            .collect::<hgstate::Result<_>>()
            .map_err(|e| e.to_string())?;
        check(distinct.len() == want && want == 1 << ((1 << n) - 1), || format!("n = {n}: {}", distinct.len()))?;
        counts.push(distinct.len());
    }
    Ok(format!("{counts:?}"))
}

fn random_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<Hypergraph>, String> {
    let mut r = rng::seeded(seed);
    (0..count).map(|_| lift(Hypergraph::random(n, &mut r))).collect()
}

fn stabilization(exec: Exec) -> Verdict {
    let mut graphs: Vec<Hypergraph> = Hypergraph::all(3).collect();
    graphs.extend(random_graphs(10, 500, rng::DEFAULT_SEED)?);
    let s = lift(stabilization_sweep(&graphs, 10, rng::DEFAULT_SEED, exec))?;
    check(s.all_pass(), || format!("{s:?}"))?;
    Ok(format!(
        "{} graphs stabilized, {} commutators, max residual {}",
        s.stabilized, s.commutator_evaluations, s.max_commutator_residual
    ))
}

fn uniqueness(exec: Exec) -> Verdict {
    let mut graphs: Vec<Hypergraph> = Hypergraph::all(3).collect();
    graphs.extend(random_graphs(8, 50, rng::DEFAULT_SEED)?);
    let passed = lift(uniqueness_sweep(&graphs, rng::DEFAULT_SEED, exec))?;
    check(passed == graphs.len(), || format!("{passed} of {} unique", graphs.len()))?;
    Ok(format!("{passed} of {} rank one", graphs.len()))
}

fn orbits(exec: Exec) -> Verdict {
    let mut detail = Vec::new();
    for n in [3, 4] {
        let report = lift(class_inequivalence_report(n, exec))?;
        check(report.total_violations() == 0, || format!("n = {n}: {} violations", report.total_violations()))?;
        detail.push(format!("n = {n}: {} pairs, 0 violations", report.pairs.len()));
    }
    Ok(detail.join("; "))
}

fn graph_bound(exec: Exec) -> Verdict {
    let mut min = f64::INFINITY;
    let mut total = 0;
    for n in [3, 4] {
        for (g, e2) in lift(connected_graph_e2(n, exec))? {
            check(e2 >= 0.5 - 1e-10, || format!("{g}: E2 = {e2}"))?;
            min = min.min(e2);
            total += 1;
        }
    }
    let contrast =
        lift(genuine_multipartite_geometric(&lift(build_state(&graph(3, &[&[1, 2, 3]])?))?.into(), exec))?.e2;
    check(contrast < 0.5, || format!("single 3-edge E2 = {contrast}"))?;
    Ok(format!("{total} graphs, min E2 {min}; single 3-edge {contrast}"))
}

fn normalized(mut tt: TruthTable) -> TruthTable {
    if tt.get(0) {
        tt = tt.complement();
    }
    tt
}

fn oracle_equivalence(exec: Exec) -> Verdict {
    let mut tables: Vec<TruthTable> =
        (0..128u32).map(|w| lift(TruthTable::from_fn(3, |x| (w << 1) >> x & 1 == 1))).collect::<Result<_, _>>()?;
    let mut r = rng::seeded(rng::DEFAULT_SEED);
    for j in 0..10_000 {
        let mut tt = lift(TruthTable::random(j % 12 + 1, &mut r))?;
        tt.set(0, false);
        tables.push(tt);
    }
    let bad = lift(extraction_mismatches(&tables, exec))?;
    check(bad.is_empty(), || format!("mismatch on tables {bad:?}"))?;
    Ok(format!("{} tables", tables.len()))
}

fn parity_balance(_: Exec) -> Verdict {
    let full = VertexSet::full(3);
    let (mut normalized_count, mut balanced) = (0, BTreeSet::new());
    for w in 0..256u32 {
        let tt = lift(TruthTable::from_fn(3, |x| w >> x & 1 == 1))?;
        let report = classify_balance(&tt);
        let norm = normalized(tt.clone());
        let h = lift(extract_fast(&norm))?;
        if !tt.get(0) {
            normalized_count += 1;
            let odd = tt.count_ones() % 2 == 1;
            check(h.contains_edge(full) == odd && report.full_edge == odd, || {
                format!("parity fails on {}", tt.to_hex())
            })?;
        }
        if report.balance == Balance::Balanced {
            check(!h.contains_edge(full), || format!("balanced {} has the full edge", tt.to_hex()))?;
            balanced.insert(norm);
        }
    }
    check(normalized_count == 128 && balanced.len() == 35, || format!("{normalized_count} / {}", balanced.len()))?;
    Ok(format!("{normalized_count} tables for parity, {} balanced", balanced.len()))
}

// Criterion 10: the invariants of every module, each run as a property
// under several fixed runner seeds.

const PROPERTY_SEEDS: [u64; 3] = [42, 1729, 2_718_281_828];
const CASES: u32 = 32;

type Property = fn(usize, &mut SeededRng) -> Result<(), TestCaseError>;

const PROPERTIES: &[(&str, usize, usize, Property)] = &[
    ("boolfn: Moebius involution", 1, 16, mobius_involution),
    ("boolfn: ANF consistency and constant term", 1, 12, anf_consistency),
    ("hypergraph: text round trip", 1, 10, text_round_trip),
    ("hypergraph: toggle involution and neighbourhood size", 1, 10, toggle_and_neighbourhood),
    ("statesim: toggle equals gate application", 1, 10, toggle_is_gate),
    ("statesim: signs follow the edge polynomial", 1, 10, signs_follow_anf),
    ("statesim: diagonal gates commute", 1, 8, gates_commute),
    ("statesim: X conjugation of C^kZ", 2, 6, x_conjugation),
    ("extract: bijection, oracle agreement, parity", 1, 12, extract_laws),
    // A balanced one-qubit table has one minus sign, so the law starts at n = 2.
    ("extract: balanced tables lack the full edge", 2, 10, balanced_law),
    ("entanglement: relabeling and local Pauli invariance", 2, 7, e2_invariance),
    ("entanglement: product overlap bound and monotone sweeps", 2, 5, product_overlap_laws),
    ("orbits: membership symmetry and local Z", 2, 3, orbit_laws),
];

fn properties(_: Exec) -> Verdict {
    let mut cases = 0;
    for &seed in &PROPERTY_SEEDS {
        for (j, &(name, lo, hi, prop)) in PROPERTIES.iter().enumerate() {
            // A runner stops generating once it has passed `cases` cases,
            // so each property gets a fresh one.
            let mut bytes = [0u8; 32];
            bytes[..8].copy_from_slice(&seed.to_le_bytes());
            bytes[8..16].copy_from_slice(&(j as u64).to_le_bytes());
            let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
            let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes));
            let count = std::cell::Cell::new(0usize);
            runner
                .run(&(lo..=hi, any::<u64>()), |(n, s)| {
                    count.set(count.get() + 1);
                    prop(n, &mut rng::seeded(s))
                })
                .map_err(|e| format!("{name} (seed {seed}): {e}"))?;
            let count = count.get();
            check(count >= CASES as usize, || format!("{name} (seed {seed}): only {count} cases ran"))?;
            cases += count;
        }
    }
    Ok(format!("{} properties x {} seeds, {cases} cases", PROPERTIES.len(), PROPERTY_SEEDS.len()))
}

fn ok<T>(r: hgstate::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn random_edge(n: usize, r: &mut SeededRng) -> VertexSet {
    VertexSet::from_mask(r.random_range(1..1u32 << n))
}

fn mobius_involution(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let tt = ok(TruthTable::random(n, r))?;
    let mut twice = tt.clone();
    twice.mobius_in_place();
    twice.mobius_in_place();
    prop_assert_eq!(twice, tt);
    Ok(())
}

fn anf_consistency(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let tt = ok(TruthTable::random(n, r))?;
    let ms = mobius_transform(&tt);
    prop_assert_eq!(ms.constant, tt.get(0));
    for _ in 0..64 {
        let x = r.random_range(0..tt.len());
        prop_assert_eq!(ok(evaluate_anf(&ms, x))?, tt.get(x));
    }
    Ok(())
}

fn text_round_trip(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    prop_assert_eq!(ok(Hypergraph::parse(&h.to_text()))?, h);
    Ok(())
}

fn toggle_and_neighbourhood(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    let e = random_edge(n, r);
    prop_assert_eq!(ok(ok(h.toggle_edge(e))?.toggle_edge(e))?, h.clone());
    for i in 1..=n {
        let containing = h.edges().iter().filter(|e| e.contains(i)).count();
        prop_assert_eq!(ok(h.neighbourhood(i))?.len(), containing);
    }
    Ok(())
}

fn toggle_is_gate(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    let e = random_edge(n, r);
    prop_assert_eq!(ok(build_state(&ok(h.toggle_edge(e))?))?, ok(ok(build_state(&h))?.apply_ckz(e))?);
    Ok(())
}

fn signs_follow_anf(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    let s = ok(build_state(&h))?;
    let poly = MonomialSet::new(n, h.edges().iter().copied(), false);
    for _ in 0..128 {
        let x = r.random_range(0..1usize << n);
        let want = if ok(poly.evaluate(x))? { -1.0 } else { 1.0 };
        prop_assert!((s.amplitude(x).re * s.magnitude().recip() - want).abs() < 1e-12);
    }
    Ok(())
}

fn gates_commute(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    let mut gates: Vec<VertexSet> = h.edges().iter().copied().collect();
    gates.shuffle(r);
    let mut s = ok(SignState::plus(n))?;
    for e in gates {
        s = ok(s.apply_ckz(e))?;
    }
    prop_assert_eq!(s, ok(build_state(&h))?);
    Ok(())
}

fn x_conjugation(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let psi = ok(ComplexState::random(n, r))?;
    let e = random_edge(n, r);
    let members: Vec<usize> = e.vertices().collect();
    let i = members[r.random_range(0..members.len())];
    let x = LocalPauli(i, Pauli::X);
    let lhs = ok(x.apply_complex(&ok(Ckz(e).apply_complex(&ok(x.apply_complex(&psi))?))?))?;
    let mut rhs = ok(Ckz(e).apply_complex(&psi))?;
    let rest = e.without(i);
    if rest.is_empty() {
        rhs = ok(ComplexState::new(n, rhs.amps().iter().map(|a| -a).collect()))?;
    } else {
        rhs = ok(Ckz(rest).apply_complex(&rhs))?;
    }
    prop_assert_eq!(lhs.amps(), rhs.amps());
    Ok(())
}

fn extract_laws(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let mut tt = ok(TruthTable::random(n, r))?;
    tt.set(0, false);
    let h = ok(extract_fast(&tt))?;
    prop_assert_eq!(ok(extract_layered(&tt))?, h.clone());
    let s = ok(build_state(&h))?;
    prop_assert_eq!(s.signs(), &tt);
    prop_assert_eq!(ok(extract_fast(s.signs()))?, h.clone());
    prop_assert_eq!(h.contains_edge(VertexSet::full(n)), tt.count_ones() % 2 == 1);
    Ok(())
}

fn balanced_law(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let mut labels: Vec<usize> = (0..1 << n).collect();
    labels.shuffle(r);
    let ones: BTreeSet<usize> = labels[..labels.len() / 2].iter().copied().collect();
    let tt = normalized(ok(TruthTable::from_fn(n, |x| ones.contains(&x)))?);
    prop_assert_eq!(classify_balance(&tt).balance, Balance::Balanced);
    prop_assert!(!ok(extract_fast(&tt))?.contains_edge(VertexSet::full(n)));
    Ok(())
}

fn e2_invariance(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let h = ok(Hypergraph::random(n, r))?;
    let s = ok(build_state(&h))?;
    let base = ok(genuine_multipartite_geometric(&s.clone().into(), Exec::Sequential))?;
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(r);
    let relabeled = ok(build_state(&ok(h.relabel(&perm))?))?;
    let e2 = ok(genuine_multipartite_geometric(&relabeled.into(), Exec::Sequential))?.e2;
    prop_assert!((e2 - base.e2).abs() <= 1e-10);
    let i = r.random_range(1..=n);
    for p in [Pauli::Z, Pauli::X] {
        let moved: StateVector = ok(s.apply_local_pauli(i, p))?.into();
        let report = ok(genuine_multipartite_geometric(&moved, Exec::Sequential))?;
        prop_assert!((report.e2 - base.e2).abs() <= 1e-10);
        for (a, b) in report.cuts.iter().zip(&base.cuts) {
            prop_assert_eq!(a.subset, b.subset);
            prop_assert!((a.lambda_max - b.lambda_max).abs() <= 1e-10);
        }
    }
    Ok(())
}

fn random_site(r: &mut SeededRng) -> [Complex64; 2] {
    let v: [f64; 4] = std::array::from_fn(|_| r.sample(StandardNormal));
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    [Complex64::new(v[0] / norm, v[1] / norm), Complex64::new(v[2] / norm, v[3] / norm)]
}

fn product_overlap_laws(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let s: StateVector = ok(build_state(&ok(Hypergraph::random(n, r))?))?.into();
    let lambda_star = ok(genuine_multipartite_geometric(&s, Exec::Sequential))?.lambda_star;
    let opts = ProductOverlapOptions { restarts: 4, sweeps: 50, tol: 1e-12 };
    let best = product_overlap(&s, &opts, r.random(), Exec::Sequential);
    prop_assert!(best <= lambda_star + 1e-9);
    let init: Vec<[Complex64; 2]> = (0..n).map(|_| random_site(r)).collect();
    let trace = alternating_trace(s.to_complex().amps(), &init, 50, 1e-12);
    for w in trace.windows(2) {
        prop_assert!(w[1] >= w[0] - 1e-12);
    }
    Ok(())
}

fn random_pauli_product(s: &SignState, r: &mut SeededRng) -> Result<SignState, TestCaseError> {
    let mut out = s.clone();
    for i in 1..=s.n() {
        match r.random_range(0..4) {
            0 => {}
            k => out = ok(out.apply_local_pauli(i, [Pauli::X, Pauli::Y, Pauli::Z][k - 1]))?,
        }
    }
    Ok(out)
}

fn orbit_laws(n: usize, r: &mut SeededRng) -> Result<(), TestCaseError> {
    let s = ok(build_state(&ok(Hypergraph::random(n, r))?))?;
    let t = if r.random() { random_pauli_product(&s, r)? } else { ok(build_state(&ok(Hypergraph::random(n, r))?))? };
    let (os, ot) = (ok(local_pauli_orbit(&s))?, ok(local_pauli_orbit(&t))?);
    prop_assert_eq!(os.contains(&OrbitKey::of(&t)), ot.contains(&OrbitKey::of(&s)));

    let h = ok(extract_fast(s.signs()))?;
    let mut z = s.clone();
    for i in (1..=n).filter(|_| r.random::<bool>()) {
        z = ok(z.apply_local_pauli(i, Pauli::Z))?;
    }
    let hz = ok(extract_fast(z.signs()))?;
    let higher = |g: &Hypergraph| g.edges().iter().filter(|e| e.len() >= 2).copied().collect::<Vec<_>>();
    prop_assert_eq!(higher(&hz), higher(&h));
    Ok(())
}
