//! Golden suite of worked examples. Output is byte-identical for a given seed.

use std::fmt::Write as _;

use hgstate::entanglement::genuine_multipartite_geometric;
use hgstate::extract::{classify_balance, extract_fast, extract_layered};
use hgstate::hypergraph::{count_states, CountMode, VertexSet};
use hgstate::orbits::class_inequivalence_report;
use hgstate::statesim::{build_state, stabilizer, uniqueness_check};
use hgstate::{rng, Balance, Exec, Hypergraph, Result, StateVector, TruthTable};

type Check = fn(u64, Exec) -> Result<bool>;

const CHECKS: &[(&str, Check)] = &[
    ("single 3-edge: extraction gives {1,2,3}", single_edge_extract),
    ("single 3-edge: E2 = 1/4, every cut 3/4", single_edge_e2),
    ("five-ket table: extraction gives {1},{2,3},{1,2,3}", five_ket_extract),
    ("five-ket table: rebuild reproduces signs", five_ket_rebuild),
    ("balanced variant drops the full edge", balanced_variant),
    ("seven-vertex stabilizer K_4", seven_vertex_stabilizer),
    ("seven-vertex state is unique in the K_i eigenspace", seven_vertex_unique),
    ("counting: 8 and 128 distinct states at n = 2, 3", counting),
    ("orbit report n = 3 has no violations", orbit_n3),
    ("triangle graph state: E2 = 1/2", triangle_e2),
];

pub fn run(seed: u64, exec: Exec) -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    for (name, check) in CHECKS {
        let verdict = match check(seed, exec) {
            Ok(true) => "PASS".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        ok &= verdict == "PASS";
        writeln!(out, "{verdict} {name}").unwrap();
    }
    writeln!(out, "{}", if ok { "all passed" } else { "failures" }).unwrap();
    (out, ok)
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn five_ket_table() -> Result<TruthTable> {
    TruthTable::from_kets(3, &["011", "100", "101", "110", "111"])
}

fn mixed3() -> Result<Hypergraph> {
    Hypergraph::from_lists(3, &[&[1], &[2, 3], &[1, 2, 3]])
}

fn single_edge_extract(_: u64, _: Exec) -> Result<bool> {
    let tt = TruthTable::from_hex("80", 3)?;
    Ok(extract_layered(&tt)? == Hypergraph::from_lists(3, &[&[1, 2, 3]])?)
}

fn single_edge_e2(_: u64, exec: Exec) -> Result<bool> {
    let s = build_state(&Hypergraph::from_lists(3, &[&[1, 2, 3]])?)?;
    let r = genuine_multipartite_geometric(&s.into(), exec)?;
    Ok(close(r.e2, 0.25, 1e-9) && r.cuts.len() == 3 && r.cuts.iter().all(|c| close(c.lambda_max, 0.75, 1e-10)))
}

fn five_ket_extract(_: u64, _: Exec) -> Result<bool> {
    let tt = five_ket_table()?;
    let want = mixed3()?;
    Ok(extract_layered(&tt)? == want && extract_fast(&tt)? == want)
}

fn five_ket_rebuild(_: u64, _: Exec) -> Result<bool> {
    let tt = five_ket_table()?;
    Ok(build_state(&extract_fast(&tt)?)?.signs() == &tt)
}

fn balanced_variant(_: u64, _: Exec) -> Result<bool> {
    let tt = TruthTable::from_hex("6A", 3)?;
    let report = classify_balance(&tt);
    let h = extract_fast(&tt)?;
    Ok(report.balance == Balance::Balanced && !report.full_edge && !h.contains_edge(VertexSet::full(3)))
}

fn seven_vertex() -> Result<Hypergraph> {
    Hypergraph::from_lists(7, &[&[6], &[1, 4], &[2, 3, 4, 5], &[1, 2, 3, 4, 5, 6, 7]])
}

fn seven_vertex_stabilizer(_: u64, _: Exec) -> Result<bool> {
    let h = seven_vertex()?;
    let k = stabilizer(&h, 4)?;
    let s = build_state(&h)?;
    Ok(k.describe() == "K_4 = X_4 Z_1 C^3Z_{2,3,5} C^6Z_{1,2,3,5,6,7}" && k.apply_sign(&s)? == s)
}

fn seven_vertex_unique(seed: u64, _: Exec) -> Result<bool> {
    uniqueness_check(&seven_vertex()?, &mut rng::seeded(seed))
}

fn counting(_: u64, _: Exec) -> Result<bool> {
    for (n, want) in [(2usize, 8u32), (3, 128)] {
        let states: std::collections::BTreeSet<String> =
            Hypergraph::all(n).map(|h| build_state(&h).map(|s| s.signs().to_hex())).collect::<Result<_>>()?;
        if states.len() != want as usize || count_states(n, CountMode::All)? != want.into() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn orbit_n3(_: u64, exec: Exec) -> Result<bool> {
    Ok(class_inequivalence_report(3, exec)?.total_violations() == 0)
}

fn triangle_e2(_: u64, exec: Exec) -> Result<bool> {
    let s: StateVector = build_state(&Hypergraph::from_lists(3, &[&[1, 2], &[1, 3], &[2, 3]])?)?.into();
    Ok(close(genuine_multipartite_geometric(&s, exec)?.e2, 0.5, 1e-10))
}
