//! Local-Pauli orbits of hypergraph states.
//!
//! Local Paulis map a REW state to another REW state times a phase in
//! `{1, i, -1, -i}`, so an orbit is a set of sign tables once the global
//! phase is quotiented out. Comparing orbits of k-uniform states across
//! different `k` checks that the uniformity classes stay disjoint.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::boolfn::TruthTable;
use crate::hypergraph::Hypergraph;
use crate::par::Exec;
use crate::statesim::{build_state, Pauli, SignState};
use crate::{Error, Result};

pub const MAX_ORBIT_QUBITS: usize = 4;

/// Sign table of a REW state up to global phase, normalized to a plus sign
/// on `|0...0>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitKey(TruthTable);

impl OrbitKey {
    pub fn of(s: &SignState) -> Self {
        OrbitKey(s.normalized_signs())
    }

    pub fn signs(&self) -> &TruthTable {
        &self.0
    }
}

/// Keys of `P_1 (x) ... (x) P_n |s>` over all `4^n` products with
/// `P_i` in `{I, X, Y, Z}`.
pub fn local_pauli_orbit(s: &SignState) -> Result<BTreeSet<OrbitKey>> {
    let n = s.n();
    if n > MAX_ORBIT_QUBITS {
        return Err(Error::QubitCount { n, max: MAX_ORBIT_QUBITS });
    }
    let paulis = [None, Some(Pauli::X), Some(Pauli::Y), Some(Pauli::Z)];
    let mut orbit = BTreeSet::new();
    for choice in 0..1usize << (2 * n) {
        let mut t = s.clone();
        for i in 1..=n {
            if let Some(p) = paulis[choice >> (2 * (i - 1)) & 3] {
                t.pauli_mut(i, p);
            }
        }
        orbit.insert(OrbitKey::of(&t));
    }
    Ok(orbit)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassStats {
    pub k: usize,
    /// Nonempty k-uniform hypergraph states.
    pub states: usize,
    pub min_orbit: usize,
    pub max_orbit: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub source: Hypergraph,
    pub target: Hypergraph,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairStats {
    pub k: usize,
    pub k_prime: usize,
    pub sources: usize,
    pub targets: usize,
    /// Nonempty `G_k` states whose orbit contains a nonempty `G_k'` state.
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InequivalenceReport {
    pub n: usize,
    pub classes: Vec<ClassStats>,
    pub pairs: Vec<PairStats>,
}

impl InequivalenceReport {
    pub fn total_violations(&self) -> usize {
        self.pairs.iter().map(|p| p.violations.len()).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for c in &self.classes {
            writeln!(out, "class {} states {} orbit_min {} orbit_max {}", c.k, c.states, c.min_orbit, c.max_orbit)
                .unwrap();
        }
        for p in &self.pairs {
            writeln!(
                out,
                "pair {} {} sources {} targets {} violations {}",
                p.k,
                p.k_prime,
                p.sources,
                p.targets,
                p.violations.len()
            )
            .unwrap();
            for v in &p.violations {
                writeln!(out, "violation {} -> {}", v.source, v.target).unwrap();
            }
        }
        writeln!(out, "violations {}", self.total_violations()).unwrap();
        out
    }
}

/// Exhaustively checks that no local Pauli product maps a nonempty k-uniform
/// hypergraph state onto a nonempty k'-uniform one for `k != k'`.
pub fn class_inequivalence_report(n: usize, exec: Exec) -> Result<InequivalenceReport> {
    if !(2..=MAX_ORBIT_QUBITS).contains(&n) {
        return Err(Error::QubitCount { n, max: MAX_ORBIT_QUBITS });
    }
    let classes: Vec<Vec<Hypergraph>> = (1..=n).map(|k| Hypergraph::all_uniform(n, k).skip(1).collect()).collect();

    let mut members: BTreeMap<OrbitKey, (usize, Hypergraph)> = BTreeMap::new();
    for (ki, class) in classes.iter().enumerate() {
        for h in class {
            members.insert(OrbitKey::of(&build_state(h)?), (ki + 1, h.clone()));
        }
    }

    let mut class_stats = Vec::new();
    let mut pairs: BTreeMap<(usize, usize), Vec<Violation>> = BTreeMap::new();
    for (ki, class) in classes.iter().enumerate() {
        let k = ki + 1;
        let orbits = exec.map(class, |h| build_state(h).and_then(|s| local_pauli_orbit(&s)));
        let mut sizes = Vec::with_capacity(class.len());
        for (h, orbit) in class.iter().zip(orbits) {
            let orbit = orbit?;
            sizes.push(orbit.len());
            for key in &orbit {
                if let Some((k2, target)) = members.get(key) {
                    if *k2 != k {
                        pairs
                            .entry((k, *k2))
                            .or_default()
                            .push(Violation { source: h.clone(), target: target.clone() });
                    }
                }
            }
        }
        class_stats.push(ClassStats {
            k,
            states: class.len(),
            min_orbit: sizes.iter().copied().min().unwrap_or(0),
            max_orbit: sizes.iter().copied().max().unwrap_or(0),
        });
    }

    let mut pair_stats = Vec::new();
    for k in 1..=n {
        for k_prime in (1..=n).filter(|&kp| kp != k) {
            pair_stats.push(PairStats {
                k,
                k_prime,
                sources: classes[k - 1].len(),
                targets: classes[k_prime - 1].len(),
                violations: pairs.remove(&(k, k_prime)).unwrap_or_default(),
            });
        }
    }
    Ok(InequivalenceReport { n, classes: class_stats, pairs: pair_stats })
}
