//! Batch verifications over many hypergraphs or tables.
//!
//! Item `j` of a sweep draws its randomness from stream `j` of the sweep
//! seed, so results do not depend on the [`Exec`] mode.

use crate::boolfn::TruthTable;
use crate::entanglement::genuine_multipartite_geometric;
use crate::extract::{extract_fast, extract_layered};
use crate::hypergraph::Hypergraph;
use crate::par::Exec;
use crate::rng;
use crate::statesim::{
    build_state, commutator_residual, stabilizers, uniqueness_check, verify_stabilized, CompiledStabilizer,
    ComplexState,
};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilizationSummary {
    pub graphs: usize,
    pub stabilized: usize,
    pub commutator_evaluations: usize,
    pub max_commutator_residual: f64,
}

impl StabilizationSummary {
    pub fn all_pass(&self) -> bool {
        self.stabilized == self.graphs && self.max_commutator_residual == 0.0
    }
}

/// Stabilization of every graph plus `[K_i, K_j]` residuals for every pair
/// `i < j` on `probes` random states per graph.
pub fn stabilization_sweep(
    graphs: &[Hypergraph],
    probes: usize,
    seed: u64,
    exec: Exec,
) -> Result<StabilizationSummary> {
    let per_graph = exec.map_range(graphs.len(), |j| -> Result<(bool, usize, f64)> {
        let h = &graphs[j];
        let ok = verify_stabilized(h)?;
        let ks = stabilizers(h).iter().map(|k| CompiledStabilizer::new(k, h.n())).collect::<Result<Vec<_>>>()?;
        let mut r = rng::stream(seed, j as u64);
        let (mut evals, mut worst) = (0usize, 0.0f64);
        for _ in 0..probes {
            let probe = ComplexState::random(h.n(), &mut r)?;
            for a in 0..ks.len() {
                for b in a + 1..ks.len() {
                    worst = worst.max(commutator_residual(&ks[a], &ks[b], &probe)?);
                    evals += 1;
                }
            }
        }
        Ok((ok, evals, worst))
    });
    let mut summary = StabilizationSummary {
        graphs: graphs.len(),
        stabilized: 0,
        commutator_evaluations: 0,
        max_commutator_residual: 0.0,
    };
    for item in per_graph {
        let (ok, evals, worst) = item?;
        summary.stabilized += ok as usize;
        summary.commutator_evaluations += evals;
        summary.max_commutator_residual = summary.max_commutator_residual.max(worst);
    }
    Ok(summary)
}

/// Number of graphs passing [`uniqueness_check`].
pub fn uniqueness_sweep(graphs: &[Hypergraph], seed: u64, exec: Exec) -> Result<usize> {
    let results = exec.map_range(graphs.len(), |j| uniqueness_check(&graphs[j], &mut rng::stream(seed, j as u64)));
    results.into_iter().try_fold(0, |acc, r| Ok(acc + r? as usize))
}

/// Indices of tables on which the layered and Möbius extractions differ.
pub fn extraction_mismatches(tables: &[TruthTable], exec: Exec) -> Result<Vec<usize>> {
    let results = exec.map(tables, |tt| Ok::<_, crate::Error>(extract_layered(tt)? != extract_fast(tt)?));
    let mut bad = Vec::new();
    for (j, r) in results.into_iter().enumerate() {
        if r? {
            bad.push(j);
        }
    }
    Ok(bad)
}

/// `E_2` of every connected 2-uniform graph state on `n` vertices.
pub fn connected_graph_e2(n: usize, exec: Exec) -> Result<Vec<(Hypergraph, f64)>> {
    let graphs: Vec<Hypergraph> = Hypergraph::all_uniform(n, 2).filter(|g| g.is_connected()).collect();
    let values = exec.map(&graphs, |g| {
        let s = build_state(g)?.into();
        Ok::<_, crate::Error>(genuine_multipartite_geometric(&s, Exec::Sequential)?.e2)
    });
    graphs.into_iter().zip(values).map(|(g, v)| Ok((g, v?))).collect()
}
