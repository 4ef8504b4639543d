//! Genuine multipartite geometric entanglement of pure states.
//!
//! The largest squared overlap of `|s>` with a pure state that is a product
//! across a fixed cut `A | B` equals the largest eigenvalue of `rho_A`. Taking
//! the maximum over all cuts gives `lambda*`, and `E_2 = 1 - lambda*`.

use std::fmt::Write as _;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::hypergraph::VertexSet;
use crate::par::Exec;
use crate::rng;
use crate::statesim::{SignState, StateVector};
use crate::{Error, Result};

pub const MAX_BIPARTITION_QUBITS: usize = 12;

/// Hermiticity tolerance accepted by [`lambda_max`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Reduced density operator. Real when the state is a REW state.
#[derive(Debug, Clone, PartialEq)]
pub enum DensityMatrix {
    Real(DMatrix<f64>),
    Complex(DMatrix<Complex64>),
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        match self {
            DensityMatrix::Real(m) => m.nrows(),
            DensityMatrix::Complex(m) => m.nrows(),
        }
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        match self {
            DensityMatrix::Real(m) => Complex64::new(m[(r, c)], 0.0),
            DensityMatrix::Complex(m) => m[(r, c)],
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.entry(i, i)).sum()
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        match self {
            DensityMatrix::Real(m) => m.map(|v| Complex64::new(v, 0.0)),
            DensityMatrix::Complex(m) => m.clone(),
        }
    }
}

/// Spreads the low bits of `local` onto the bit positions listed in `positions`.
fn scatter(local: usize, positions: &[usize]) -> usize {
    positions.iter().enumerate().fold(0, |acc, (j, &p)| acc | ((local >> j & 1) << p))
}

fn positions(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|b| mask >> b & 1 == 1).collect()
}

fn check_subset(a: VertexSet, n: usize) -> Result<()> {
    if a.is_empty() || a.len() >= n || a.max_vertex() > n {
        Err(Error::Subset(format!("{a} is not a proper nonempty subset of 1..={n}")))
    } else {
        Ok(())
    }
}

/// `rho_A = Tr_{not A} |s><s|`. Row/column index bit `j` refers to the
/// `j`-th smallest vertex of `A`.
pub fn reduced_density(s: &StateVector, a: VertexSet) -> Result<DensityMatrix> {
    let n = s.n();
    check_subset(a, n)?;
    let keep = positions(a.mask(), n);
    let trace = positions(!a.mask() & ((1 << n) - 1), n);
    let (da, db) = (1usize << keep.len(), 1usize << trace.len());
    let index = |i: usize, j: usize| scatter(i, &keep) | scatter(j, &trace);
    match s {
        StateVector::Sign(sign) => Ok(DensityMatrix::Real(real_density(sign, da, db, index))),
        StateVector::Complex(c) => {
            let psi = DMatrix::from_fn(da, db, |i, j| c.amps()[index(i, j)]);
            Ok(DensityMatrix::Complex(&psi * psi.adjoint()))
        }
    }
}

// Entries are integer sign sums scaled by 2^-n, so they are exact in f64.
// A global phase cancels in |s><s|.
fn real_density(s: &SignState, da: usize, db: usize, index: impl Fn(usize, usize) -> usize) -> DMatrix<f64> {
    let signs = DMatrix::from_fn(da, db, |i, j| if s.signs().get(index(i, j)) { -1i64 } else { 1 });
    let scale = (s.signs().len() as f64).recip();
    DMatrix::from_fn(da, da, |r, c| {
        let dot: i64 = (0..db).map(|j| signs[(r, j)] * signs[(c, j)]).sum();
        dot as f64 * scale
    })
}

/// Largest eigenvalue of a Hermitian matrix.
pub fn lambda_max(m: &DensityMatrix) -> Result<f64> {
    let values = match m {
        DensityMatrix::Real(r) => {
            let dev = (r - r.transpose()).amax();
            if dev > HERMITIAN_TOL {
                return Err(Error::NonHermitian(dev));
            }
            SymmetricEigen::new(r.clone()).eigenvalues
        }
        DensityMatrix::Complex(c) => {
            let dev = (c - c.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if dev > HERMITIAN_TOL {
                return Err(Error::NonHermitian(dev));
            }
            SymmetricEigen::new(c.clone()).eigenvalues
        }
    };
    Ok(values.iter().copied().fold(f64::NEG_INFINITY, f64::max))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutRecord {
    /// The side with at most `n/2` vertices; for even `n` and equal halves,
    /// the side without vertex `n`.
    pub subset: VertexSet,
    pub lambda_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BipartitionReport {
    pub n: usize,
    pub cuts: Vec<CutRecord>,
    pub lambda_star: f64,
    pub e2: f64,
}

/// Fixed-precision float with trailing zeros trimmed, so exact values such
/// as `0.25` print as written.
pub fn format_float(v: f64) -> String {
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

impl BipartitionReport {
    /// Lines `cut <A-mask> lambda <float>`, then `E2 <float>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cuts {
            writeln!(out, "cut {} lambda {}", c.subset.mask(), format_float(c.lambda_max)).unwrap();
        }
        writeln!(out, "E2 {}", format_float(self.e2)).unwrap();
        out
    }
}

/// `E_2 = 1 - max_A lambda_max(rho_A)` over all `2^(n-1) - 1` bipartitions.
pub fn genuine_multipartite_geometric(s: &StateVector, exec: Exec) -> Result<BipartitionReport> {
    let n = s.n();
    if !(2..=MAX_BIPARTITION_QUBITS).contains(&n) {
        return Err(Error::QubitCount { n, max: MAX_BIPARTITION_QUBITS });
    }
    let full = (1u32 << n) - 1;
    let mut sides: Vec<VertexSet> = (1u32..1 << (n - 1))
        .map(|c| if 2 * c.count_ones() as usize <= n { c } else { full & !c })
        .map(VertexSet::from_mask)
        .collect();
    sides.sort_by_key(|v| v.mask());
    let lambdas = exec.map(&sides, |&a| reduced_density(s, a).and_then(|rho| lambda_max(&rho)));
    let cuts = sides
        .into_iter()
        .zip(lambdas)
        .map(|(subset, l)| Ok(CutRecord { subset, lambda_max: l? }))
        .collect::<Result<Vec<_>>>()?;
    let lambda_star = cuts.iter().map(|c| c.lambda_max).fold(f64::NEG_INFINITY, f64::max);
    Ok(BipartitionReport { n, cuts, lambda_star, e2: 1.0 - lambda_star })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductOverlapOptions {
    pub restarts: usize,
    pub sweeps: usize,
    /// A restart stops once a full sweep improves the overlap by less.
    pub tol: f64,
}

impl Default for ProductOverlapOptions {
    fn default() -> Self {
        ProductOverlapOptions { restarts: 32, sweeps: 200, tol: 1e-12 }
    }
}

type Site = [Complex64; 2];

fn random_site<R: Rng + ?Sized>(rng: &mut R) -> Site {
    let mut v = [0; 4].map(|_| rng.sample::<f64, _>(StandardNormal));
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
    [Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])]
}

/// `v[b] = sum_{x: x_i = b} psi(x) prod_{j != i} conj(phi_j[x_j])`.
fn environment(psi: &[Complex64], sites: &[Site], i: usize) -> Site {
    let n = sites.len();
    let mut t = psi.to_vec();
    // Contracting from the highest qubit down keeps every qubit below `j`
    // in place, so `j` sits at bit position `j` when its turn comes.
    for j in (0..n).rev().filter(|&j| j != i) {
        let low = (1usize << j) - 1;
        let half = t.len() / 2;
        let (c0, c1) = (sites[j][0].conj(), sites[j][1].conj());
        let next: Vec<Complex64> = (0..half)
            .map(|y| {
                let base = (y & low) | ((y & !low) << 1);
                c0 * t[base] + c1 * t[base | (1 << j)]
            })
            .collect();
        t = next;
    }
    [t[0], t[1]]
}

/// Overlap `|<phi_1 ... phi_n|psi>|^2` of a product state.
pub fn product_state_overlap(psi: &[Complex64], sites: &[Site]) -> f64 {
    psi.iter()
        .enumerate()
        .map(|(x, a)| {
            let w: Complex64 = sites.iter().enumerate().map(|(j, s)| s[x >> j & 1].conj()).product();
            w * a
        })
        .sum::<Complex64>()
        .norm_sqr()
}

/// One alternating-optimization run from `init`. Returns the overlap after
/// every single-site update, in order.
pub fn alternating_trace(psi: &[Complex64], init: &[Site], sweeps: usize, tol: f64) -> Vec<f64> {
    let mut sites = init.to_vec();
    let mut trace = vec![product_state_overlap(psi, &sites)];
    if sites.len() == 1 {
        let norm = (psi[0].norm_sqr() + psi[1].norm_sqr()).sqrt();
        trace.push(norm * norm);
        return trace;
    }
    for _ in 0..sweeps {
        let start = *trace.last().unwrap();
        for i in 0..sites.len() {
            let v = environment(psi, &sites, i);
            let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            if norm > 0.0 {
                sites[i] = [v[0] / norm, v[1] / norm];
            }
            trace.push(norm * norm);
        }
        if *trace.last().unwrap() - start < tol {
            break;
        }
    }
    trace
}

/// Best product-state overlap found by alternating single-site
/// optimization over `opts.restarts` random starts; a lower bound on the
/// true maximum. Restart `r` draws its start from stream `r` of `seed`.
pub fn product_overlap(s: &StateVector, opts: &ProductOverlapOptions, seed: u64, exec: Exec) -> f64 {
    let psi = s.to_complex().amps().to_vec();
    let n = s.n();
    let runs = exec.map_range(opts.restarts.max(1), |r| {
        let mut rng = rng::stream(seed, r as u64);
        let init: Vec<Site> = (0..n).map(|_| random_site(&mut rng)).collect();
        alternating_trace(&psi, &init, opts.sweeps, opts.tol).into_iter().fold(0.0, f64::max)
    });
    runs.into_iter().fold(0.0, f64::max)
}
