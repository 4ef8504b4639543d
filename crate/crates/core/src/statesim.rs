//! Dense state simulation for hypergraph states.
//!
//! Two amplitude backends are kept apart:
//!
//! * [`SignState`] stores a REW state exactly as a sign table plus a global
//!   phase `i^k`. Multi-controlled `Z` gates and local Paulis keep states in
//!   this form, so all stabilizer and orbit checks are bit-exact.
//! * [`ComplexState`] stores arbitrary complex amplitudes. It is used for
//!   random probes, projector checks and entanglement computations.
//!
//! Gates stream over basis labels with subset-mask tests; operator matrices
//! are never built.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::boolfn::{check_qubits, TruthTable};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::{Error, Result, AMP_TOL, NORM_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

/// Global phase `i^k`, `k` in `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn power(self) -> u8 {
        self.0
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

/// Iterates `mask | sub` over every submask `sub` of `free`, increasing.
fn for_each_superset(mask: usize, free: usize, mut f: impl FnMut(usize)) {
    let mut sub = 0usize;
    loop {
        f(mask | sub);
        if sub == free {
            break;
        }
        sub = sub.wrapping_sub(free) & free;
    }
}

fn check_edge_in(e: VertexSet, n: usize) -> Result<()> {
    if e.is_empty() {
        return Err(Error::EmptyEdge);
    }
    if e.max_vertex() > n {
        return Err(Error::Vertex { vertex: e.max_vertex(), n });
    }
    Ok(())
}

fn check_vertex_in(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::Vertex { vertex: i, n })
    } else {
        Ok(())
    }
}

fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

/// Exact REW state `phase * 2^{-n/2} sum_x (-1)^signs(x) |x>`.
///
/// Kept canonical with `signs(0) = 0`, the global sign living in `phase`, so
/// that `==` is equality of states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignState {
    signs: TruthTable,
    phase: Phase,
}

impl SignState {
    /// `|+>^n`.
    pub fn plus(n: usize) -> Result<Self> {
        Ok(SignState { signs: TruthTable::zero(n)?, phase: Phase::ONE })
    }

    /// The REW state `|f>` for the Boolean function tabulated by `signs`.
    pub fn from_signs(signs: TruthTable) -> Self {
        let mut s = SignState { signs, phase: Phase::ONE };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.signs.get(0) {
            self.signs = self.signs.complement();
            self.phase = self.phase * Phase::MINUS_ONE;
        }
    }

    pub fn n(&self) -> usize {
        self.signs.n()
    }

    pub fn signs(&self) -> &TruthTable {
        &self.signs
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// The same state multiplied by `phase`.
    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = self.phase * phase;
        self
    }

    pub fn into_signs(self) -> TruthTable {
        self.signs
    }

    /// Shared amplitude magnitude `2^{-n/2}`.
    pub fn magnitude(&self) -> f64 {
        (self.signs.len() as f64).sqrt().recip()
    }

    pub fn amplitude(&self, x: usize) -> Complex64 {
        let s = if self.signs.get(x) { -self.magnitude() } else { self.magnitude() };
        self.phase.to_complex() * s
    }

    /// Sign table with the global sign chosen so that `|0...0>` is positive.
    pub fn normalized_signs(&self) -> TruthTable {
        self.signs.clone()
    }

    pub(crate) fn ckz_mut(&mut self, e: VertexSet) {
        let free = (self.signs.len() - 1) & !e.mask();
        for_each_superset(e.mask(), free, |x| self.signs.flip(x));
    }

    pub(crate) fn pauli_mut(&mut self, i: usize, p: Pauli) {
        let bit = 1usize << (i - 1);
        match p {
            Pauli::Z => {
                for x in (0..self.signs.len()).filter(|x| x & bit != 0) {
                    self.signs.flip(x);
                }
            }
            Pauli::X => {
                for x in (0..self.signs.len()).filter(|x| x & bit == 0) {
                    let (a, b) = (self.signs.get(x), self.signs.get(x | bit));
                    self.signs.set(x, b);
                    self.signs.set(x | bit, a);
                }
                self.canonicalize();
            }
            Pauli::Y => {
                self.pauli_mut(i, Pauli::Z);
                self.pauli_mut(i, Pauli::X);
                self.phase = self.phase * Phase::I;
            }
        }
    }

    pub fn apply_ckz(&self, e: VertexSet) -> Result<SignState> {
        check_edge_in(e, self.n())?;
        let mut out = self.clone();
        out.ckz_mut(e);
        Ok(out)
    }

    pub fn apply_local_pauli(&self, i: usize, p: Pauli) -> Result<SignState> {
        check_vertex_in(i, self.n())?;
        let mut out = self.clone();
        out.pauli_mut(i, p);
        Ok(out)
    }

    pub fn to_complex(&self) -> ComplexState {
        ComplexState { n: self.n(), amps: (0..self.signs.len()).map(|x| self.amplitude(x)).collect() }
    }
}

/// Dense complex state vector of length `2^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexState {
    n: usize,
    amps: Vec<Complex64>,
}

impl ComplexState {
    /// Wraps `amps`, checking the length and that the norm is one.
    pub fn new(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_qubits(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch { left: n, right: amps.len().trailing_zeros() as usize });
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::Norm(norm_sqr));
        }
        Ok(ComplexState { n, amps })
    }

    /// Haar-random pure state (normalized complex Gaussian vector).
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_qubits(n)?;
        let mut amps: Vec<Complex64> =
            (0..1usize << n).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        amps.iter_mut().for_each(|a| *a /= norm);
        Ok(ComplexState { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn apply_ckz(&self, e: VertexSet) -> Result<ComplexState> {
        check_edge_in(e, self.n)?;
        let mut out = self.clone();
        ckz_amps(&mut out.amps, e);
        Ok(out)
    }

    pub fn apply_local_pauli(&self, i: usize, p: Pauli) -> Result<ComplexState> {
        check_vertex_in(i, self.n)?;
        let mut out = self.clone();
        pauli_amps(&mut out.amps, i, p);
        Ok(out)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &ComplexState) -> Result<Complex64> {
        check_same_n(self.n, other.n)?;
        Ok(inner(&self.amps, &other.amps))
    }

    /// Exact conversion to the sign backend. Fails unless the state is a
    /// REW state times a global phase in `{1, i, -1, -i}`.
    pub fn to_sign(&self) -> Result<SignState> {
        let mag = (self.amps.len() as f64).sqrt().recip();
        let a0 = self.amps[0] / mag;
        let phase = [Phase::ONE, Phase::I, Phase::MINUS_ONE, Phase::MINUS_I]
            .into_iter()
            .find(|p| (p.to_complex() - a0).norm() <= AMP_TOL)
            .ok_or(Error::NotEquallyWeighted)?;
        let unphase = phase.to_complex().conj();
        let mut signs = TruthTable::zero_unchecked(self.n);
        for (x, a) in self.amps.iter().enumerate() {
            let r = a * unphase / mag;
            if (r.re - 1.0).abs() <= AMP_TOL && r.im.abs() <= AMP_TOL {
                continue;
            }
            if (r.re + 1.0).abs() <= AMP_TOL && r.im.abs() <= AMP_TOL {
                signs.set(x, true);
                continue;
            }
            return Err(Error::NotEquallyWeighted);
        }
        Ok(SignState::from_signs(signs).with_phase(phase))
    }
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn ckz_amps(amps: &mut [Complex64], e: VertexSet) {
    let free = (amps.len() - 1) & !e.mask();
    for_each_superset(e.mask(), free, |x| amps[x] = -amps[x]);
}

fn pauli_amps(amps: &mut [Complex64], i: usize, p: Pauli) {
    let bit = 1usize << (i - 1);
    let iu = Complex64::new(0.0, 1.0);
    for x in (0..amps.len()).filter(|x| x & bit == 0) {
        let (lo, hi) = (amps[x], amps[x | bit]);
        let (new_lo, new_hi) = match p {
            Pauli::X => (hi, lo),
            Pauli::Y => (-iu * hi, iu * lo),
            Pauli::Z => (lo, -hi),
        };
        amps[x] = new_lo;
        amps[x | bit] = new_hi;
    }
}

/// A state on either backend.
#[derive(Debug, Clone, PartialEq)]
pub enum StateVector {
    Sign(SignState),
    Complex(ComplexState),
}

impl From<SignState> for StateVector {
    fn from(s: SignState) -> Self {
        StateVector::Sign(s)
    }
}

impl From<ComplexState> for StateVector {
    fn from(s: ComplexState) -> Self {
        StateVector::Complex(s)
    }
}

impl StateVector {
    pub fn n(&self) -> usize {
        match self {
            StateVector::Sign(s) => s.n(),
            StateVector::Complex(s) => s.n(),
        }
    }

    pub fn amplitude(&self, x: usize) -> Complex64 {
        match self {
            StateVector::Sign(s) => s.amplitude(x),
            StateVector::Complex(s) => s.amps[x],
        }
    }

    pub fn to_complex(&self) -> ComplexState {
        match self {
            StateVector::Sign(s) => s.to_complex(),
            StateVector::Complex(s) => s.clone(),
        }
    }

    pub fn as_sign(&self) -> Option<&SignState> {
        match self {
            StateVector::Sign(s) => Some(s),
            StateVector::Complex(_) => None,
        }
    }

    pub fn apply_ckz(&self, e: VertexSet) -> Result<StateVector> {
        Ok(match self {
            StateVector::Sign(s) => s.apply_ckz(e)?.into(),
            StateVector::Complex(s) => s.apply_ckz(e)?.into(),
        })
    }

    pub fn apply_local_pauli(&self, i: usize, p: Pauli) -> Result<StateVector> {
        Ok(match self {
            StateVector::Sign(s) => s.apply_local_pauli(i, p)?.into(),
            StateVector::Complex(s) => s.apply_local_pauli(i, p)?.into(),
        })
    }

    /// Text dump: header `n <n> backend <sign|complex>`, then one line per
    /// basis label, `x +1|-1` or `x re im`. Sign states whose global phase
    /// is `i` or `-i` are written on the complex backend.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        match self {
            StateVector::Sign(s) if s.phase == Phase::ONE || s.phase == Phase::MINUS_ONE => {
                writeln!(out, "n {} backend sign", s.n()).unwrap();
                let flip = s.phase == Phase::MINUS_ONE;
                for x in 0..s.signs.len() {
                    writeln!(out, "{x} {}", if s.signs.get(x) ^ flip { "-1" } else { "+1" }).unwrap();
                }
            }
            _ => {
                let c = self.to_complex();
                writeln!(out, "n {} backend complex", c.n).unwrap();
                for (x, a) in c.amps.iter().enumerate() {
                    writeln!(out, "{x} {:?} {:?}", a.re, a.im).unwrap();
                }
            }
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<StateVector> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty state dump"))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let (n, backend) = match parts.as_slice() {
            ["n", n, "backend", b] => (n.parse::<usize>().map_err(|_| err(hl, "bad qubit count"))?, *b),
            _ => return Err(err(hl, "expected `n <int> backend <sign|complex>`")),
        };
        check_qubits(n).map_err(|e| err(hl, &e.to_string()))?;
        let dim = 1usize << n;
        let mut seen = 0usize;
        let mut signs = TruthTable::zero_unchecked(n);
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        for (line, content) in lines {
            let fields: Vec<&str> = content.split_whitespace().collect();
            let x: usize = fields.first().and_then(|f| f.parse().ok()).ok_or_else(|| err(line, "bad basis label"))?;
            if x != seen {
                return Err(err(line, &format!("expected basis label {seen}, got {x}")));
            }
            match (backend, fields.as_slice()) {
                ("sign", [_, "+1"]) => {}
                ("sign", [_, "-1"]) => signs.set(x, true),
                ("complex", [_, re, im]) => {
                    let re: f64 = re.parse().map_err(|_| err(line, "bad real part"))?;
                    let im: f64 = im.parse().map_err(|_| err(line, "bad imaginary part"))?;
                    amps[x] = Complex64::new(re, im);
                }
                ("sign" | "complex", _) => return Err(err(line, "malformed amplitude line")),
                _ => return Err(err(hl, &format!("unknown backend {backend:?}"))),
            }
            seen += 1;
            if seen > dim {
                return Err(err(line, "too many amplitude lines"));
            }
        }
        if seen != dim {
            return Err(err(hl, &format!("expected {dim} amplitude lines, found {seen}")));
        }
        Ok(match backend {
            "sign" => SignState::from_signs(signs).into(),
            _ => ComplexState::new(n, amps)?.into(),
        })
    }
}

/// The hypergraph state: amplitude at `x` is `(-1)^{#edges inside x}/2^{n/2}`.
///
/// The sign table is the Möbius transform of the edge indicator, so the
/// whole state costs one `O(n 2^n)` butterfly regardless of the edge count.
pub fn build_state(h: &Hypergraph) -> Result<SignState> {
    let mut signs = TruthTable::zero(h.n())?;
    for e in h.edges() {
        signs.set(e.mask(), true);
    }
    signs.mobius_in_place();
    Ok(SignState::from_signs(signs))
}

pub fn apply_ckz(s: &StateVector, e: VertexSet) -> Result<StateVector> {
    s.apply_ckz(e)
}

pub fn apply_local_pauli(s: &StateVector, i: usize, p: Pauli) -> Result<StateVector> {
    s.apply_local_pauli(i, p)
}

/// A linear operator acting in place on a dense amplitude vector.
pub trait Operator {
    /// Highest vertex the operator touches.
    fn max_vertex(&self) -> usize;
    fn apply_amps(&self, amps: &mut [Complex64]);

    fn apply_complex(&self, s: &ComplexState) -> Result<ComplexState> {
        if self.max_vertex() > s.n {
            return Err(Error::DimensionMismatch { left: self.max_vertex(), right: s.n });
        }
        let mut out = s.clone();
        self.apply_amps(&mut out.amps);
        Ok(out)
    }
}

/// A single-qubit Pauli on vertex `.0`.
#[derive(Debug, Clone, Copy)]
pub struct LocalPauli(pub usize, pub Pauli);

impl Operator for LocalPauli {
    fn max_vertex(&self) -> usize {
        self.0
    }
    fn apply_amps(&self, amps: &mut [Complex64]) {
        pauli_amps(amps, self.0, self.1);
    }
}

/// A multi-controlled `Z` on the given vertex set.
#[derive(Debug, Clone, Copy)]
pub struct Ckz(pub VertexSet);

impl Operator for Ckz {
    fn max_vertex(&self) -> usize {
        self.0.max_vertex()
    }
    fn apply_amps(&self, amps: &mut [Complex64]) {
        ckz_amps(amps, self.0);
    }
}

/// Generalized stabilizer `K_i = X_i (x) prod_{t in N(i)} C^{|t|}Z_t`.
///
/// An empty tuple in `tuples` contributes the scalar `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerOperator {
    vertex: usize,
    tuples: BTreeSet<VertexSet>,
}

impl StabilizerOperator {
    pub fn new(vertex: usize, tuples: BTreeSet<VertexSet>) -> Result<Self> {
        if vertex == 0 {
            return Err(Error::Vertex { vertex, n: 0 });
        }
        if let Some(t) = tuples.iter().find(|t| t.contains(vertex)) {
            return Err(Error::Subset(format!("tuple {t} contains flip vertex {vertex}")));
        }
        Ok(StabilizerOperator { vertex, tuples })
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn tuples(&self) -> &BTreeSet<VertexSet> {
        &self.tuples
    }

    pub fn has_global_sign(&self) -> bool {
        self.tuples.contains(&VertexSet::EMPTY)
    }

    /// Sign table of the diagonal part on `n` qubits.
    pub fn diagonal_signs(&self, n: usize) -> Result<TruthTable> {
        let mut t = TruthTable::zero(n)?;
        for tuple in self.tuples.iter().filter(|t| !t.is_empty()) {
            t.set(tuple.mask(), true);
        }
        t.mobius_in_place();
        Ok(t)
    }

    fn check(&self, n: usize) -> Result<()> {
        let max = Operator::max_vertex(self);
        if max > n {
            Err(Error::DimensionMismatch { left: max, right: n })
        } else {
            Ok(())
        }
    }

    pub fn apply_sign(&self, s: &SignState) -> Result<SignState> {
        self.check(s.n())?;
        let mut out = s.clone();
        out.signs.xor_assign(&self.diagonal_signs(s.n())?);
        out.pauli_mut(self.vertex, Pauli::X);
        if self.has_global_sign() {
            out.phase = out.phase * Phase::MINUS_ONE;
        }
        Ok(out)
    }

    /// Text form such as `K_4 = X_4 Z_1 C^3Z_{2,3,5}`; the empty tuple is
    /// rendered as a leading `-`.
    pub fn describe(&self) -> String {
        let mut out = format!("K_{} = ", self.vertex);
        if self.has_global_sign() {
            out.push('-');
        }
        write!(out, "X_{}", self.vertex).unwrap();
        for t in self.tuples.iter().filter(|t| !t.is_empty()) {
            let vs: Vec<String> = t.vertices().map(|v| v.to_string()).collect();
            match t.len() {
                1 => write!(out, " Z_{}", vs[0]).unwrap(),
                k => write!(out, " C^{k}Z_{{{}}}", vs.join(",")).unwrap(),
            }
        }
        out
    }
}

impl Operator for StabilizerOperator {
    fn max_vertex(&self) -> usize {
        self.tuples.iter().map(|t| t.max_vertex()).max().unwrap_or(0).max(self.vertex)
    }

    fn apply_amps(&self, amps: &mut [Complex64]) {
        for t in self.tuples.iter().filter(|t| !t.is_empty()) {
            ckz_amps(amps, *t);
        }
        pauli_amps(amps, self.vertex, Pauli::X);
        if self.has_global_sign() {
            amps.iter_mut().for_each(|a| *a = -*a);
        }
    }
}

/// A stabilizer with its diagonal part precomputed as a sign table, so each
/// application costs `O(2^n)` regardless of the number of tuples.
#[derive(Debug, Clone)]
pub struct CompiledStabilizer {
    vertex: usize,
    diagonal: TruthTable,
    global_sign: bool,
}

impl CompiledStabilizer {
    pub fn new(k: &StabilizerOperator, n: usize) -> Result<Self> {
        k.check(n)?;
        Ok(CompiledStabilizer { vertex: k.vertex, diagonal: k.diagonal_signs(n)?, global_sign: k.has_global_sign() })
    }
}

impl Operator for CompiledStabilizer {
    fn max_vertex(&self) -> usize {
        self.vertex
    }

    fn apply_amps(&self, amps: &mut [Complex64]) {
        assert_eq!(amps.len(), self.diagonal.len(), "compiled for a different qubit count");
        for x in self.diagonal.ones() {
            amps[x] = -amps[x];
        }
        pauli_amps(amps, self.vertex, Pauli::X);
        if self.global_sign {
            amps.iter_mut().for_each(|a| *a = -*a);
        }
    }

    fn apply_complex(&self, s: &ComplexState) -> Result<ComplexState> {
        if s.amps.len() != self.diagonal.len() {
            return Err(Error::DimensionMismatch { left: self.diagonal.n(), right: s.n });
        }
        let mut out = s.clone();
        self.apply_amps(&mut out.amps);
        Ok(out)
    }
}

pub fn stabilizer(h: &Hypergraph, i: usize) -> Result<StabilizerOperator> {
    Ok(StabilizerOperator { vertex: i, tuples: h.neighbourhood(i)? })
}

pub fn stabilizers(h: &Hypergraph) -> Vec<StabilizerOperator> {
    (1..=h.n()).map(|i| stabilizer(h, i).expect("vertex in range")).collect()
}

pub fn apply_stabilizer(s: &StateVector, k: &StabilizerOperator) -> Result<StateVector> {
    Ok(match s {
        StateVector::Sign(s) => k.apply_sign(s)?.into(),
        StateVector::Complex(c) => k.apply_complex(c)?.into(),
    })
}

/// True iff every `K_i` of `h` fixes the hypergraph state exactly, global
/// sign included.
pub fn verify_stabilized(h: &Hypergraph) -> Result<bool> {
    let state = build_state(h)?;
    for k in stabilizers(h) {
        if k.apply_sign(&state)? != state {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|| (AB - BA)|probe> ||`.
pub fn commutator_residual<A: Operator, B: Operator>(a: &A, b: &B, probe: &ComplexState) -> Result<f64> {
    let ab = a.apply_complex(&b.apply_complex(probe)?)?;
    let ba = b.apply_complex(&a.apply_complex(probe)?)?;
    Ok(ab.amps.iter().zip(&ba.amps).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt())
}

/// Number of random probes used by [`uniqueness_check`].
pub const UNIQUENESS_PROBES: usize = 20;

pub const MAX_UNIQUENESS_QUBITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionSummary {
    pub probes: usize,
    /// Probes whose projection had norm above the tolerance.
    pub nonzero: usize,
    /// Largest distance between a normalized projection and its component
    /// along the target, over all nonzero projections.
    pub max_deviation: f64,
}

impl ProjectionSummary {
    pub fn is_rank_one(&self) -> bool {
        self.nonzero > 0 && self.max_deviation <= AMP_TOL
    }
}

/// Projects `probes` random states with `prod_i (I + K_i)/2` and measures how
/// far each result is from being parallel to `target`.
pub fn project_random_probes<R: Rng + ?Sized>(
    ops: &[StabilizerOperator],
    target: &ComplexState,
    probes: usize,
    rng: &mut R,
) -> Result<ProjectionSummary> {
    let mut summary = ProjectionSummary { probes, nonzero: 0, max_deviation: 0.0 };
    for _ in 0..probes {
        let mut v = ComplexState::random(target.n, rng)?.amps;
        for k in ops {
            if k.max_vertex() > target.n {
                return Err(Error::DimensionMismatch { left: k.max_vertex(), right: target.n });
            }
            let mut kv = v.clone();
            k.apply_amps(&mut kv);
            v.iter_mut().zip(&kv).for_each(|(a, b)| *a = (*a + b) * 0.5);
        }
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm <= AMP_TOL {
            continue;
        }
        summary.nonzero += 1;
        v.iter_mut().for_each(|a| *a /= norm);
        let overlap = inner(&target.amps, &v);
        let deviation = v.iter().zip(&target.amps).map(|(a, t)| (a - overlap * t).norm_sqr()).sum::<f64>().sqrt();
        summary.max_deviation = summary.max_deviation.max(deviation);
    }
    Ok(summary)
}

/// Certifies that the joint `+1` eigenspace of the stabilizers of `h` is
/// spanned by the hypergraph state, using [`UNIQUENESS_PROBES`] random probes.
pub fn uniqueness_check<R: Rng + ?Sized>(h: &Hypergraph, rng: &mut R) -> Result<bool> {
    if h.n() > MAX_UNIQUENESS_QUBITS {
        return Err(Error::QubitCount { n: h.n(), max: MAX_UNIQUENESS_QUBITS });
    }
    let target = build_state(h)?.to_complex();
    Ok(project_random_probes(&stabilizers(h), &target, UNIQUENESS_PROBES, rng)?.is_rank_one())
}

/// True iff `a = c b` for a unit complex `c`. Two sign-backend states only
/// need their sign tables to agree up to complement.
pub fn equal_up_to_global_phase(a: &StateVector, b: &StateVector) -> Result<bool> {
    check_same_n(a.n(), b.n())?;
    if let (StateVector::Sign(a), StateVector::Sign(b)) = (a, b) {
        return Ok(a.normalized_signs() == b.normalized_signs());
    }
    let (a, b) = (a.to_complex(), b.to_complex());
    let (j, bj) =
        b.amps.iter().enumerate().max_by(|x, y| x.1.norm_sqr().total_cmp(&y.1.norm_sqr())).expect("nonempty state");
    let c = a.amps[j] / bj;
    if (c.norm() - 1.0).abs() > AMP_TOL {
        return Ok(false);
    }
    Ok(a.amps.iter().zip(&b.amps).all(|(x, y)| (x - c * y).norm() <= AMP_TOL))
}
