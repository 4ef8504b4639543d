//! Exact simulation and analysis of quantum hypergraph states.
//!
//! A hypergraph state on `n` qubits is obtained from `|+>^n` by applying one
//! multi-controlled `Z` gate per hyperedge. Every such state is a real equally
//! weighted (REW) state `2^{-n/2} sum_x (-1)^f(x) |x>`, and every REW state with
//! `f(0) = 0` arises from exactly one hypergraph. The crate covers both
//! directions of that correspondence, the generalized stabilizers of these
//! states, their local-Pauli orbits and their geometric entanglement.
//!
//! Conventions shared by every module:
//!
//! * qubits (vertices) are numbered from 1;
//! * basis label `x` stores qubit `i` at bit `i - 1`, so qubit 1 is the least
//!   significant bit;
//! * vertex subsets are [`VertexSet`] bitmasks using the same bit layout.

pub mod boolfn;
pub mod entanglement;
mod error;
pub mod extract;
pub mod hypergraph;
pub mod orbits;
pub mod par;
pub mod rng;
pub mod statesim;
pub mod sweep;

pub use boolfn::{label_from_ket, mobius_transform, MonomialSet, TruthTable};

pub use entanglement::{genuine_multipartite_geometric, BipartitionReport};
pub use error::{Error, Result};
pub use extract::{classify_balance, extract_fast, extract_layered, Balance};

pub use hypergraph::{count_states, CountMode, Hypergraph, UniformityClass, VertexSet};
pub use par::Exec;
pub use statesim::{build_state, ComplexState, Pauli, SignState, StabilizerOperator, StateVector};

/// Largest qubit count for which dense states and truth tables are built.
pub const MAX_QUBITS: usize = 20;

/// Absolute tolerance for comparing floating-point amplitudes.
pub const AMP_TOL: f64 = 1e-9;

/// Tolerance on the squared norm of a state.
pub const NORM_TOL: f64 = 1e-12;
