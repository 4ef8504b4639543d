//! Recovering the hypergraph underlying a REW state.
//!
//! Two independent routes are provided. [`extract_layered`] erases minus
//! signs level by level with `C^kZ` gates, `k = 1..n`; [`extract_fast`] reads
//! the hyperedges off the ANF. They must agree on every input.

use std::collections::BTreeSet;
use std::fmt;

use crate::boolfn::{mobius_transform, TruthTable};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::{Error, Result};

fn check_normalized(tt: &TruthTable) -> Result<()> {
    if tt.get(0) {
        Err(Error::NotNormalized)
    } else {
        Ok(())
    }
}

/// Sign-erasing extraction. Within each excitation level basis labels are
/// visited in increasing numeric order; flips within a level never touch
/// other labels of the same level.
pub fn extract_layered(tt: &TruthTable) -> Result<Hypergraph> {
    check_normalized(tt)?;
    let n = tt.n();
    let full = tt.len() - 1;
    let mut work = tt.clone();
    let mut edges = BTreeSet::new();
    for k in 1..=n {
        for x in (1..=full).filter(|x| x.count_ones() as usize == k) {
            if !work.get(x) {
                continue;
            }
            edges.insert(VertexSet::from_mask(x as u32));
            // C^kZ on support(x): flip every label containing x.
            let free = full & !x;
            let mut sub = 0usize;
            loop {
                work.flip(x | sub);
                if sub == free {
                    break;
                }
                sub = sub.wrapping_sub(free) & free;
            }
        }
    }
    debug_assert_eq!(work.count_ones(), 0);
    Ok(Hypergraph::from_set_unchecked(n, edges))
}

/// Extraction through the Möbius transform: hyperedges are the monomials of
/// the ANF of `tt`.
pub fn extract_fast(tt: &TruthTable) -> Result<Hypergraph> {
    check_normalized(tt)?;
    Ok(Hypergraph::from_set_unchecked(tt.n(), mobius_transform(tt).monomials))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Balance {
    Constant,
    Balanced,
    Unbalanced,
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Balance::Constant => "constant",
            Balance::Balanced => "balanced",
            Balance::Unbalanced => "unbalanced",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalanceReport {
    pub balance: Balance,
    pub minus_signs: usize,
    /// Whether the hyperedge `{1..n}` occurs in the extracted hypergraph.
    pub full_edge: bool,
}

pub fn classify_balance(tt: &TruthTable) -> BalanceReport {
    let ones = tt.count_ones();
    let balance = if ones == 0 || ones == tt.len() {
        Balance::Constant
    } else if 2 * ones == tt.len() {
        Balance::Balanced
    } else {
        Balance::Unbalanced
    };
    // The ANF coefficient of the full monomial is the XOR of all entries.
    // For n = 1 that monomial is {1}, still a hyperedge.
    BalanceReport { balance, minus_signs: ones, full_edge: ones % 2 == 1 }
}
