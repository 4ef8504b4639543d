//! Boolean phase functions and their algebraic normal form.
//!
//! A REW state `2^{-n/2} sum_x (-1)^f(x) |x>` is fully described by the truth
//! table of `f`. The GF(2) Möbius transform maps that table to the ANF
//! coefficients of `f`, and the monomials with coefficient one are exactly the
//! hyperedges of the corresponding hypergraph state.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::hypergraph::VertexSet;
use crate::{Error, Result, MAX_QUBITS};

const WORD_BITS: usize = 64;

// Bit positions whose index has bit `s` clear, for in-word strides 1..32.
const LOW_HALVES: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Packed truth table of `f: {0,1}^n -> {0,1}`; bit `x` holds `f(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::QubitCount { n, max: MAX_QUBITS })
    }
}

impl TruthTable {
    /// The zero function on `n` inputs.
    pub fn zero(n: usize) -> Result<Self> {
        check_qubits(n)?;
        Ok(Self::zero_unchecked(n))
    }

    pub(crate) fn zero_unchecked(n: usize) -> Self {
        let len = (1usize << n).div_ceil(WORD_BITS);
        TruthTable { n, words: vec![0; len] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for x in 0..tt.len() {
            if f(x) {
                tt.set(x, true);
            }
        }
        Ok(tt)
    }

    /// Uniformly random table.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for w in &mut tt.words {
            *w = rng.random();
        }
        tt.mask_tail();
        Ok(tt)
    }

    /// Parses the hex form: the rightmost digit holds `f(0..4)`, the next
    /// one `f(4..8)` and so on.
    pub fn from_hex(hex: &str, n: usize) -> Result<Self> {
        check_qubits(n)?;
        let expected = (1usize << n).div_ceil(4);
        let digits: Vec<char> = hex.chars().collect();
        if digits.len() != expected {
            return Err(Error::HexLength { expected, found: digits.len() });
        }
        let mut tt = Self::zero_unchecked(n);
        for (j, &c) in digits.iter().rev().enumerate() {
            let nibble = c.to_digit(16).ok_or(Error::HexDigit(c))? as u64;
            if n < 2 && nibble >> (1 << n) != 0 {
                return Err(Error::HexDigit(c));
            }
            let bit = 4 * j;
            tt.words[bit / WORD_BITS] |= nibble << (bit % WORD_BITS);
        }
        Ok(tt)
    }

    /// Table with ones exactly at the given kets (see [`label_from_ket`]).
    pub fn from_kets(n: usize, kets: &[&str]) -> Result<Self> {
        let mut tt = Self::zero(n)?;
        for ket in kets {
            if ket.len() != n {
                return Err(Error::BasisLabel { x: label_from_ket(ket)?, n });
            }
            tt.set(label_from_ket(ket)?, true);
        }
        Ok(tt)
    }

    pub fn to_hex(&self) -> String {
        let digits = self.len().div_ceil(4);
        (0..digits)
            .rev()
            .map(|j| {
                let bit = 4 * j;
                let nibble = (self.words[bit / WORD_BITS] >> (bit % WORD_BITS)) & 0xf;
                char::from_digit(nibble as u32, 16).unwrap().to_ascii_uppercase()
            })
            .collect()
    }

    /// Parses the two-line text format `n <int>` / `<hex>`. Blank lines and
    /// `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `n <int>` header".into() })?;
        let n = parse_header(header, line)?;
        let (line, hex) = lines.next().ok_or(Error::Parse { line: line + 1, msg: "missing hex line".into() })?;
        let tt = Self::from_hex(hex, n).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse { line, msg: "unexpected trailing content".into() });
        }
        Ok(tt)
    }

    pub fn to_text(&self) -> String {
        format!("n {}\n{}\n", self.n, self.to_hex())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        self.words[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, x: usize, value: bool) {
        debug_assert!(x < self.len());
        let bit = 1u64 << (x % WORD_BITS);
        if value {
            self.words[x / WORD_BITS] |= bit;
        } else {
            self.words[x / WORD_BITS] &= !bit;
        }
    }

    pub fn flip(&mut self, x: usize) {
        self.words[x / WORD_BITS] ^= 1u64 << (x % WORD_BITS);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&x| self.get(x))
    }

    /// Complements every entry (the global sign flip of a REW state).
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    pub fn xor_assign(&mut self, other: &TruthTable) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn mask_tail(&mut self) {
        if self.n < 6 {
            self.words[0] &= (1u64 << (1 << self.n)) - 1;
        }
    }

    /// In-place GF(2) Möbius butterfly: entry `S` becomes the XOR of the
    /// entries at all subsets of `S`. The transform is its own inverse.
    pub fn mobius_in_place(&mut self) {
        for (s, mask) in LOW_HALVES.iter().enumerate().take(self.n.min(6)) {
            let shift = 1 << s;
            for w in &mut self.words {
                *w ^= (*w & mask) << shift;
            }
        }
        for level in 6..self.n {
            let stride = 1usize << (level - 6);
            for block in (0..self.words.len()).step_by(2 * stride) {
                for j in block..block + stride {
                    self.words[j + stride] ^= self.words[j];
                }
            }
        }
    }
}

/// Basis label of a ket written qubit 1 first: `"011"` has qubits 2 and 3
/// excited, which is label `0b110 = 6`.
pub fn label_from_ket(ket: &str) -> Result<usize> {
    if ket.is_empty() || ket.len() > MAX_QUBITS {
        return Err(Error::QubitCount { n: ket.len(), max: MAX_QUBITS });
    }
    ket.chars().enumerate().try_fold(0usize, |acc, (i, c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        other => Err(Error::Parse { line: 1, msg: format!("invalid ket character {other:?}") }),
    })
}

/// Inverse of [`label_from_ket`].
pub fn ket_from_label(x: usize, n: usize) -> String {
    (0..n).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub(crate) fn parse_header(header: &str, line: usize) -> Result<usize> {
    let mut parts = header.split_whitespace();
    match (parts.next(), parts.next().map(str::parse::<usize>), parts.next()) {
        (Some("n"), Some(Ok(n)), None) => Ok(n),
        _ => Err(Error::Parse { line, msg: format!("expected `n <int>`, got {header:?}") }),
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_hex())
    }
}

/// Algebraic normal form `f(x) = c xor (xor_m prod_{i in m} x_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    pub n: usize,
    pub monomials: BTreeSet<VertexSet>,
    /// Coefficient of the empty monomial; a global sign, never a hyperedge.
    pub constant: bool,
}

impl MonomialSet {
    pub fn new(n: usize, monomials: impl IntoIterator<Item = VertexSet>, constant: bool) -> Self {
        MonomialSet { n, monomials: monomials.into_iter().collect(), constant }
    }

    /// Evaluates the ANF at basis label `x`.
    pub fn evaluate(&self, x: usize) -> Result<bool> {
        if self.n >= usize::BITS as usize || x >> self.n != 0 {
            return Err(Error::BasisLabel { x, n: self.n });
        }
        let mut acc = self.constant;
        for m in &self.monomials {
            acc ^= m.is_subset_of_label(x);
        }
        Ok(acc)
    }

    /// Truth table of the ANF, computed by the inverse transform.
    pub fn to_truth_table(&self) -> Result<TruthTable> {
        let mut coeffs = TruthTable::zero(self.n)?;
        coeffs.set(0, self.constant);
        for m in &self.monomials {
            coeffs.set(m.mask(), true);
        }
        coeffs.mobius_in_place();
        Ok(coeffs)
    }
}

/// ANF of the function tabulated by `tt`.
pub fn mobius_transform(tt: &TruthTable) -> MonomialSet {
    let mut coeffs = tt.clone();
    coeffs.mobius_in_place();
    let constant = coeffs.get(0);
    let monomials = coeffs.ones().filter(|&s| s != 0).map(|s| VertexSet::from_mask(s as u32)).collect();
    MonomialSet { n: tt.n, monomials, constant }
}

pub fn evaluate_anf(ms: &MonomialSet, x: usize) -> Result<bool> {
    ms.evaluate(x)
}
