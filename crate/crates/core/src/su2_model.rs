//! The Frobenius algebra governing Hodge numbers of the SU(2) modular functor
//! of level `2r` with root `ζ_r = -exp(iπs/r)`.
//!
//! Everything is determined by the weight sequence `w_1, ..., w_{r-2}`, each
//! `u` or `v` according to the parity of `⌊2s/r⌋ + ⌊ks/r⌋ + ⌊(k+1)s/r⌋`.
//! `M` is the `(r-1)×(r-1)` tridiagonal matrix with unit subdiagonal,
//! superdiagonal `w`, and zero diagonal; `[k]` is the characteristic
//! polynomial of its top-left `k×k` block and the algebra is
//! `Z[u^±1, v^±1][X] / χ_M(X)`.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::frobenius::{AlgebraError, FrobeniusAlgebra, UniPoly};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("r must be odd and ≥ 3 (got r = {0})")]
    InvalidR(i64),
    #[error("s must satisfy 0 < s < r, be odd and be prime to r (got s = {s}, r = {r}: {reason})")]
    InvalidS { r: i64, s: i64, reason: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Validated `(r, s)`: `r ≥ 3` odd, `0 < s < r` odd and prime to `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelParams {
    r: u32,
    s: u32,
}

impl ModelParams {
    pub fn new(r: i64, s: i64) -> Result<Self, ModelError> {
        if r < 3 || r.is_even() || r > i64::from(u32::MAX) {
            return Err(ModelError::InvalidR(r));
        }
        let reason = if s <= 0 || s >= r {
            Some("out of range")
        } else if s.is_even() {
            Some("s is even")
        } else if s.gcd(&r) != 1 {
            Some("s is not prime to r")
        } else {
            None
        };
        if let Some(reason) = reason {
            return Err(ModelError::InvalidS { r, s, reason });
        }
        Ok(ModelParams {
            r: r as u32,
            s: s as u32,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Number of colors, `r - 1`; also the rank of the algebra.
    pub fn rank(&self) -> usize {
        self.r as usize - 1
    }

    /// `⌊ks/r⌋`, exact.
    pub fn floor_ratio(&self, k: u64) -> u64 {
        k * u64::from(self.s) / u64::from(self.r)
    }

    /// The point `(u, v)` at which Hodge polynomials specialize to signatures:
    /// `(-1, 1)` when `⌊2s/r⌋` is even, `(1, -1)` otherwise.
    pub fn signature_point(&self) -> (i64, i64) {
        if self.floor_ratio(2).is_even() {
            (-1, 1)
        } else {
            (1, -1)
        }
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={})", self.r, self.s)
    }
}

/// Checks the hypotheses on `(r, s)`.
pub fn validate(r: i64, s: i64) -> Result<ModelParams, ModelError> {
    ModelParams::new(r, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    U,
    V,
}

impl Variable {
    pub fn to_laurent(self) -> LaurentPoly {
        match self {
            Variable::U => LaurentPoly::u(),
            Variable::V => LaurentPoly::v(),
        }
    }
}

/// `w_1, ..., w_{r-2}`; indexed from 1 as in the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence(Vec<Variable>);

impl WeightSequence {
    pub fn new(weights: Vec<Variable>) -> Self {
        WeightSequence(weights)
    }

    /// `w_k` for `1 ≤ k ≤ r-2`.
    pub fn get(&self, k: usize) -> Variable {
        self.0[k - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Variable] {
        &self.0
    }
}

pub fn weight_sequence(params: &ModelParams) -> WeightSequence {
    let base = params.floor_ratio(2);
    let weights = (1..=u64::from(params.r) - 2)
        .map(|k| {
            let sum = base + params.floor_ratio(k) + params.floor_ratio(k + 1);
            if sum.is_even() {
                Variable::U
            } else {
                Variable::V
            }
        })
        .collect();
    WeightSequence(weights)
}

/// `χ_{M_0}, ..., χ_{M_{len+1}}` via `χ_{M_k} = X χ_{M_{k-1}} - w_{k-1} χ_{M_{k-2}}`.
///
/// For an SU(2) weight sequence of length `r-2` the last entry is the modulus
/// `χ_M`.
pub fn char_poly_sequence(w: &WeightSequence) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one(), UniPoly::x()];
    for k in 2..=w.len() + 1 {
        let next = &seq[k - 1].shift_up(1) - &seq[k - 2].scale(&w.get(k - 1).to_laurent());
        seq.push(next);
    }
    seq
}

pub fn build_algebra(params: &ModelParams) -> Result<FrobeniusAlgebra, ModelError> {
    let mut chi = char_poly_sequence(&weight_sequence(params));
    let modulus = chi.pop().expect("sequence has r entries");
    let rank = params.rank();
    Ok(FrobeniusAlgebra::new(modulus, chi, (0..rank).collect())?)
}

/// The tridiagonal matrix `M` of multiplication by `[1]` in the basis
/// `[0], ..., [r-2]`: zero diagonal, ones below, `w_1..w_{r-2}` above.
pub fn multiplication_matrix(params: &ModelParams) -> Vec<Vec<LaurentPoly>> {
    let w = weight_sequence(params);
    let n = params.rank();
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n - 1 {
        m[i + 1][i] = LaurentPoly::one();
        m[i][i + 1] = w.get(i + 1).to_laurent();
    }
    m
}
