//! The quotient ring `V = R[X] / modulus(X)` over `R = Z[u^±1, v^±1]`, with a
//! distinguished monic basis `[0], [1], ..., [N-1]`, the counit `ε` (the
//! `[0]`-coordinate), the pairing `η(a, b) = ε(ab)`, and the handle element
//! `Ω = Σ_k ε([k][k†])^{-1} [k][k†]`.
//!
//! Elements are stored in the power basis `1, X, ..., X^{N-1}`; the named
//! basis is only used to read results out. Because `[k]` is monic of degree
//! `k`, the change of basis is unitriangular and needs no division.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus must be monic of degree {expected}")]
    ModulusNotMonic { expected: usize },
    #[error("basis element [{index}] must be monic of degree {index}")]
    BasisNotMonic { index: usize },
    #[error("expected {expected} basis elements, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("involution must be a self-inverse permutation fixing 0")]
    InvalidInvolution,
    #[error("ε([{index}]⋆[{index}†]) = {value} is not a unit monomial")]
    NonMonomialNorm { index: usize, value: LaurentPoly },
}

/// A polynomial in `X` with Laurent coefficients; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<LaurentPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn constant(c: LaurentPoly) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(LaurentPoly::one())
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        UniPoly::new(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&LaurentPoly> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&LaurentPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(LaurentPoly::is_one)
    }

    pub fn scale(&self, k: &LaurentPoly) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![LaurentPoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![LaurentPoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j].add_product(a, b);
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// An element of `V`, as coordinates on `1, X, ..., X^{N-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    coords: Vec<LaurentPoly>,
}

impl RingElement {
    pub fn zero(rank: usize) -> Self {
        RingElement {
            coords: vec![LaurentPoly::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[LaurentPoly] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(LaurentPoly::is_zero)
    }

    pub fn scale(&self, k: &LaurentPoly) -> RingElement {
        RingElement {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: &LaurentPoly, other: &RingElement) {
        assert_eq!(self.rank(), other.rank(), "ring elements of different algebras");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            a.add_product(k, b);
        }
    }

    /// The same element viewed as a polynomial of degree `< N`.
    pub fn lift(&self) -> UniPoly {
        UniPoly::new(self.coords.clone())
    }
}

impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        assert_eq!(self.rank(), rhs.rank(), "ring elements of different algebras");
        RingElement {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `V = R[X]/modulus` with a monic named basis, an involution on basis
/// labels and the cached handle element `Ω`.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone)]
pub struct FrobeniusAlgebra {
    modulus: UniPoly,
    named_basis: Vec<UniPoly>,
    basis_elements: Vec<RingElement>,
    involution: Vec<usize>,
    /// `high_powers[i]` is `X^{N+i}` reduced, for `0 <= i < N-1`.
    high_powers: Vec<RingElement>,
    omega: RingElement,
}

impl FrobeniusAlgebra {
    pub fn new(modulus: UniPoly, named_basis: Vec<UniPoly>, involution: Vec<usize>) -> Result<Self, AlgebraError> {
        let rank = named_basis.len();
        if rank == 0 || modulus.degree() != Some(rank) || !modulus.is_monic() {
            return Err(AlgebraError::ModulusNotMonic { expected: rank });
        }
        for (k, b) in named_basis.iter().enumerate() {
            if b.degree() != Some(k) || !b.is_monic() {
                return Err(AlgebraError::BasisNotMonic { index: k });
            }
        }
        if involution.len() != rank {
            return Err(AlgebraError::RankMismatch {
                expected: rank,
                found: involution.len(),
            });
        }
        let is_involution = involution[0] == 0
            && involution.iter().all(|&j| j < rank)
            && (0..rank).all(|k| involution[involution[k]] == k);
        if !is_involution {
            return Err(AlgebraError::InvalidInvolution);
        }

        let mut algebra = FrobeniusAlgebra {
            modulus,
            named_basis,
            basis_elements: Vec::new(),
            involution,
            high_powers: Vec::new(),
            omega: RingElement::zero(rank),
        };
        algebra.high_powers = (0..rank.saturating_sub(1))
            .map(|i| algebra.reduce(&UniPoly::one().shift_up(rank + i)))
            .collect();
        algebra.basis_elements = algebra
            .named_basis
            .iter()
            .map(|b| RingElement {
                coords: pad(b.coeffs(), rank),
            })
            .collect();
        algebra.omega = algebra.compute_omega()?;
        Ok(algebra)
    }

    pub fn rank(&self) -> usize {
        self.named_basis.len()
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn named_basis(&self) -> &[UniPoly] {
        &self.named_basis
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn unit(&self) -> RingElement {
        self.basis_elements[0].clone()
    }

    /// `[k]` in power-basis coordinates.
    pub fn basis_element(&self, k: usize) -> &RingElement {
        &self.basis_elements[k]
    }

    /// Remainder of `p` modulo the (monic) modulus, by long division.
    pub fn reduce(&self, p: &UniPoly) -> RingElement {
        let rank = self.rank();
        let mut work: Vec<LaurentPoly> = p.coeffs().to_vec();
        let modulus = self.modulus.coeffs();
        for d in (rank..work.len()).rev() {
            let lead = std::mem::take(&mut work[d]);
            if lead.is_zero() {
                continue;
            }
            let base = d - rank;
            for (i, m) in modulus[..rank].iter().enumerate() {
                work[base + i].sub_product(&lead, m);
            }
        }
        work.truncate(rank);
        RingElement {
            coords: pad(&work, rank),
        }
    }

    /// The product `a ⋆ b`.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let rank = self.rank();
        assert!(a.rank() == rank && b.rank() == rank, "ring element rank mismatch");
        let mut full = vec![LaurentPoly::zero(); 2 * rank - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                full[i + j].add_product(x, y);
            }
        }
        let high = full.split_off(rank);
        let mut out = RingElement { coords: full };
        for (c, power) in high.iter().zip(&self.high_powers) {
            if !c.is_zero() {
                out.add_scaled(c, power);
            }
        }
        out
    }

    /// `a^g` by repeated squaring; `a^0` is the unit `[0]`.
    pub fn power(&self, a: &RingElement, mut g: u32) -> RingElement {
        let mut result = self.unit();
        let mut base = a.clone();
        while g > 0 {
            if g & 1 == 1 {
                result = self.mul(&result, &base);
            }
            g >>= 1;
            if g > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Coefficients `c_k` with `a = Σ c_k [k]`.
    pub fn to_named_basis(&self, a: &RingElement) -> Vec<LaurentPoly> {
        let mut rest = a.coords.clone();
        let mut out = vec![LaurentPoly::zero(); self.rank()];
        for k in (0..self.rank()).rev() {
            let c = std::mem::take(&mut rest[k]);
            if c.is_zero() {
                continue;
            }
            // [k] is monic, so its X^k term cancels exactly.
            for (i, b) in self.named_basis[k].coeffs()[..k].iter().enumerate() {
                rest[i].sub_product(&c, b);
            }
            out[k] = c;
        }
        out
    }

    /// `Σ c_k [k]` back in power-basis coordinates.
    pub fn from_named_basis(&self, coeffs: &[LaurentPoly]) -> RingElement {
        assert_eq!(coeffs.len(), self.rank(), "wrong number of named-basis coefficients");
        let mut out = RingElement::zero(self.rank());
        for (c, b) in coeffs.iter().zip(&self.basis_elements) {
            if !c.is_zero() {
                out.add_scaled(c, b);
            }
        }
        out
    }

    /// The counit: the `[0]`-coefficient.
    pub fn epsilon(&self, a: &RingElement) -> LaurentPoly {
        self.to_named_basis(a).swap_remove(0)
    }

    pub fn eta(&self, a: &RingElement, b: &RingElement) -> LaurentPoly {
        self.epsilon(&self.mul(a, b))
    }

    /// The handle element `Ω`.
    pub fn omega(&self) -> &RingElement {
        &self.omega
    }

    fn compute_omega(&self) -> Result<RingElement, AlgebraError> {
        let mut omega = RingElement::zero(self.rank());
        for k in 0..self.rank() {
            let square = self.mul(&self.basis_elements[k], &self.basis_elements[self.involution[k]]);
            let norm = self.epsilon(&square);
            let inverse = norm
                .invert_monomial()
                .map_err(|_: LaurentError| AlgebraError::NonMonomialNorm {
                    index: k,
                    value: norm.clone(),
                })?;
            omega.add_scaled(&inverse, &square);
        }
        Ok(omega)
    }
}

fn pad(coeffs: &[LaurentPoly], rank: usize) -> Vec<LaurentPoly> {
    let mut v = coeffs.to_vec();
    v.resize(rank, LaurentPoly::zero());
    v
}
