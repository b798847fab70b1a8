//! Hodge polynomials of conformal blocks `V_g(μ; λ_1, ..., λ_n)` and the
//! quantities read off them: weight, dimension, signature, gaps, shifts.
//!
//! The closed Hodge polynomial is `ε([λ_1] ⋆ ... ⋆ [λ_n] ⋆ Ω^g)`; with an
//! output color `μ` it is the `[μ]`-coefficient of the same product.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

use crate::frobenius::{FrobeniusAlgebra, RingElement};
use crate::laurent::{ExponentPair, LaurentError, LaurentPoly};
use crate::su2_model::ModelParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("color {color} is out of range: colors are 0..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("signatures are only defined for closed surfaces (no output color)")]
    OutputColorUnsupported,
    #[error("polynomial {0} is not homogeneous")]
    NotHomogeneous(LaurentPoly),
    #[error("aggregate shift ({0}, {1}) is not integral")]
    NonIntegerShift(Ratio<i64>, Ratio<i64>),
    #[error("a shift must vanish on color 0, got ({0}, {1})")]
    ZeroColorShift(Ratio<i64>, Ratio<i64>),
    #[error("expected an integer value, got {0}")]
    NotIntegral(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Genus, input colors and optional output color of a marked surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SurfaceDatum {
    pub genus: u32,
    pub colors: Vec<usize>,
    pub output_color: Option<usize>,
}

impl SurfaceDatum {
    pub fn closed(genus: u32, colors: impl Into<Vec<usize>>) -> Self {
        SurfaceDatum {
            genus,
            colors: colors.into(),
            output_color: None,
        }
    }

    pub fn with_output(genus: u32, colors: impl Into<Vec<usize>>, output: usize) -> Self {
        SurfaceDatum {
            genus,
            colors: colors.into(),
            output_color: Some(output),
        }
    }

    fn color_sum(&self) -> i64 {
        self.colors.iter().map(|&c| c as i64).sum::<i64>() - self.output_color.unwrap_or(0) as i64
    }

    /// Marked points including the output.
    pub fn marked_points(&self) -> usize {
        self.colors.len() + usize::from(self.output_color.is_some())
    }

    /// `(g, n)` outside the tangent-stable range, where the value is purely
    /// algebraic: `(0,0)`, `(0,1)` and `(1,0)`.
    pub fn is_formal(&self) -> bool {
        matches!((self.genus, self.marked_points()), (0, 0) | (0, 1) | (1, 0))
    }

    pub fn validate(&self, rank: usize) -> Result<(), HodgeError> {
        let max = rank - 1;
        match self.colors.iter().chain(&self.output_color).find(|&&c| c > max) {
            Some(&color) => Err(HodgeError::ColorOutOfRange { color, max }),
            None => Ok(()),
        }
    }
}

/// Support of a homogeneous Hodge polynomial in the `p` direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub has_type2_gap: bool,
    pub p_support: Vec<i64>,
}

impl GapReport {
    /// Bidegrees are integral, so all of `E` lies in a single class of
    /// `Q/Z` and a type-1 gap cannot occur.
    pub fn has_type1_gap(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeResult {
    pub polynomial: LaurentPoly,
    pub weight: Ratio<i64>,
    pub dimension: BigInt,
    /// `None` when the datum has an output color.
    pub signature: Option<BigInt>,
    pub gaps: GapReport,
}

/// Named-basis coefficients of `[λ_1] ⋆ ... ⋆ [λ_n] ⋆ Ω^g`, i.e. the vector
/// `Σ_μ e(V_g(μ; λ)) [μ]`.
pub fn hodge_vector(algebra: &FrobeniusAlgebra, genus: u32, colors: &[usize]) -> Result<Vec<LaurentPoly>, HodgeError> {
    SurfaceDatum::closed(genus, colors).validate(algebra.rank())?;
    Ok(algebra.to_named_basis(&product(algebra, genus, colors)))
}

fn product(algebra: &FrobeniusAlgebra, genus: u32, colors: &[usize]) -> RingElement {
    let acc = colors
        .iter()
        .fold(algebra.unit(), |acc, &c| algebra.mul(&acc, algebra.basis_element(c)));
    if genus == 0 {
        acc
    } else {
        algebra.mul(&acc, &algebra.power(algebra.omega(), genus))
    }
}

pub fn hodge_polynomial(algebra: &FrobeniusAlgebra, datum: &SurfaceDatum) -> Result<LaurentPoly, HodgeError> {
    datum.validate(algebra.rank())?;
    let element = product(algebra, datum.genus, &datum.colors);
    Ok(match datum.output_color {
        None => algebra.epsilon(&element),
        Some(mu) => algebra.to_named_basis(&element).swap_remove(mu),
    })
}

/// True iff `Σλ_i - μ` is odd, in which case the block is zero.
pub fn parity_vanishes(datum: &SurfaceDatum) -> bool {
    datum.color_sum() % 2 != 0
}

/// `(Σλ_i - μ) / 2`.
pub fn weight_of(datum: &SurfaceDatum) -> Ratio<i64> {
    Ratio::new(datum.color_sum(), 2)
}

fn integer_value(e: &LaurentPoly, u0: i64, v0: i64) -> Result<BigInt, HodgeError> {
    let value = e.specialize(u0, v0)?;
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(HodgeError::NotIntegral(value.to_string()))
    }
}

/// Signature of the invariant Hermitian form on a closed block.
pub fn signature(algebra: &FrobeniusAlgebra, params: &ModelParams, datum: &SurfaceDatum) -> Result<BigInt, HodgeError> {
    if datum.output_color.is_some() {
        return Err(HodgeError::OutputColorUnsupported);
    }
    signature_of_polynomial(params, &hodge_polynomial(algebra, datum)?)
}

fn signature_of_polynomial(params: &ModelParams, e: &LaurentPoly) -> Result<BigInt, HodgeError> {
    let (u0, v0) = params.signature_point();
    integer_value(e, u0, v0)
}

pub fn gap_scan(e: &LaurentPoly) -> Result<GapReport, HodgeError> {
    if !e.is_zero() && e.homogeneous_degree().is_none() {
        return Err(HodgeError::NotHomogeneous(e.clone()));
    }
    // Homogeneous, so p determines the term and the support is already sorted.
    let p_support: Vec<i64> = e.terms().map(|(exp, _)| exp.p).collect();
    let has_type2_gap = p_support.windows(2).any(|w| w[1] - w[0] > 1);
    Ok(GapReport {
        has_type2_gap,
        p_support,
    })
}

/// Applies the shift `δ` (color ↦ bidegree translation, `δ(0) = 0`) to the
/// Hodge polynomial `e` of `datum`: multiplication by
/// `u^{Σ δ_1(λ_i)} v^{Σ δ_2(λ_i)}`. Colors missing from `delta` shift by zero.
pub fn apply_shift(
    e: &LaurentPoly,
    datum: &SurfaceDatum,
    delta: &BTreeMap<usize, (Ratio<i64>, Ratio<i64>)>,
) -> Result<LaurentPoly, HodgeError> {
    if let Some(&(x, y)) = delta.get(&0) {
        if !x.is_zero() || !y.is_zero() {
            return Err(HodgeError::ZeroColorShift(x, y));
        }
    }
    let zero = (Ratio::zero(), Ratio::zero());
    let (x, y) = datum.colors.iter().fold(zero, |(x, y), c| {
        let (dx, dy) = delta.get(c).copied().unwrap_or(zero);
        (x + dx, y + dy)
    });
    if !x.is_integer() || !y.is_integer() {
        return Err(HodgeError::NonIntegerShift(x, y));
    }
    Ok(e.shift(ExponentPair::new(x.to_integer(), y.to_integer())))
}

/// Everything the CLI reports about one datum.
pub fn evaluate(
    algebra: &FrobeniusAlgebra,
    params: &ModelParams,
    datum: &SurfaceDatum,
) -> Result<HodgeResult, HodgeError> {
    let polynomial = hodge_polynomial(algebra, datum)?;
    let dimension = integer_value(&polynomial, 1, 1)?;
    let signature = match datum.output_color {
        None => Some(signature_of_polynomial(params, &polynomial)?),
        Some(_) => None,
    };
    let gaps = gap_scan(&polynomial)?;
    Ok(HodgeResult {
        weight: weight_of(datum),
        polynomial,
        dimension,
        signature,
        gaps,
    })
}

/// The η-matrix `η([j], [k])` on the named basis.
pub fn pairing_matrix(algebra: &FrobeniusAlgebra) -> Vec<Vec<LaurentPoly>> {
    let n = algebra.rank();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| algebra.eta(algebra.basis_element(j), algebra.basis_element(k)))
                .collect()
        })
        .collect()
}

/// Glues `Σ_ν e(V_{g1}(ν; α))[ν]` and `Σ_ν e(V_{g2}(ν; β))[ν]` along one
/// node: `Σ_{ν, ν'} a_ν b_{ν'} η([ν], [ν'])`. Should equal the closed
/// polynomial of genus `g1 + g2` with colors `α ∪ β`.
pub fn glue(pairing: &[Vec<LaurentPoly>], left: &[LaurentPoly], right: &[LaurentPoly]) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for (a, row) in left.iter().zip(pairing) {
        if a.is_zero() {
            continue;
        }
        for (b, eta) in right.iter().zip(row) {
            if b.is_zero() || eta.is_zero() {
                continue;
            }
            total.add_product(&(a * b), eta);
        }
    }
    total
}
