//! Independent routes to the same numbers, used to check the quotient-ring
//! engine.
//!
//! * [`StructureConstants`]: `[j] ⋆ [k]` built by induction from
//!   `[1][k] = [k+1] + w_k [k-1]` (with `[r-1] = 0`) and linearity. No
//!   polynomial division anywhere.
//! * [`MatrixModel`]: `[λ]` acts as the matrix `χ_{M_λ}(M)`, with the
//!   characteristic polynomials taken from [`determinant_oracle`].
//! * [`pascal_oracle`]: the closed form for `(r, s) = (5, 3)` and colors all 2.
//!
//! [`sweep`] runs all of them against an algebra over a grid of data.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::frobenius::UniPoly;
use crate::hodge_engine::{HodgeError, SurfaceDatum};
use crate::laurent::LaurentPoly;
use crate::su2_model::{multiplication_matrix, weight_sequence, ModelParams, WeightSequence};

pub mod sweep;

type Vector = Vec<LaurentPoly>;
type Matrix = Vec<Vec<LaurentPoly>>;

fn indicator(n: usize, k: usize) -> Vector {
    let mut v = vec![LaurentPoly::zero(); n];
    v[k] = LaurentPoly::one();
    v
}

/// `c[j][k][l]` with `[j] ⋆ [k] = Σ_l c[j][k][l] [l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    table: Vec<Vec<Vector>>,
    weights: WeightSequence,
}

pub fn structure_constants(params: &ModelParams) -> StructureConstants {
    let weights = weight_sequence(params);
    let n = params.rank();
    let mut table: Vec<Vec<Vector>> = Vec::with_capacity(n);
    table.push((0..n).map(|k| indicator(n, k)).collect());
    if n > 1 {
        let row: Vec<Vector> = (0..n).map(|k| times_one(&weights, &table[0][k])).collect();
        table.push(row);
    }
    for j in 1..n.saturating_sub(1) {
        let w = weights.get(j).to_laurent();
        let row = (0..n)
            .map(|k| {
                let mut next = times_one(&weights, &table[j][k]);
                for (x, y) in next.iter_mut().zip(&table[j - 1][k]) {
                    x.sub_product(&w, y);
                }
                next
            })
            .collect();
        table.push(row);
    }
    StructureConstants { table, weights }
}

/// `[1] ⋆ Σ_l a_l [l] = Σ_l a_l ([l+1] + w_l [l-1])`, dropping `[r-1]`.
fn times_one(weights: &WeightSequence, a: &[LaurentPoly]) -> Vector {
    let n = a.len();
    let mut out = vec![LaurentPoly::zero(); n];
    for (l, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if l + 1 < n {
            out[l + 1] += c;
        }
        if l >= 1 {
            out[l - 1].add_product(c, &weights.get(l).to_laurent());
        }
    }
    out
}

impl StructureConstants {
    pub fn rank(&self) -> usize {
        self.table.len()
    }

    /// Coefficients of `[j] ⋆ [k]`.
    pub fn get(&self, j: usize, k: usize) -> &[LaurentPoly] {
        &self.table[j][k]
    }

    pub fn weights(&self) -> &WeightSequence {
        &self.weights
    }

    pub fn product(&self, a: &[LaurentPoly], b: &[LaurentPoly]) -> Vector {
        let n = self.rank();
        let mut out = vec![LaurentPoly::zero(); n];
        for (j, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.table[j][k]) {
                    if !c.is_zero() {
                        o.add_product(&xy, c);
                    }
                }
            }
        }
        out
    }

    /// `Ω = Σ_k c[k][k][0]^{-1} [k]⋆[k]` in named coordinates.
    pub fn omega(&self) -> Result<Vector, HodgeError> {
        let n = self.rank();
        let mut omega = vec![LaurentPoly::zero(); n];
        for k in 0..n {
            let square = &self.table[k][k];
            let inverse = square[0].invert_monomial()?;
            for (o, c) in omega.iter_mut().zip(square) {
                o.add_product(&inverse, c);
            }
        }
        Ok(omega)
    }

    /// Named-basis coefficients of `[λ_1] ⋆ ... ⋆ [λ_n] ⋆ Ω^g`.
    pub fn hodge_vector(&self, genus: u32, colors: &[usize]) -> Result<Vector, HodgeError> {
        SurfaceDatum::closed(genus, colors).validate(self.rank())?;
        let mut acc = indicator(self.rank(), 0);
        for &c in colors {
            acc = self.product(&acc, &indicator(self.rank(), c));
        }
        let omega = self.omega()?;
        for _ in 0..genus {
            acc = self.product(&acc, &omega);
        }
        Ok(acc)
    }

    pub fn hodge_polynomial(&self, datum: &SurfaceDatum) -> Result<LaurentPoly, HodgeError> {
        datum.validate(self.rank())?;
        let mut v = self.hodge_vector(datum.genus, &datum.colors)?;
        Ok(v.swap_remove(datum.output_color.unwrap_or(0)))
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j].add_product(&a[i][k], &b[k][j]);
                }
            }
        }
    }
    out
}

pub(crate) fn mat_vec(a: &Matrix, v: &[LaurentPoly]) -> Vector {
    a.iter()
        .map(|row| {
            let mut acc = LaurentPoly::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc.add_product(x, y);
                }
            }
            acc
        })
        .collect()
}

/// `p(M)` by Horner's rule.
fn evaluate_at_matrix(p: &UniPoly, m: &Matrix) -> Matrix {
    let n = m.len();
    let mut acc = vec![vec![LaurentPoly::zero(); n]; n];
    for c in p.coeffs().iter().rev() {
        acc = mat_mul(&acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    acc
}

/// Colors and `Ω` as matrices acting on named-basis coordinates.
#[derive(Debug, Clone)]
pub struct MatrixModel {
    colors: Vec<Matrix>,
    omega: Matrix,
}

impl MatrixModel {
    pub fn new(params: &ModelParams) -> Result<Self, HodgeError> {
        let m = multiplication_matrix(params);
        let n = params.rank();
        let colors: Vec<Matrix> = (0..n)
            .map(|k| evaluate_at_matrix(&determinant_oracle(k, params), &m))
            .collect();
        let mut omega = vec![vec![LaurentPoly::zero(); n]; n];
        for p in &colors {
            let square = mat_mul(p, p);
            // ε([k]^2) is the [0]-entry of [k]^2 applied to [0].
            let inverse = square[0][0].invert_monomial()?;
            for (orow, srow) in omega.iter_mut().zip(&square) {
                for (o, s) in orow.iter_mut().zip(srow) {
                    o.add_product(&inverse, s);
                }
            }
        }
        Ok(MatrixModel { colors, omega })
    }

    pub fn rank(&self) -> usize {
        self.omega.len()
    }

    /// `χ_{M_k}(M)`.
    pub fn color_matrix(&self, k: usize) -> &Matrix {
        &self.colors[k]
    }

    pub fn omega_matrix(&self) -> &Matrix {
        &self.omega
    }

    pub fn hodge_vector(&self, genus: u32, colors: &[usize]) -> Result<Vector, HodgeError> {
        SurfaceDatum::closed(genus, colors).validate(self.rank())?;
        let mut v = indicator(self.rank(), 0);
        for _ in 0..genus {
            v = mat_vec(&self.omega, &v);
        }
        for &c in colors {
            v = mat_vec(&self.colors[c], &v);
        }
        Ok(v)
    }
}

pub fn matrix_oracle(params: &ModelParams, datum: &SurfaceDatum) -> Result<LaurentPoly, HodgeError> {
    datum.validate(params.rank())?;
    let mut v = MatrixModel::new(params)?.hodge_vector(datum.genus, &datum.colors)?;
    Ok(v.swap_remove(datum.output_color.unwrap_or(0)))
}

fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - i) / (i + 1))
}

/// `Σ_{p+q=n} C(q-1, p-1) u^p v^q`.
pub fn pascal_oracle(n: i64) -> LaurentPoly {
    LaurentPoly::from_terms((0..=n).map(|p| (p, n - p, binomial(n - p - 1, p - 1))))
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `det(X I_k - M_k)` by cofactor expansion along the last row.
pub fn determinant_oracle(k: usize, params: &ModelParams) -> UniPoly {
    let m = multiplication_matrix(params);
    let a: Vec<Vec<UniPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let entry = UniPoly::constant(-&m[i][j]);
                    if i == j {
                        &entry + &UniPoly::x()
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det(&a)
}

fn cofactor_det(a: &[Vec<UniPoly>]) -> UniPoly {
    let n = a.len();
    if n == 0 {
        return UniPoly::one();
    }
    let last = n - 1;
    let mut total = UniPoly::zero();
    for (j, entry) in a[last].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = a[..last]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = entry * &cofactor_det(&minor);
        total = if (last + j).is_multiple_of(2) {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}
