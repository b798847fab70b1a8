//! The self-test sweep: every oracle identity over a grid of `(r, s)`,
//! genera and color multisets.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::{determinant_oracle, fibonacci, mat_vec, pascal_oracle, structure_constants, MatrixModel};
use crate::enumerate::multisets;
use crate::frobenius::{FrobeniusAlgebra, RingElement};
use crate::hodge_engine::{gap_scan, parity_vanishes, weight_of, SurfaceDatum};
use crate::laurent::LaurentPoly;
use crate::su2_model::{char_poly_sequence, weight_sequence, ModelError, ModelParams};

/// Parameter points of the full sweep.
pub const FULL_POINTS: [(i64, i64); 9] = [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (7, 5), (9, 5), (9, 7), (11, 3)];
pub const QUICK_POINTS: [(i64, i64); 2] = [(3, 1), (5, 3)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub points: Vec<(i64, i64)>,
    pub max_genus: u32,
    pub max_colors: usize,
}

impl SweepConfig {
    pub fn quick() -> Self {
        SweepConfig {
            points: QUICK_POINTS.to_vec(),
            max_genus: 2,
            max_colors: 4,
        }
    }

    pub fn full() -> Self {
        SweepConfig {
            points: FULL_POINTS.to_vec(),
            max_genus: 3,
            max_colors: 6,
        }
    }
}

/// First identity that failed at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub r: u32,
    pub s: u32,
    pub check: &'static str,
    pub genus: Option<u32>,
    pub colors: Vec<usize>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for SweepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={}) {}", self.r, self.s, self.check)?;
        if let Some(g) = self.genus {
            write!(f, " genus={g}")?;
        }
        write!(
            f,
            " colors={:?}: expected {} but got {}",
            self.colors, self.expected, self.actual
        )
    }
}

/// What was checked at one point, and what (if anything) went wrong.
#[derive(Debug, Clone)]
pub struct PointReport {
    pub r: i64,
    pub s: i64,
    pub data_checked: usize,
    pub failure: Option<SweepFailure>,
}

impl PointReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

pub type AlgebraBuilder = dyn Fn(&ModelParams) -> Result<FrobeniusAlgebra, ModelError> + Sync;

/// Runs the sweep, one report per point, in the order of `config.points`.
pub fn run_sweep(config: &SweepConfig, build: &AlgebraBuilder) -> Vec<PointReport> {
    config
        .points
        .par_iter()
        .map(|&(r, s)| {
            let (data_checked, failure) = match ModelParams::new(r, s) {
                Ok(params) => check_point(&params, config, build),
                Err(e) => (
                    0,
                    Some(SweepFailure {
                        r: r as u32,
                        s: s as u32,
                        check: "parameters",
                        genus: None,
                        colors: vec![],
                        expected: "valid (r, s)".into(),
                        actual: e.to_string(),
                    }),
                ),
            };
            PointReport {
                r,
                s,
                data_checked,
                failure,
            }
        })
        .collect()
}

struct Ctx<'a> {
    params: &'a ModelParams,
}

impl Ctx<'_> {
    fn fail(
        &self,
        check: &'static str,
        genus: Option<u32>,
        colors: &[usize],
        expected: impl ToString,
        actual: impl ToString,
    ) -> SweepFailure {
        SweepFailure {
            r: self.params.r(),
            s: self.params.s(),
            check,
            genus,
            colors: colors.to_vec(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(
        &self,
        check: &'static str,
        genus: Option<u32>,
        colors: &[usize],
        expected: &T,
        actual: &T,
    ) -> Result<(), SweepFailure> {
        if expected == actual {
            Ok(())
        } else {
            Err(self.fail(check, genus, colors, format!("{expected:?}"), format!("{actual:?}")))
        }
    }
}

fn show(v: &[LaurentPoly]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn check_point(params: &ModelParams, config: &SweepConfig, build: &AlgebraBuilder) -> (usize, Option<SweepFailure>) {
    let ctx = Ctx { params };
    let algebra = match build(params) {
        Ok(a) => a,
        Err(e) => return (0, Some(ctx.fail("build algebra", None, &[], "an algebra", e))),
    };
    match check_structure(&ctx, &algebra).and_then(|()| check_data(&ctx, &algebra, config)) {
        Ok(n) => (n, None),
        Err(f) => (0, Some(f)),
    }
}

/// Identities that involve no surface data.
fn check_structure(ctx: &Ctx<'_>, algebra: &FrobeniusAlgebra) -> Result<(), SweepFailure> {
    let params = ctx.params;
    let n = params.rank();
    ctx.expect_eq("rank", None, &[], &n, &algebra.rank())?;

    let chi = char_poly_sequence(&weight_sequence(params));
    for (k, c) in chi.iter().enumerate() {
        let det = determinant_oracle(k, params);
        if &det != c {
            return Err(ctx.fail("determinant vs recurrence", None, &[k], det, c));
        }
    }

    let table = structure_constants(params);
    for j in 0..n {
        for k in j..n {
            let product = algebra.to_named_basis(&algebra.mul(algebra.basis_element(j), algebra.basis_element(k)));
            if product != table.get(j, k) {
                return Err(ctx.fail(
                    "structure constants",
                    None,
                    &[j, k],
                    show(table.get(j, k)),
                    show(&product),
                ));
            }
        }
    }

    let vacuum = algebra.epsilon(algebra.omega());
    let rank = LaurentPoly::constant(n as i64);
    if vacuum != rank {
        return Err(ctx.fail("genus-1 vacuum", Some(1), &[], rank, vacuum));
    }

    let (u0, v0) = params.signature_point();
    for k in 1..n {
        let product = algebra.to_named_basis(&algebra.mul(algebra.basis_element(k), algebra.basis_element(1)));
        let sign = product[k - 1].specialize_integer(u0, v0).ok().flatten();
        let exponent = params.floor_ratio(k as u64) + params.floor_ratio(k as u64 + 1);
        let expected = if exponent.is_multiple_of(2) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        if sign.as_ref() != Some(&expected) {
            return Err(ctx.fail(
                "signature sign of V_0(k-1; k, 1)",
                Some(0),
                &[k, 1],
                expected,
                format!("{sign:?}"),
            ));
        }
    }

    if (params.r(), params.s()) == (5, 3) {
        for len in 2..=20usize {
            let colors = vec![2; len];
            let e = algebra.epsilon(&algebra.power(algebra.basis_element(2), len as u32));
            let expected = pascal_oracle(len as i64);
            if e != expected {
                return Err(ctx.fail("pascal triangle", Some(0), &colors, expected, e));
            }
            let dim = e.specialize_integer(1, 1).ok().flatten();
            ctx.expect_eq(
                "fibonacci dimension",
                Some(0),
                &colors,
                &Some(fibonacci(len as u32 - 1)),
                &dim,
            )?;
        }
    }
    Ok(())
}

/// Three-way agreement and the Hodge-theoretic constraints on every datum.
fn check_data(ctx: &Ctx<'_>, algebra: &FrobeniusAlgebra, config: &SweepConfig) -> Result<usize, SweepFailure> {
    let params = ctx.params;
    let n = params.rank();
    let table = structure_constants(params);
    let matrices = MatrixModel::new(params).map_err(|e| ctx.fail("matrix model", None, &[], "a model", e))?;
    let oracle_omega = table
        .omega()
        .map_err(|e| ctx.fail("structure omega", None, &[], "a unit norm", e))?;

    let genera: Vec<u32> = (0..=config.max_genus).collect();
    let engine_omega: Vec<RingElement> = genera.iter().map(|&g| algebra.power(algebra.omega(), g)).collect();
    // Multiplication by Ω^g in named coordinates, from the structure constants.
    let mut structure_omega = vec![unit_vector(n)];
    for _ in 1..genera.len() {
        let next = table.product(structure_omega.last().expect("nonempty"), &oracle_omega);
        structure_omega.push(next);
    }
    let structure_omega_ops: Vec<Vec<Vec<LaurentPoly>>> = structure_omega
        .iter()
        .map(|w| (0..n).map(|j| table.product(&basis(n, j), w)).collect::<Vec<_>>())
        .map(transpose)
        .collect();
    let mut matrix_omega = vec![identity_like(n)];
    for _ in 1..genera.len() {
        let prev = matrix_omega.last().expect("nonempty");
        let next: Vec<Vec<LaurentPoly>> = transpose(
            (0..n)
                .map(|j| mat_vec(matrices.omega_matrix(), &column(prev, j)))
                .collect(),
        );
        matrix_omega.push(next);
    }

    // Genus-0 products, each built from its prefix.
    let data = multisets(n, config.max_colors);
    let index: HashMap<&[usize], usize> = data.iter().enumerate().map(|(i, d)| (d.as_slice(), i)).collect();
    let mut engine_base: Vec<RingElement> = Vec::with_capacity(data.len());
    let mut structure_base: Vec<Vec<LaurentPoly>> = Vec::with_capacity(data.len());
    let mut matrix_base: Vec<Vec<LaurentPoly>> = Vec::with_capacity(data.len());
    for colors in &data {
        match colors.split_last() {
            None => {
                engine_base.push(algebra.unit());
                structure_base.push(unit_vector(n));
                matrix_base.push(unit_vector(n));
            }
            Some((&last, prefix)) => {
                let i = index[prefix];
                engine_base.push(algebra.mul(&engine_base[i], algebra.basis_element(last)));
                structure_base.push(table.product(&structure_base[i], &basis(n, last)));
                matrix_base.push(mat_vec(matrices.color_matrix(last), &matrix_base[i]));
            }
        }
    }

    let jobs: Vec<(usize, u32)> = genera
        .iter()
        .flat_map(|&g| (0..data.len()).map(move |i| (i, g)))
        .collect();
    let outcomes: Vec<Result<(), SweepFailure>> = jobs
        .par_iter()
        .map(|&(i, g)| {
            let colors = &data[i];
            let gi = g as usize;
            let engine = algebra.to_named_basis(&algebra.mul(&engine_base[i], &engine_omega[gi]));
            let structure = mat_vec(&structure_omega_ops[gi], &structure_base[i]);
            let matrix = mat_vec(&matrix_omega[gi], &matrix_base[i]);
            if engine != structure {
                return Err(ctx.fail(
                    "engine vs structure constants",
                    Some(g),
                    colors,
                    show(&structure),
                    show(&engine),
                ));
            }
            if engine != matrix {
                return Err(ctx.fail("engine vs matrix model", Some(g), colors, show(&matrix), show(&engine)));
            }
            check_closed(ctx, g, colors, &engine[0])?;
            for (mu, e) in engine.iter().enumerate() {
                let datum = SurfaceDatum::with_output(g, colors.clone(), mu);
                if parity_vanishes(&datum) && !e.is_zero() {
                    return Err(ctx.fail("parity vanishing", Some(g), colors, format!("0 at [{mu}]"), e));
                }
                if !e.is_homogeneous(weight_of(&datum)) {
                    return Err(ctx.fail(
                        "homogeneity",
                        Some(g),
                        colors,
                        format!("weight {}", weight_of(&datum)),
                        e,
                    ));
                }
            }
            Ok(())
        })
        .collect();
    outcomes.into_iter().collect::<Result<Vec<()>, _>>()?;
    Ok(jobs.len())
}

fn check_closed(ctx: &Ctx<'_>, g: u32, colors: &[usize], e: &LaurentPoly) -> Result<(), SweepFailure> {
    let datum = SurfaceDatum::closed(g, colors);
    if parity_vanishes(&datum) {
        if !e.is_zero() {
            return Err(ctx.fail("parity vanishing", Some(g), colors, 0, e));
        }
        return Ok(());
    }
    let weight = weight_of(&datum);
    if !e.is_homogeneous(weight) {
        return Err(ctx.fail("homogeneity", Some(g), colors, format!("weight {weight}"), e));
    }
    if !e.terms().all(|(_, c)| c.is_positive()) {
        return Err(ctx.fail("positivity", Some(g), colors, "positive coefficients", e));
    }
    // From genus 2 on, Ω^g contributes factors like u^(-1)v and bidegrees
    // can leave the first quadrant.
    if g <= 1 && !e.terms().all(|(x, _)| x.p >= 0 && x.q >= 0) {
        return Err(ctx.fail("non-negative bidegrees", Some(g), colors, "p, q ≥ 0", e));
    }
    match gap_scan(e) {
        Ok(report) if !report.has_type2_gap => {}
        _ => return Err(ctx.fail("no gaps", Some(g), colors, "contiguous p-support", e)),
    }
    let dim = e.specialize_integer(1, 1).ok().flatten().unwrap_or_default();
    let (u0, v0) = ctx.params.signature_point();
    let sig = e.specialize_integer(u0, v0).ok().flatten().unwrap_or_default();
    if dim < sig.abs() {
        return Err(ctx.fail("dimension ≥ |signature|", Some(g), colors, dim, sig));
    }
    Ok(())
}

fn unit_vector(n: usize) -> Vec<LaurentPoly> {
    basis(n, 0)
}

fn basis(n: usize, k: usize) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); n];
    v[k] = LaurentPoly::one();
    v
}

fn identity_like(n: usize) -> Vec<Vec<LaurentPoly>> {
    (0..n).map(|k| basis(n, k)).collect()
}

fn column(m: &[Vec<LaurentPoly>], j: usize) -> Vec<LaurentPoly> {
    m.iter().map(|row| row[j].clone()).collect()
}

fn transpose(columns: Vec<Vec<LaurentPoly>>) -> Vec<Vec<LaurentPoly>> {
    let n = columns.len();
    (0..n).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::UniPoly;
    use crate::su2_model::{build_algebra, Variable, WeightSequence};

    #[test]
    fn quick_sweep_passes() {
        let reports = run_sweep(&SweepConfig::quick(), &|p: &ModelParams| build_algebra(p));
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert!(r.passed(), "{}", r.failure.as_ref().unwrap());
            assert!(r.data_checked > 0);
        }
    }

    #[test]
    fn inverted_parity_is_caught() {
        let mutant = |p: &ModelParams| -> Result<FrobeniusAlgebra, ModelError> {
            let flipped = weight_sequence(p)
                .as_slice()
                .iter()
                .map(|w| match w {
                    Variable::U => Variable::V,
                    Variable::V => Variable::U,
                })
                .collect();
            let mut chi: Vec<UniPoly> = char_poly_sequence(&WeightSequence::new(flipped));
            let modulus = chi.pop().unwrap();
            Ok(FrobeniusAlgebra::new(modulus, chi, (0..p.rank()).collect())?)
        };
        let reports = run_sweep(&SweepConfig::quick(), &mutant);
        let failure = reports[1].failure.as_ref().expect("(5,3) must fail");
        assert_eq!((failure.r, failure.s), (5, 3));
        assert!(reports.iter().all(|r| !r.passed()));
    }
}
