//! Exact Hodge polynomials, dimensions and signatures of the SU(2) modular
//! functors of level `2r` (`r` odd), in any genus.
//!
//! The pipeline is:
//!
//! 1. [`su2_model`] turns `(r, s)` into the weight sequence `w_k ∈ {u, v}`
//!    and the algebra `V = Z[u^±1, v^±1][X] / χ_M(X)` with basis
//!    `[k] = χ_{M_k}(X)`.
//! 2. [`frobenius`] implements `V`: products, the counit `ε`, the pairing
//!    `η` and the handle element `Ω`.
//! 3. [`hodge_engine`] evaluates `ε([λ_1] ⋯ [λ_n] Ω^g)` and derives weight,
//!    dimension (value at `u = v = 1`), signature and gap data.
//!
//! [`oracles`] recomputes the same numbers along routes that share no code
//! with the quotient-ring reduction.
//!
//! ```
//! use hodge_core::{build_algebra, hodge_polynomial, validate, SurfaceDatum};
//!
//! let params = validate(5, 3).unwrap();
//! let algebra = build_algebra(&params).unwrap();
//! let e = hodge_polynomial(&algebra, &SurfaceDatum::closed(0, [2, 2, 2, 2])).unwrap();
//! assert_eq!(e.to_string(), "u*v^3 + u^2*v^2");
//! ```

pub mod enumerate;
pub mod frobenius;
pub mod hodge_engine;
pub mod laurent;
pub mod oracles;
pub mod su2_model;

pub use frobenius::{AlgebraError, FrobeniusAlgebra, RingElement, UniPoly};
pub use hodge_engine::{
    apply_shift, evaluate, gap_scan, hodge_polynomial, hodge_vector, parity_vanishes, signature, weight_of, GapReport,
    HodgeError, HodgeResult, SurfaceDatum,
};
pub use laurent::{ExponentPair, LaurentError, LaurentPoly};
pub use su2_model::{build_algebra, validate, ModelError, ModelParams};
