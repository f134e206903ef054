//! Certified evaluation of ζ(1+it) and explicit upper bounds for |ζ(1+it)|.
//!
//! The crate is organised around the two routes to a bound:
//!
//! * [`zeta_eval`]: a refined Euler–Maclaurin approximation `g_N(t)` with a
//!   proven error radius, plus an independent alternating-series oracle.
//! * [`expsum`]: second-derivative exponential-sum estimates and the
//!   closed-form optimiser for bounds of the form `|ζ(1+it)| ≤ v·log t`.
//! * [`rs_bounds`]: Riemann–Siegel constants (`b₀`, `b₁(σ)`, `c(σ)`) and the
//!   affine bound `|ζ(1+it)| ≤ ½·log t + C`.
//! * [`verifier`]: grid scans that check those bounds numerically.

// `!(x > 0.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod expsum;
pub mod quadrature;
pub mod rs_bounds;
pub mod search;
pub mod tables;
pub mod verifier;
pub mod zeta_eval;

pub use error::{Error, Result};
pub use expsum::{
    asymptotic_constants, omega_residual, optimal_bound_params, AsymptoticConstants, BoundTriple,
    ExpSumCoeffs,
};
pub use num_complex::Complex64;
pub use rs_bounds::{affine_c, rs_constants, AffineBound, RSConstants};
pub use verifier::{
    check_bound, crossing_point, max_ratio, scan_interval, LinearBound, MaxRatio, ScanConfig,
    ScanPoint, ScanReport, VerificationResult,
};
pub use zeta_eval::{
    choose_n, error_bound, eval_zeta_certified, harmonic_bound, oracle_zeta, CertifiedComplex,
    CertifiedReal, EvalConfig,
};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
