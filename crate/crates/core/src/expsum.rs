//! Exponential-sum bounds for |ζ(1+it)|.
//!
//! Combines the second-derivative (Kuzmin–Landau) estimate with a dyadic
//! split of `Σ_{n≤x} n^{-1-it}` to get, for `1 ≤ x₀ ≤ x`,
//!
//! ```text
//! |ζ(1+it)| ≤ E0 log x₀ + E1/x₀ + E2/x₀² + G0 log x + G2/x² + Q0
//! ```
//!
//! and from it the smallest `v` with `|ζ(1+it)| ≤ v·log t` for `t ≥ t₀`.
//!
//! Table values reach `t₀ = 10³⁰⁰`, where `t²` and `t^v` overflow, so the
//! optimiser works with `log t` and factors `√t` out of every coefficient.

use std::f64::consts::{LN_2, PI, SQRT_2};

use crate::error::{domain, Error, Result};
use crate::EULER_GAMMA;

/// `e₀ = 8√2(1+log 2)/log 2`.
pub fn e0() -> f64 {
    8.0 * SQRT_2 * (1.0 + LN_2) / LN_2
}

/// `e₁ = (8√2/π)(2 − log 2)`.
pub fn e1() -> f64 {
    8.0 * SQRT_2 / PI * (2.0 - LN_2)
}

/// `e₂ = (8/(3π)) log 2`.
pub fn e2() -> f64 {
    8.0 / (3.0 * PI) * LN_2
}

/// Smallest `t₀` accepted by [`optimal_bound_params`]; above it
/// `y_E(t) ≤ y_G(t)`.
pub const MIN_T0: f64 = 2000.0;

/// The coefficient functions evaluated at one `t`.
///
/// `g2` overflows to infinity above `t ≈ 10¹⁵⁴`; the optimiser does not
/// use this struct for that reason.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpSumCoeffs {
    pub t: f64,
    /// `E0(t) = 1 − e₀/√t`
    pub big_e0: f64,
    /// `E1(t) = e₁√t + 13`
    pub big_e1: f64,
    /// `E2(t) = e₂ t`
    pub big_e2: f64,
    /// `G0(t) = e₀/√t`
    pub big_g0: f64,
    /// `G2(t) = (t² + 5t + 4)/32`
    pub big_g2: f64,
    /// `Q0(t) = γ + e₀ log 2/√t + 1/t`
    pub big_q0: f64,
}

/// The coefficient functions at `t`.
pub fn coeffs(t: f64) -> Result<ExpSumCoeffs> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("t must be positive, got {t}"));
    }
    let s = t.sqrt();
    Ok(ExpSumCoeffs {
        t,
        big_e0: 1.0 - e0() / s,
        big_e1: e1() * s + 13.0,
        big_e2: e2() * t,
        big_g0: e0() / s,
        big_g2: (t * t + 5.0 * t + 4.0) / 32.0,
        big_q0: EULER_GAMMA + e0() * LN_2 / s + 1.0 / t,
    })
}

fn check_y(y: f64) -> Result<()> {
    if !(y >= 1.0 && y.is_finite()) {
        return domain(format!("y must be at least 1, got {y}"));
    }
    Ok(())
}

/// `h_E(y) = E0 log y + E1/y + E2/y²`.
pub fn h_e(t: f64, y: f64) -> Result<f64> {
    check_y(y)?;
    let c = coeffs(t)?;
    Ok(c.big_e0 * y.ln() + c.big_e1 / y + c.big_e2 / (y * y))
}

/// `h_G(y) = G0 log y + G2/y²`.
pub fn h_g(t: f64, y: f64) -> Result<f64> {
    check_y(y)?;
    let c = coeffs(t)?;
    Ok(c.big_g0 * y.ln() + c.big_g2 / (y * y))
}

/// `y_E(t)/√t`, the positive root of `E0 y² − E1 y − 2E2` rescaled so that
/// nothing overflows.
fn y_e_scaled(t: f64) -> Result<f64> {
    if !(t > e0() * e0() && t.is_finite()) {
        return domain(format!("y_E needs t > e0² = {:.4}, got {t}", e0() * e0()));
    }
    let s = t.sqrt();
    let lead = 1.0 - e0() / s;
    let e1_tilde = e1() + 13.0 / s;
    Ok((e1_tilde + (e1_tilde * e1_tilde + 8.0 * lead * e2()).sqrt()) / (2.0 * lead))
}

/// `log y_E(t)`.
pub fn log_y_e(t: f64) -> Result<f64> {
    Ok(0.5 * t.ln() + y_e_scaled(t)?.ln())
}

/// `log y_G(t)` with `y_G² = (t² + 5t + 4)√t/(16 e₀)`.
pub fn log_y_g(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("t must be positive, got {t}"));
    }
    let log_t = t.ln();
    let log_quadratic = 2.0 * log_t + (5.0 / t + 4.0 / (t * t)).ln_1p();
    Ok(0.5 * (log_quadratic + 0.5 * log_t - (16.0 * e0()).ln()))
}

/// Minimiser of `h_E` for `t > e₀²`.
pub fn y_e(t: f64) -> Result<f64> {
    Ok(t.sqrt() * y_e_scaled(t)?)
}

/// Minimiser of `h_G`.
pub fn y_g(t: f64) -> Result<f64> {
    let y = log_y_g(t)?.exp();
    if !y.is_finite() {
        return Err(Error::Overflow(format!("y_G({t}) overflows; use log_y_g")));
    }
    Ok(y)
}

/// `min_y h_E(y)` computed in scaled form.
fn h_e_min(t: f64) -> Result<f64> {
    let kappa = y_e_scaled(t)?;
    let s = t.sqrt();
    let lead = 1.0 - e0() / s;
    Ok(lead * log_y_e(t)? + (e1() + 13.0 / s) / kappa + e2() / (kappa * kappa))
}

/// `min_y h_G(y)`; at the minimiser `G2/y² = G0/2`.
fn h_g_min(t: f64) -> Result<f64> {
    let g0 = e0() / t.sqrt();
    Ok(g0 * log_y_g(t)? + 0.5 * g0)
}

/// One row of the `(t₀, β, v, u)` table: `|ζ(1+it)| ≤ v·log t` for
/// `t ≥ t₀`, realised with `x₀ = β t^v` and `x = t^u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundTriple {
    pub t0: f64,
    pub beta: f64,
    pub v: f64,
    pub u: f64,
}

/// Smallest `v` for a given `t₀ ≥ 2000`, from the closed-form minimisers
/// `y_E` and `y_G`.
pub fn optimal_bound_params(t0: f64) -> Result<BoundTriple> {
    if !(t0 >= MIN_T0 && t0.is_finite()) {
        return domain(format!("t0 must be at least {MIN_T0}, got {t0}"));
    }
    let log_t = t0.ln();
    let log_ye = log_y_e(t0)?;
    let log_yg = log_y_g(t0)?;
    if log_ye > log_yg {
        return domain(format!("y_E > y_G at t0 = {t0}; the split x0 ≤ x fails"));
    }
    let q0 = EULER_GAMMA + e0() * LN_2 / t0.sqrt() + 1.0 / t0;
    let v = (h_e_min(t0)? + h_g_min(t0)? + q0) / log_t;
    let beta = (log_ye - v * log_t).exp();
    let u = log_yg / log_t;
    Ok(BoundTriple { t0, beta, v, u })
}

/// `A + ω(t₀)` with `A = log β + γ`; zero exactly when `v·log t₀` equals
/// the bound at `(x₀, x) = (β t₀^v, t₀^u)`, negative when the bound is slack.
pub fn omega_residual(params: &BoundTriple) -> f64 {
    let BoundTriple { t0, beta, v, u } = *params;
    let log_t = t0.ln();
    let log_beta = beta.ln();
    let mut terms = [
        log_beta + EULER_GAMMA,
        e1() / beta * ((0.5 - v) * log_t).exp(),
        13.0 / beta * (-v * log_t).exp(),
        e2() / (beta * beta) * ((1.0 - 2.0 * v) * log_t).exp(),
        1.0 / t0,
        ((2.0 - 2.0 * u) * log_t).exp() * (1.0 + 5.0 / t0 + 4.0 / (t0 * t0)) / 32.0,
        e0() * (-0.5 * log_t).exp() * ((u - v) * log_t - log_beta + LN_2),
    ];
    terms.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    terms.iter().sum()
}

/// Limits of the exponential-sum route as `t → ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    /// `e₀²`, where `E0(t)` changes sign.
    pub e0sq: f64,
    /// `lim y_E(t)/√t`.
    pub lambda1: f64,
    /// `lim h_E(y_E(t)) − ½ log t`.
    pub lambda2: f64,
    /// `lim β(t₀)`.
    pub beta_limit: f64,
    /// Best achievable intercept `γ + λ₂` in `½ log t + C`.
    pub hc_min: f64,
}

pub fn asymptotic_constants() -> AsymptoticConstants {
    let (e1, e2) = (e1(), e2());
    let lambda1 = 0.5 * (e1 + (e1 * e1 + 8.0 * e2).sqrt());
    let lambda2 = lambda1.ln() + e1 / lambda1 + e2 / (lambda1 * lambda1);
    AsymptoticConstants {
        e0sq: e0() * e0(),
        lambda1,
        lambda2,
        beta_limit: (-e1 / lambda1 - e2 / (lambda1 * lambda1) - EULER_GAMMA).exp(),
        hc_min: EULER_GAMMA + lambda2,
    }
}

/// Kuzmin–Landau bound for `|Σ_{n∈I} e^{2πi f(n)}|` when
/// `λ ≤ |f''| ≤ αλ` on `I`:
/// `(4/√π)α|I|√λ + (8/√π)/√λ + α|I|λ + 3`.
pub fn kuzmin_landau_bound(interval_length: f64, lambda: f64, alpha: f64) -> Result<f64> {
    if !(interval_length > 0.0 && interval_length.is_finite()) {
        return domain(format!(
            "interval length must be positive, got {interval_length}"
        ));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return domain(format!("lambda must be positive, got {lambda}"));
    }
    if !(alpha >= 1.0 && alpha.is_finite()) {
        return domain(format!("alpha must be at least 1, got {alpha}"));
    }
    let sqrt_pi = PI.sqrt();
    let root = lambda.sqrt();
    Ok(4.0 / sqrt_pi * alpha * interval_length * root
        + 8.0 / sqrt_pi / root
        + alpha * interval_length * lambda
        + 3.0)
}

/// Bound for `|Σ_{a<n≤b} n^{-1-it}|`, any reals `0 < a < b`.
pub fn partial_sum_bound(a: f64, b: f64, t: f64) -> Result<f64> {
    if !(a > 0.0 && b > a && b.is_finite()) {
        return domain(format!("need 0 < a < b, got a = {a}, b = {b}"));
    }
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("t must be positive, got {t}"));
    }
    let st = t.sqrt();
    let log_ratio = (b / a).ln();
    let c = 2.0 * SQRT_2;
    Ok(
        2.0 * c * (b - a) * st / (PI * a * a) - c * st * log_ratio / (PI * a)
            + 4.0 * c * log_ratio / st
            + 4.0 * c / st
            + t * log_ratio / (2.0 * PI * a * a)
            + 3.0 / a,
    )
}
