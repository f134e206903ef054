//! Riemann–Siegel route to `|ζ(1+it)| ≤ ½ log t + C`.
//!
//! The first two Riemann–Siegel correction coefficients `C₀(p)` and `C₁(p)`
//! are evaluated in closed form. Their maxima over `p ∈ [0, 1]` together
//! with the remainder constant `c(σ)` feed the decreasing function `ϑ(t)`,
//! and the affine intercept is `C(t₀) = γ − ½ log 2π + ϑ(t₀)`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::quadrature::integrate;
use crate::search::{golden_section_max, Extremum};
use crate::EULER_GAMMA;

/// Slope of `ṽ(t₀) = ½ + 0.6633/log t₀`: the four-decimal intercept at `t₀ = 10⁶`.
pub const V_TILDE_INTERCEPT: f64 = 0.6633;

/// Half-width of the window around `p = ±½` where `C₀` is expanded in series.
const SERIES_RADIUS: f64 = 0.05;
const SERIES_TERMS: usize = 20;

const MAX_GRID: usize = 10_000;
const CONTOUR_HALF_WIDTH: f64 = 12.0;

/// `√(2π/t)·exp(π/(32t) − 1/(24t²) + 5/(24t⁴))/(1 − e^{−πt})`, an upper
/// bound for `|χ(1+it)|`.
pub fn chi_upper(t: f64) -> Result<f64> {
    Ok((2.0 * PI / t).sqrt() * chi_correction(t)?)
}

fn chi_correction(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("t must be positive, got {t}"));
    }
    let t2 = t * t;
    let expo = PI / (32.0 * t) - 1.0 / (24.0 * t2) + 5.0 / (24.0 * t2 * t2);
    Ok(expo.exp() / -(-PI * t).exp_m1())
}

fn check_p(p: f64) -> Result<()> {
    if !(p.abs() <= 1.0) {
        return domain(format!("p must lie in [-1, 1], got {p}"));
    }
    Ok(())
}

/// `C₀(p) = (e^{πi(p²/2+3/8)} − i√2 cos(πp/2)) / (2 cos πp)`.
pub fn c0(p: f64) -> Result<Complex64> {
    Ok(c0_derivatives(p)?[0])
}

/// `C₁(p) = C₀'''(p)/(12π²) + (1−2σ)/(4πi)·C₀'(p)`.
pub fn c1(p: f64, sigma: f64) -> Result<Complex64> {
    let d = c0_derivatives(p)?;
    let i = Complex64::i();
    Ok(d[3] / (12.0 * PI * PI) + (1.0 - 2.0 * sigma) / (4.0 * PI * i) * d[1])
}

/// `C₀` and its first three derivatives.
pub fn c0_derivatives(p: f64) -> Result<[Complex64; 4]> {
    check_p(p)?;
    let x = p.abs() - 0.5;
    if x.abs() < SERIES_RADIUS {
        let mut d = series_derivatives(x);
        if p < 0.0 {
            d[1] = -d[1];
            d[3] = -d[3];
        }
        Ok(d)
    } else {
        Ok(closed_form_derivatives(p))
    }
}

/// `C₀` and derivatives by the quotient rule alone; loses accuracy like
/// `ε/|p∓½|^{k+1}` for the `k`-th derivative near the removable singularity.
pub fn c0_closed_form_derivatives(p: f64) -> Result<[Complex64; 4]> {
    check_p(p)?;
    Ok(closed_form_derivatives(p))
}

fn closed_form_derivatives(p: f64) -> [Complex64; 4] {
    let i = Complex64::i();
    let (pi2, pi3) = (PI * PI, PI * PI * PI);
    let e = Complex64::from_polar(1.0, PI * (0.5 * p * p + 0.375));
    let (s_half, c_half) = (FRAC_PI_2 * p).sin_cos();
    let k = FRAC_PI_2;
    let g = [
        -i * SQRT_2 * c_half,
        i * SQRT_2 * k * s_half,
        i * SQRT_2 * k * k * c_half,
        -i * SQRT_2 * k * k * k * s_half,
    ];
    let n = [
        e + g[0],
        i * PI * p * e + g[1],
        (i * PI - pi2 * p * p) * e + g[2],
        (-3.0 * pi2 * p - i * pi3 * p * p * p) * e + g[3],
    ];
    let (s, c) = (PI * p).sin_cos();
    let d = [2.0 * c, -2.0 * PI * s, -2.0 * pi2 * c, 2.0 * pi3 * s];
    let q0 = n[0] / d[0];
    let q1 = (n[1] - q0 * d[1]) / d[0];
    let q2 = (n[2] - 2.0 * q1 * d[1] - q0 * d[2]) / d[0];
    let q3 = (n[3] - 3.0 * q2 * d[1] - 3.0 * q1 * d[2] - q0 * d[3]) / d[0];
    [q0, q1, q2, q3]
}

/// Taylor coefficients of `C₀(½ + x)`, from dividing the expansions of
/// numerator and denominator after cancelling their common zero.
fn series_coefficients() -> &'static [Complex64; SERIES_TERMS] {
    static COEFFS: OnceLock<[Complex64; SERIES_TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let m = SERIES_TERMS + 1;
        let i = Complex64::i();
        // exp(w) with w = iπ(x + x²)/2, by b_n = (1/n) Σ k w_k b_{n−k}
        let w1 = i * FRAC_PI_2;
        let w2 = i * FRAC_PI_2;
        let mut ex = vec![Complex64::new(0.0, 0.0); m];
        ex[0] = Complex64::new(1.0, 0.0);
        for n in 1..m {
            let mut acc = w1 * ex[n - 1];
            if n >= 2 {
                acc += 2.0 * w2 * ex[n - 2];
            }
            ex[n] = acc / n as f64;
        }
        // a^k/k! with the sign pattern of cos and sin
        let trig = |a: f64, k: usize| -> (f64, f64) {
            let mut mag = 1.0;
            for j in 1..=k {
                mag *= a / j as f64;
            }
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                (sign * mag, 0.0)
            } else {
                (0.0, sign * mag)
            }
        };
        // N(½+x) = i·exp(w) − i(cos(πx/2) − sin(πx/2)),  D(½+x) = −2 sin(πx)
        let num: Vec<Complex64> = (0..m)
            .map(|k| {
                let (c, s) = trig(FRAC_PI_2, k);
                i * ex[k] - i * (c - s)
            })
            .collect();
        let den: Vec<f64> = (0..m).map(|k| -2.0 * trig(PI, k).1).collect();
        let mut q = [Complex64::new(0.0, 0.0); SERIES_TERMS];
        for n in 0..SERIES_TERMS {
            let mut acc = num[n + 1];
            for k in 1..=n {
                acc -= den[k + 1] * q[n - k];
            }
            q[n] = acc / den[1];
        }
        q
    })
}

fn series_derivatives(x: f64) -> [Complex64; 4] {
    let q = series_coefficients();
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (j, slot) in out.iter_mut().enumerate() {
        // Horner on Σ_{k≥j} k!/(k−j)! q_k x^{k−j}
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (j..SERIES_TERMS).rev() {
            let falling: f64 = (k + 1 - j..=k).map(|m| m as f64).product();
            acc = acc * x + q[k] * falling;
        }
        *slot = acc;
    }
    out
}

/// `C_k(p)` for `k ∈ {0, 1}` by quadrature of its integral representation,
/// along the line `v = s·e^{−iπ/4}` through the origin.
pub fn ck_contour(p: f64, k: u8, sigma: f64) -> Result<Complex64> {
    check_p(p)?;
    if k > 1 {
        return domain(format!("only k = 0 and k = 1 are supported, got {k}"));
    }
    let i = Complex64::i();
    let dir = Complex64::from_polar(1.0, -FRAC_PI_4);
    let sqrt_pi = PI.sqrt();
    let integrand = |s: f64| -> Result<Complex64> {
        let v = dir * s;
        let w = v - i * p;
        let z = sqrt_pi * w;
        let poly = if k == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            -z * z * z / 3.0 - 2.0 * i * sigma * z
        };
        Ok((-i * PI * w * w / 2.0).exp() / (PI * v / 2.0).cosh() * poly * dir)
    };
    let quad = integrate(
        integrand,
        -CONTOUR_HALF_WIDTH,
        CONTOUR_HALF_WIDTH,
        &[0.0],
        1e-12,
        4096,
    )?;
    if quad.error > 1e-8 {
        return Err(Error::Convergence(format!(
            "contour quadrature error {:e}",
            quad.error
        )));
    }
    let prefactor = Complex64::from_polar(0.25, -PI / 8.0) * (4.0 * sqrt_pi).powi(-(k as i32));
    Ok(prefactor * quad.value)
}

fn maximise_on_unit(f: impl Fn(f64) -> Result<f64>) -> Result<Extremum> {
    let mut best = Extremum {
        x: 0.0,
        value: f(0.0)?,
    };
    let mut best_i = 0;
    for i in 1..=MAX_GRID {
        let p = i as f64 / MAX_GRID as f64;
        let v = f(p)?;
        if v > best.value {
            best = Extremum { x: p, value: v };
            best_i = i;
        }
    }
    let lo = best_i.saturating_sub(1) as f64 / MAX_GRID as f64;
    let hi = (best_i + 1).min(MAX_GRID) as f64 / MAX_GRID as f64;
    let refined = golden_section_max(&f, lo, hi, 1e-10)?;
    Ok(if refined.value > best.value {
        refined
    } else {
        best
    })
}

/// `b₀ = max_{p∈[0,1]} |C₀(p)|` and its argmax.
pub fn b0() -> Result<Extremum> {
    maximise_on_unit(|p| Ok(c0(p)?.norm()))
}

/// `b₁(σ) = max_{p∈[0,1]} |C₁(p, σ)|` and its argmax.
pub fn b1(sigma: f64) -> Result<Extremum> {
    maximise_on_unit(|p| Ok(c1(p, sigma)?.norm()))
}

/// `H(σ, y) = |1−u|^{−σ}|u|^{−2}/(1 + Re f(u))` with `u = ½ + y e^{iπ/4}`
/// and `f(u) = −½ − 1/u − u^{−2} log(1−u)`.
pub fn h_integrand(sigma: f64, y: f64) -> Result<f64> {
    let u = Complex64::new(0.5, 0.0) + Complex64::from_polar(y, FRAC_PI_4);
    let one = Complex64::new(1.0, 0.0);
    let f = -0.5 - one / u - (one - u).ln() / (u * u);
    let denom = 1.0 + f.re;
    if !(denom > 0.0) {
        return Err(Error::Convergence(format!(
            "1 + Re f(u) = {denom} is not positive at y = {y}"
        )));
    }
    Ok((one - u).norm().powf(-sigma) / u.norm_sqr() / denom)
}

/// `c(σ) = (1/π²)∫_ℝ H(σ, y) dy`; the tails `|y| > 1` are mapped to
/// `(0, 1]` by `y = 1/x`.
pub fn c_sigma(sigma: f64) -> Result<f64> {
    const TOL: f64 = 1e-11;
    let core = integrate(|y| h_integrand(sigma, y), -1.0, 1.0, &[0.0], TOL, 10_000)?;
    let tail = |sign: f64| {
        integrate(
            |x: f64| Ok(h_integrand(sigma, sign / x)? / (x * x)),
            0.0,
            1.0,
            &[],
            TOL,
            10_000,
        )
    };
    let right = tail(1.0)?;
    let left = tail(-1.0)?;
    Ok((left.value + core.value + right.value) / (PI * PI))
}

/// Riemann–Siegel constants computed once per process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RSConstants {
    pub b0: f64,
    pub b1_sigma0: f64,
    pub b1_sigma1: f64,
    pub c_sigma0: f64,
    pub c_sigma1: f64,
}

pub fn rs_constants() -> Result<RSConstants> {
    static CACHE: OnceLock<Result<RSConstants>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            Ok(RSConstants {
                b0: b0()?.value,
                b1_sigma0: b1(0.0)?.value,
                b1_sigma1: b1(1.0)?.value,
                c_sigma0: c_sigma(0.0)?,
                c_sigma1: c_sigma(1.0)?,
            })
        })
        .clone()
}

pub fn kappa1(t: f64) -> Result<f64> {
    chi_upper(t)
}

pub fn kappa2(t: f64) -> Result<f64> {
    let k = rs_constants()?;
    let kappa1 = kappa1(t)?;
    let s = (2.0 * PI / t).sqrt();
    Ok(s * (0.5 + k.b1_sigma1 * s + k.c_sigma1 / t)
        + kappa1 * (0.5 + k.b1_sigma0 * s + k.c_sigma0 / t))
}

/// `ϑ(t)`, decreasing to 1 as `t → ∞`.
pub fn theta(t: f64) -> Result<f64> {
    Ok((2.0 * PI / t).sqrt() + chi_correction(t)? + kappa2(t)?)
}

/// `γ − ½ log 2π`.
pub fn gamma_minus_half_log_2pi() -> f64 {
    EULER_GAMMA - 0.5 * (2.0 * PI).ln()
}

/// `|ζ(1+it)| ≤ ½ log t + c` for `t ≥ t0`, and the linear slope
/// `v_tilde = ½ + 0.6633/log t0` (present when `t0 ≥ e`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineBound {
    pub t0: f64,
    pub c: f64,
    pub v_tilde: Option<f64>,
}

pub fn affine_c(t0: f64) -> Result<AffineBound> {
    if !(t0 >= 1.0 && t0.is_finite()) {
        return domain(format!("t0 must be at least 1, got {t0}"));
    }
    let v_tilde = (t0 >= std::f64::consts::E).then(|| 0.5 + V_TILDE_INTERCEPT / t0.ln());
    Ok(AffineBound {
        t0,
        c: gamma_minus_half_log_2pi() + theta(t0)?,
        v_tilde,
    })
}
