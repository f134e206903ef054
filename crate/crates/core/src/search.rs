//! One-dimensional maximisation and root bracketing used by the verifier and
//! by the Riemann–Siegel constant maximisation.

use crate::error::{Error, Result};

/// A located maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub x: f64,
    pub value: f64,
}

impl Extremum {
    fn keep_better(&mut self, x: f64, value: f64) {
        if value > self.value {
            *self = Extremum { x, value };
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn check_bracket(a: f64, b: f64, tol: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::Domain(format!("invalid bracket [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// Golden-section search for the maximum of `f` on `[a, b]`, shrinking the
/// bracket to width `tol`. The endpoints are evaluated too, so a maximum on
/// the boundary is returned exactly.
pub fn golden_section_max<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_bracket(a, b, tol)?;
    let mut best = Extremum { x: a, value: f(a)? };
    best.keep_better(b, f(b)?);

    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    best.keep_better(x1, f1);
    best.keep_better(x2, f2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
            best.keep_better(x1, f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
            best.keep_better(x2, f2);
        }
        if x1 >= x2 {
            break;
        }
    }
    Ok(best)
}

/// Repeatedly samples `samples` uniform points and zooms onto the
/// neighbourhood of the best one until the bracket is narrower than `tol`.
/// Slower than golden section but does not assume unimodality.
pub fn grid_halving_max<F>(mut f: F, a: f64, b: f64, tol: f64, samples: usize) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_bracket(a, b, tol)?;
    let samples = samples.max(5);
    let (mut lo, mut hi) = (a, b);
    let mut best = Extremum {
        x: a,
        value: f64::NEG_INFINITY,
    };
    while hi - lo > tol {
        let step = (hi - lo) / (samples - 1) as f64;
        let mut idx = 0;
        let mut local = f64::NEG_INFINITY;
        for i in 0..samples {
            let x = if i + 1 == samples {
                hi
            } else {
                lo + step * i as f64
            };
            let v = f(x)?;
            best.keep_better(x, v);
            if v > local {
                local = v;
                idx = i;
            }
        }
        let new_lo = lo + step * idx.saturating_sub(1) as f64;
        let new_hi = (lo + step * (idx + 1) as f64).min(hi);
        if new_hi - new_lo >= hi - lo {
            break;
        }
        lo = new_lo;
        hi = new_hi;
    }
    if best.value == f64::NEG_INFINITY {
        best = Extremum {
            x: lo,
            value: f(lo)?,
        };
    }
    Ok(best)
}

/// True when the sequence rises then falls (either part may be empty).
pub fn is_unimodal(values: &[f64]) -> bool {
    let mut falling = false;
    for w in values.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// Maximum of `f` on `[a, b]`: golden section when five probe points look
/// unimodal, grid halving otherwise.
pub fn refine_max<F>(mut f: F, a: f64, b: f64, tol: f64) -> Result<Extremum>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_bracket(a, b, tol)?;
    let probes: Vec<f64> = (0..5).map(|i| a + (b - a) * i as f64 / 4.0).collect();
    let values = probes.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
    let mut found = if is_unimodal(&values) {
        golden_section_max(&mut f, a, b, tol)?
    } else {
        grid_halving_max(&mut f, a, b, tol, 9)?
    };
    for (&x, &v) in probes.iter().zip(&values) {
        found.keep_better(x, v);
    }
    Ok(found)
}

/// Bisection on a bracket with `f(lo) ≥ 0 > f(hi)`; returns the final
/// bracket midpoint once the width is at most `tol`.
pub fn bisect_last_nonnegative<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_bracket(lo, hi, tol)?;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if !(mid > lo && mid < hi) {
            break;
        }
        if f(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
