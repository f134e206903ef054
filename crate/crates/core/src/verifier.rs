//! Grid scans of certified `|ζ(1+it)|`.
//!
//! Only the grid points `t_k = t_lo + k·h` are certified. Each block of the
//! grid uses the smallest `N` that meets the radius target at the block's
//! largest `t`, which is valid for the whole block because the truncation
//! bound increases with `t`.

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::search::{bisect_last_nonnegative, refine_max};
use crate::zeta_eval::{choose_n, eval_zeta_certified, eval_zeta_grid, CertifiedReal};

pub const DEFAULT_BLOCK: f64 = 100.0;
pub const DEFAULT_BUDGET: u64 = 50_000_000_000;
/// Coarse radius used by [`max_ratio`], the listing's usual choice.
pub const COARSE_R: f64 = 0.005;
/// Radius for local re-evaluation during refinement.
pub const FINE_R: f64 = 1e-8;
/// Radius used to settle grid points whose coarse margin straddles zero.
pub const RECHECK_R: f64 = 1e-9;
/// A local maximum within this distance below `v` counts as touching `v`.
pub const TANGENCY_TOL: f64 = 5e-5;

const CROSSING_SUBGRID: usize = 33;
const CROSSING_TOL: f64 = 1e-6;

pub const GRID_NOTE: &str =
    "only the grid points were certified; values between grid points are not covered";

/// A bound `slope·log t + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearBound {
    pub slope: f64,
    pub intercept: f64,
}

impl LinearBound {
    pub fn at(&self, t: f64) -> f64 {
        self.slope * t.ln() + self.intercept
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub t_lo: f64,
    pub t_hi: f64,
    pub h: f64,
    pub r: f64,
    pub block: f64,
    /// Upper limit on the total number of summed terms.
    pub budget: u64,
}

impl ScanConfig {
    pub fn new(t_lo: f64, t_hi: f64, h: f64, r: f64) -> Result<Self> {
        let config = ScanConfig {
            t_lo,
            t_hi,
            h,
            r,
            block: DEFAULT_BLOCK,
            budget: DEFAULT_BUDGET,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_block(mut self, block: f64) -> Self {
        self.block = block;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_lo >= std::f64::consts::E && self.t_lo.is_finite()) {
            return domain(format!("t_lo must be at least e, got {}", self.t_lo));
        }
        if !(self.t_hi > self.t_lo && self.t_hi.is_finite()) {
            return domain(format!(
                "t_hi must exceed t_lo, got [{}, {}]",
                self.t_lo, self.t_hi
            ));
        }
        if !(self.h > 0.0 && self.h <= 1.0) {
            return domain(format!("h must lie in (0, 1], got {}", self.h));
        }
        if !(self.r > 0.0 && self.r <= 0.01) {
            return domain(format!("r must lie in (0, 0.01], got {}", self.r));
        }
        if !(self.block > 0.0 && self.block.is_finite()) {
            return domain(format!("block length must be positive, got {}", self.block));
        }
        Ok(())
    }

    pub fn point_count(&self) -> usize {
        ((self.t_hi - self.t_lo) / self.h + 1e-9).floor() as usize + 1
    }

    fn blocks(&self) -> Result<Vec<Block>> {
        let total = self.point_count();
        let per_block = ((self.block / self.h).round() as usize).max(1);
        let mut blocks = Vec::with_capacity(total.div_ceil(per_block));
        let mut start = 0;
        while start < total {
            let count = per_block.min(total - start);
            let t_start = self.t_lo + start as f64 * self.h;
            let t_max = t_start + (count - 1) as f64 * self.h;
            blocks.push(Block {
                t_start,
                count,
                n: choose_n(t_max, self.r)?,
            });
            start += count;
        }
        Ok(blocks)
    }
}

#[derive(Debug, Clone, Copy)]
struct Block {
    t_start: f64,
    count: usize,
    n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub t: f64,
    pub modulus: CertifiedReal,
    /// `modulus.value / log t`.
    pub ratio: f64,
}

impl ScanPoint {
    fn new(t: f64, modulus: CertifiedReal) -> Self {
        ScanPoint {
            t,
            modulus,
            ratio: modulus.value / t.ln(),
        }
    }

    pub fn ratio_err(&self) -> f64 {
        self.modulus.err / self.t.ln()
    }

    /// Certified lower bound of `bound(t) − |ζ(1+it)|`.
    pub fn margin(&self, bound: &LinearBound) -> f64 {
        bound.at(self.t) - self.modulus.upper()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub points: Vec<ScanPoint>,
    pub max_ratio: f64,
    pub argmax_t: f64,
    /// Smallest certified margin against the bound, when one was checked.
    pub min_margin: Option<f64>,
    pub argmin_t: Option<f64>,
    /// Total number of summed terms.
    pub terms: u64,
}

impl ScanReport {
    fn from_points(points: Vec<ScanPoint>, terms: u64) -> Self {
        let mut best = (f64::NEG_INFINITY, f64::NAN);
        for p in &points {
            if p.ratio > best.0 {
                best = (p.ratio, p.t);
            }
        }
        ScanReport {
            points,
            max_ratio: best.0,
            argmax_t: best.1,
            min_margin: None,
            argmin_t: None,
            terms,
        }
    }
}

/// Certified `|ζ(1+it)|` at every grid point of `config`.
pub fn scan_interval(config: &ScanConfig) -> Result<ScanReport> {
    config.validate()?;
    let blocks = config.blocks()?;
    let terms = blocks.iter().try_fold(0u64, |acc, b| {
        acc.checked_add(b.n.checked_mul(b.count as u64)?)
    });
    let terms = match terms {
        Some(terms) if terms <= config.budget => terms,
        _ => {
            return Err(Error::Resource(format!(
                "scan of [{}, {}] at h = {} needs more than the budget of {} terms",
                config.t_lo, config.t_hi, config.h, config.budget
            )))
        }
    };
    let per_block: Vec<Vec<ScanPoint>> = blocks
        .par_iter()
        .map(|b| {
            let values = eval_zeta_grid(b.t_start, config.h, b.count, b.n)?;
            Ok(values
                .iter()
                .enumerate()
                .map(|(j, z)| ScanPoint::new(b.t_start + j as f64 * config.h, z.modulus()))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(ScanReport::from_points(per_block.concat(), terms))
}

fn precise_modulus(t: f64, r: f64) -> Result<CertifiedReal> {
    Ok(eval_zeta_certified(t, choose_n(t, r)?)?.modulus())
}

/// Result of checking `|ζ(1+it)| ≤ slope·log t + intercept` on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub holds_on_grid: bool,
    pub worst_margin: f64,
    pub worst_t: f64,
    pub grid_note: &'static str,
    pub report: ScanReport,
}

/// Checks the bound at every grid point. Points where the coarse enclosure
/// straddles the bound are re-evaluated at radius [`RECHECK_R`].
pub fn check_bound(config: &ScanConfig, slope: f64, intercept: f64) -> Result<VerificationResult> {
    if !(slope.is_finite() && intercept.is_finite()) {
        return domain(format!(
            "bound coefficients must be finite, got {slope}, {intercept}"
        ));
    }
    let bound = LinearBound { slope, intercept };
    let mut report = scan_interval(config)?;
    for p in report.points.iter_mut() {
        let upper_margin = bound.at(p.t) - p.modulus.lower();
        if p.margin(&bound) < 0.0 && upper_margin >= 0.0 {
            *p = ScanPoint::new(p.t, precise_modulus(p.t, RECHECK_R)?);
        }
    }
    let mut worst = (f64::INFINITY, f64::NAN);
    for p in &report.points {
        let m = p.margin(&bound);
        if m < worst.0 {
            worst = (m, p.t);
        }
    }
    report.min_margin = Some(worst.0);
    report.argmin_t = Some(worst.1);
    Ok(VerificationResult {
        holds_on_grid: worst.0 >= 0.0,
        worst_margin: worst.0,
        worst_t: worst.1,
        grid_note: GRID_NOTE,
        report,
    })
}

/// Location and value of the largest `|ζ(1+it)|/log t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxRatio {
    pub t_star: f64,
    pub ratio: f64,
    pub ratio_err: f64,
    /// Best coarse grid point and its ratio re-evaluated at [`FINE_R`].
    pub coarse_t: f64,
    pub coarse_ratio: f64,
}

/// Coarse scan at spacing `coarse_h`, then local refinement to width
/// `refine_tol` around every grid maximum that could still be the largest.
pub fn max_ratio(t_lo: f64, t_hi: f64, coarse_h: f64, refine_tol: f64) -> Result<MaxRatio> {
    let config = ScanConfig::new(t_lo, t_hi, coarse_h, COARSE_R)?;
    let report = scan_interval(&config)?;
    let pts = &report.points;
    let best_lower = pts
        .iter()
        .map(|p| p.ratio - p.ratio_err())
        .fold(f64::NEG_INFINITY, f64::max);
    let last = pts.len() - 1;
    let candidates: Vec<usize> = (0..pts.len())
        .filter(|&k| {
            let left = k == 0 || pts[k].ratio >= pts[k - 1].ratio;
            let right = k == last || pts[k].ratio >= pts[k + 1].ratio;
            left && right && pts[k].ratio + pts[k].ratio_err() >= best_lower
        })
        .collect();

    let mut best: Option<MaxRatio> = None;
    for k in candidates {
        let lo = pts[k.saturating_sub(1)].t;
        let hi = pts[(k + 1).min(last)].t;
        let n = choose_n(hi, FINE_R)?;
        let ratio_at =
            |t: f64| -> Result<f64> { Ok(eval_zeta_certified(t, n)?.modulus().value / t.ln()) };
        let coarse_ratio = ratio_at(pts[k].t)?;
        let mut found = refine_max(ratio_at, lo, hi, refine_tol)?;
        if coarse_ratio >= found.value {
            found.x = pts[k].t;
            found.value = coarse_ratio;
        }
        let err = eval_zeta_certified(found.x, n)?.modulus().err / found.x.ln();
        let cand = MaxRatio {
            t_star: found.x,
            ratio: found.value,
            ratio_err: err,
            coarse_t: pts[k].t,
            coarse_ratio,
        };
        if best.is_none_or(|b| cand.ratio > b.ratio) {
            best = Some(cand);
        }
    }
    best.ok_or_else(|| Error::NotFound("no grid maximum found".into()))
}

/// Largest `t` in range with `|ζ(1+it)|/log t = v`, or the tangency point
/// when the ratio only touches `v` within [`TANGENCY_TOL`].
pub fn crossing_point(v: f64, config: &ScanConfig) -> Result<f64> {
    if !(v > 0.0 && v.is_finite()) {
        return domain(format!("v must be positive, got {v}"));
    }
    let report = scan_interval(config)?;
    let pts = &report.points;
    let last = pts.len() - 1;
    let candidates: Vec<usize> = (0..pts.len())
        .filter(|&k| pts[k].ratio + pts[k].ratio_err() >= v - TANGENCY_TOL)
        .collect();

    for &k in candidates.iter().rev() {
        let lo = pts[k.saturating_sub(1)].t;
        let hi = pts[(k + 1).min(last)].t;
        let n = choose_n(hi, RECHECK_R)?;
        let gap =
            |t: f64| -> Result<f64> { Ok(eval_zeta_certified(t, n)?.modulus().value / t.ln() - v) };
        let step = (hi - lo) / (CROSSING_SUBGRID - 1) as f64;
        let sub: Vec<f64> = (0..CROSSING_SUBGRID)
            .map(|j| lo + j as f64 * step)
            .collect();
        let vals = eval_zeta_grid(lo, step, CROSSING_SUBGRID, n)?;
        let gaps: Vec<f64> = sub
            .iter()
            .zip(&vals)
            .map(|(&t, z)| z.modulus().value / t.ln() - v)
            .collect();

        if let Some(j) = (0..CROSSING_SUBGRID - 1)
            .rev()
            .find(|&j| gaps[j] >= 0.0 && gaps[j + 1] < 0.0)
        {
            return bisect_last_nonnegative(gap, sub[j], sub[j + 1], CROSSING_TOL);
        }
        let j_max = (0..CROSSING_SUBGRID)
            .max_by(|&a, &b| gaps[a].total_cmp(&gaps[b]))
            .expect("subgrid is nonempty");
        // a peak on the subgrid edge belongs to a neighbouring bracket
        if gaps[j_max] < -2.0 * TANGENCY_TOL || j_max == 0 || j_max == CROSSING_SUBGRID - 1 {
            continue;
        }
        let (a, b) = (sub[j_max - 1], sub[j_max + 1]);
        let peak = refine_max(gap, a, b, CROSSING_TOL)?;
        if peak.value >= 0.0 && b > peak.x && gap(b)? < 0.0 {
            return bisect_last_nonnegative(gap, peak.x, b, CROSSING_TOL);
        }
        if peak.value >= -TANGENCY_TOL {
            return Ok(peak.x);
        }
    }
    Err(Error::NotFound(format!(
        "|zeta(1+it)|/log t does not reach {v} on [{}, {}]",
        config.t_lo, config.t_hi
    )))
}
