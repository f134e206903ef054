//! Shared inputs for the benchmarks.

use zetabound::choose_n;

/// Heights at which single-point evaluation is timed.
pub const EVAL_HEIGHTS: [f64; 3] = [17.7477, 652.3704, 2000.0];

/// Radius used by the scanning benchmarks.
pub const SCAN_R: f64 = 0.005;

/// Number of terms for a scan block ending at `t_max`.
pub fn block_terms(t_max: f64) -> u64 {
    choose_n(t_max, SCAN_R).expect("benchmark heights are in range")
}
