//! Default `t₀` grids for the bound tables.

/// Decimal exponents of the `t₀` values for the `(β, v, u)` and `(v, ṽ)` tables.
pub const EXPSUM_EXPONENTS: [i32; 22] = [
    5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 20, 30, 40, 50, 60, 70, 80, 90, 100, 200, 300,
];

/// Decimal exponents of the `t₀` values for the affine-intercept table.
pub const AFFINE_EXPONENTS: [i32; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/// `10^k` for each exponent, parsed from the decimal literal so that
/// `1e300` is the correctly rounded double.
pub fn powers_of_ten(exponents: &[i32]) -> Vec<f64> {
    exponents
        .iter()
        .map(|k| format!("1e{k}").parse().expect("valid float literal"))
        .collect()
}

pub fn expsum_t0() -> Vec<f64> {
    powers_of_ten(&EXPSUM_EXPONENTS)
}

pub fn affine_t0() -> Vec<f64> {
    powers_of_ten(&AFFINE_EXPONENTS)
}
