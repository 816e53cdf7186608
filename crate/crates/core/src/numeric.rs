//! Shared floating-point helpers.

/// Relative tolerance for comparing index values against bounds.
pub const REL_TOL: f64 = 1e-9;

/// `x^alpha`, using repeated multiplication for integral exponents so that
/// tree values and bound values agree to the last bit where possible.
pub fn pow(x: f64, alpha: f64) -> f64 {
    if alpha.fract() == 0.0 && alpha.abs() <= 64.0 {
        x.powi(alpha as i32)
    } else {
        x.powf(alpha)
    }
}

/// The exponent as a small non-negative integer, if it is one.
pub fn integral_exponent(alpha: f64) -> Option<u32> {
    (alpha.fract() == 0.0 && (0.0..=32.0).contains(&alpha)).then_some(alpha as u32)
}

/// `|a - b| <= tol * max(1, |b|)`.
pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= REL_TOL * b.abs().max(1.0)
}

/// `a <= b` up to the tolerance.
pub fn approx_le(a: f64, b: f64) -> bool {
    a <= b || approx_eq(a, b)
}
