use crate::error::{Error, Result};
use crate::numeric::{integral_exponent, pow};
use crate::tree::Tree;

/// `sum_v d_v^alpha` over all vertices.
///
/// Non-negative integral exponents are evaluated in exact integer arithmetic
/// and converted once at the end. The single-vertex tree has degree 0 and is
/// rejected for `alpha <= 0`.
pub fn zeroth_order_general_randic(tree: &Tree, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::NonFiniteAlpha(alpha));
    }
    if tree.order() == 1 && alpha <= 0.0 {
        return Err(Error::IsolatedVertexPower(alpha));
    }
    if let Some(k) = integral_exponent(alpha) {
        return Ok(zeroth_order_general_randic_exact(tree, k) as f64);
    }
    Ok(degree_power_sum(tree.degrees(), alpha))
}

pub fn zeroth_order_general_randic_exact(tree: &Tree, power: u32) -> u128 {
    tree.degrees().map(|d| (d as u128).pow(power)).sum()
}

/// Floating sum of `d^alpha` over the given degrees.
pub fn degree_power_sum(degrees: impl IntoIterator<Item = usize>, alpha: f64) -> f64 {
    degrees.into_iter().map(|d| pow(d as f64, alpha)).sum()
}
