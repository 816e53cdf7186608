//! Degree-power bounds for trees with a given domination number.
//!
//! The three closed forms below are sharp: in the concave regime
//! (`0 < alpha < 1`) the F1 and F2 values are maxima and the F3 value is a
//! minimum; in the convex regime (`alpha < 0` or `alpha > 1`) every
//! direction flips. The supporting pieces are the smoothing comparison, the
//! balanced-partition extremum and the envelope `h(l2 - l3)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::pow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AlphaRegime {
    /// `alpha` in (0, 1)
    ConcaveUnit,
    /// `alpha` in (-inf, 0) or (1, inf)
    ConvexOuter,
    /// `alpha` is 0 or 1
    Degenerate,
}

impl AlphaRegime {
    pub fn of(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::NonFiniteAlpha(alpha));
        }
        Ok(if alpha == 0.0 || alpha == 1.0 {
            AlphaRegime::Degenerate
        } else if alpha > 0.0 && alpha < 1.0 {
            AlphaRegime::ConcaveUnit
        } else {
            AlphaRegime::ConvexOuter
        })
    }

    /// Like [`AlphaRegime::of`] but rejects the degenerate exponents.
    pub fn strict(alpha: f64) -> Result<Self> {
        match Self::of(alpha)? {
            AlphaRegime::Degenerate => Err(Error::DegenerateAlpha(alpha)),
            regime => Ok(regime),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "F1_BOUND")]
    F1Bound,
    #[serde(rename = "F2_BOUND")]
    F2Bound,
    #[serde(rename = "F3_BOUND")]
    F3Bound,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::F1Bound => "F1_BOUND",
            TheoremId::F2Bound => "F2_BOUND",
            TheoremId::F3Bound => "F3_BOUND",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

impl Direction {
    /// Whether `value` respects a bound of this direction, up to tolerance.
    pub fn admits(self, value: f64, bound: f64) -> bool {
        match self {
            Direction::Upper => crate::numeric::approx_le(value, bound),
            Direction::Lower => crate::numeric::approx_le(bound, value),
        }
    }

    pub fn admits_exact(self, value: i128, bound: i128) -> bool {
        match self {
            Direction::Upper => value <= bound,
            Direction::Lower => value >= bound,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        })
    }
}

/// The domination-number range a bound formula was evaluated under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaRange {
    #[serde(rename = "1<=gamma<=n/3")]
    UpToThird,
    #[serde(rename = "gamma=ceil(n/3)")]
    PathCase,
    #[serde(rename = "(n+3)/3<=gamma<=n/2")]
    Linear,
    #[serde(rename = "1<=gamma<=floor(n/2)")]
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub theorem_id: TheoremId,
    pub direction: Direction,
    pub value: f64,
    pub gamma_range: GammaRange,
    pub regime: AlphaRegime,
}

/// Sign of `f(x) - f(x')`, where `f` sums `x_k^alpha` and `x'` moves one
/// unit from `x[i]` to `x[j]`. Requires `x[i] - x[j] >= 2`.
pub fn lemma1_compare(x: &[u64], i: usize, j: usize, alpha: f64) -> Result<Ordering> {
    AlphaRegime::strict(alpha)?;
    if i >= x.len() || j >= x.len() || i == j {
        return Err(Error::InvalidParameters(format!(
            "indices ({i}, {j}) must be distinct and below {}",
            x.len()
        )));
    }
    if x.contains(&0) {
        return Err(Error::InvalidParameters("entries must be positive".into()));
    }
    if x[i] < x[j] + 2 {
        return Err(Error::InvalidParameters(format!(
            "x[{i}] - x[{j}] = {} - {} is below 2",
            x[i], x[j]
        )));
    }
    let (a, b) = (x[i] as f64, x[j] as f64);
    // only the two touched coordinates differ
    let diff = (pow(a, alpha) + pow(b, alpha)) - (pow(a - 1.0, alpha) + pow(b + 1.0, alpha));
    Ok(diff.partial_cmp(&0.0).expect("finite difference"))
}

/// `t (q+1)^alpha + (k - t) q^alpha` with `q = total / parts` and
/// `t = total mod parts`: the value of the sum of powers at the most
/// balanced composition of `total` into `parts` positive parts.
pub fn balanced_extremum(total: u64, parts: u64, alpha: f64) -> Result<f64> {
    AlphaRegime::strict(alpha)?;
    if parts == 0 || total < parts {
        return Err(Error::InvalidParameters(format!(
            "cannot split {total} into {parts} positive parts"
        )));
    }
    Ok(balanced(total, parts, alpha))
}

fn balanced(total: u64, parts: u64, alpha: f64) -> f64 {
    let q = total / parts;
    let t = total % parts;
    t as f64 * pow((q + 1) as f64, alpha) + (parts - t) as f64 * pow(q as f64, alpha)
}

fn check_gamma(n: usize, gamma: usize) -> Result<()> {
    if n < 2 || gamma == 0 || 2 * gamma > n {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2 and 1 <= gamma <= floor(n/2), got n = {n}, gamma = {gamma}"
        )));
    }
    Ok(())
}

/// Envelope of the index in terms of `d = l2 - l3`: the balanced value of
/// the dominating-set degree sum `n - 1 + d` over `gamma` vertices plus the
/// balanced value of the complement degree sum `n - 1 - d` over `n - gamma`
/// vertices. An upper bound for concave exponents, a lower bound otherwise.
pub fn h_value(n: usize, gamma: usize, d: i64, alpha: f64) -> Result<f64> {
    AlphaRegime::strict(alpha)?;
    check_gamma(n, gamma)?;
    if d.unsigned_abs() as usize > gamma - 1 {
        return Err(Error::InvalidParameters(format!(
            "|l2 - l3| = {} exceeds gamma - 1 = {}",
            d.abs(),
            gamma - 1
        )));
    }
    let inside = (n as i64 - 1 + d) as u64;
    let outside = (n as i64 - 1 - d) as u64;
    Ok(balanced(inside, gamma as u64, alpha) + balanced(outside, (n - gamma) as u64, alpha))
}

fn f1_value(n: usize, gamma: usize, alpha: f64) -> f64 {
    let k = (n - 1) / gamma;
    let (nf, gf) = (n as f64, gamma as f64);
    (pow(k as f64, alpha) - pow(k as f64 - 1.0, alpha)) * (n - gamma * k) as f64
        + gf * pow(k as f64 - 1.0, alpha)
        + 2.0 * (pow(2.0, alpha) - 1.0) * (gf - 1.0)
        + (nf - gf)
}

fn f2_value(n: usize, gamma: usize, alpha: f64) -> f64 {
    let (nf, gf) = (n as f64, gamma as f64);
    let (two, three) = (pow(2.0, alpha), pow(3.0, alpha));
    if gamma == n.div_ceil(3) {
        (nf - 2.0) * two + 2.0
    } else {
        (-three + 3.0 * two - 1.0) * nf + 3.0 * (three - 2.0 * two + 1.0) * gf + 2.0 * (two - three)
    }
}

fn f3_value(n: usize, gamma: usize, alpha: f64) -> f64 {
    let rest = (n - gamma) as f64;
    pow(rest, alpha) + rest + (gamma as f64 - 1.0) * pow(2.0, alpha)
}

fn direction_for(theorem: TheoremId, regime: AlphaRegime) -> Direction {
    let concave = regime == AlphaRegime::ConcaveUnit;
    match (theorem, concave) {
        (TheoremId::F3Bound, true) => Direction::Lower,
        (TheoremId::F3Bound, false) => Direction::Upper,
        (_, true) => Direction::Upper,
        (_, false) => Direction::Lower,
    }
}

fn check_f1(n: usize, gamma: usize) -> Result<()> {
    if n < 3 || gamma == 0 || 3 * gamma > n {
        return Err(Error::InvalidParameters(format!(
            "F1 bound needs n >= 3 and 1 <= gamma <= n/3, got n = {n}, gamma = {gamma}"
        )));
    }
    Ok(())
}

fn check_f2(n: usize, gamma: usize) -> Result<()> {
    if n < 2 || gamma < n.div_ceil(3) || 2 * gamma > n {
        return Err(Error::InvalidParameters(format!(
            "F2 bound needs ceil(n/3) <= gamma <= n/2, got n = {n}, gamma = {gamma}"
        )));
    }
    Ok(())
}

pub fn bound_f1(n: usize, gamma: usize, alpha: f64) -> Result<BoundResult> {
    let regime = AlphaRegime::strict(alpha)?;
    check_f1(n, gamma)?;
    Ok(BoundResult {
        theorem_id: TheoremId::F1Bound,
        direction: direction_for(TheoremId::F1Bound, regime),
        value: f1_value(n, gamma, alpha),
        gamma_range: GammaRange::UpToThird,
        regime,
    })
}

pub fn bound_f2(n: usize, gamma: usize, alpha: f64) -> Result<BoundResult> {
    let regime = AlphaRegime::strict(alpha)?;
    check_f2(n, gamma)?;
    Ok(BoundResult {
        theorem_id: TheoremId::F2Bound,
        direction: direction_for(TheoremId::F2Bound, regime),
        value: f2_value(n, gamma, alpha),
        gamma_range: if gamma == n.div_ceil(3) { GammaRange::PathCase } else { GammaRange::Linear },
        regime,
    })
}

pub fn bound_f3(n: usize, gamma: usize, alpha: f64) -> Result<BoundResult> {
    let regime = AlphaRegime::strict(alpha)?;
    check_gamma(n, gamma)?;
    Ok(BoundResult {
        theorem_id: TheoremId::F3Bound,
        direction: direction_for(TheoremId::F3Bound, regime),
        value: f3_value(n, gamma, alpha),
        gamma_range: GammaRange::Full,
        regime,
    })
}

pub fn f1_applies(n: usize, gamma: usize) -> bool {
    check_f1(n, gamma).is_ok()
}

pub fn f2_applies(n: usize, gamma: usize) -> bool {
    check_f2(n, gamma).is_ok()
}

/// Every bound that applies to `(n, gamma)`, in theorem order. Both F1 and
/// F2 are returned when `gamma = n/3` exactly.
pub fn bounds_for(n: usize, gamma: usize, alpha: f64) -> Result<Vec<BoundResult>> {
    AlphaRegime::strict(alpha)?;
    check_gamma(n, gamma)?;
    let mut out = Vec::with_capacity(3);
    if f1_applies(n, gamma) {
        out.push(bound_f1(n, gamma, alpha)?);
    }
    if f2_applies(n, gamma) {
        out.push(bound_f2(n, gamma, alpha)?);
    }
    out.push(bound_f3(n, gamma, alpha)?);
    Ok(out)
}

/// Integer evaluation of a bound at a non-negative integral exponent.
pub fn bound_exact(theorem: TheoremId, n: usize, gamma: usize, power: u32) -> Result<i128> {
    let p = |x: i128| x.pow(power);
    let (ni, gi) = (n as i128, gamma as i128);
    match theorem {
        TheoremId::F1Bound => {
            check_f1(n, gamma)?;
            let k = ((n - 1) / gamma) as i128;
            Ok((p(k) - p(k - 1)) * (ni - gi * k) + gi * p(k - 1) + 2 * (p(2) - 1) * (gi - 1) + (ni - gi))
        }
        TheoremId::F2Bound => {
            check_f2(n, gamma)?;
            if gamma == n.div_ceil(3) {
                Ok((ni - 2) * p(2) + 2)
            } else {
                Ok((-p(3) + 3 * p(2) - 1) * ni + 3 * (p(3) - 2 * p(2) + 1) * gi + 2 * (p(2) - p(3)))
            }
        }
        TheoremId::F3Bound => {
            check_gamma(n, gamma)?;
            Ok(p(ni - gi) + (ni - gi) + (gi - 1) * p(2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * b.abs().max(1.0)
    }

    #[test]
    fn regimes() {
        assert_eq!(AlphaRegime::of(0.5).unwrap(), AlphaRegime::ConcaveUnit);
        assert_eq!(AlphaRegime::of(-0.5).unwrap(), AlphaRegime::ConvexOuter);
        assert_eq!(AlphaRegime::of(2.0).unwrap(), AlphaRegime::ConvexOuter);
        assert_eq!(AlphaRegime::of(1.0).unwrap(), AlphaRegime::Degenerate);
        assert!(matches!(AlphaRegime::strict(0.0), Err(Error::DegenerateAlpha(_))));
        assert!(AlphaRegime::of(f64::INFINITY).is_err());
    }

    #[test]
    fn smoothing_signs() {
        assert_eq!(lemma1_compare(&[3, 1], 0, 1, 0.5).unwrap(), Ordering::Less);
        assert_eq!(lemma1_compare(&[3, 1], 0, 1, 2.0).unwrap(), Ordering::Greater);
        assert_eq!(lemma1_compare(&[4, 1], 0, 1, -1.0).unwrap(), Ordering::Greater);
        assert!(lemma1_compare(&[3, 2], 0, 1, 2.0).is_err());
        assert!(lemma1_compare(&[3, 1], 0, 0, 2.0).is_err());
        assert!(lemma1_compare(&[3, 1], 0, 1, 1.0).is_err());
        assert!(lemma1_compare(&[3, 0], 0, 1, 2.0).is_err());
    }

    #[test]
    fn balanced_values() {
        assert_eq!(balanced_extremum(7, 3, 2.0).unwrap(), 17.0);
        assert!(close(balanced_extremum(7, 3, 0.5).unwrap(), 2.0 * 2f64.sqrt() + 3f64.sqrt()));
        for alpha in [-1.0, 0.5, 3.0] {
            assert_eq!(balanced_extremum(5, 5, alpha).unwrap(), 5.0);
        }
        assert!(balanced_extremum(2, 3, 2.0).is_err());
        assert!(balanced_extremum(2, 0, 2.0).is_err());
    }

    #[test]
    fn envelope_values() {
        assert_eq!(h_value(6, 2, -1, 2.0).unwrap(), 18.0);
        assert_eq!(h_value(3, 1, 0, 2.0).unwrap(), 6.0);
        assert_eq!(h_value(6, 3, 0, 2.0).unwrap(), 18.0);
        assert!(h_value(6, 2, 2, 2.0).is_err());
        assert!(h_value(6, 4, 0, 2.0).is_err());
        assert!(h_value(6, 2, 0, 0.0).is_err());
    }

    #[test]
    fn f1_values() {
        let b = bound_f1(6, 2, 2.0).unwrap();
        assert_eq!(b.value, 18.0);
        assert_eq!(b.direction, Direction::Lower);
        assert_eq!(bound_f1(5, 1, 2.0).unwrap().value, 20.0);
        let b = bound_f1(9, 3, 0.5).unwrap();
        assert!(close(b.value, 7.0 * 2f64.sqrt() + 2.0));
        assert_eq!(b.direction, Direction::Upper);
        assert!(bound_f1(6, 3, 2.0).is_err());
        assert!(bound_f1(2, 1, 2.0).is_err());
        assert!(bound_f1(6, 2, 1.0).is_err());
    }

    #[test]
    fn f2_values() {
        let b = bound_f2(6, 2, 2.0).unwrap();
        assert_eq!((b.value, b.gamma_range), (18.0, GammaRange::PathCase));
        let b = bound_f2(6, 3, 2.0).unwrap();
        assert_eq!((b.value, b.gamma_range), (20.0, GammaRange::Linear));
        assert_eq!(bound_f2(8, 4, 2.0).unwrap().value, 30.0);
        assert_eq!(bound_f2(7, 3, 2.0).unwrap().value, 22.0);
        assert!(bound_f2(9, 2, 2.0).is_err());
        assert!(bound_f2(9, 5, 2.0).is_err());
    }

    #[test]
    fn f3_values() {
        assert_eq!(bound_f3(5, 1, 2.0).unwrap().value, 20.0);
        assert_eq!(bound_f3(6, 3, 2.0).unwrap().value, 20.0);
        let b = bound_f3(7, 2, 0.5).unwrap();
        assert!(close(b.value, 5f64.sqrt() + 5.0 + 2f64.sqrt()));
        assert_eq!(b.direction, Direction::Lower);
        assert_eq!(bound_f3(7, 2, 2.0).unwrap().direction, Direction::Upper);
        assert_eq!(bound_f3(2, 1, 2.0).unwrap().value, 2.0);
        assert!(bound_f3(7, 4, 2.0).is_err());
    }

    #[test]
    fn dispatch() {
        let all = bounds_for(6, 2, 2.0).unwrap();
        let ids: Vec<_> = all.iter().map(|b| (b.theorem_id, b.value)).collect();
        assert_eq!(
            ids,
            vec![(TheoremId::F1Bound, 18.0), (TheoremId::F2Bound, 18.0), (TheoremId::F3Bound, 24.0)]
        );
        let ids: Vec<_> = bounds_for(10, 5, 2.0).unwrap().iter().map(|b| b.theorem_id).collect();
        assert_eq!(ids, vec![TheoremId::F2Bound, TheoremId::F3Bound]);
        let ids: Vec<_> = bounds_for(9, 2, 0.5).unwrap().iter().map(|b| b.theorem_id).collect();
        assert_eq!(ids, vec![TheoremId::F1Bound, TheoremId::F3Bound]);
        assert!(bounds_for(9, 5, 0.5).is_err());
        assert!(bounds_for(9, 2, 1.0).is_err());
    }

    #[test]
    fn star_reduction() {
        for n in 3..=20 {
            for alpha in [-1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0] {
                let star = pow((n - 1) as f64, alpha) + (n - 1) as f64;
                assert!(close(bound_f1(n, 1, alpha).unwrap().value, star));
                assert!(close(bound_f3(n, 1, alpha).unwrap().value, star));
            }
        }
    }

    #[test]
    fn exact_matches_float() {
        for n in 2..=30 {
            for gamma in 1..=n / 2 {
                for power in [2u32, 3] {
                    for id in [TheoremId::F1Bound, TheoremId::F2Bound, TheoremId::F3Bound] {
                        let exact = bound_exact(id, n, gamma, power);
                        let float = match id {
                            TheoremId::F1Bound => bound_f1(n, gamma, power as f64),
                            TheoremId::F2Bound => bound_f2(n, gamma, power as f64),
                            TheoremId::F3Bound => bound_f3(n, gamma, power as f64),
                        };
                        match (exact, float) {
                            (Ok(e), Ok(f)) => assert_eq!(e as f64, f.value),
                            (Err(_), Err(_)) => {}
                            other => panic!("range disagreement {other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serialized_shape() {
        let json = serde_json::to_string(&bound_f2(6, 3, 2.0).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"theorem_id":"F2_BOUND","direction":"lower","value":20.0,"gamma_range":"(n+3)/3<=gamma<=n/2","regime":"CONVEX_OUTER"}"#
        );
    }
}
