//! Pearson chi-squared goodness of fit.
//!
//! The upper tail uses the regularized incomplete gamma function: the power
//! series below `a + 1`, Lentz's continued fraction above it.

use crate::analytics::Distribution;
use crate::{Error, Result};

const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;
const MAX_ITER: usize = 10_000;

/// `Q(a, x) = Γ(a, x) / Γ(a)`, the regularized upper incomplete gamma function.
pub fn regularized_gamma_q(a: f64, x: f64) -> f64 {
    debug_assert!(a > 0.0);
    if x <= 0.0 {
        return 1.0;
    }
    if x < a + 1.0 {
        1.0 - lower_series(a, x)
    } else {
        upper_continued_fraction(a, x)
    }
}

fn log_prefactor(a: f64, x: f64) -> f64 {
    a * libm::log(x) - x - libm::lgamma(a)
}

fn lower_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut denom = a;
    for _ in 0..MAX_ITER {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if term.abs() < sum.abs() * EPS {
            break;
        }
    }
    sum * libm::exp(log_prefactor(a, x))
}

fn upper_continued_fraction(a: f64, x: f64) -> f64 {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    libm::exp(log_prefactor(a, x)) * h
}

/// Upper tail `P(χ²_dof ≥ statistic)`.
pub fn chi2_survival(statistic: f64, dof: usize) -> f64 {
    if dof == 0 {
        return 1.0;
    }
    regularized_gamma_q(dof as f64 / 2.0, statistic / 2.0)
}

/// Outcome of a goodness-of-fit test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
}

/// Pearson test of `observed` counts (aligned with `expected`'s outcomes) against
/// `expected`, with `outcomes − 1` degrees of freedom.
///
/// Outcomes with zero expected probability and zero count are dropped from the
/// test; a positive count on such an outcome is an error.
pub fn chi2_pvalue(observed: &[u64], expected: &Distribution) -> Result<ChiSquareTest> {
    if observed.len() != expected.len() {
        return Err(Error::DimensionMismatch { expected: expected.len(), found: observed.len() });
    }
    let total: u64 = observed.iter().sum();
    if total == 0 {
        return Err(Error::InvalidParams("chi-squared test needs at least one count".into()));
    }
    let m = total as f64;
    let mut statistic = 0.0;
    let mut outcomes = 0usize;
    for ((&o, &p), &label) in observed.iter().zip(expected.probabilities()).zip(expected.labels()) {
        if p == 0.0 {
            if o > 0 {
                return Err(Error::ZeroExpected { label });
            }
            continue;
        }
        let e = m * p;
        let diff = o as f64 - e;
        statistic += diff * diff / e;
        outcomes += 1;
    }
    let dof = outcomes.saturating_sub(1);
    Ok(ChiSquareTest { statistic, dof, p_value: chi2_survival(statistic, dof) })
}
