//! Generalized binomial series and the exponential.

use crate::arith::{factorial, AlphaPoly, Rational, Ring};
use crate::error::{Error, Result};

use super::truncated::TruncatedSeries;

/// `C(β, k) = β(β−1)⋯(β−k+1) / k!` as a polynomial in α.
pub fn generalized_binomial(beta: &AlphaPoly, k: usize) -> AlphaPoly {
    let falling = (0..k).fold(AlphaPoly::one(), |acc, i| {
        &acc * &(beta - &AlphaPoly::constant(Rational::from_integer((i as i64).into())))
    });
    falling.scale(&Rational::new(1.into(), factorial(k)))
}

/// `(1 + u)^β = Σ_k C(β, k) u^k` for `u` without constant term.
pub fn binomial_series(
    beta: &AlphaPoly,
    u: &TruncatedSeries<AlphaPoly>,
) -> Result<TruncatedSeries<AlphaPoly>> {
    if !u.coeff(0).is_zero() {
        return Err(Error::ValuationViolation(
            "binomial series needs a series without constant term".into(),
        ));
    }
    let order = u.order();
    let mut out = TruncatedSeries::zero(order);
    let mut power = TruncatedSeries::one(order);
    for k in 0..=order {
        out = out.plus(&power.scale(&generalized_binomial(beta, k)));
        power = power.times(u);
    }
    Ok(out)
}

/// `exp(f)` for `f` without constant term.
pub fn exp_series(f: &TruncatedSeries<Rational>) -> Result<TruncatedSeries<Rational>> {
    f.exp()
}
