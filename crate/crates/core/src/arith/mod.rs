//! Exact coefficient rings: rationals, polynomials in `q`, `α` and `t`, and
//! q-analogs of the integers, factorials and binomials.

pub mod poly;
pub mod qanalog;
pub mod rational;
pub mod ring;

pub use poly::{Alpha, AlphaPoly, Poly, QPoly, TPoly, Variable, Q, T};
pub use qanalog::{q_binomial, q_factorial, q_integer, q_power};
pub use rational::{binomial, factorial, int, parse_rational, ratio, rational_to_string, to_integer, Rational};
pub use ring::Ring;

/// Exact quotient of two q-polynomials.
pub fn exact_poly_div(num: &QPoly, den: &QPoly) -> crate::Result<QPoly> {
    num.div_exact(den)
}
