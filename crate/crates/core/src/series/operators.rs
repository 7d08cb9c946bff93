//! The operators of the fixed-point equations handled by the engines.

use crate::arith::{ratio, AlphaPoly, Rational, Ring};

use super::binomial::BinomialPoly;
use super::qdivided::QDividedSeries;
use super::truncated::TruncatedSeries;

/// `B(x, y) = ∫_0^t x(s) y(s) ds`
pub fn integral_product<R: Ring>(x: &TruncatedSeries<R>, y: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    x.times(y).integrate()
}

/// `B(x, y) = t x y / 2 + (1/2) ∫ x y`
pub fn postnikov_operator<R: Ring>(
    x: &TruncatedSeries<R>,
    y: &TruncatedSeries<R>,
) -> TruncatedSeries<R> {
    let xy = x.times(y);
    xy.mul_t().plus(&xy.integrate()).scaled(&ratio(1, 2))
}

/// `F(x_0, …, x_m) = (αm−1)/(m+1) · t ∏x_i + (α+1)/(m+1) · ∫ ∏x_i`
pub fn duliu_operator(m: usize, args: &[&TruncatedSeries<AlphaPoly>]) -> TruncatedSeries<AlphaPoly> {
    let order = args.iter().map(|a| a.order()).min().unwrap_or(0);
    let prod = TruncatedSeries::product(args, order);
    let inv = ratio(1, m as i64 + 1);
    let t_coeff = AlphaPoly::linear(Rational::from_integer((m as i64).into()), ratio(-1, 1)).scale(&inv);
    let int_coeff = AlphaPoly::linear(ratio(1, 1), ratio(1, 1)).scale(&inv);
    prod.mul_t().scale(&t_coeff).plus(&prod.integrate().scale(&int_coeff))
}

/// `B_q(f, g) = ∫_0^t f(s) g(qs) d_q s`
pub fn q_integral_product(f: &QDividedSeries, g: &QDividedSeries) -> QDividedSeries {
    QDividedSeries::bilinear_q(f, g)
}

/// `F_k(p_1, …, p_k) = Σ_0^t p_1 ⋯ p_k`
pub fn discrete_sum_product<R: Ring>(args: &[&BinomialPoly<R>]) -> BinomialPoly<R> {
    args.iter()
        .fold(BinomialPoly::one(), |acc, p| acc.times(p))
        .discrete_sum()
}

/// Series in `q` with binomial-polynomial coefficients in `t`.
pub type QSeriesOfT = TruncatedSeries<BinomialPoly<Rational>>;

/// `F_k(x_1, …, x_k) = q^(k−1) Σ_0^t x_1 ⋯ x_k`, with the series variable
/// playing the role of `q`.
pub fn plane_q_operator(args: &[&QSeriesOfT]) -> QSeriesOfT {
    let order = args.iter().map(|a| a.order()).min().unwrap_or(0);
    let prod = TruncatedSeries::product(args, order);
    let summed = TruncatedSeries::new(prod.coeffs().iter().map(BinomialPoly::discrete_sum).collect(), order);
    (1..args.len()).fold(summed, |acc, _| acc.mul_t())
}

/// Coefficientwise forward difference of a [`QSeriesOfT`].
pub fn finite_difference_coefficients(x: &QSeriesOfT) -> QSeriesOfT {
    TruncatedSeries::new(
        x.coeffs().iter().map(BinomialPoly::finite_difference).collect(),
        x.order(),
    )
}
