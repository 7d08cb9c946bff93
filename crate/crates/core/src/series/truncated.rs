use std::fmt;

use crate::arith::{int, q_integer, q_power, QPoly, Rational, Ring};
use crate::error::{Error, Result};

/// Power series in `t` known up to and including `t^order`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or drops terms so that exactly `order + 1`
    /// coefficients are kept.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c t^k`, zero if `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect(),
            order,
        )
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller order. Zero coefficients are
    /// skipped, which keeps products of monomial-like terms cheap.
    pub fn times(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.times(self))
    }

    /// Product of several series of the same order.
    pub fn product(factors: &[&Self], order: usize) -> Self {
        factors
            .iter()
            .fold(Self::one(order), |acc, f| acc.times(f))
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, by: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.times(by)).collect(),
        }
    }

    pub fn scaled(&self, by: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scaled(by)).collect(),
        }
    }

    /// Multiplies by `t`; the top coefficient falls off.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(R::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self { coeffs }
    }

    /// `∫_0^t f(s) ds`: the coefficient of `t^(n+1)` is `c_n / (n+1)`.
    pub fn integrate(&self) -> Self {
        let order = self.order();
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(R::zero());
        for (n, c) in self.coeffs[..order].iter().enumerate() {
            coeffs.push(c.scaled(&Rational::new(1.into(), (n as i64 + 1).into())));
        }
        Self { coeffs }
    }

    /// `d/dt`; the result is known to one order less.
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::new(
            (1..self.coeffs.len())
                .map(|n| self.coeffs[n].scaled(&int(n as i64)))
                .collect(),
            order,
        )
    }

    /// `exp(f)` for `f` without constant term, via `g' = f' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ValuationViolation(
                "exp needs a series without constant term".into(),
            ));
        }
        let order = self.order();
        let mut g = vec![R::one()];
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                let term = self.coeffs[k].times(&g[n - k]).scaled(&int(k as i64));
                acc = acc.plus(&term);
            }
            g.push(acc.scaled(&Rational::new(1.into(), (n as i64).into())));
        }
        Ok(Self { coeffs: g })
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}", self.to_strings())
    }
}

impl TruncatedSeries<QPoly> {
    /// `f(qt)`: the coefficient of `t^n` is multiplied by `q^n`.
    pub fn substitute_qt(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * &q_power(n))
                .collect(),
        }
    }

    /// `D_q f = (f(qt) - f(t)) / (qt - t)`, i.e. `D_q t^n = [n]_q t^(n-1)`.
    pub fn q_derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::new(
            (1..self.coeffs.len())
                .map(|n| &self.coeffs[n] * &q_integer(n))
                .collect(),
            order,
        )
    }

    /// Specializes `q = 1` coefficientwise.
    pub fn at_q_one(&self) -> TruncatedSeries<Rational> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(QPoly::at_one).collect(),
        }
    }
}

impl TruncatedSeries<Rational> {
    /// Embeds rational coefficients as constant polynomials.
    pub fn to_qpoly(&self) -> TruncatedSeries<QPoly> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| QPoly::constant(c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, ratio};
    use proptest::prelude::*;

    fn rs(cs: &[i64], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(cs.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn integration() {
        assert_eq!(rs(&[1], 4).integrate(), rs(&[0, 1], 4));
        let t = rs(&[0, 1], 4);
        assert_eq!(
            t.integrate(),
            TruncatedSeries::monomial(ratio(1, 2), 2, 4)
        );
        // top coefficient drops out
        assert_eq!(rs(&[0, 0, 0, 0, 1], 4).integrate(), rs(&[], 4));
    }

    #[test]
    fn exponential() {
        assert_eq!(rs(&[], 5).exp().unwrap(), rs(&[1], 5));
        let e = rs(&[0, 1], 7).exp().unwrap();
        for n in 0..=7 {
            assert_eq!(e.coeff(n), Rational::new(1.into(), factorial(n)));
        }
        assert!(rs(&[1], 3).exp().is_err());
    }

    #[test]
    fn truncated_product() {
        let a = rs(&[1, 1], 3);
        assert_eq!(a.pow(3), rs(&[1, 3, 3, 1], 3));
        assert_eq!(a.pow(4), rs(&[1, 4, 6, 4], 3));
        assert_eq!(rs(&[0, 1], 3).times(&rs(&[0, 0, 1], 5)).order(), 3);
    }

    #[test]
    fn q_calculus() {
        let t2 = TruncatedSeries::monomial(QPoly::from_ints(&[1]), 2, 4);
        let d = t2.q_derivative();
        assert_eq!(d.coeff(1), QPoly::from_ints(&[1, 1]));
        assert!(TruncatedSeries::<QPoly>::one(3).q_derivative().is_zero());
        assert_eq!(t2.substitute_qt().coeff(2), QPoly::from_ints(&[0, 0, 1]));
    }

    fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        prop::collection::vec((-20i64..20, 1i64..6), order + 1).prop_map(move |cs| {
            TruncatedSeries::new(cs.into_iter().map(|(p, q)| ratio(p, q)).collect(), order)
        })
    }

    proptest! {
        #[test]
        fn q_derivative_at_one_is_derivative(s in series_strategy(10)) {
            prop_assert_eq!(s.to_qpoly().q_derivative().at_q_one(), s.derivative());
        }

        #[test]
        fn integration_inverts_derivative(s in series_strategy(8)) {
            let back = s.integrate().derivative();
            prop_assert_eq!(back, s.with_order(7));
        }
    }
}
