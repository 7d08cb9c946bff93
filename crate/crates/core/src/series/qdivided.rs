//! Series with q-factorial denominators.
//!
//! A [`QDividedSeries`] stores numerators `N_n` of `Σ N_n t^n / [n]_q!`.
//! Every coefficient carries the fixed denominator `[n]_q!` of its degree,
//! so the representation stays division-free: products use Gaussian
//! binomials, the q-integral and the q-derivative are index shifts, and two
//! series are equal exactly when their numerators are.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::{q_binomial, q_factorial, q_power, QPoly, Rational, Ring};

use super::truncated::TruncatedSeries;

#[derive(Clone, PartialEq)]
pub struct QDividedSeries {
    numerators: Vec<QPoly>,
}

impl QDividedSeries {
    pub fn new(mut numerators: Vec<QPoly>, order: usize) -> Self {
        numerators.resize(order + 1, QPoly::default());
        Self { numerators }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![QPoly::one()], order)
    }

    /// `numerator · t^k / [k]_q!`
    pub fn monomial(numerator: QPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.numerators[k] = numerator;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.numerators.len() - 1
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self::new(self.numerators.clone(), order)
    }

    pub fn numerator(&self, k: usize) -> QPoly {
        self.numerators.get(k).cloned().unwrap_or_default()
    }

    pub fn numerators(&self) -> &[QPoly] {
        &self.numerators
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(QPoly::is_zero)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.numerators.iter().position(|c| !c.is_zero())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|k| &self.numerators[k] + &other.numerators[k])
                .collect(),
            order,
        )
    }

    pub fn minus(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|k| &self.numerators[k] - &other.numerators[k])
                .collect(),
            order,
        )
    }

    /// `(t^i/[i]!)(t^j/[j]!) = qbin(i+j, i) t^(i+j)/[i+j]!`
    pub fn times(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![QPoly::default(); order + 1];
        for (i, a) in self.numerators.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.numerators.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    let term = &(a * b) * &q_binomial(i + j, i as i64);
                    out[i + j] = &out[i + j] + &term;
                }
            }
        }
        Self { numerators: out }
    }

    pub fn scale(&self, by: &QPoly) -> Self {
        Self {
            numerators: self.numerators.iter().map(|c| c * by).collect(),
        }
    }

    /// `∫_0^t s^n d_q s = t^(n+1) / [n+1]_q`, a shift of the numerators.
    pub fn q_integrate(&self) -> Self {
        let order = self.order();
        let mut numerators = Vec::with_capacity(order + 1);
        numerators.push(QPoly::default());
        numerators.extend(self.numerators[..order].iter().cloned());
        Self { numerators }
    }

    /// `D_q t^n = [n]_q t^(n-1)`; known to one order less.
    pub fn q_derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::new(self.numerators[1..].to_vec(), order)
    }

    /// `f(qt)`
    pub fn substitute_qt(&self) -> Self {
        Self {
            numerators: self
                .numerators
                .iter()
                .enumerate()
                .map(|(n, c)| c * &q_power(n))
                .collect(),
        }
    }

    /// `B_q(f, g) = ∫_0^t f(s) g(qs) d_q s`
    pub fn bilinear_q(f: &Self, g: &Self) -> Self {
        f.times(&g.substitute_qt()).q_integrate()
    }

    /// The ordinary series obtained at `q = 1`, where `[n]_q! = n!`.
    pub fn at_q_one(&self) -> TruncatedSeries<Rational> {
        let mut fact = BigInt::from(1);
        let coeffs = self
            .numerators
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= n;
                }
                c.at_one() / Rational::from_integer(fact.clone())
            })
            .collect();
        TruncatedSeries::new(coeffs, self.order())
    }

    /// Multiplies numerator and denominator out: coefficient `n` is returned
    /// as the pair `(N_n, [n]_q!)`.
    pub fn fractions(&self) -> Vec<(QPoly, QPoly)> {
        self.numerators
            .iter()
            .enumerate()
            .map(|(n, c)| (c.clone(), q_factorial(n)))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.fractions()
            .into_iter()
            .map(|(num, den)| {
                if num.is_zero() || den == QPoly::one() {
                    num.to_string()
                } else {
                    format!("({num})/({den})")
                }
            })
            .collect()
    }
}

impl fmt::Debug for QDividedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QDividedSeries{:?}", self.to_strings())
    }
}
