//! Polynomials in `t` written in the binomial basis `{C(t,k)}`.
//!
//! The basis is the natural one for the forward difference `Δ` and the
//! discrete integral `Σ_0^t`: `Δ C(t,k) = C(t,k-1)` and
//! `Σ_0^t C(s,k) δs = C(t,k+1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, Rational, Ring, TPoly};

#[derive(Clone, PartialEq)]
pub struct BinomialPoly<R: Ring> {
    coeffs: BTreeMap<usize, R>,
}

impl<R: Ring> Default for BinomialPoly<R> {
    fn default() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<R: Ring> BinomialPoly<R> {
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut p = Self::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// `c · C(t, k)`
    pub fn basis(k: usize, c: R) -> Self {
        Self::from_terms([(k, c)])
    }

    pub fn add_term(&mut self, k: usize, c: R) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&k) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(&k).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// `Σ_0^t p(s) δs = Σ_{i<t} p(i)`
    pub fn discrete_sum(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k + 1, c.clone())).collect(),
        }
    }

    /// `Δp(t) = p(t+1) - p(t)`
    pub fn finite_difference(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&k, _)| k > 0)
                .map(|(&k, c)| (k - 1, c.clone()))
                .collect(),
        }
    }

    /// Value at a nonnegative integer.
    pub fn eval_at(&self, t: usize) -> R {
        self.coeffs
            .iter()
            .fold(R::zero(), |acc, (&k, c)| {
                acc.plus(&c.scaled(&Rational::from_integer(binomial(t, k))))
            })
    }
}

/// `C(t,i) C(t,j) = Σ_k C(k,i) C(i,k-j) C(t,k)` for `max(i,j) <= k <= i+j`.
fn basis_product(i: usize, j: usize) -> Vec<(usize, BigInt)> {
    (i.max(j)..=i + j)
        .map(|k| (k, binomial(k, i) * binomial(i, k - j)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

impl<R: Ring> Ring for BinomialPoly<R> {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::basis(0, R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
    fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c.negated())).collect(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                let ab = a.times(b);
                for (k, m) in basis_product(i, j) {
                    out.add_term(k, ab.scaled(&Rational::from_integer(m)));
                }
            }
        }
        out
    }
    fn scaled(&self, by: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&k, c)| (k, c.scaled(by))))
    }
}

/// Ascending in `k`, e.g. `C(t,2)+6C(t,3)+6C(t,4)`.
impl<R: Ring> fmt::Display for BinomialPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let s = c.to_string();
            let one = R::one().to_string();
            let neg_one = R::one().negated().to_string();
            let simple = !s.contains(['+', '/', ' ']) && !s[1..].contains('-');
            match () {
                _ if s == one => {
                    if i > 0 {
                        f.write_str("+")?
                    }
                }
                _ if s == neg_one => f.write_str("-")?,
                _ if simple && s.starts_with('-') => f.write_str(&s)?,
                _ if simple => {
                    if i > 0 {
                        f.write_str("+")?
                    }
                    f.write_str(&s)?
                }
                _ => {
                    if i > 0 {
                        f.write_str("+")?
                    }
                    write!(f, "({s})")?
                }
            }
            write!(f, "C(t,{k})")?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for BinomialPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinomialPoly({self})")
    }
}

/// Stirling numbers of the second kind `S(n,k)` for `0 <= k <= n`.
fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m { &row[k] * BigInt::from(k) } else { BigInt::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Monomial to binomial basis: `t^n = Σ_k S(n,k) k! C(t,k)`.
pub fn monomial_to_binomial(p: &TPoly) -> BinomialPoly<Rational> {
    let mut out = BinomialPoly::default();
    for (n, c) in p.coeffs().iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        for (k, s) in stirling2_row(n).into_iter().enumerate() {
            let weight = Rational::from_integer(s * factorial(k));
            out.add_term(k, c * &weight);
        }
    }
    out
}

/// Binomial to monomial basis by expanding `C(t,k) = t(t-1)...(t-k+1)/k!`.
pub fn binomial_to_monomial(p: &BinomialPoly<Rational>) -> TPoly {
    let mut out = TPoly::default();
    for (k, c) in p.terms() {
        let falling = (0..k).fold(TPoly::one(), |acc, i| {
            &acc * &TPoly::linear(<Rational as One>::one(), Rational::from_integer(-BigInt::from(i)))
        });
        let scale = c / Rational::from_integer(factorial(k));
        out = &out + &falling.scale(&scale);
    }
    out
}

/// Whether every coefficient is a nonnegative integer.
pub fn has_natural_coefficients(p: &BinomialPoly<Rational>) -> bool {
    p.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
}
