//! Finitely supported linear combinations of basis words.
//!
//! One representation serves both FQSym (keys are permutations) and WQSym
//! (keys are packed words). Keys are kept in a `BTreeMap`, so iteration and
//! serialization are ordered lexicographically on the words.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Rational, Ring};
use crate::combinat::{PackedWord, Permutation};

/// A word indexing a basis element; its length is the grading.
pub trait BasisKey: Clone + Ord + fmt::Display + fmt::Debug + Send + Sync {
    fn degree(&self) -> usize;
}

impl BasisKey for Permutation {
    fn degree(&self) -> usize {
        self.len()
    }
}

impl BasisKey for PackedWord {
    fn degree(&self) -> usize {
        self.len()
    }
}

/// `Σ coeff · basis(key)` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Element<K: BasisKey, R: Ring> {
    terms: BTreeMap<K, R>,
}

impl<K: BasisKey, R: Ring> Default for Element<K, R> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: BasisKey, R: Ring> Element<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn term(key: K, coeff: R) -> Self {
        let mut e = Self::zero();
        e.add_term(key, coeff);
        e
    }

    /// Sums repeated keys.
    pub fn from_terms(terms: impl IntoIterator<Item = (K, R)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    /// Sum of the given basis elements, each with coefficient one.
    pub fn sum_of(keys: impl IntoIterator<Item = K>) -> Self {
        Self::from_terms(keys.into_iter().map(|k| (k, R::one())))
    }

    pub fn add_term(&mut self, key: K, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().plus(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&R::one().negated()))
    }

    pub fn scale(&self, by: &R) -> Self {
        Self::from_terms(self.iter().map(|(k, c)| (k.clone(), c.times(by))))
    }

    pub fn scaled(&self, by: &Rational) -> Self {
        Self::from_terms(self.iter().map(|(k, c)| (k.clone(), c.scaled(by))))
    }

    /// Degree-`d` homogeneous component.
    pub fn component(&self, d: usize) -> Self {
        Self::from_terms(
            self.iter()
                .filter(|(k, _)| k.degree() == d)
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&K) -> bool) -> Self {
        Self::from_terms(
            self.iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.keys().map(BasisKey::degree).max()
    }

    /// Extends a map on basis keys linearly.
    pub fn map_linear<K2: BasisKey>(&self, f: impl Fn(&K) -> Element<K2, R>) -> Element<K2, R> {
        let mut out = Element::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c.times(c2));
            }
        }
        out
    }

    /// Extends a map on pairs of basis keys bilinearly.
    pub fn bilinear(
        &self,
        other: &Self,
        f: impl Fn(&K, &K) -> Element<K, R>,
    ) -> Element<K, R> {
        let mut out = Element::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let coeff = ca.times(cb);
                for (k, c) in f(a, b).iter() {
                    out.add_term(k.clone(), coeff.times(c));
                }
            }
        }
        out
    }

    /// Extends a map on tuples of basis keys multilinearly.
    pub fn multilinear(args: &[&Self], f: impl Fn(&[&K]) -> Element<K, R>) -> Element<K, R> {
        fn go<K: BasisKey, R: Ring>(
            args: &[&Element<K, R>],
            picked: &mut Vec<K>,
            coeff: R,
            f: &dyn Fn(&[&K]) -> Element<K, R>,
            out: &mut Element<K, R>,
        ) {
            match args.split_first() {
                None => {
                    let refs: Vec<&K> = picked.iter().collect();
                    for (k, c) in f(&refs).iter() {
                        out.add_term(k.clone(), coeff.times(c));
                    }
                }
                Some((first, rest)) => {
                    for (k, c) in first.iter() {
                        picked.push(k.clone());
                        go(rest, picked, coeff.times(c), f, out);
                        picked.pop();
                    }
                }
            }
        }
        let mut out = Element::zero();
        go(args, &mut Vec::new(), R::one(), &f, &mut out);
        out
    }

    /// `(key, coefficient)` pairs rendered as strings, in key order.
    pub fn string_terms(&self) -> Vec<(String, String)> {
        self.iter().map(|(k, c)| (k.to_string(), c.to_string())).collect()
    }
}

impl<K: BasisKey, R: Ring> fmt::Debug for Element<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
