//! Free quasi-symmetric functions in the `G` and `F = G∘inverse` bases.
//!
//! `G_a · G_b` sums `G_γ` over the concatenations `γ = u·v` with
//! `Std(u) = a` and `Std(v) = b`; in the `F` basis the same product is the
//! shifted shuffle. The derivation `∂` erases the largest letter of `G`
//! indices, and `B(G_a, G_b)` inserts a new maximum between the two blocks.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::algebra::Element;
use crate::arith::{q_power, QPoly, Rational, Ring};
use crate::combinat::{standardize, BinaryTree, Letter, Permutation};
use crate::error::{Error, Result};
use crate::series::{QDividedSeries, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    G,
    F,
}

impl Basis {
    fn name(self) -> &'static str {
        match self {
            Basis::G => "G",
            Basis::F => "F",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relabels `pattern` (a permutation of `1..k`) by the sorted letters `labels`.
fn relabel<'a>(pattern: &'a Permutation, labels: &'a [Letter]) -> impl Iterator<Item = Letter> + 'a {
    pattern.word().iter().map(move |&a| labels[a as usize - 1])
}

/// Every `γ = u·v` with `Std(u) = a`, `Std(v) = b`, sorted; `C(k+l, k)` of them.
pub fn convolve(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
    let (k, n) = (a.len(), a.len() + b.len());
    let mut out: Vec<Permutation> = (1..=n as Letter)
        .combinations(k)
        .map(|left| {
            let right: Vec<Letter> = (1..=n as Letter).filter(|x| !left.contains(x)).collect();
            let word = relabel(a, &left).chain(relabel(b, &right)).collect();
            Permutation::from_vec_unchecked(word)
        })
        .collect();
    out.sort();
    out
}

/// The terms of [`convolve`] split by where the largest letter sits: in the
/// first block (`≺`) or in the second (`≻`).
pub fn half_products(
    a: &Permutation,
    b: &Permutation,
) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let n = (a.len() + b.len()) as Letter;
    Ok(convolve(a, b)
        .into_iter()
        .partition(|g| g.word()[..a.len()].contains(&n)))
}

/// Every `γ = u (k+l+1) v` with `Std(u) = a`, `Std(v) = b`.
pub fn bilinear_b(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
    let top = (a.len() + b.len() + 1) as Letter;
    convolve(a, b)
        .into_iter()
        .map(|g| {
            let mut w = g.into_word();
            w.insert(a.len(), top);
            Permutation::from_vec_unchecked(w)
        })
        .collect()
}

/// Shuffles of `a` with `b` shifted by `|a|`, with their inversion counts.
fn shifted_shuffle(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
    let (k, n) = (a.len(), a.len() + b.len());
    let shift = k as Letter;
    let mut out: Vec<Permutation> = (0..n)
        .combinations(k)
        .map(|slots| {
            let mut word = vec![0; n];
            let (mut ia, mut ib) = (a.word().iter(), b.word().iter());
            for (pos, cell) in word.iter_mut().enumerate() {
                *cell = if slots.contains(&pos) {
                    *ia.next().expect("slot for a")
                } else {
                    *ib.next().expect("slot for b") + shift
                };
            }
            Permutation::from_vec_unchecked(word)
        })
        .collect();
    out.sort();
    out
}

/// An element of FQSym over `R`, tagged with its basis.
#[derive(Clone, PartialEq)]
pub struct FqsymElement<R: Ring> {
    basis: Basis,
    terms: Element<Permutation, R>,
}

impl<R: Ring> fmt::Debug for FqsymElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.basis, self.terms)
    }
}

impl<R: Ring> FqsymElement<R> {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: Element::zero(),
        }
    }

    pub fn unit(basis: Basis) -> Self {
        Self::basis_element(basis, Permutation::empty())
    }

    pub fn basis_element(basis: Basis, sigma: Permutation) -> Self {
        Self {
            basis,
            terms: Element::basis(sigma),
        }
    }

    pub fn g(sigma: Permutation) -> Self {
        Self::basis_element(Basis::G, sigma)
    }

    pub fn f(sigma: Permutation) -> Self {
        Self::basis_element(Basis::F, sigma)
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Permutation, R)>) -> Self {
        Self {
            basis,
            terms: Element::from_terms(terms),
        }
    }

    pub fn from_element(basis: Basis, terms: Element<Permutation, R>) -> Self {
        Self { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn element(&self) -> &Element<Permutation, R> {
        &self.terms
    }

    pub fn coeff(&self, sigma: &Permutation) -> R {
        self.terms.coeff(sigma)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &R)> {
        self.terms.iter()
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.name(),
                found: other.basis.name(),
            });
        }
        Ok(())
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::BasisMismatch {
                expected: basis.name(),
                found: self.basis.name(),
            });
        }
        Ok(())
    }

    fn with_terms(&self, terms: Element<Permutation, R>) -> Self {
        Self {
            basis: self.basis,
            terms,
        }
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(self.with_terms(self.terms.plus(&other.terms)))
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(self.with_terms(self.terms.minus(&other.terms)))
    }

    pub fn scale(&self, by: &R) -> Self {
        self.with_terms(self.terms.scale(by))
    }

    /// Keeps the homogeneous components of degree `<= max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Self {
        self.with_terms(self.terms.filter(|s| s.len() <= max_degree))
    }

    pub fn component(&self, degree: usize) -> Self {
        self.with_terms(self.terms.component(degree))
    }

    /// Rewrites the element in the other basis via `F_σ = G_(σ^-1)`.
    pub fn to_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        Self {
            basis,
            terms: Element::from_terms(self.iter().map(|(s, c)| (s.inverse(), c.clone()))),
        }
    }

    fn product_by(&self, other: &Self, max_degree: Option<usize>) -> Self {
        let rule: fn(&Permutation, &Permutation) -> Vec<Permutation> = match self.basis {
            Basis::G => convolve,
            Basis::F => shifted_shuffle,
        };
        self.with_terms(self.terms.bilinear(&other.terms, |a, b| {
            if max_degree.is_some_and(|d| a.len() + b.len() > d) {
                return Element::zero();
            }
            Element::sum_of(rule(a, b))
        }))
    }

    /// The product of FQSym: convolution on `G`, shifted shuffle on `F`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(self.product_by(other, None))
    }

    /// The product with every term of degree above `max_degree` dropped.
    pub fn product_truncated(&self, other: &Self, max_degree: usize) -> Result<Self> {
        self.same_basis(other)?;
        Ok(self.product_by(other, Some(max_degree)))
    }

    fn half(&self, other: &Self, prec: bool) -> Result<Self> {
        self.require(Basis::G)?;
        other.require(Basis::G)?;
        if self.terms.keys().chain(other.terms.keys()).any(Permutation::is_empty) {
            return Err(Error::EmptyOperand);
        }
        Ok(self.with_terms(self.terms.bilinear(&other.terms, |a, b| {
            let (p, s) = half_products(a, b).expect("operands are nonempty");
            Element::sum_of(if prec { p } else { s })
        })))
    }

    /// `x ≺ y`: the maximal letter lies in the first block.
    pub fn prec(&self, other: &Self) -> Result<Self> {
        self.half(other, true)
    }

    /// `x ≻ y`: the maximal letter lies in the second block.
    pub fn succ(&self, other: &Self) -> Result<Self> {
        self.half(other, false)
    }

    /// The derivation `∂`: erases the letter `n` of `G` indices; on the `F`
    /// basis this drops the last letter and standardizes.
    pub fn derive(&self) -> Self {
        let erase = |s: &Permutation| match self.basis {
            Basis::G => s.erase_max(),
            Basis::F => standardize(&s.word()[..s.len() - 1]),
        };
        self.with_terms(Element::from_terms(
            self.iter()
                .filter(|(s, _)| !s.is_empty())
                .map(|(s, c)| (erase(s), c.clone())),
        ))
    }

    /// Bilinear extension of [`bilinear_b`] on the `G` basis.
    pub fn bilinear(&self, other: &Self) -> Result<Self> {
        self.require(Basis::G)?;
        other.require(Basis::G)?;
        Ok(self.with_terms(
            self.terms
                .bilinear(&other.terms, |a, b| Element::sum_of(bilinear_b(a, b))),
        ))
    }

    /// `φ(G_σ) = t^n / n!`, truncated at `order`.
    pub fn phi(&self, order: usize) -> Result<TruncatedSeries<R>> {
        self.require(Basis::G)?;
        let mut coeffs = vec![R::zero(); order + 1];
        for (s, c) in self.iter() {
            if s.len() <= order {
                let w = Rational::new(1.into(), crate::arith::factorial(s.len()));
                coeffs[s.len()] = coeffs[s.len()].plus(&c.scaled(&w));
            }
        }
        Ok(TruncatedSeries::new(coeffs, order))
    }

    /// `{"basis": "G", "terms": [{"perm": "1423", "coeff": "1"}, …]}`
    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.name(),
            "terms": self
                .iter()
                .map(|(s, c)| json!({"perm": s.to_string(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

impl FqsymElement<Rational> {
    pub fn to_qpoly(&self) -> FqsymElement<QPoly> {
        FqsymElement {
            basis: self.basis,
            terms: Element::from_terms(self.iter().map(|(s, c)| (s.clone(), QPoly::constant(c.clone())))),
        }
    }

    /// The Kronecker pairing `<F_σ, G_τ> = δ_(σ,τ)`, `self` in `F`.
    pub fn pairing(&self, other: &Self) -> Result<Rational> {
        self.require(Basis::F)?;
        other.require(Basis::G)?;
        Ok(self
            .iter()
            .map(|(s, c)| c * other.coeff(s))
            .fold(Rational::zero(), |acc, x| acc + x))
    }
}

impl FqsymElement<QPoly> {
    /// `φ_q(G_σ) = q^imaj(σ) t^n / [n]_q!`, truncated at `order`.
    pub fn phi_q(&self, order: usize) -> Result<QDividedSeries> {
        self.require(Basis::G)?;
        let mut numerators = vec![QPoly::zero(); order + 1];
        for (s, c) in self.iter() {
            if s.len() <= order {
                numerators[s.len()] = &numerators[s.len()] + &(c * &q_power(s.imaj()));
            }
        }
        Ok(QDividedSeries::new(numerators, order))
    }

    /// `F_α · F_β = Σ q^(inv γ − inv α − inv β) F_γ` over the shifted shuffle.
    pub fn q_shuffle_product(&self, other: &Self) -> Result<Self> {
        self.require(Basis::F)?;
        other.require(Basis::F)?;
        Ok(self.with_terms(self.terms.bilinear(&other.terms, |a, b| {
            let base = a.inversions() + b.inversions();
            Element::from_terms(
                shifted_shuffle(a, b)
                    .into_iter()
                    .map(|g| {
                        let e = g.inversions() - base;
                        (g, q_power(e))
                    }),
            )
        })))
    }

    /// `A ↦ qA`: the degree-`n` component is multiplied by `q^n`.
    pub fn scale_alphabet(&self) -> Self {
        self.with_terms(Element::from_terms(
            self.iter().map(|(s, c)| (s.clone(), c * &q_power(s.len()))),
        ))
    }

    /// Sets `q = 1`.
    pub fn at_q_one(&self) -> FqsymElement<Rational> {
        FqsymElement {
            basis: self.basis,
            terms: Element::from_terms(self.iter().map(|(s, c)| (s.clone(), c.at_one()))),
        }
    }
}

/// `B_T(1)`: evaluation of the binary tree with `B` at nodes and `1` at
/// leaves.
pub fn tree_term(t: &BinaryTree) -> FqsymElement<Rational> {
    match t.split() {
        None => FqsymElement::unit(Basis::G),
        Some((l, r)) => tree_term(l)
            .bilinear(&tree_term(r))
            .expect("both operands are in the G basis"),
    }
}

/// `X_N = Σ_(n<=N) Σ_(σ ∈ S_n) G_σ`
pub fn x_element(max_degree: usize) -> FqsymElement<Rational> {
    FqsymElement::from_terms(
        Basis::G,
        (0..=max_degree)
            .flat_map(crate::combinat::permutations)
            .map(|s| (s, Rational::one())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, int, q_binomial, q_integer};
    use crate::combinat::{binary_trees, decreasing_tree, permutations};

    type E = FqsymElement<Rational>;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn perms(list: &[&str]) -> Vec<Permutation> {
        list.iter().map(|s| p(s)).collect()
    }

    fn g(s: &str) -> E {
        E::g(p(s))
    }

    fn all_up_to(n: usize) -> Vec<Permutation> {
        (0..=n).flat_map(permutations).collect()
    }

    /// Brute force: filter all of `S_(k+l)` by the two standardization
    /// conditions.
    fn convolve_oracle(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
        permutations(a.len() + b.len())
            .filter(|g| {
                standardize(&g.word()[..a.len()]) == *a && standardize(&g.word()[a.len()..]) == *b
            })
            .collect()
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(convolve(&p("1"), &p("1")), perms(&["12", "21"]));
        assert_eq!(convolve(&p(""), &p("231")), perms(&["231"]));
        assert_eq!(convolve(&p("12"), &p("1")), perms(&["123", "132", "231"]));
    }

    #[test]
    fn convolution_matches_filter_and_count() {
        let ps = all_up_to(4);
        for a in &ps {
            for b in &ps {
                if a.len() + b.len() > 6 {
                    continue;
                }
                let got = convolve(a, b);
                assert_eq!(got, convolve_oracle(a, b));
                assert_eq!(got.len(), usize::try_from(binomial(a.len() + b.len(), a.len())).unwrap());
            }
        }
    }

    #[test]
    fn product_examples() {
        let one = g("1");
        assert_eq!(one.product(&one).unwrap(), E::from_terms(Basis::G, [(p("12"), int(1)), (p("21"), int(1))]));
        assert_eq!(E::unit(Basis::G).product(&g("213")).unwrap(), g("213"));
        let left = one.product(&one).unwrap().product(&one).unwrap();
        let right = one.product(&one.product(&one).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.len(), 6);
        assert!(matches!(
            g("1").product(&E::f(p("1"))),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn half_product_examples() {
        let (prec, succ) = half_products(&p("1"), &p("1")).unwrap();
        assert_eq!((prec, succ), (perms(&["21"]), perms(&["12"])));
        let (prec, succ) = half_products(&p("12"), &p("1")).unwrap();
        // 132 splits as u = 13, v = 2, so its maximum is in the first block
        assert_eq!(prec, perms(&["132", "231"]));
        assert_eq!(succ, perms(&["123"]));
        assert!(matches!(half_products(&p(""), &p("1")), Err(Error::EmptyOperand)));
        assert!(g("").prec(&g("1")).is_err());
    }

    #[test]
    fn half_products_partition_the_product() {
        let ps: Vec<Permutation> = all_up_to(5).into_iter().filter(|s| !s.is_empty()).collect();
        for a in &ps {
            for b in &ps {
                if a.len() + b.len() > 6 {
                    continue;
                }
                let (prec, succ) = half_products(a, b).unwrap();
                let mut joined: Vec<Permutation> = prec.iter().chain(&succ).cloned().collect();
                joined.sort();
                assert_eq!(joined, convolve(a, b));
                assert!(prec.iter().all(|x| !succ.contains(x)));
            }
        }
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(g("231").derive(), g("21"));
        assert_eq!(g("1").derive(), E::unit(Basis::G));
        assert!(E::unit(Basis::G).derive().is_zero());
        let one = g("1");
        let lhs = one.product(&one).unwrap().derive();
        assert_eq!(lhs, E::unit(Basis::G).scale(&int(0)).plus(&g("1").scale(&int(2))).unwrap());
    }

    #[test]
    fn derivative_of_half_products() {
        // ∂(x ≺ y) = ∂x · y, not ∂x ≺ y: the erased maximum was the only
        // thing ordering the two blocks
        let (x, y) = (g("12"), g("1"));
        let lhs = x.prec(&y).unwrap().derive();
        assert_eq!(lhs, x.derive().product(&y).unwrap());
        assert_ne!(lhs, x.derive().prec(&y).unwrap());
        let lhs = y.succ(&x).unwrap().derive();
        assert_eq!(lhs, y.product(&x.derive()).unwrap());
        assert_ne!(lhs, y.succ(&x.derive()).unwrap());
    }

    #[test]
    fn bilinear_examples() {
        assert_eq!(bilinear_b(&p(""), &p("")), perms(&["1"]));
        assert_eq!(bilinear_b(&p("1"), &p("")), perms(&["12"]));
        assert_eq!(bilinear_b(&p("1"), &p("1")), perms(&["132", "231"]));
    }

    #[test]
    fn tree_terms_are_decreasing_tree_fibers() {
        let t: BinaryTree = "((_,_),((_,_),_))".parse().unwrap();
        assert_eq!(
            tree_term(&t),
            E::from_terms(Basis::G, perms(&["1423", "2413", "3412"]).into_iter().map(|s| (s, int(1))))
        );
        assert_eq!(tree_term(&BinaryTree::leaf_node()), g("1"));
        for n in 0..=6 {
            let mut total = E::zero(Basis::G);
            for t in binary_trees(n) {
                let term = tree_term(&t);
                let fiber: Vec<Permutation> = permutations(n).filter(|s| decreasing_tree(s) == t).collect();
                assert_eq!(term, E::from_terms(Basis::G, fiber.into_iter().map(|s| (s, int(1)))));
                total = total.plus(&term).unwrap();
            }
            assert_eq!(total, x_element(n).component(n));
        }
    }

    #[test]
    fn phi_examples() {
        let s = g("21").phi(3).unwrap();
        assert_eq!(s.coeff(2), crate::arith::ratio(1, 2));
        let q = g("21").to_qpoly().phi_q(3).unwrap();
        assert_eq!(q.numerator(2), QPoly::var());
        assert_eq!(q.fractions()[2].1, q_integer(2));
        assert!(E::f(p("1")).phi(2).is_err());
    }

    #[test]
    fn phi_is_multiplicative() {
        let ps = all_up_to(3);
        for a in &ps {
            for b in &ps {
                let (x, y) = (E::g(a.clone()), E::g(b.clone()));
                let xy = x.product(&y).unwrap();
                assert_eq!(xy.phi(6).unwrap(), x.phi(6).unwrap().times(&y.phi(6).unwrap()));
                let (xq, yq) = (x.to_qpoly(), y.to_qpoly());
                assert_eq!(
                    xy.to_qpoly().phi_q(6).unwrap(),
                    xq.phi_q(6).unwrap().times(&yq.phi_q(6).unwrap())
                );
            }
        }
    }

    #[test]
    fn q_shuffle_examples() {
        let f1 = E::f(p("1")).to_qpoly();
        let prod = f1.q_shuffle_product(&f1).unwrap();
        assert_eq!(
            prod,
            FqsymElement::from_terms(Basis::F, [(p("12"), QPoly::one()), (p("21"), QPoly::var())])
        );
        let unit = FqsymElement::<QPoly>::unit(Basis::F);
        let s = E::f(p("2314")).to_qpoly();
        assert_eq!(unit.q_shuffle_product(&s).unwrap(), s);
    }

    #[test]
    fn q_shuffle_at_one_is_the_product() {
        let ps = all_up_to(3);
        for a in &ps {
            for b in &ps {
                let (x, y) = (E::f(a.clone()), E::f(b.clone()));
                let q = x.to_qpoly().q_shuffle_product(&y.to_qpoly()).unwrap().at_q_one();
                let via_g = x
                    .to_basis(Basis::G)
                    .product(&y.to_basis(Basis::G))
                    .unwrap()
                    .to_basis(Basis::F);
                assert_eq!(q, via_g);
                assert_eq!(q, x.product(&y).unwrap());
            }
        }
    }

    #[test]
    fn modified_leibniz() {
        let ps = all_up_to(4);
        for a in &ps {
            for b in &ps {
                if a.len() + b.len() > 5 {
                    continue;
                }
                let x = E::f(a.clone()).to_qpoly();
                let y = E::f(b.clone()).to_qpoly();
                let lhs = x.q_shuffle_product(&y).unwrap().derive();
                let rhs = x
                    .derive()
                    .q_shuffle_product(&y.scale_alphabet())
                    .unwrap()
                    .plus(&x.q_shuffle_product(&y.derive()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }

    #[test]
    fn pairing_examples_and_adjointness() {
        assert_eq!(E::f(p("21")).pairing(&g("21")).unwrap(), int(1));
        assert_eq!(E::f(p("12")).pairing(&g("21")).unwrap(), int(0));
        assert!(g("1").pairing(&g("1")).is_err());
        let f1 = E::f(p("1"));
        for sigma in permutations(4) {
            let ds = g(&sigma.to_string()).derive();
            for tau in permutations(3) {
                let ft = E::f(tau.clone());
                let lhs = ft.pairing(&ds).unwrap();
                let rhs = ft.product(&f1).unwrap().pairing(&E::g(sigma.clone())).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn scale_alphabet_examples() {
        let x = g("1").to_qpoly();
        assert_eq!(x.scale_alphabet(), x.scale(&QPoly::var()));
        let u = FqsymElement::<QPoly>::unit(Basis::G);
        assert_eq!(u.scale_alphabet(), u);
    }

    #[test]
    fn half_product_statistics_small() {
        // k = l = 1: α ≻ β gives 12 (imaj 0); α ≺ β gives 21 (imaj 1 = q^l)
        let (prec, succ) = half_products(&p("1"), &p("1")).unwrap();
        assert_eq!(succ[0].imaj(), 0);
        assert_eq!(prec[0].imaj(), 1);
        assert_eq!(q_binomial(1, 0), QPoly::one());
    }

    #[test]
    fn json_dump() {
        let js = tree_term(&"((_,_),((_,_),_))".parse().unwrap()).to_json();
        assert_eq!(js["basis"], "G");
        assert_eq!(js["terms"][0], json!({"perm": "1423", "coeff": "1"}));
        assert_eq!(js["terms"].as_array().unwrap().len(), 3);
    }
}
