//! Word quasi-symmetric functions in the `M` basis.
//!
//! `M_a · M_b` sums `M_w` over packed words `w = u·v` with `|u| = |a|`,
//! `pack(u) = a` and `pack(v) = b`. The map `δ` erases every occurrence of
//! the maximal letter, and `ψ(M_u) = C(t, max u)` sends `δ` to the forward
//! difference.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::algebra::Element;
use crate::arith::{q_power, QPoly, Rational, Ring};
use crate::combinat::{
    packed_words, plane_tree_of_word, Letter, PackedWord, PlaneTree, PACKED_WORD_GUARD,
};
use crate::error::{Error, Result};
use crate::series::BinomialPoly;

fn relabel(pattern: &[Letter], labels: &[Letter]) -> Vec<Letter> {
    pattern.iter().map(|&a| labels[a as usize - 1]).collect()
}

/// Every packed `w = u·v` with `pack(u) = a`, `pack(v) = b`, sorted.
///
/// Built directly: the levels of `a` go to a set `S` and those of `b` to a
/// set `T` of values with `S ∪ T = {1..m}`.
pub fn packed_convolve(a: &PackedWord, b: &PackedWord) -> Vec<PackedWord> {
    let (p, r) = (a.max_letter() as usize, b.max_letter() as usize);
    let mut out = Vec::new();
    for m in p.max(r)..=p + r {
        let all: Vec<Letter> = (1..=m as Letter).collect();
        let overlap = p + r - m;
        for s in all.iter().copied().combinations(p) {
            let rest: Vec<Letter> = all.iter().copied().filter(|x| !s.contains(x)).collect();
            for shared in s.iter().copied().combinations(overlap) {
                let mut t: Vec<Letter> = rest.iter().copied().chain(shared).collect();
                t.sort_unstable();
                let mut w = relabel(a.letters(), &s);
                w.extend(relabel(b.letters(), &t));
                out.push(PackedWord::from_vec_unchecked(w));
            }
        }
    }
    out.sort();
    out
}

/// Which block of `w = u·v` carries the larger maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `max(v) < max(u)`
    Prec,
    /// `max(v) = max(u)`
    Circ,
    /// `max(v) > max(u)`
    Succ,
}

fn side_of(w: &PackedWord, split: usize) -> Side {
    let (u, v) = w.letters().split_at(split);
    let (mu, mv) = (u.iter().max(), v.iter().max());
    match mv.cmp(&mu) {
        std::cmp::Ordering::Less => Side::Prec,
        std::cmp::Ordering::Equal => Side::Circ,
        std::cmp::Ordering::Greater => Side::Succ,
    }
}

/// The terms of [`packed_convolve`] split into `(≺, ∘, ≻)`.
pub fn tridendriform_split(
    a: &PackedWord,
    b: &PackedWord,
) -> Result<(Vec<PackedWord>, Vec<PackedWord>, Vec<PackedWord>)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let (mut prec, mut circ, mut succ) = (Vec::new(), Vec::new(), Vec::new());
    for w in packed_convolve(a, b) {
        match side_of(&w, a.len()) {
            Side::Prec => prec.push(w),
            Side::Circ => circ.push(w),
            Side::Succ => succ.push(w),
        }
    }
    Ok((prec, circ, succ))
}

/// The words `w_1 m w_2 m ⋯ m w_k` with `pack(w_i) = u_i` and
/// `m = max(w_1, …, w_k) + 1`, sorted. For `k = 1` the single separator is
/// appended, so that `δ F_1 = id` as for every other arity.
pub fn sandwich_words(parts: &[&PackedWord]) -> Result<Vec<PackedWord>> {
    let (first, rest) = parts.split_first().ok_or(Error::EmptyOperand)?;
    let mut blocks: Vec<(Vec<Letter>, Vec<usize>)> = vec![(first.letters().to_vec(), vec![first.len()])];
    for u in rest {
        let mut next = Vec::new();
        for (word, lens) in &blocks {
            let left = PackedWord::from_vec_unchecked(word.clone());
            for w in packed_convolve(&left, u) {
                let mut lens = lens.clone();
                lens.push(u.len());
                next.push((w.letters().to_vec(), lens));
            }
        }
        blocks = next;
    }
    let mut out: Vec<PackedWord> = blocks
        .into_iter()
        .map(|(word, lens)| {
            let m = word.iter().copied().max().unwrap_or(0) + 1;
            let mut w = Vec::with_capacity(word.len() + lens.len());
            let mut letters = word.into_iter();
            for (i, len) in lens.iter().enumerate() {
                if i > 0 {
                    w.push(m);
                }
                w.extend(letters.by_ref().take(*len));
            }
            if lens.len() == 1 {
                w.push(m);
            }
            PackedWord::from_vec_unchecked(w)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// An element of WQSym over `R` in the `M` basis.
#[derive(Clone, PartialEq)]
pub struct WqsymElement<R: Ring> {
    terms: Element<PackedWord, R>,
}

impl<R: Ring> fmt::Debug for WqsymElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{:?}", self.terms)
    }
}

impl<R: Ring> Default for WqsymElement<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Ring> WqsymElement<R> {
    pub fn zero() -> Self {
        Self {
            terms: Element::zero(),
        }
    }

    pub fn unit() -> Self {
        Self::m(PackedWord::empty())
    }

    pub fn m(u: PackedWord) -> Self {
        Self {
            terms: Element::basis(u),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PackedWord, R)>) -> Self {
        Self {
            terms: Element::from_terms(terms),
        }
    }

    pub fn sum_of(words: impl IntoIterator<Item = PackedWord>) -> Self {
        Self {
            terms: Element::sum_of(words),
        }
    }

    fn wrap(terms: Element<PackedWord, R>) -> Self {
        Self { terms }
    }

    pub fn coeff(&self, u: &PackedWord) -> R {
        self.terms.coeff(u)
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

    pub fn iter(&self) -> impl Iterator<Item = (&PackedWord, &R)> {
        self.terms.iter()
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::wrap(self.terms.plus(&other.terms))
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self::wrap(self.terms.minus(&other.terms))
    }

    pub fn scale(&self, by: &R) -> Self {
        Self::wrap(self.terms.scale(by))
    }

    /// Keeps the words of length `<= max_len`.
    pub fn truncated(&self, max_len: usize) -> Self {
        Self::wrap(self.terms.filter(|u| u.len() <= max_len))
    }

    fn product_by(&self, other: &Self, max_len: Option<usize>) -> Self {
        Self::wrap(self.terms.bilinear(&other.terms, |a, b| {
            if max_len.is_some_and(|d| a.len() + b.len() > d) {
                return Element::zero();
            }
            Element::sum_of(packed_convolve(a, b))
        }))
    }

    pub fn product(&self, other: &Self) -> Self {
        self.product_by(other, None)
    }

    /// The product with every word longer than `max_len` dropped.
    pub fn product_truncated(&self, other: &Self, max_len: usize) -> Self {
        self.product_by(other, Some(max_len))
    }

    fn partial(&self, other: &Self, side: Side) -> Result<Self> {
        if self.terms.keys().chain(other.terms.keys()).any(PackedWord::is_empty) {
            return Err(Error::EmptyOperand);
        }
        Ok(Self::wrap(self.terms.bilinear(&other.terms, |a, b| {
            Element::sum_of(
                packed_convolve(a, b)
                    .into_iter()
                    .filter(|w| side_of(w, a.len()) == side),
            )
        })))
    }

    pub fn prec(&self, other: &Self) -> Result<Self> {
        self.partial(other, Side::Prec)
    }

    pub fn circ(&self, other: &Self) -> Result<Self> {
        self.partial(other, Side::Circ)
    }

    pub fn succ(&self, other: &Self) -> Result<Self> {
        self.partial(other, Side::Succ)
    }

    /// `δ M_u = M_u'`, `u'` being `u` with its maximal letter erased.
    pub fn delta(&self) -> Self {
        Self::from_terms(
            self.iter()
                .filter(|(u, _)| !u.is_empty())
                .map(|(u, c)| (u.erase_max(), c.clone())),
        )
    }

    /// The multilinear map `F_k` on `k = args.len()` arguments.
    pub fn f_k(args: &[&Self]) -> Result<Self> {
        if args.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let elems: Vec<&Element<PackedWord, R>> = args.iter().map(|a| &a.terms).collect();
        Ok(Self::wrap(Element::multilinear(&elems, |us| {
            Element::sum_of(sandwich_words(us).expect("at least one argument"))
        })))
    }

    /// `ψ(M_u) = C(t, max u)`.
    pub fn psi(&self) -> BinomialPoly<R> {
        BinomialPoly::from_terms(
            self.iter()
                .map(|(u, c)| (u.max_letter() as usize, c.clone())),
        )
    }

    /// `{"basis": "M", "terms": [{"word": "1121", "coeff": "1"}, …]}`
    pub fn to_json(&self) -> Value {
        json!({
            "basis": "M",
            "terms": self
                .iter()
                .map(|(u, c)| json!({"word": u.to_string(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// `X_N = Σ_(|u| <= N) q^|u| M_u`
pub fn x_element(max_len: usize) -> WqsymElement<QPoly> {
    WqsymElement::from_terms(
        (0..=max_len)
            .flat_map(packed_words)
            .map(|u| {
                let q = q_power(u.len());
                (u, q)
            }),
    )
}

/// `Σ M_u` over the packed words `u` of length `n` with `T(u) = tree`.
pub fn tree_fiber_element(
    tree: &PlaneTree,
    n: usize,
    unsafe_large: bool,
) -> Result<WqsymElement<Rational>> {
    if n > PACKED_WORD_GUARD && !unsafe_large {
        return Err(Error::SizeGuard {
            what: "packed word length",
            size: n,
            limit: PACKED_WORD_GUARD,
        });
    }
    Ok(WqsymElement::sum_of(
        packed_words(n).filter(|u| plane_tree_of_word(u.letters()) == *tree),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::combinat::pack;
    use crate::series::binomial_to_monomial;

    type E = WqsymElement<Rational>;

    fn w(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> Vec<PackedWord> {
        list.iter().map(|s| w(s)).collect()
    }

    fn m(s: &str) -> E {
        E::m(w(s))
    }

    fn all_up_to(n: usize) -> Vec<PackedWord> {
        (0..=n).flat_map(packed_words).collect()
    }

    fn convolve_oracle(a: &PackedWord, b: &PackedWord) -> Vec<PackedWord> {
        packed_words(a.len() + b.len())
            .filter(|x| {
                let (u, v) = x.letters().split_at(a.len());
                pack(u) == *a && pack(v) == *b
            })
            .collect()
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(
            packed_convolve(&w("11"), &w("21")),
            words(&["1121", "1132", "2221", "2231", "3321"])
        );
        assert_eq!(packed_convolve(&w(""), &w("212")), words(&["212"]));
        assert_eq!(packed_convolve(&w("1"), &w("1")), words(&["11", "12", "21"]));
    }

    #[test]
    fn convolution_matches_filter() {
        let ws = all_up_to(5);
        for a in &ws {
            for b in &ws {
                if a.len() + b.len() <= 6 {
                    assert_eq!(packed_convolve(a, b), convolve_oracle(a, b), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn tridendriform_examples() {
        let (p, c, s) = tridendriform_split(&w("1"), &w("1")).unwrap();
        assert_eq!((p, c, s), (words(&["21"]), words(&["11"]), words(&["12"])));
        let (p, c, s) = tridendriform_split(&w("11"), &w("21")).unwrap();
        assert_eq!(p, words(&["3321"]));
        assert_eq!(c, words(&["2221"]));
        assert_eq!(s, words(&["1121", "1132", "2231"]));
        assert!(tridendriform_split(&w(""), &w("1")).is_err());
    }

    #[test]
    fn tridendriform_partitions_the_product() {
        let ws: Vec<PackedWord> = all_up_to(4).into_iter().filter(|u| !u.is_empty()).collect();
        for a in &ws {
            for b in &ws {
                if a.len() + b.len() > 5 {
                    continue;
                }
                let (p, c, s) = tridendriform_split(a, b).unwrap();
                let mut all: Vec<PackedWord> = p.into_iter().chain(c).chain(s).collect();
                all.sort();
                assert_eq!(all, packed_convolve(a, b));
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(m("5211354").delta(), m("21134"));
        assert_eq!(m("11").delta(), E::unit());
        assert!(E::unit().delta().is_zero());
    }

    #[test]
    fn f_k_examples() {
        let got = E::f_k(&[&m("11"), &m("21")]).unwrap();
        assert_eq!(got, E::sum_of(words(&["11321", "11432", "22321", "22431", "33421"])));
        assert_eq!(E::f_k(&[&E::unit()]).unwrap(), m("1"));
        assert!(E::f_k(&[]).is_err());
    }

    #[test]
    fn delta_inverts_f_k() {
        let ws = all_up_to(2);
        for a in &ws {
            for b in &ws {
                let (x, y) = (E::m(a.clone()), E::m(b.clone()));
                assert_eq!(E::f_k(&[&x, &y]).unwrap().delta(), x.product(&y));
                for c in &ws {
                    let z = E::m(c.clone());
                    let lhs = E::f_k(&[&x, &y, &z]).unwrap().delta();
                    assert_eq!(lhs, x.product(&y).product(&z));
                }
            }
            let x = E::m(a.clone());
            assert_eq!(E::f_k(&[&x]).unwrap().delta(), x);
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(m("11").psi(), BinomialPoly::basis(1, int(1)));
        assert_eq!(m("21").psi(), BinomialPoly::basis(2, int(1)));
        let prod = m("11").product(&m("21"));
        assert_eq!(prod.psi(), m("11").psi().times(&m("21").psi()));
        assert_eq!(E::unit().psi(), BinomialPoly::one());
    }

    #[test]
    fn psi_sends_delta_to_difference() {
        for u in all_up_to(5) {
            let x = E::m(u);
            assert_eq!(x.delta().psi(), x.psi().finite_difference());
        }
    }

    #[test]
    fn psi_is_multiplicative_in_monomials() {
        let ws = all_up_to(3);
        for a in &ws {
            for b in &ws {
                let (x, y) = (E::m(a.clone()), E::m(b.clone()));
                let lhs = binomial_to_monomial(&x.product(&y).psi());
                let rhs = &binomial_to_monomial(&x.psi()) * &binomial_to_monomial(&y.psi());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let cherry = PlaneTree::internal(vec![PlaneTree::Leaf, PlaneTree::Leaf]);
        assert_eq!(tree_fiber_element(&cherry, 1, false).unwrap(), m("1"));
        let big: PlaneTree = "((**)(**)(***))".parse().unwrap();
        let fiber = tree_fiber_element(&big, 6, false).unwrap();
        assert_eq!(fiber.len(), 13);
        let by_max = fiber.psi();
        assert_eq!(
            by_max,
            BinomialPoly::from_terms([(2, int(1)), (3, int(6)), (4, int(6))])
        );
        assert!(matches!(
            tree_fiber_element(&big, 10, false),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn json_dump() {
        let js = m("11").product(&m("21")).to_json();
        assert_eq!(js["basis"], "M");
        assert_eq!(js["terms"][0], json!({"word": "1121", "coeff": "1"}));
    }
}
