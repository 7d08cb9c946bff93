//! Tree expansions of fixed-point equations `x = a + Σ F_k(x, …, x)`.
//!
//! The solution is a sum over trees: leaves are labeled by `a`, a node with
//! `k` children applies `F_k` to the values of its subtrees. When every
//! `F_k` raises valuation by at least its node cost, only finitely many
//! trees contribute up to a given order. Terms are built bottom-up by
//! weight, so each subtree value is computed once.

use std::fmt;

use serde_json::{json, Value};

use crate::arith::Ring;
use crate::combinat::{BinaryTree, MAryTree, PlaneTree, Shape};
use crate::error::{Error, Result};

use super::qdivided::QDividedSeries;
use super::truncated::TruncatedSeries;

/// What the engines need from a truncated series type.
pub trait SeriesValue: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn order(&self) -> usize;
    fn zero(order: usize) -> Self;
    /// `t^k` truncated at `order`.
    fn t_power(k: usize, order: usize) -> Self;
    fn valuation(&self) -> Option<usize>;
    fn plus(&self, other: &Self) -> Self;
    fn coefficient_strings(&self) -> Vec<String>;
}

impl<R: Ring> SeriesValue for TruncatedSeries<R> {
    fn order(&self) -> usize {
        TruncatedSeries::order(self)
    }
    fn zero(order: usize) -> Self {
        TruncatedSeries::zero(order)
    }
    fn t_power(k: usize, order: usize) -> Self {
        TruncatedSeries::monomial(R::one(), k, order)
    }
    fn valuation(&self) -> Option<usize> {
        TruncatedSeries::valuation(self)
    }
    fn plus(&self, other: &Self) -> Self {
        TruncatedSeries::plus(self, other)
    }
    fn coefficient_strings(&self) -> Vec<String> {
        self.to_strings()
    }
}

impl SeriesValue for QDividedSeries {
    fn order(&self) -> usize {
        QDividedSeries::order(self)
    }
    fn zero(order: usize) -> Self {
        QDividedSeries::zero(order)
    }
    fn t_power(k: usize, order: usize) -> Self {
        QDividedSeries::monomial(crate::arith::QPoly::one(), k, order)
    }
    fn valuation(&self) -> Option<usize> {
        QDividedSeries::valuation(self)
    }
    fn plus(&self, other: &Self) -> Self {
        QDividedSeries::plus(self, other)
    }
    fn coefficient_strings(&self) -> Vec<String> {
        self.to_strings()
    }
}

/// How trees of a family are assembled from smaller ones.
pub trait Grammar {
    type Tree: Shape;
    fn leaf(&self) -> Self::Tree;
    /// Candidate arities for a node heading a tree of the given weight.
    fn arities(&self, weight: usize) -> Vec<usize>;
    /// Weight added by a node of this arity on top of its children.
    fn cost(&self, arity: usize) -> usize;
    fn node(&self, children: Vec<Self::Tree>) -> Self::Tree;
}

/// Complete binary trees, weighted by internal nodes.
pub struct Binary;

/// Complete `(m+1)`-ary trees, weighted by internal nodes.
pub struct MAry {
    pub m: usize,
}

/// Plane trees with internal arities at least 2, weighted by leaves minus
/// one.
pub struct Plane;

impl Grammar for Binary {
    type Tree = BinaryTree;
    fn leaf(&self) -> BinaryTree {
        BinaryTree::Empty
    }
    fn arities(&self, _: usize) -> Vec<usize> {
        vec![2]
    }
    fn cost(&self, _: usize) -> usize {
        1
    }
    fn node(&self, mut children: Vec<BinaryTree>) -> BinaryTree {
        let right = children.pop().expect("binary node");
        let left = children.pop().expect("binary node");
        BinaryTree::node(left, right)
    }
}

impl Grammar for MAry {
    type Tree = MAryTree;
    fn leaf(&self) -> MAryTree {
        MAryTree::Empty
    }
    fn arities(&self, _: usize) -> Vec<usize> {
        vec![self.m + 1]
    }
    fn cost(&self, _: usize) -> usize {
        1
    }
    fn node(&self, children: Vec<MAryTree>) -> MAryTree {
        MAryTree::node(children)
    }
}

impl Grammar for Plane {
    type Tree = PlaneTree;
    fn leaf(&self) -> PlaneTree {
        PlaneTree::Leaf
    }
    fn arities(&self, weight: usize) -> Vec<usize> {
        (2..=weight + 1).collect()
    }
    fn cost(&self, arity: usize) -> usize {
        arity - 1
    }
    fn node(&self, children: Vec<PlaneTree>) -> PlaneTree {
        PlaneTree::internal(children)
    }
}

/// Checks `val F_k(t^i_1, …, t^i_k) >= Σ i_j + cost(k)` on probe monomials.
///
/// Arities up to 3 are probed on the full grid of exponents; wider nodes on
/// the all-zero tuple and on tuples with one raised entry.
pub fn check_valuation<G: Grammar, V: SeriesValue>(
    grammar: &G,
    op: &dyn Fn(&[&V]) -> V,
    order: usize,
) -> Result<()> {
    let mut arities: Vec<usize> = (0..=order)
        .flat_map(|w| grammar.arities(w))
        .filter(|&k| grammar.cost(k) <= order)
        .collect();
    arities.sort_unstable();
    arities.dedup();
    for k in arities {
        let cost = grammar.cost(k);
        let budget = order - cost;
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        if k <= 3 {
            let mut current = vec![0; k];
            grid(&mut current, 0, budget, &mut tuples);
        } else {
            tuples.push(vec![0; k]);
            for pos in 0..k {
                for i in 1..=budget {
                    let mut t = vec![0; k];
                    t[pos] = i;
                    tuples.push(t);
                }
            }
        }
        for exps in tuples {
            let args: Vec<V> = exps.iter().map(|&i| V::t_power(i, order)).collect();
            let refs: Vec<&V> = args.iter().collect();
            let needed = exps.iter().sum::<usize>() + cost;
            if let Some(v) = op(&refs).valuation() {
                if v < needed {
                    return Err(Error::ValuationViolation(format!(
                        "arity {k} on exponents {exps:?} has valuation {v}, needs at least {needed}"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn grid(current: &mut Vec<usize>, pos: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
    if pos == current.len() {
        out.push(current.clone());
        return;
    }
    for i in 0..=budget {
        current[pos] = i;
        grid(current, pos + 1, budget - i, out);
    }
    current[pos] = 0;
}

/// Streams every tree of weight `<= order` with its term to `visit`, in
/// increasing weight. Subtree values are kept for weights below `order`
/// only; the top layer is never stored.
pub fn expand_with<G, V>(
    grammar: &G,
    a: &V,
    op: &dyn Fn(&[&V]) -> V,
    mut visit: impl FnMut(&G::Tree, &V),
) -> Result<()>
where
    G: Grammar,
    V: SeriesValue,
{
    let order = a.order();
    check_valuation(grammar, op, order)?;
    let mut levels: Vec<Vec<(G::Tree, V)>> = vec![vec![(grammar.leaf(), a.clone())]];
    visit(&levels[0][0].0, &levels[0][0].1);
    for w in 1..=order {
        let mut layer = Vec::new();
        for k in grammar.arities(w) {
            let cost = grammar.cost(k);
            if cost > w {
                continue;
            }
            for parts in compositions(w - cost, k) {
                let pools: Vec<&[(G::Tree, V)]> =
                    parts.iter().map(|&p| levels[p].as_slice()).collect();
                if pools.iter().any(|p| p.is_empty()) {
                    continue;
                }
                let mut idx = vec![0usize; k];
                loop {
                    let children: Vec<&(G::Tree, V)> =
                        idx.iter().zip(&pools).map(|(&i, pool)| &pool[i]).collect();
                    let values: Vec<&V> = children.iter().map(|c| &c.1).collect();
                    let term = op(&values);
                    if term.valuation().is_some_and(|v| v < w) {
                        return Err(Error::ValuationViolation(format!(
                            "a tree of weight {w} produced a term of valuation below {w}"
                        )));
                    }
                    let tree = grammar.node(children.iter().map(|c| c.0.clone()).collect());
                    visit(&tree, &term);
                    if w < order {
                        layer.push((tree, term));
                    }
                    if !advance(&mut idx, &pools) {
                        break;
                    }
                }
            }
        }
        levels.push(layer);
    }
    Ok(())
}

fn advance<T>(idx: &mut [usize], pools: &[&[T]]) -> bool {
    for pos in (0..idx.len()).rev() {
        idx[pos] += 1;
        if idx[pos] < pools[pos].len() {
            return true;
        }
        idx[pos] = 0;
    }
    false
}

/// Ordered ways of writing `total` as `parts` nonnegative summands,
/// lexicographic.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// Terms of an expansion sorted by (weight, tree encoding), with their sum.
#[derive(Clone, Debug)]
pub struct TreeExpansion<S: Shape, V: SeriesValue> {
    terms: Vec<(S, V)>,
    sum: V,
}

impl<S: Shape, V: SeriesValue> TreeExpansion<S, V> {
    pub fn collect<G: Grammar<Tree = S>>(
        grammar: &G,
        a: &V,
        op: &dyn Fn(&[&V]) -> V,
    ) -> Result<Self> {
        let mut terms = Vec::new();
        let mut sum = V::zero(a.order());
        expand_with(grammar, a, op, |t, v| {
            sum = sum.plus(v);
            terms.push((t.clone(), v.clone()));
        })?;
        let mut keyed: Vec<(usize, String, S, V)> = terms
            .into_iter()
            .map(|(t, v)| (t.weight(), t.to_string(), t, v))
            .collect();
        keyed.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        Ok(Self {
            terms: keyed.into_iter().map(|(_, _, t, v)| (t, v)).collect(),
            sum,
        })
    }

    pub fn terms(&self) -> &[(S, V)] {
        &self.terms
    }

    pub fn sum(&self) -> &V {
        &self.sum
    }

    pub fn order(&self) -> usize {
        self.sum.order()
    }

    pub fn terms_of_weight(&self, w: usize) -> impl Iterator<Item = &(S, V)> {
        self.terms.iter().filter(move |(t, _)| t.weight() == w)
    }

    /// `{"order": N, "sum": [...], "terms": [{"tree": ..., "term": [...]}]}`
    pub fn to_json(&self, per_tree: bool) -> Value {
        let mut out = json!({
            "order": self.order(),
            "sum": self.sum.coefficient_strings(),
        });
        if per_tree {
            out["terms"] = self
                .terms
                .iter()
                .map(|(t, v)| json!({"tree": t.to_string(), "term": v.coefficient_strings()}))
                .collect();
        }
        out
    }
}

/// `x = a + B(x, x)` over complete binary trees.
pub fn fixed_point_binary<V: SeriesValue>(
    op: impl Fn(&V, &V) -> V,
    a: &V,
) -> Result<TreeExpansion<BinaryTree, V>> {
    let wrapped = move |args: &[&V]| op(args[0], args[1]);
    TreeExpansion::collect(&Binary, a, &wrapped)
}

/// `x = a + F(x, …, x)` with `F` of arity `m + 1`.
pub fn fixed_point_mary<V: SeriesValue>(
    m: usize,
    op: impl Fn(&[&V]) -> V,
    a: &V,
) -> Result<TreeExpansion<MAryTree, V>> {
    TreeExpansion::collect(&MAry { m }, a, &op)
}

/// `x = a + Σ_{k>=2} F_k(x, …, x)`; the family receives its arity as the
/// argument count.
pub fn fixed_point_plane<V: SeriesValue>(
    family: impl Fn(&[&V]) -> V,
    a: &V,
) -> Result<TreeExpansion<PlaneTree, V>> {
    TreeExpansion::collect(&Plane, a, &family)
}

/// Iterates `x <- a + step(x)` from `x = a` until it stabilizes. Each pass
/// fixes at least one more coefficient when `step` raises valuation.
pub fn picard<V: SeriesValue>(a: &V, step: impl Fn(&V) -> V) -> Result<V> {
    let mut x = a.clone();
    for _ in 0..=a.order() + 1 {
        let next = a.plus(&step(&x));
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(Error::ValuationViolation(
        "fixed-point iteration did not stabilize".into(),
    ))
}

/// Direct recursive evaluation of the term indexed by one tree.
pub fn evaluate_tree<S: Shape, V: Clone>(tree: &S, leaf: &V, op: &dyn Fn(&[&V]) -> V) -> V {
    let children = tree.children();
    if children.is_empty() {
        return leaf.clone();
    }
    let values: Vec<V> = children.into_iter().map(|c| evaluate_tree(c, leaf, op)).collect();
    let refs: Vec<&V> = values.iter().collect();
    op(&refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};
    use crate::combinat::{binary_trees, mary_trees, plane_trees};

    type S = TruncatedSeries<Rational>;

    fn integral_product(x: &S, y: &S) -> S {
        x.times(y).integrate()
    }

    #[test]
    fn compositions_are_complete() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 1), vec![vec![0]]);
    }

    #[test]
    fn inverse_linear_equation() {
        let x = fixed_point_binary(integral_product, &S::one(6)).unwrap();
        for n in 0..=6 {
            assert_eq!(x.sum().coeff(n), int(1));
        }
        assert_eq!(x.terms().len(), (0..=6).map(|n| binary_trees(n).count()).sum::<usize>());
    }

    #[test]
    fn order_zero_is_the_constant() {
        let x = fixed_point_binary(integral_product, &S::one(0)).unwrap();
        assert_eq!(x.sum(), &S::one(0));
        assert_eq!(x.terms().len(), 1);
    }

    #[test]
    fn tree_counts_match_enumerators() {
        let one = S::one(5);
        let prod = |args: &[&S]| S::product(args, 5).integrate();
        let ternary = fixed_point_mary(2, prod, &one).unwrap();
        for n in 0..=5 {
            assert_eq!(ternary.terms_of_weight(n).count(), mary_trees(2, n).count());
        }
        let plane = fixed_point_plane(
            |args: &[&S]| {
                let mut p = S::product(args, 5);
                for _ in 0..args.len() - 1 {
                    p = p.mul_t();
                }
                p
            },
            &one,
        )
        .unwrap();
        for w in 0..=5 {
            assert_eq!(plane.terms_of_weight(w).count(), plane_trees(w + 1).count());
        }
    }

    #[test]
    fn terms_match_direct_evaluation() {
        let one = S::one(6);
        let x = fixed_point_binary(integral_product, &one).unwrap();
        let op = |args: &[&S]| integral_product(args[0], args[1]);
        for (t, v) in x.terms() {
            assert_eq!(&evaluate_tree(t, &one, &op), v);
        }
    }

    #[test]
    fn picard_agrees() {
        let one = S::one(7);
        let x = fixed_point_binary(integral_product, &one).unwrap();
        let p = picard(&one, |x| integral_product(x, x)).unwrap();
        assert_eq!(x.sum(), &p);
    }

    #[test]
    fn non_raising_operator_is_rejected() {
        let err = fixed_point_binary(|x: &S, y: &S| x.times(y), &S::one(3)).unwrap_err();
        assert!(matches!(err, Error::ValuationViolation(_)));
        let mixed = |x: &S, y: &S| x.times(y).mul_t().plus(&x.times(y).with_order(3));
        assert!(fixed_point_binary(mixed, &S::one(3)).is_err());
    }

    #[test]
    fn json_is_sorted_by_weight_then_encoding() {
        let x = fixed_point_binary(integral_product, &S::one(2)).unwrap();
        let js = x.to_json(true);
        let trees: Vec<&str> = js["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["tree"].as_str().unwrap())
            .collect();
        assert_eq!(trees, vec!["_", "(_,_)", "((_,_),_)", "(_,(_,_))"]);
        assert_eq!(js["sum"], json!(["1", "1", "1"]));
    }
}
