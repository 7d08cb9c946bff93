//! Hook length identities, each checked by two disjoint computations: a
//! closed form on one side, an enumeration or a series solution on the
//! other.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero as _;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{
    exact_poly_div, factorial, int, q_binomial, q_factorial, q_integer, q_power, ratio, to_integer,
    AlphaPoly, QPoly, Rational, Ring,
};
use crate::combinat::{
    binary_trees, decreasing_tree, mary_trees, packed_words, permutations, plane_tree_of_word,
    BinaryTree, MAryTree, Permutation, PlaneTree, Shape,
};
use crate::error::{Error, Result};
use crate::fqsym::half_products;
use crate::series::operators::{discrete_sum_product, duliu_operator, postnikov_operator};
use crate::series::{
    binomial_series, evaluate_tree, expand_with, fixed_point_binary, fixed_point_mary,
    generalized_binomial, picard, Binary, BinomialPoly, MAry, TruncatedSeries,
};

/// Outcome of one identity check, with both sides in serialized exact form.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: Value,
    pub lhs: Value,
    pub rhs: Value,
    /// Auxiliary agreements (series route, fixed-point iteration, …).
    pub checks: BTreeMap<String, bool>,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_tree: Option<Vec<Value>>,
    pub elapsed_ms: u128,
}

impl IdentityReport {
    fn new(
        identity: &str,
        parameters: Value,
        lhs: Value,
        rhs: Value,
        checks: BTreeMap<String, bool>,
        started: Instant,
    ) -> Self {
        let equal = lhs == rhs && checks.values().all(|&ok| ok);
        Self {
            identity: identity.to_string(),
            parameters,
            lhs,
            rhs,
            checks,
            equal,
            per_tree: None,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    pub fn with_per_tree(mut self, rows: Vec<Value>) -> Self {
        self.per_tree = Some(rows);
        self
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::SizeGuard { what, size, limit });
    }
    Ok(())
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::from(items.iter().map(ToString::to_string).collect::<Vec<_>>())
}

// ---------------------------------------------------------------------------
// Hook length formulas

/// `n! / ∏ h_v`, the number of permutations whose decreasing tree is `t`.
pub fn hook_count(t: &BinaryTree) -> Result<BigInt> {
    let hooks = t.hook_data().hooks;
    let denom: BigInt = hooks.iter().map(|&h| BigInt::from(h)).product();
    to_integer(&Rational::new(factorial(t.node_count()), denom))
}

/// `[n]_q! ∏ q^δ_v / [h_v]_q` with `δ_v` the size of the right subtree.
pub fn qhook(t: &BinaryTree) -> Result<QPoly> {
    let data = t.hook_data();
    let num = &q_factorial(t.node_count()) * &q_power(data.right_total());
    let den = data
        .hooks
        .iter()
        .fold(QPoly::one(), |acc, &h| &acc * &q_integer(h));
    exact_poly_div(&num, &den)
}

/// Generating polynomial of `imaj` over the decreasing-tree fiber of `t`.
pub fn qhook_imaj(t: &BinaryTree) -> Result<QPoly> {
    qhook(t)
}

/// Generating polynomial of inversions over the fiber; the same closed
/// form as for `imaj`.
pub fn qhook_inv(t: &BinaryTree) -> Result<QPoly> {
    qhook(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Imaj,
    Inversions,
}

impl Statistic {
    pub fn of(self, p: &Permutation) -> usize {
        match self {
            Statistic::Imaj => p.imaj(),
            Statistic::Inversions => p.inversions(),
        }
    }
}

/// Brute force over `S_n`: `Σ q^stat(σ)` grouped by decreasing-tree shape.
pub fn fiber_polynomials(n: usize, stat: Statistic) -> HashMap<BinaryTree, QPoly> {
    let mut out: HashMap<BinaryTree, QPoly> = HashMap::new();
    for p in permutations(n) {
        let slot = out.entry(decreasing_tree(&p)).or_default();
        *slot = &*slot + &q_power(stat.of(&p));
    }
    out
}

/// Brute force over `S_n`: fiber sizes of the decreasing-tree map.
pub fn fiber_sizes(n: usize) -> HashMap<BinaryTree, usize> {
    let mut out = HashMap::new();
    for p in permutations(n) {
        *out.entry(decreasing_tree(&p)).or_insert(0) += 1;
    }
    out
}

/// Both half-product sums over `α ∈ S_k`, `β ∈ S_l`:
/// `Σ_(α≻β) q^imaj = q^(imaj α + imaj β) qbin(k+l−1, l−1)` and
/// `Σ_(α≺β) q^imaj = q^(imaj α + imaj β + l) qbin(k+l−1, l)`.
pub fn half_product_statistics(k: usize, l: usize) -> Result<bool> {
    let sum = |ws: &[Permutation]| ws.iter().fold(QPoly::zero(), |acc, g| &acc + &q_power(g.imaj()));
    for a in permutations(k) {
        for b in permutations(l) {
            let (prec, succ) = half_products(&a, &b)?;
            let base = a.imaj() + b.imaj();
            let succ_rhs = &q_power(base) * &q_binomial(k + l - 1, l as i64 - 1);
            let prec_rhs = &q_power(base + l) * &q_binomial(k + l - 1, l as i64);
            if sum(&succ) != succ_rhs || sum(&prec) != prec_rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Plane trees and packed words

/// `F_T(1)` with `F_k = Σ_0^t` of the product, in the binomial basis.
pub fn plane_tree_value(t: &PlaneTree) -> BinomialPoly<Rational> {
    let op = |args: &[&BinomialPoly<Rational>]| discrete_sum_product(args);
    evaluate_tree(t, &BinomialPoly::one(), &op)
}

/// `{k: c_k}` with `F_T(1) = Σ c_k C(t, k)`.
pub fn ft_coefficients(t: &PlaneTree) -> Result<BTreeMap<usize, BigInt>> {
    plane_tree_value(t)
        .terms()
        .map(|(k, c)| Ok((k, to_integer(c)?)))
        .collect()
}

/// Brute force: packed words of length `n` grouped by plane tree, then by
/// maximal letter.
pub fn packed_word_grouping(n: usize) -> HashMap<PlaneTree, BTreeMap<usize, BigInt>> {
    let mut out: HashMap<PlaneTree, BTreeMap<usize, BigInt>> = HashMap::new();
    for u in packed_words(n) {
        let by_max = out.entry(plane_tree_of_word(u.letters())).or_default();
        *by_max.entry(u.max_letter() as usize).or_insert_with(BigInt::zero) += 1;
    }
    out
}

fn coefficient_map(c: &BTreeMap<usize, BigInt>) -> Value {
    c.iter()
        .map(|(k, v)| (k.to_string(), Value::from(v.to_string().parse::<u64>().unwrap_or(0))))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

/// Binomial coefficients of `F_T(1)` against the fiber of `T` over packed
/// words of length `leaves − 1`.
pub fn ft_check(t: &PlaneTree, unsafe_large: bool) -> Result<IdentityReport> {
    let started = Instant::now();
    let n = t.weight();
    if !unsafe_large {
        guard("packed word length", n, crate::combinat::PACKED_WORD_GUARD)?;
    }
    let formula = ft_coefficients(t)?;
    let oracle = packed_word_grouping(n).remove(t).unwrap_or_default();
    Ok(IdentityReport::new(
        "ft",
        json!({"tree": t.to_string(), "n": n}),
        coefficient_map(&formula),
        coefficient_map(&oracle),
        BTreeMap::new(),
        started,
    ))
}

// ---------------------------------------------------------------------------
// Postnikov and Eisenstein

pub const POSTNIKOV_GUARD: usize = 12;
pub const EISENSTEIN_GUARD: usize = 10;

/// `∏_v (1 + 1/h_v)`
fn postnikov_weight(t: &BinaryTree) -> Rational {
    t.hook_data()
        .hooks
        .iter()
        .fold(<Rational as Ring>::one(), |acc, &h| acc * ratio(h as i64 + 1, h as i64))
}

/// `(n+1)^(n−1) = n!/2^n Σ_T ∏(1 + 1/h_v)` over binary trees with `n`
/// nodes. The series route solves `x = 1 + t x²/2 + ½∫x²` and compares
/// every tree term with `∏(1 + 1/h_v) t^n / 2^n`.
pub fn postnikov_check(n: usize, per_tree: bool) -> Result<IdentityReport> {
    let started = Instant::now();
    guard("postnikov n", n, POSTNIKOV_GUARD)?;
    if n == 0 {
        return Err(Error::SizeGuard { what: "postnikov n (minimum 1)", size: 0, limit: 1 });
    }
    let lhs = BigInt::from(n + 1).pow(n as u32 - 1);
    let mut rows = Vec::new();
    let mut total = <Rational as Ring>::zero();
    for t in binary_trees(n) {
        let w = postnikov_weight(&t);
        if per_tree {
            rows.push(json!({"tree": t.to_string(), "value": w.to_string()}));
        }
        total += w;
    }
    let two_n = Rational::from_integer(BigInt::from(2).pow(n as u32));
    let rhs = Rational::from_integer(factorial(n)) * total / two_n;

    let mut terms_ok = true;
    let mut top = <Rational as Ring>::zero();
    let one = TruncatedSeries::<Rational>::one(n);
    let op = |args: &[&TruncatedSeries<Rational>]| postnikov_operator(args[0], args[1]);
    expand_with(&Binary, &one, &op, |t, term| {
        let w = t.weight();
        let expected = TruncatedSeries::monomial(
            postnikov_weight(t) / Rational::from_integer(BigInt::from(2).pow(w as u32)),
            w,
            n,
        );
        terms_ok &= *term == expected;
        if w == n {
            top += term.coeff(n);
        }
    })?;
    let series_total = top * Rational::from_integer(factorial(n));

    let mut checks = BTreeMap::new();
    checks.insert("tree_terms_closed_form".into(), terms_ok);
    checks.insert("series_coefficient".into(), series_total == Rational::from_integer(lhs.clone()));
    let report = IdentityReport::new(
        "postnikov",
        json!({"n": n}),
        Value::from(lhs.to_string()),
        Value::from(rhs.to_string()),
        checks,
        started,
    );
    Ok(if per_tree { report.with_per_tree(rows) } else { report })
}

/// `Σ (n+1)^(n−1) t^n / n!` to order `order`.
pub fn eisenstein_coefficients(order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::new(
        (0..=order)
            .map(|n| {
                let num = if n == 0 {
                    BigInt::from(1)
                } else {
                    BigInt::from(n + 1).pow(n as u32 - 1)
                };
                Rational::new(num, factorial(n))
            })
            .collect(),
        order,
    )
}

/// Explicit coefficients, the residual of `g = exp(t g)`, the tree
/// expansion of `x = 1 + t x²/2 + ½∫x²` and its fixed-point iteration.
pub fn eisenstein_check(order: usize) -> Result<IdentityReport> {
    let started = Instant::now();
    guard("eisenstein order", order, EISENSTEIN_GUARD)?;
    let explicit = eisenstein_coefficients(order);
    let residual = explicit.minus(&explicit.mul_t().exp()?);
    let one = TruncatedSeries::<Rational>::one(order);
    let expansion = fixed_point_binary(postnikov_operator, &one)?;
    let iterate = picard(&one, |x| postnikov_operator(x, x))?;
    let mut checks = BTreeMap::new();
    checks.insert("exp_residual_zero".into(), residual.is_zero());
    checks.insert("picard_agrees".into(), iterate == *expansion.sum());
    Ok(IdentityReport::new(
        "eisenstein",
        json!({"order": order}),
        strings(explicit.coeffs()),
        strings(expansion.sum().coeffs()),
        checks,
        started,
    ))
}

// ---------------------------------------------------------------------------
// Du-Liu identities

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DuLiuVariant {
    /// `Σ_T ∏ (α + 1/h_v)`
    Las1,
    /// `Σ_T ∏ ((h_v+1)α + 1 − h_v) / (2 h_v)`
    Las2,
    /// `Σ_T ∏ ((m h_v+1)α + 1 − h_v) / ((m+1) h_v)` over `(m+1)`-ary trees
    Las3,
}

impl DuLiuVariant {
    pub fn name(self) -> &'static str {
        match self {
            DuLiuVariant::Las1 => "las1",
            DuLiuVariant::Las2 => "las2",
            DuLiuVariant::Las3 => "las3",
        }
    }
}

impl std::str::FromStr for DuLiuVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "las1" => Ok(Self::Las1),
            "las2" => Ok(Self::Las2),
            "las3" => Ok(Self::Las3),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

/// Largest `n` accepted for a given `m`.
pub fn duliu_limit(m: usize) -> Option<usize> {
    match m {
        1 => Some(7),
        2 | 3 => Some(5),
        _ => None,
    }
}

fn alpha() -> AlphaPoly {
    AlphaPoly::var()
}

fn duliu_node_factor(variant: DuLiuVariant, m: usize, h: usize) -> AlphaPoly {
    let h_r = int(h as i64);
    match variant {
        DuLiuVariant::Las1 => AlphaPoly::linear(int(1), ratio(1, h as i64)),
        DuLiuVariant::Las2 | DuLiuVariant::Las3 => {
            let m = if variant == DuLiuVariant::Las2 { 1 } else { m };
            let a = int((m * h + 1) as i64);
            let b = int(1) - &h_r;
            AlphaPoly::linear(a, b).scale(&Rational::new(1.into(), BigInt::from((m + 1) * h)))
        }
    }
}

fn duliu_tree_value(variant: DuLiuVariant, m: usize, hooks: &[usize]) -> AlphaPoly {
    hooks
        .iter()
        .fold(AlphaPoly::one(), |acc, &h| &acc * &duliu_node_factor(variant, m, h))
}

/// Closed form of the right-hand side.
pub fn duliu_rhs(variant: DuLiuVariant, n: usize, m: usize) -> AlphaPoly {
    match variant {
        DuLiuVariant::Las1 => {
            let prod = (0..n).fold(AlphaPoly::one(), |acc, i| {
                &acc * &AlphaPoly::linear(int((n + 1 + i) as i64), int(n as i64 + 1 - i as i64))
            });
            prod.scale(&Rational::new(1.into(), factorial(n + 1)))
        }
        DuLiuVariant::Las2 | DuLiuVariant::Las3 => {
            let m = if variant == DuLiuVariant::Las2 { 1 } else { m };
            let beta = alpha().scale(&int((m * n + 1) as i64));
            generalized_binomial(&beta, n).scale(&ratio(1, (m * n + 1) as i64))
        }
    }
}

fn check_duliu_params(variant: DuLiuVariant, n: usize, m: usize) -> Result<()> {
    if variant != DuLiuVariant::Las3 && m != 1 {
        return Err(Error::VariantArityMismatch {
            variant: variant.name(),
            m,
        });
    }
    match duliu_limit(m) {
        Some(limit) => guard("du-liu n", n, limit),
        None => Err(Error::SizeGuard {
            what: "du-liu m",
            size: m,
            limit: 3,
        }),
    }
}

/// Left side by summation over trees, right side by its closed form. For
/// `las2`/`las3` the series route also checks every tree term of
/// `x = 1 + F_(m+1)(x, …, x)` against the per-node product.
pub fn duliu_check(variant: DuLiuVariant, n: usize, m: usize, per_tree: bool) -> Result<IdentityReport> {
    let started = Instant::now();
    check_duliu_params(variant, n, m)?;
    let mut rows = Vec::new();
    let mut lhs = AlphaPoly::zero();
    for t in mary_trees(m, n) {
        let v = duliu_tree_value(variant, m, &t.hook_data().hooks);
        if per_tree {
            rows.push(json!({"tree": t.to_string(), "value": v.to_string()}));
        }
        lhs = &lhs + &v;
    }
    let rhs = duliu_rhs(variant, n, m);
    let mut checks = BTreeMap::new();
    if variant != DuLiuVariant::Las1 {
        let one = TruncatedSeries::<AlphaPoly>::one(n);
        let op = |args: &[&TruncatedSeries<AlphaPoly>]| duliu_operator(m, args);
        let mut terms_ok = true;
        expand_with(&MAry { m }, &one, &op, |t: &MAryTree, term| {
            let w = t.weight();
            let expected = TruncatedSeries::monomial(
                duliu_tree_value(DuLiuVariant::Las3, m, &t.hook_data().hooks),
                w,
                n,
            );
            terms_ok &= *term == expected;
        })?;
        checks.insert("tree_terms_closed_form".into(), terms_ok);
    }
    let report = IdentityReport::new(
        "duliu",
        json!({"variant": variant.name(), "n": n, "m": m}),
        Value::from(lhs.to_string()),
        Value::from(rhs.to_string()),
        checks,
        started,
    );
    Ok(if per_tree { report.with_per_tree(rows) } else { report })
}

/// Tree sum of the `las1` and `las2` products over binary trees.
pub fn duliu_lhs(variant: DuLiuVariant, n: usize, m: usize) -> AlphaPoly {
    mary_trees(m, n).fold(AlphaPoly::zero(), |acc, t| {
        &acc + &duliu_tree_value(variant, m, &t.hook_data().hooks)
    })
}

/// `2^n L2(α) = Σ_j c_j (α−1)^j (α+1)^(n−j)` where `L1 = Σ_j c_j α^j`:
/// the `las2` node factor is `(α+1)/2 · ((α−1)/(α+1) + 1/h)`.
pub fn las1_las2_agree(n: usize) -> bool {
    let l1 = duliu_lhs(DuLiuVariant::Las1, n, 1);
    let l2 = duliu_lhs(DuLiuVariant::Las2, n, 1);
    let minus = AlphaPoly::linear(int(1), int(-1));
    let plus = AlphaPoly::linear(int(1), int(1));
    let cleared = (0..=n).fold(AlphaPoly::zero(), |acc, j| {
        let term = &minus.pow(j) * &plus.pow(n - j);
        &acc + &term.scale(&l1.coeff(j))
    });
    l2.scale(&Rational::from_integer(BigInt::from(2).pow(n as u32))) == cleared
}

/// `n!/2^n · las1(1) = (n+1)^(n−1)`: Postnikov's sum is `las1` at `α = 1`.
pub fn postnikov_is_las1_at_one(n: usize) -> bool {
    let at_one = duliu_lhs(DuLiuVariant::Las1, n, 1).eval(&int(1));
    let scaled = at_one * Rational::from_integer(factorial(n))
        / Rational::from_integer(BigInt::from(2).pow(n as u32));
    let expected = if n == 0 {
        <Rational as Ring>::one()
    } else {
        Rational::from_integer(BigInt::from(n + 1).pow(n as u32 - 1))
    };
    scaled == expected
}

// ---------------------------------------------------------------------------
// Lagrange fixed point

pub const LAGRANGE_M_GUARD: usize = 3;
pub const LAGRANGE_ORDER_GUARD: usize = 8;

/// `f(t) = Σ C((mn+1)α, n) t^n / (mn+1)`
pub fn lagrange_series(m: usize, order: usize) -> TruncatedSeries<AlphaPoly> {
    TruncatedSeries::new(
        (0..=order).map(|n| duliu_rhs(DuLiuVariant::Las3, n, m)).collect(),
        order,
    )
}

/// `f = (1 + t f^m)^α` as a residual, and `f` against the tree expansion of
/// `x = 1 + (αm−1)/(m+1) t x^(m+1) + (α+1)/(m+1) ∫x^(m+1)` and against its
/// fixed-point iteration.
pub fn lagrange_fixed_point_check(m: usize, order: usize) -> Result<IdentityReport> {
    let started = Instant::now();
    guard("lagrange m", m, LAGRANGE_M_GUARD)?;
    guard("lagrange order", order, LAGRANGE_ORDER_GUARD)?;
    if m == 0 {
        return Err(Error::SizeGuard { what: "lagrange m (minimum 1)", size: 0, limit: 1 });
    }
    let f = lagrange_series(m, order);
    let u = f.pow(m).mul_t();
    let residual = f.minus(&binomial_series(&alpha(), &u)?);
    let one = TruncatedSeries::<AlphaPoly>::one(order);
    let op = |args: &[&TruncatedSeries<AlphaPoly>]| duliu_operator(m, args);
    let expansion = fixed_point_mary(m, op, &one)?;
    let iterate = picard(&one, |x| duliu_operator(m, &vec![x; m + 1]))?;
    let mut checks = BTreeMap::new();
    checks.insert("binomial_residual_zero".into(), residual.is_zero());
    checks.insert("picard_agrees".into(), iterate == *expansion.sum());
    Ok(IdentityReport::new(
        "lagrange",
        json!({"m": m, "order": order}),
        strings(f.coeffs()),
        strings(expansion.sum().coeffs()),
        checks,
        started,
    ))
}
