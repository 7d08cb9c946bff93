//! End-to-end acceptance run: one PASS/FAIL line per criterion, exact
//! arithmetic throughout. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;

use treecalc::arith::{factorial, int, q_power, AlphaPoly, QPoly, Rational, TPoly};
use treecalc::combinat::{
    binary_trees, packed_words, permutations, plane_trees, PackedWord, Permutation, PlaneTree,
};
use treecalc::fqsym::{self, Basis, FqsymElement};
use treecalc::identities::{
    duliu_check, eisenstein_check, fiber_polynomials, fiber_sizes, ft_coefficients, hook_count,
    half_product_statistics, las1_las2_agree, lagrange_fixed_point_check, packed_word_grouping,
    postnikov_check, postnikov_is_las1_at_one, qhook_imaj, DuLiuVariant, Statistic,
};
use treecalc::series::operators::{
    duliu_operator, integral_product, plane_q_operator, postnikov_operator, q_integral_product,
    QSeriesOfT,
};
use treecalc::series::{
    binomial_to_monomial, fixed_point_binary, fixed_point_mary, fixed_point_plane,
    monomial_to_binomial, picard, BinomialPoly, QDividedSeries, TruncatedSeries,
};
use treecalc::wqsym::{self, WqsymElement};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn perms_up_to(n: usize) -> Vec<Permutation> {
    (0..=n).flat_map(permutations).collect()
}

fn words_up_to(n: usize) -> Vec<PackedWord> {
    (0..=n).flat_map(packed_words).collect()
}

fn hook_formula() -> Outcome {
    let example: treecalc::combinat::BinaryTree = "((_,_),((_,_),_))".parse().unwrap();
    ensure!(hook_count(&example).unwrap() == BigInt::from(3), "4!/(4·2·1·1) != 3");
    let mut shapes = 0;
    for n in 0..=8 {
        let sizes = fiber_sizes(n);
        let mut total = BigInt::from(0);
        for t in binary_trees(n) {
            let count = hook_count(&t).map_err(|e| e.to_string())?;
            let oracle = sizes.get(&t).copied().unwrap_or(0);
            ensure!(count == BigInt::from(oracle), "n={n} {t}: {count} vs {oracle}");
            total += count;
            shapes += 1;
        }
        ensure!(total == factorial(n), "n={n}: fibers sum to {total}");
    }
    Ok(format!("{shapes} shapes, n <= 8"))
}

fn qhook_against(stat: Statistic) -> Outcome {
    let mut shapes = 0;
    for n in 0..=7 {
        let fibers = fiber_polynomials(n, stat);
        for t in binary_trees(n) {
            let formula = qhook_imaj(&t).map_err(|e| e.to_string())?;
            ensure!(fibers[&t] == formula, "n={n} {t}: {} vs {formula}", fibers[&t]);
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes, n <= 7"))
}

fn half_product() -> Outcome {
    let mut pairs = 0;
    for k in 1..7 {
        for l in 1..=(7 - k) {
            ensure!(half_product_statistics(k, l).unwrap(), "k={k} l={l}");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (k, l) pairs, k + l <= 7"))
}

fn fqsym_structure() -> Outcome {
    type E = FqsymElement<Rational>;
    let ps = perms_up_to(5);
    let pairs: Vec<(&Permutation, &Permutation)> = ps
        .iter()
        .flat_map(|a| ps.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.len() + b.len() <= 6)
        .collect();
    for (a, b) in &pairs {
        let (x, y) = (E::g((*a).clone()), E::g((*b).clone()));
        let xy = x.product(&y).unwrap();
        let leibniz = x.derive().product(&y).unwrap().plus(&x.product(&y.derive()).unwrap()).unwrap();
        ensure!(xy.derive() == leibniz, "Leibniz at {a} {b}");
        ensure!(x.bilinear(&y).unwrap().derive() == xy, "dB != product at {a} {b}");
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let (prec, succ) = (x.prec(&y).unwrap(), x.succ(&y).unwrap());
        ensure!(prec.plus(&succ).unwrap() == xy, "prec + succ at {a} {b}");
        // erasing the maximum leaves the two blocks in arbitrary relative order
        ensure!(prec.derive() == x.derive().product(&y).unwrap(), "d(x<y) at {a} {b}");
        ensure!(succ.derive() == x.product(&y.derive()).unwrap(), "d(x>y) at {a} {b}");
    }
    let xn = fqsym::x_element(7);
    let lhs = xn.derive().truncated(6);
    let rhs = xn.product_truncated(&xn, 6).unwrap();
    ensure!(lhs == rhs, "dX != X^2 in degrees <= 6");
    let f1 = E::f(Permutation::identity(1));
    for sigma in permutations(4) {
        let ds = E::g(sigma.clone()).derive();
        for tau in permutations(3) {
            let ft = E::f(tau.clone());
            let lhs = ft.pairing(&ds).unwrap();
            let rhs = ft.product(&f1).unwrap().pairing(&E::g(sigma.clone())).unwrap();
            ensure!(lhs == rhs, "adjointness at {sigma} {tau}");
        }
    }
    Ok(format!("{} basis pairs, X to degree 6, S_3 x S_4 pairing", pairs.len()))
}

fn wqsym_structure() -> Outcome {
    type E = WqsymElement<Rational>;
    let w = |s: &str| -> PackedWord { s.parse().unwrap() };
    let m = |s: &str| E::m(w(s));
    let sum = |list: &[&str]| E::sum_of(list.iter().map(|s| w(s)));
    ensure!(
        m("11").product(&m("21")) == sum(&["1121", "1132", "2221", "2231", "3321"]),
        "M_11 M_21"
    );
    ensure!(
        E::f_k(&[&m("11"), &m("21")]).unwrap() == sum(&["11321", "11432", "22321", "22431", "33421"]),
        "F_2(M_11, M_21)"
    );
    let ws = words_up_to(5);
    let mut pairs = 0;
    for a in &ws {
        for b in &ws {
            if a.len() + b.len() > 5 {
                continue;
            }
            pairs += 1;
            let (x, y) = (E::m(a.clone()), E::m(b.clone()));
            let lhs = x.product(&y).delta();
            let rhs = x
                .delta()
                .product(&y)
                .plus(&x.delta().product(&y.delta()))
                .plus(&x.product(&y.delta()));
            ensure!(lhs == rhs, "trilinear Leibniz at {a} {b}");
            if a.is_empty() || b.is_empty() {
                continue;
            }
            ensure!(x.prec(&y).unwrap().delta() == x.delta().product(&y), "d(x<y) at {a} {b}");
            ensure!(x.circ(&y).unwrap().delta() == x.delta().product(&y.delta()), "d(x o y) at {a} {b}");
            ensure!(x.succ(&y).unwrap().delta() == x.product(&y.delta()), "d(x>y) at {a} {b}");
        }
    }
    // δX = Σ_(n≥2) q^(n−1) X^n, on words of length <= 4 and q-degree <= 5
    let n = 5;
    let x = wqsym::x_element(n);
    let lhs = x.delta().truncated(n - 1);
    let mut rhs = WqsymElement::<QPoly>::zero();
    let mut power = x.clone();
    for k in 2..=n + 1 {
        power = power.product_truncated(&x, n - 1);
        rhs = rhs.plus(&power.scale(&q_power(k - 1)));
    }
    let cut = |e: &WqsymElement<QPoly>| {
        WqsymElement::from_terms(e.iter().map(|(u, c)| (u.clone(), c.truncate(n + 1))))
    };
    ensure!(cut(&lhs) == cut(&rhs), "dX != qX^2/(1-qX) up to length 4");
    Ok(format!("{pairs} basis pairs, X to length 4"))
}

fn plane_tree_polynomials() -> Outcome {
    let big: PlaneTree = "((**)(**)(***))".parse().unwrap();
    let expected: BTreeMap<usize, BigInt> =
        [(2, 1), (3, 6), (4, 6)].into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
    ensure!(ft_coefficients(&big).unwrap() == expected, "{{2:1, 3:6, 4:6}}");
    // Σ_0^t s³ δs
    let cube = TPoly::new(vec![int(0), int(0), int(0), int(1)]);
    let summed = monomial_to_binomial(&cube).discrete_sum();
    let display = BinomialPoly::from_terms([(2, int(1)), (3, int(6)), (4, int(6))]);
    ensure!(summed == display, "sum of s^3 gave {summed}");
    ensure!(summed.to_string() == "C(t,2)+6C(t,3)+6C(t,4)", "rendering {summed}");
    let mut trees = 0;
    for n in 1..=7 {
        let grouping = packed_word_grouping(n);
        let mut total = BigInt::from(0);
        for (t, oracle) in &grouping {
            let formula = ft_coefficients(t).map_err(|e| e.to_string())?;
            ensure!(formula == *oracle, "n={n} {t}");
            total += formula.values().sum::<BigInt>();
            trees += 1;
        }
        let words = packed_words(n).count();
        ensure!(total == BigInt::from(words), "n={n}: {total} vs {words} words");
        // every plane tree with n+1 leaves is reached
        ensure!(plane_trees(n + 1).count() == grouping.len(), "n={n}: unreached trees");
    }
    Ok(format!("{trees} plane trees, length <= 7"))
}

fn postnikov() -> Outcome {
    for n in 1..=12 {
        let r = postnikov_check(n, false).map_err(|e| e.to_string())?;
        ensure!(r.equal, "n={n}: {} vs {} {:?}", r.lhs, r.rhs, r.checks);
        let power = BigInt::from(n + 1).pow(n as u32 - 1);
        ensure!(r.lhs == json!(power.to_string()), "n={n}: lhs {}", r.lhs);
    }
    Ok("1 <= n <= 12, up to 13^11".into())
}

fn eisenstein() -> Outcome {
    let r = eisenstein_check(8).map_err(|e| e.to_string())?;
    ensure!(r.equal, "{:?}", r.checks);
    ensure!(r.lhs[2] == json!("3/2") && r.lhs[4] == json!("125/24"), "coefficients {}", r.lhs);
    Ok("order 8".into())
}

fn duliu() -> Outcome {
    for n in 0..=6 {
        ensure!(las1_las2_agree(n), "las1 vs las2 at n={n}");
        ensure!(postnikov_is_las1_at_one(n), "las1 at 1 vs postnikov at n={n}");
    }
    for n in 0..=7 {
        for v in [DuLiuVariant::Las1, DuLiuVariant::Las2] {
            let r = duliu_check(v, n, 1, false).map_err(|e| e.to_string())?;
            ensure!(r.equal, "{} n={n}: {} vs {}", v.name(), r.lhs, r.rhs);
        }
    }
    for m in [2, 3] {
        for n in 0..=5 {
            let r = duliu_check(DuLiuVariant::Las3, n, m, false).map_err(|e| e.to_string())?;
            ensure!(r.equal, "las3 m={m} n={n}: {} vs {}", r.lhs, r.rhs);
        }
    }
    Ok("las1 = las2 n <= 6, las1/las2 n <= 7, las3 m in {2,3} n <= 5".into())
}

fn lagrange() -> Outcome {
    for m in 1..=3 {
        let r = lagrange_fixed_point_check(m, 8).map_err(|e| e.to_string())?;
        ensure!(r.equal, "m={m}: {:?}", r.checks);
    }
    Ok("m <= 3, order 8".into())
}

fn engine_consistency() -> Outcome {
    let order = 8;
    let one = TruncatedSeries::<Rational>::one(order);

    let inverse = fixed_point_binary(integral_product, &one).unwrap();
    let oracle = picard(&one, |x| integral_product(x, x)).unwrap();
    ensure!(*inverse.sum() == oracle, "inverse-linear");
    ensure!(oracle.coeffs().iter().all(|c| *c == int(1)), "1/(1-t)");

    let post = fixed_point_binary(postnikov_operator, &one).unwrap();
    let oracle = picard(&one, |x| postnikov_operator(x, x)).unwrap();
    ensure!(*post.sum() == oracle, "postnikov");

    for m in 1..=3 {
        let one = TruncatedSeries::<AlphaPoly>::one(6);
        let op = |args: &[&TruncatedSeries<AlphaPoly>]| duliu_operator(m, args);
        let tree = fixed_point_mary(m, op, &one).unwrap();
        let oracle = picard(&one, |x| duliu_operator(m, &vec![x; m + 1])).unwrap();
        ensure!(*tree.sum() == oracle, "du-liu m={m}");
    }

    let qone = QDividedSeries::one(order);
    let qtree = fixed_point_binary(q_integral_product, &qone).unwrap();
    let oracle = picard(&qone, |x| q_integral_product(x, x)).unwrap();
    ensure!(*qtree.sum() == oracle, "q-integral");
    let x = qtree.sum();
    ensure!(
        x.q_derivative() == x.times(&x.substitute_qt()).with_order(order - 1),
        "D_q x != x(t) x(qt)"
    );

    let pone = QSeriesOfT::one(5);
    let plane = fixed_point_plane(plane_q_operator, &pone).unwrap();
    let oracle = picard(&pone, |x| {
        (2..=6)
            .map(|n| plane_q_operator(&vec![x; n]))
            .fold(QSeriesOfT::zero(5), |acc, t| acc.plus(&t))
    })
    .unwrap();
    ensure!(*plane.sum() == oracle, "plane-q");

    for k in 0..=12 {
        let b = BinomialPoly::basis(k, int(1));
        ensure!(monomial_to_binomial(&binomial_to_monomial(&b)) == b, "C(t,{k}) round trip");
        let t_k = TPoly::monomial(int(1), k);
        ensure!(binomial_to_monomial(&monomial_to_binomial(&t_k)) == t_k, "t^{k} round trip");
    }
    for p in perms_up_to(5) {
        let g = FqsymElement::<Rational>::g(p.clone());
        ensure!(g.to_basis(Basis::F).to_basis(Basis::G) == g, "G_{p} round trip");
    }
    Ok("5 equations, conversions to degree 12".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("hook formula", hook_formula),
        ("q-hook (imaj)", || qhook_against(Statistic::Imaj)),
        ("q-hook (inversions)", || qhook_against(Statistic::Inversions)),
        ("half-product statistics", half_product),
        ("fqsym structure", fqsym_structure),
        ("wqsym structure", wqsym_structure),
        ("plane tree polynomials", plane_tree_polynomials),
        ("postnikov", postnikov),
        ("eisenstein", eisenstein),
        ("du-liu", duliu),
        ("lagrange", lagrange),
        ("engine consistency", engine_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
