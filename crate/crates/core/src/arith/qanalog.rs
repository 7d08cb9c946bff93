//! q-integers, q-factorials and Gaussian binomials.

use std::cell::RefCell;

use super::poly::QPoly;
use super::rational::int;
use super::ring::Ring;

/// `q^k`
pub fn q_power(k: usize) -> QPoly {
    QPoly::monomial(int(1), k)
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::new(vec![int(1); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &q_integer(k))
}

thread_local! {
    // Pascal rows of Gaussian binomials, grown on demand.
    static QBIN_ROWS: RefCell<Vec<Vec<QPoly>>> = RefCell::new(vec![vec![QPoly::one()]]);
}

/// Gaussian binomial `[n choose k]_q` from the division-free recurrence
/// `qbin(n,k) = qbin(n-1,k-1) + q^k qbin(n-1,k)`; zero for `k < 0` or `k > n`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k as usize > n {
        return QPoly::default();
    }
    let k = k as usize;
    QBIN_ROWS.with(|rows| {
        let mut rows = rows.borrow_mut();
        while rows.len() <= n {
            let prev = rows.last().expect("row 0 present");
            let m = prev.len();
            let row: Vec<QPoly> = (0..=m)
                .map(|j| {
                    let left = if j > 0 { prev[j - 1].clone() } else { QPoly::default() };
                    let right = if j < m {
                        prev[j].shift(j)
                    } else {
                        QPoly::default()
                    };
                    &left + &right
                })
                .collect();
            rows.push(row);
        }
        rows[n][k].clone()
    })
}
