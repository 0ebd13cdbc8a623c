//! Jones-Wenzl projectors by the standard recursion.

use std::sync::{Mutex, OnceLock};

use super::element::TlElement;
use crate::algebra::{delta, RatFun, Var};

fn memo() -> &'static Mutex<Vec<TlElement>> {
    static MEMO: OnceLock<Mutex<Vec<TlElement>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(vec![TlElement::identity(0), TlElement::identity(1)]))
}

/// Recursion coefficient d·Δ_{n−2}/Δ_{n−1}.
pub fn jw_coefficient(n: usize) -> RatFun {
    let num = &RatFun::x(Var::D) * &RatFun::from_poly(delta(n - 2));
    &num / &RatFun::from_poly(delta(n - 1))
}

fn step(prev: &TlElement, n: usize, skip: bool) -> TlElement {
    let p1 = prev.tensor(&TlElement::identity(1));
    let e = TlElement::generator(n, n - 1).expect("n ≥ 2");
    let y = e.mul(&p1).expect("same size");
    // P^(n−1)⊗1 is killed by E_1..E_{n−2} on the right
    let killed: Vec<usize> = if skip {
        (0..n - 2).collect()
    } else {
        Vec::new()
    };
    let z = p1.mul_skipping(&y, &killed, &[]).expect("same size");
    p1.sub(&z.scale(&jw_coefficient(n))).expect("same size")
}

/// P^(n), memoized for the whole process.
pub fn jones_wenzl(n: usize) -> TlElement {
    let mut m = memo().lock().unwrap();
    while m.len() <= n {
        let k = m.len();
        let next = step(&m[k - 1], k, true);
        m.push(next);
    }
    m[n].clone()
}

/// Same recursion with plain multiplication, for cross-checks.
pub fn jones_wenzl_naive(n: usize) -> TlElement {
    let mut p = TlElement::identity(n.min(1));
    for k in 2..=n {
        p = step(&p, k, false);
    }
    if n == 0 {
        TlElement::identity(0)
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_is_one_minus_e() {
        let p = jones_wenzl(2);
        let expect = TlElement::identity(2)
            .sub(&TlElement::generator(2, 1).unwrap())
            .unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn skip_matches_naive() {
        for n in 0..=5 {
            assert_eq!(jones_wenzl(n), jones_wenzl_naive(n), "n = {n}");
        }
    }

    #[test]
    fn trace_p3() {
        assert_eq!(jones_wenzl(3).trace(), RatFun::from_poly(delta(3)));
    }
}
