//! Chebyshev-type polynomials Δ_n and minimal polynomials of 2cos(2πk/M).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::intpoly::{IntPoly, Var};
use crate::error::{Error, Result};

/// Δ_0 = 1, Δ_1 = d, Δ_n = dΔ_{n−1} − Δ_{n−2}.
pub fn delta(n: usize) -> IntPoly {
    let d = IntPoly::x(Var::D);
    let mut prev = IntPoly::one(Var::D);
    if n == 0 {
        return prev;
    }
    let mut cur = d.clone();
    for _ in 1..n {
        let next = &(&d * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Δ_{-1} = 0 extends the recursion one step down; convenient in formulas.
pub fn delta_signed(n: i64) -> IntPoly {
    if n < 0 {
        IntPoly::zero(Var::D)
    } else {
        delta(n as usize)
    }
}

/// M-th cyclotomic polynomial by exact division of x^M − 1.
pub fn cyclotomic(m: u64, var: Var) -> IntPoly {
    let mut p = &IntPoly::monomial(var, BigInt::one(), m as usize) - &IntPoly::one(var);
    for e in 1..m {
        if m.is_multiple_of(e) {
            p = p
                .div_exact(&cyclotomic(e, var))
                .expect("cyclotomic factor divides");
        }
    }
    p
}

/// V_i with V_0 = 2, V_1 = x, V_i = xV_{i−1} − V_{i−2}, so V_i(y + 1/y) = y^i + y^{−i}.
pub fn lucas_v(i: usize, var: Var) -> IntPoly {
    let x = IntPoly::x(var);
    let mut prev = IntPoly::constant(var, BigInt::from(2));
    if i == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..i {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial over Q of 2cos(2πk/M), in the variable d.
pub fn minpoly_two_cos(k: i64, m: i64) -> Result<IntPoly> {
    if m <= 0 {
        return Err(Error::InvalidParameters(format!(
            "modulus {m} must be positive"
        )));
    }
    let k = k.rem_euclid(m);
    let g = k.gcd(&m);
    let m = (m / g) as u64;
    let var = Var::D;
    match m {
        1 => return Ok(IntPoly::from_i64(var, &[-2, 1])),
        2 => return Ok(IntPoly::from_i64(var, &[2, 1])),
        _ => {}
    }
    let phi = cyclotomic(m, var);
    // palindromic of even degree 2r: y^{-r}Φ(y) = c_r + Σ c_{r+i}(y^i + y^{-i})
    let deg = phi.degree().expect("nonzero");
    debug_assert!(deg.is_multiple_of(2));
    let r = deg / 2;
    let mut g = IntPoly::constant(var, phi.coeff(r));
    for i in 1..=r {
        let c = phi.coeff(r + i);
        if !c.is_zero() {
            g = &g + &lucas_v(i, var).scale(&c);
        }
    }
    Ok(g)
}

/// Minimal polynomial of Q = 2 + 2cos(2πj/(n+1)), for 0 < j < n.
pub fn minpoly_q(j: i64, n: i64) -> Result<IntPoly> {
    if !(0 < j && j < n) {
        return Err(Error::InvalidParameters(format!(
            "need 0 < j < n, got j={j}, n={n}"
        )));
    }
    let x = minpoly_two_cos(j, n + 1)?;
    let sub = IntPoly::from_i64(Var::Q, &[-2, 1]);
    Ok(x.compose(&sub))
}

/// Minimal polynomial of d = 2cos(πj/(n+1)), the square root of the special Q.
pub fn minpoly_d(j: i64, n: i64) -> Result<IntPoly> {
    if !(0 < j && j < n) {
        return Err(Error::InvalidParameters(format!(
            "need 0 < j < n, got j={j}, n={n}"
        )));
    }
    minpoly_two_cos(j, 2 * (n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(Var::D, c)
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(0), dp(&[1]));
        assert_eq!(delta(1), dp(&[0, 1]));
        assert_eq!(delta(2), dp(&[-1, 0, 1]));
        assert_eq!(delta(3), dp(&[0, -2, 0, 1]));
    }

    #[test]
    fn small_minpolys() {
        assert_eq!(minpoly_two_cos(1, 5).unwrap(), dp(&[-1, 1, 1]));
        assert_eq!(minpoly_two_cos(1, 4).unwrap(), dp(&[0, 1]));
        assert_eq!(minpoly_two_cos(1, 6).unwrap(), dp(&[-1, 1]));
        assert_eq!(minpoly_two_cos(2, 4).unwrap(), dp(&[2, 1]));
        assert_eq!(
            minpoly_q(1, 4).unwrap(),
            IntPoly::from_i64(Var::Q, &[1, -3, 1])
        );
        assert_eq!(
            minpoly_q(1, 3).unwrap(),
            IntPoly::from_i64(Var::Q, &[-2, 1])
        );
        assert_eq!(
            minpoly_q(1, 2).unwrap(),
            IntPoly::from_i64(Var::Q, &[-1, 1])
        );
        assert!(minpoly_q(2, 2).is_err());
    }

    #[test]
    fn minpoly_d_golden() {
        // 2cos(π/5) = φ
        assert_eq!(minpoly_d(1, 4).unwrap(), dp(&[-1, -1, 1]));
        assert_eq!(minpoly_d(1, 3).unwrap(), dp(&[-2, 0, 1]));
        assert_eq!(minpoly_d(2, 5).unwrap(), dp(&[-1, 1]));
    }
}
