//! Polynomials with rational coefficients, used for reduction modulo a
//! minimal polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly::{IntPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(var: Var, coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { var, coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero(var: Var) -> Self {
        QPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        Self::new(var, vec![c])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn from_int(p: &IntPoly) -> Self {
        QPoly::new(
            p.var(),
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Scale to a primitive integer polynomial with positive leading
    /// coefficient; returns the scale factor `s` with `self = s * result`.
    pub fn to_int_primitive(&self) -> (BigRational, IntPoly) {
        if self.is_zero() {
            return (BigRational::one(), IntPoly::zero(self.var));
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = num_integer::lcm(l, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        let p = IntPoly::new(self.var, ints);
        let prim = p.primitive_part();
        let factor = BigRational::new(p.leading(), l) / BigRational::from_integer(prim.leading());
        (factor, prim)
    }

    /// Exact integer polynomial if every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(
                self.var,
                self.coeffs.iter().map(|c| c.to_integer()).collect(),
            ))
        } else {
            None
        }
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new(
            self.var,
            (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new(
            self.var,
            (0..n).map(|k| self.coeff(k) - o.coeff(k)).collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero(self.var);
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(self.var, c)
    }

    pub fn div_rem(&self, m: &QPoly) -> Result<(QPoly, QPoly)> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mn = m.coeffs.len();
        if self.coeffs.len() < mn {
            return Ok((QPoly::zero(self.var), self.clone()));
        }
        let lead = m.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - mn + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + mn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (j, c) in m.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((QPoly::new(self.var, quot), QPoly::new(self.var, rem)))
    }

    pub fn rem(&self, m: &QPoly) -> Result<QPoly> {
        Ok(self.div_rem(m)?.1)
    }

    /// Inverse of `self` modulo `m`, failing when they share a factor.
    pub fn inverse_mod(&self, m: &QPoly) -> Result<QPoly> {
        // extended Euclid over Q
        let mut r0 = m.clone();
        let mut r1 = self.rem(m)?;
        let mut t0 = QPoly::zero(self.var);
        let mut t1 = QPoly::constant(self.var, BigRational::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != Some(0) {
            return Err(Error::DenominatorNotInvertible);
        }
        let inv = r0.coeffs[0].recip();
        t0.scale(&inv).rem(m)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if k == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn inverse_mod_golden() {
        // d * (d - 1) = 1 mod d^2 - d - 1
        let m = QPoly::new(Var::D, vec![r(-1), r(-1), r(1)]);
        let d = QPoly::new(Var::D, vec![r(0), r(1)]);
        assert_eq!(
            d.inverse_mod(&m).unwrap(),
            QPoly::new(Var::D, vec![r(-1), r(1)])
        );
        let shared = QPoly::new(Var::D, vec![r(-1), r(-1), r(1)]);
        assert_eq!(shared.inverse_mod(&m), Err(Error::DenominatorNotInvertible));
    }
}
