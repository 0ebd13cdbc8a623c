//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variable tag carried by every polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "d")]
    D,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => write!(f, "Q"),
            Var::D => write!(f, "d"),
        }
    }
}

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    var: Var,
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    DivExact,
    Rem,
}

impl IntPoly {
    pub fn new(var: Var, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        IntPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: Var, c: BigInt) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(var: Var, c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { var, coeffs }
    }

    /// The variable itself.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, BigInt::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, different variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest power of the variable with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.var);
        }
        IntPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide every coefficient by `c`; caller guarantees exactness.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly {
            var: self.var,
            coeffs,
        }
    }

    /// Divide by `x^k`; the low coefficients must be zero.
    pub fn unshift(&self, k: usize) -> IntPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        IntPoly {
            var: self.var,
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Substitute `x -> p(x)`; the result carries `p`'s variable.
    pub fn compose(&self, p: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero(p.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * p) + &IntPoly::constant(p.var, c.clone());
        }
        acc
    }

    /// Substitute `x -> x^2` (used to move from Q = d^2 to d).
    pub fn square_var(&self, var: Var) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); (2 * self.coeffs.len()).saturating_sub(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        IntPoly::new(var, coeffs)
    }

    /// Checked binary operation.
    pub fn arith(&self, other: &IntPoly, op: PolyOp) -> Result<IntPoly> {
        if self.var != other.var {
            return Err(Error::VariableMismatch);
        }
        match op {
            PolyOp::Add => Ok(self + other),
            PolyOp::Sub => Ok(self - other),
            PolyOp::Mul => Ok(self * other),
            PolyOp::DivExact => self.div_exact(other),
            PolyOp::Rem => self.rem_integral(other),
        }
    }

    /// Exact quotient over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem_integral(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    /// Remainder, required to have integer coefficients.
    pub fn rem_integral(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_rem_integral(divisor)?.1)
    }

    /// Long division where each step's leading-coefficient quotient must be exact.
    fn div_rem_integral(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((IntPoly::zero(self.var), self.clone()));
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dn - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        Ok((IntPoly::new(self.var, quot), IntPoly::new(self.var, rem)))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let bn = b.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < bn {
            return self.clone();
        }
        let lead = b.coeffs.last().unwrap();
        while rem.len() >= bn {
            let top = rem.last().unwrap().clone();
            if top.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - bn;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, c) in b.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * c;
            }
            rem.pop();
        }
        IntPoly::new(self.var, rem)
    }

    /// Greatest common divisor in Z[x], normalised to positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.clone().normalize_sign();
        }
        if other.is_zero() {
            return self.clone().normalize_sign();
        }
        let cg = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return IntPoly::constant(self.var, cg);
        }
        // common powers of x split off cheaply
        let v = self.valuation().unwrap().min(other.valuation().unwrap());
        let mut a = self.unshift(self.valuation().unwrap()).primitive_part();
        let mut b = other.unshift(other.valuation().unwrap()).primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = IntPoly::one(self.var);
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&cg).shift(v)
    }

    fn normalize_sign(self) -> IntPoly {
        if self.leading().is_negative() {
            -self
        } else {
            self
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(self.var, coeffs)
    }

    /// Even part test: all odd-degree coefficients vanish.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// For an even polynomial p(x) = r(x^2), return r in the given variable.
    pub fn even_to_half(&self, var: Var) -> Option<IntPoly> {
        if !self.is_even() {
            return None;
        }
        Some(IntPoly::new(
            var,
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
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

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only to key deterministic maps.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.var
            .cmp(&other.var)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_default();
            if let Some(b) = rhs.coeffs.get(k) {
                c += b;
            }
            coeffs.push(c);
        }
        IntPoly::new(self.var, coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_default();
            if let Some(b) = rhs.coeffs.get(k) {
                c -= b;
            }
            coeffs.push(c);
        }
        IntPoly::new(self.var, coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        debug_assert_eq!(self.var, rhs.var, "variable mismatch");
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero(self.var);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(self.var, coeffs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            var: self.var,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(Var::Q, c)
    }

    #[test]
    fn product_of_linear_factors() {
        let qm1 = q(&[-1, 1]);
        let qm2 = q(&[-2, 1]);
        let p = &(&qm1 * &qm1) * &qm2;
        assert_eq!(p, q(&[-2, 5, -4, 1]));
        assert_eq!(p.to_string(), "Q^3 - 4Q^2 + 5Q - 2");
    }

    #[test]
    fn identity_and_self_remainder() {
        let p = q(&[1, -3, 1]);
        assert_eq!(&p * &IntPoly::one(Var::Q), p);
        assert!(p.arith(&p, PolyOp::Rem).unwrap().is_zero());
    }

    #[test]
    fn exact_division_errors() {
        let p = q(&[-2, 5, -4, 1]);
        assert_eq!(p.div_exact(&q(&[-2, 1])).unwrap(), q(&[1, -2, 1]));
        assert_eq!(p.div_exact(&q(&[1, 1])), Err(Error::InexactDivision));
        assert_eq!(
            q(&[1, 1]).div_exact(&q(&[0, 2])),
            Err(Error::InexactDivision)
        );
        let d = IntPoly::from_i64(Var::D, &[0, 1]);
        assert_eq!(p.arith(&d, PolyOp::Add), Err(Error::VariableMismatch));
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let a = &q(&[-1, 1]) * &q(&[3, 0, 2]);
        let b = &q(&[-1, 1]) * &q(&[5, 7]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        let c = q(&[0, 0, 4]);
        let e = q(&[0, 6]);
        assert_eq!(c.gcd(&e), q(&[0, 2]));
        assert_eq!(q(&[2, 2]).gcd(&q(&[4])), q(&[2]));
    }

    #[test]
    fn compose_shifts_variable() {
        // x^2 + x - 1 at x = Q - 2
        let p = IntPoly::from_i64(Var::D, &[-1, 1, 1]);
        assert_eq!(p.compose(&q(&[-2, 1])), q(&[1, -3, 1]));
    }
}
