//! Exact arithmetic in Q(φ), φ² = φ + 1.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// `a + b·φ` with rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    pub a: BigRational,
    pub b: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

/// Evaluation points used for chromatic polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoldenPoint {
    PhiPlus1,
    PhiPlus2,
}

impl GoldenNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNum { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenNum::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn phi() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate, φ ↦ 1 − φ.
    pub fn conj(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x · conj(x) = a² + ab − b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(GoldenNum::new(c.a / &n, c.b / &n))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = GoldenNum::one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// φ^k for any integer k.
    pub fn phi_pow(k: i64) -> Self {
        Self::phi().pow(k).expect("φ is a unit")
    }

    /// Exact sign of the real number a + bφ.
    pub fn sign(&self) -> Sign {
        // a + bφ = x + y√5 with x = a + b/2, y = b/2
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let x = &self.a + &self.b * &half;
        let y = &self.b * &half;
        let sx = x.signum();
        let sy = y.signum();
        let to_sign = |s: &BigRational| {
            if s.is_zero() {
                Sign::Zero
            } else if s.is_positive() {
                Sign::Pos
            } else {
                Sign::Neg
            }
        };
        if sy.is_zero() {
            return to_sign(&sx);
        }
        if sx.is_zero() || sx == sy {
            return to_sign(&sy);
        }
        // opposite signs: compare x² with 5y²
        let lhs = &x * &x;
        let rhs = &y * &y * BigRational::from_integer(5.into());
        match lhs.cmp(&rhs) {
            Ordering::Greater => to_sign(&sx),
            Ordering::Less => to_sign(&sy),
            Ordering::Equal => Sign::Zero,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Neg {
            -self
        } else {
            self.clone()
        }
    }

    /// Horner evaluation of an integer polynomial at `x`.
    pub fn eval_poly(p: &IntPoly, x: &GoldenNum) -> GoldenNum {
        let mut acc = GoldenNum::zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * x)
                + &GoldenNum::new(BigRational::from_integer(c.clone()), BigRational::zero());
        }
        acc
    }

    fn ratio_string(r: &BigRational) -> String {
        if r.is_integer() {
            format!("{}/1", r.numer())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }
}

/// Evaluate `p` at φ+1 or φ+2.
pub fn golden_eval(p: &IntPoly, point: GoldenPoint) -> GoldenNum {
    let x = match point {
        GoldenPoint::PhiPlus1 => GoldenNum::from_ints(1, 1),
        GoldenPoint::PhiPlus2 => GoldenNum::from_ints(2, 1),
    };
    GoldenNum::eval_poly(p, &x)
}

pub fn golden_sign(x: &GoldenNum) -> Sign {
    x.sign()
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}φ", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{} - {}φ", self.a, -&self.b)
                } else {
                    write!(f, "{} + {}φ", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNum({self})")
    }
}

impl<'a> Add<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn add(self, o: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn sub(self, o: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a GoldenNum> for &'a GoldenNum {
    type Output = GoldenNum;
    fn mul(self, o: &GoldenNum) -> GoldenNum {
        // (a + bφ)(c + eφ) = ac + be + (ae + bc + be)φ
        let be = &self.b * &o.b;
        GoldenNum::new(&self.a * &o.a + &be, &self.a * &o.b + &self.b * &o.a + be)
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-&self.a, -&self.b)
    }
}

impl Serialize for GoldenNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GoldenNum", 2)?;
        st.serialize_field("a", &Self::ratio_string(&self.a))?;
        st.serialize_field("b", &Self::ratio_string(&self.b))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GoldenNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: String,
            b: String,
        }
        let raw = Raw::deserialize(d)?;
        let parse = |s: &str| s.parse::<BigRational>().map_err(serde::de::Error::custom);
        Ok(GoldenNum::new(parse(&raw.a)?, parse(&raw.b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::intpoly::Var;

    fn k4() -> IntPoly {
        IntPoly::from_i64(Var::Q, &[0, -6, 11, -6, 1])
    }

    #[test]
    fn k4_golden_values() {
        assert_eq!(
            golden_eval(&k4(), GoldenPoint::PhiPlus1),
            GoldenNum::from_ints(-1, 0)
        );
        assert_eq!(
            golden_eval(&k4(), GoldenPoint::PhiPlus2),
            GoldenNum::from_ints(3, 4)
        );
        assert!(golden_eval(&IntPoly::zero(Var::Q), GoldenPoint::PhiPlus1).is_zero());
    }

    #[test]
    fn signs() {
        assert_eq!(GoldenNum::from_ints(3, 4).sign(), Sign::Pos);
        assert_eq!(GoldenNum::from_ints(-1, 1).sign(), Sign::Pos);
        assert_eq!(GoldenNum::zero().sign(), Sign::Zero);
        assert_eq!(GoldenNum::from_ints(2, -1).sign(), Sign::Pos);
        assert_eq!(GoldenNum::from_ints(1, -1).sign(), Sign::Neg);
    }

    #[test]
    fn inverse_powers() {
        // φ^-3 = 2φ - 3
        assert_eq!(GoldenNum::phi_pow(-3), GoldenNum::from_ints(-3, 2));
        let x = GoldenNum::from_ints(3, 4);
        assert_eq!(&x * &x.inv().unwrap(), GoldenNum::one());
    }

    #[test]
    fn json_roundtrip() {
        let x = GoldenNum::new(
            BigRational::new(1.into(), 3.into()),
            BigRational::from_integer((-2).into()),
        );
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"a":"1/3","b":"-2/1"}"#);
        assert_eq!(serde_json::from_str::<GoldenNum>(&s).unwrap(), x);
    }
}
