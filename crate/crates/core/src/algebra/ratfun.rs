//! Rational functions in one variable, always kept in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::{IntPoly, Var};
use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` in Z[x] and positive leading
/// coefficient on `den`. Zero is `0 / 1`. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VariableMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: IntPoly, den: IntPoly) -> Self {
        let var = num.var();
        if num.is_zero() {
            return RatFun {
                num,
                den: IntPoly::one(var),
            };
        }
        if den.is_one() {
            return RatFun { num, den };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if d.leading().is_negative() {
            n = -n;
            d = -d;
        }
        RatFun { num: n, den: d }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        let var = p.var();
        RatFun {
            num: p,
            den: IntPoly::one(var),
        }
    }

    pub fn from_int(var: Var, c: i64) -> Self {
        Self::from_poly(IntPoly::constant(var, BigInt::from(c)))
    }

    pub fn from_bigint(var: Var, c: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(var, c))
    }

    /// The rational number `p/q` as a constant.
    pub fn from_ratio(var: Var, p: i64, q: i64) -> Self {
        Self::new(
            IntPoly::constant(var, p.into()),
            IntPoly::constant(var, q.into()),
        )
        .expect("nonzero")
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(IntPoly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(IntPoly::one(var))
    }

    pub fn x(var: Var) -> Self {
        Self::from_poly(IntPoly::x(var))
    }

    /// `x^k` for any integer `k`.
    pub fn x_pow(var: Var, k: i64) -> Self {
        let m = IntPoly::monomial(var, BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFun {
                num: IntPoly::one(var),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    /// Sum computed by cross-multiplication followed by one reduction.
    pub fn add_cross(&self, o: &Self) -> Self {
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        let d = &self.den * &o.den;
        Self::canonical(n, d)
    }

    /// Replace `x` by `x^2` (used for `Q = d^2`).
    pub fn square_var(&self, var: Var) -> Self {
        Self::canonical(self.num.square_var(var), self.den.square_var(var))
    }

    /// For an even function `f(x) = g(x^2)` return `g` in `var`.
    pub fn even_to_half(&self, var: Var) -> Option<Self> {
        Some(Self::canonical(
            self.num.even_to_half(var)?,
            self.den.even_to_half(var)?,
        ))
    }

    /// Relabel the variable tag.
    pub fn with_var(&self, var: Var) -> Self {
        RatFun {
            num: self.num.clone().with_var(var),
            den: self.den.clone().with_var(var),
        }
    }

    /// Residue of `num * den^{-1}` modulo `m`, over the rationals.
    pub fn reduce_mod(&self, m: &IntPoly) -> Result<QPoly> {
        if self.var() != m.var() {
            return Err(Error::VariableMismatch);
        }
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = self.den.gcd(m);
        if !g.is_constant() {
            return Err(Error::DenominatorNotInvertible);
        }
        let mq = QPoly::from_int(m);
        let inv = QPoly::from_int(&self.den).inverse_mod(&mq)?;
        QPoly::from_int(&self.num).mul(&inv).rem(&mq)
    }

    pub fn eval_int(&self, x: &BigInt) -> Result<num_rational::BigRational> {
        let d = self.den.eval_int(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(num_rational::BigRational::new(self.num.eval_int(x), d))
    }
}

/// Convenience wrapper returning the residue of `r` modulo `m`.
pub fn ratfun_reduce_mod(r: &RatFun, m: &IntPoly) -> Result<QPoly> {
    r.reduce_mod(m)
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::canonical(&self.num + &o.num, self.den.clone());
        }
        // split through the gcd of denominators to keep sizes small
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            return self.add_cross(o);
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &b) + &(&o.num * &a);
        let d = &(&a * &b) * &g;
        RatFun::canonical(n, d)
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero(self.var());
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun::from_poly(&self.num * &o.num);
        }
        // cancel crosswise before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFun::canonical(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self * &o.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, o: RatFun) -> RatFun {
        &self + &o
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, o: RatFun) -> RatFun {
        &self - &o
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, o: RatFun) -> RatFun {
        &self * &o
    }
}

impl Div for RatFun {
    type Output = RatFun;
    fn div(self, o: RatFun) -> RatFun {
        &self / &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn d(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(Var::D, c)
    }

    fn rq(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = RatFun::new(d(&[-1, 0, 1]), d(&[1, -1])).unwrap();
        assert_eq!(r, RatFun::from_poly(d(&[-1, -1])));
        let s = RatFun::new(d(&[2]), d(&[0, -4])).unwrap();
        assert_eq!(s.num(), &d(&[-1]));
        assert_eq!(s.den(), &d(&[0, 2]));
    }

    #[test]
    fn reduce_mod_cases() {
        let a = RatFun::from_poly(d(&[-1, 0, 1]));
        assert!(a.reduce_mod(&d(&[-1, 1])).unwrap().is_zero());
        let b = RatFun::x_pow(Var::D, -1);
        assert_eq!(
            b.reduce_mod(&d(&[-1, 1])).unwrap(),
            QPoly::constant(Var::D, rq(1))
        );
        // (Q-1)(Q-2) at Q = φ+1 is φ(φ-1) = 1, while Δ_4 vanishes at d = φ
        let golden = d(&[-1, -1, 1]);
        let c = RatFun::from_poly(d(&[2, 0, -3, 0, 1]));
        assert_eq!(
            c.reduce_mod(&golden).unwrap(),
            QPoly::constant(Var::D, rq(1))
        );
        let delta4 = RatFun::from_poly(d(&[1, 0, -3, 0, 1]));
        assert!(delta4.reduce_mod(&golden).unwrap().is_zero());
        let e = RatFun::new(d(&[1]), d(&[-1, 1])).unwrap();
        assert_eq!(
            e.reduce_mod(&d(&[-1, 0, 1])),
            Err(Error::DenominatorNotInvertible)
        );
    }

    #[test]
    fn sum_paths_agree() {
        let a = RatFun::new(d(&[1]), d(&[-2, 0, 1])).unwrap();
        let b = RatFun::new(d(&[0, 1]), d(&[0, -2, 0, 1])).unwrap();
        assert_eq!(&a + &b, a.add_cross(&b));
    }
}
