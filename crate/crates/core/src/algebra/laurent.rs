//! Laurent polynomials in d with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::{IntPoly, Var};
use super::ratfun::RatFun;

/// Σ c_i d^{low + i}; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            low: e,
            coeffs: vec![c],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Multiply by `c·d^e` in place.
    pub fn mul_monomial(&mut self, c: &BigInt, e: i64) {
        if c.is_zero() {
            *self = Self::zero();
            return;
        }
        self.low += e;
        if !c.is_one() {
            for x in &mut self.coeffs {
                *x *= c;
            }
        }
    }

    pub fn add_assign(&mut self, o: &Laurent) {
        if o.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = o.clone();
            return;
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64);
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        self.coeffs.resize((high - low) as usize, BigInt::zero());
        let off = (o.low - low) as usize;
        for (i, c) in o.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.normalize();
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        let mut r = Laurent {
            low: self.low + o.low,
            coeffs: c,
        };
        r.normalize();
        r
    }

    pub fn to_ratfun(&self) -> RatFun {
        if self.is_zero() {
            return RatFun::zero(Var::D);
        }
        let p = IntPoly::new(Var::D, self.coeffs.clone());
        &RatFun::from_poly(p) * &RatFun::x_pow(Var::D, self.low)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self.to_ratfun())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_and_convert() {
        let mut a = Laurent::monomial(BigInt::from(1), 2);
        a.add_assign(&Laurent::monomial(BigInt::from(-1), -1));
        let r = a.to_ratfun();
        assert_eq!(
            r,
            RatFun::new(
                IntPoly::from_i64(Var::D, &[-1, 0, 0, 1]),
                IntPoly::from_i64(Var::D, &[0, 1])
            )
            .unwrap()
        );
        let mut z = a.clone();
        z.mul_monomial(&BigInt::from(-1), 0);
        z.add_assign(&a);
        assert!(z.is_zero());
    }
}
