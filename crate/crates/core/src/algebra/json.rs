//! JSON encodings for polynomials and rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::{IntPoly, Var};
use super::qpoly::QPoly;
use super::ratfun::RatFun;

#[derive(Serialize, Deserialize)]
struct PolyJson {
    var: Var,
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            var: self.var(),
            coeffs: self.to_decimal_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.trim().parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(raw.var, coeffs))
    }
}

/// Rational polynomials use "p/q" strings for each coefficient.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs()
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        PolyJson {
            var: self.var(),
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.trim().parse::<BigRational>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::new(raw.var, coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFunJson {
    num: IntPoly,
    den: IntPoly,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFunJson {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RatFunJson::deserialize(d)?;
        RatFun::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_json_shape() {
        let p = IntPoly::from_i64(Var::Q, &[1, -3, 1]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"var":"Q","coeffs":["1","-3","1"]}"#);
        assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), p);
        let r = RatFun::from_ratio(Var::D, 1, 2);
        let back: RatFun = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
