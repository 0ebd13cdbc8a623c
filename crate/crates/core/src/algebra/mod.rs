pub mod golden;
pub mod intpoly;
pub mod json;
pub mod laurent;
pub mod minpoly;
pub mod qpoly;
pub mod ratfun;

pub use golden::{golden_eval, golden_sign, GoldenNum, GoldenPoint, Sign};
pub use intpoly::{IntPoly, PolyOp, Var};
pub use laurent::Laurent;
pub use minpoly::{delta, minpoly_d, minpoly_q, minpoly_two_cos};
pub use qpoly::QPoly;
pub use ratfun::{ratfun_reduce_mod, RatFun};

/// Parse "p/q" or an integer.
pub fn parse_rational(s: &str) -> crate::Result<num_rational::BigRational> {
    s.trim()
        .parse()
        .map_err(|_| crate::Error::Parse(format!("not a rational number: {s}")))
}
