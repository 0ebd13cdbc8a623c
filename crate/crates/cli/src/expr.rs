//! Expressions in the Temperley-Lieb algebra on `n` strands.
//!
//! Grammar: sums and differences of products of atoms, where an atom is an
//! integer or fraction, `d`, `d^k`, a generator `E<i>`, a projector `P<k>`
//! (on the leftmost k strands) or a parenthesised expression.

use chromalg::algebra::{RatFun, Var};
use chromalg::tl::{jones_wenzl, TlElement};

#[derive(Clone)]
enum Value {
    Scalar(RatFun),
    Elem(TlElement),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

type Res<T> = Result<T, String>;

impl Value {
    fn into_elem(self, n: usize) -> TlElement {
        match self {
            Value::Scalar(c) => TlElement::identity(n).scale(&c),
            Value::Elem(e) => e,
        }
    }
}

fn add(a: Value, b: Value, n: usize) -> Res<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (a, b) => Value::Elem(
            a.into_elem(n)
                .add(&b.into_elem(n))
                .map_err(|e| e.to_string())?,
        ),
    })
}

fn mul(a: Value, b: Value) -> Res<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x * &y),
        (Value::Scalar(x), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(x)) => {
            Value::Elem(e.scale(&x))
        }
        (Value::Elem(x), Value::Elem(y)) => Value::Elem(x.mul(&y).map_err(|e| e.to_string())?),
    })
}

fn neg(a: Value) -> Value {
    let m = RatFun::from_int(Var::D, -1);
    match a {
        Value::Scalar(x) => Value::Scalar(&x * &m),
        Value::Elem(e) => Value::Elem(e.scale(&m)),
    }
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Res<i64> {
        self.skip();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(format!("expected a number at offset {start}"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| "number too large".to_string())
    }

    fn expr(&mut self) -> Res<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = add(acc, self.term()?, self.n)?;
            } else if self.eat(b'-') {
                acc = add(acc, neg(self.term()?), self.n)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Res<Value> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = mul(acc, self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Res<Value> {
        if self.eat(b'-') {
            return Ok(neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Res<Value> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(format!("missing ')' at offset {}", self.pos));
                }
                Ok(v)
            }
            Some(b'd') => {
                self.pos += 1;
                let k = if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let k = self.int()?;
                    if neg {
                        -k
                    } else {
                        k
                    }
                } else {
                    1
                };
                Ok(Value::Scalar(RatFun::x_pow(Var::D, k)))
            }
            Some(b'E') => {
                self.pos += 1;
                let i = self.int()? as usize;
                TlElement::generator(self.n, i)
                    .map(Value::Elem)
                    .map_err(|e| e.to_string())
            }
            Some(b'P') => {
                self.pos += 1;
                let k = self.int()? as usize;
                if k == 0 || k > self.n {
                    return Err(format!("P{k} needs 1 <= k <= {}", self.n));
                }
                Ok(Value::Elem(
                    jones_wenzl(k).tensor(&TlElement::identity(self.n - k)),
                ))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.int()?;
                let q = if self.eat(b'/') { self.int()? } else { 1 };
                if q == 0 {
                    return Err("division by zero".into());
                }
                Ok(Value::Scalar(RatFun::from_ratio(Var::D, p, q)))
            }
            Some(c) => Err(format!("unexpected '{}' at offset {}", c as char, self.pos)),
            None => Err("unexpected end of expression".into()),
        }
    }
}

pub fn evaluate(src: &str, n: usize) -> Res<TlElement> {
    let mut p = Parser {
        s: src.as_bytes(),
        pos: 0,
        n,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(format!("trailing input at offset {}", p.pos));
    }
    Ok(v.into_elem(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_relations() {
        let a = evaluate("E1*E1", 3).unwrap();
        let b = evaluate("E1", 3).unwrap();
        assert_eq!(a, b);
        let c = evaluate("E1*E2*E1 - d^-2*E1", 3).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn projector_atoms() {
        assert_eq!(evaluate("P2", 2).unwrap(), evaluate("1 - E1", 2).unwrap());
        assert!(evaluate("E1*P3", 3).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        assert!(evaluate("E1 +", 3).is_err());
        assert!(evaluate("E5", 3).is_err());
        assert!(evaluate("(E1", 3).is_err());
        assert!(evaluate("E1 E2", 3).is_err());
    }
}
