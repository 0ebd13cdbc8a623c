//! Linear combinations of diagrams with coefficients in Q(d).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::diagram::TlDiagram;
use crate::algebra::{IntPoly, QPoly, RatFun, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlElement {
    nb: usize,
    nt: usize,
    terms: BTreeMap<TlDiagram, RatFun>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Put a family of coefficients over one denominator.
fn common_denominator<'a>(coeffs: impl Iterator<Item = &'a RatFun>) -> (IntPoly, Vec<IntPoly>) {
    let coeffs: Vec<&RatFun> = coeffs.collect();
    let dens: BTreeSet<&IntPoly> = coeffs.iter().map(|c| c.den()).collect();
    let mut l = IntPoly::one(Var::D);
    for d in dens {
        let g = l.gcd(d);
        l = &l * &d.div_exact(&g).expect("gcd divides");
    }
    let nums = coeffs
        .iter()
        .map(|c| c.num() * &l.div_exact(c.den()).expect("lcm divisible"))
        .collect();
    (l, nums)
}

fn d_shift(p: &IntPoly, k: usize) -> IntPoly {
    p.shift(k)
}

/// Σ_i c_i d^{k_i}, summed with a single normalization.
pub fn sum_with_loops(items: &[(&RatFun, usize)]) -> RatFun {
    if items.is_empty() {
        return RatFun::zero(Var::D);
    }
    let (l, nums) = common_denominator(items.iter().map(|(c, _)| *c));
    let mut acc = IntPoly::zero(Var::D);
    for (n, (_, k)) in nums.iter().zip(items) {
        acc = &acc + &d_shift(n, *k);
    }
    RatFun::new(acc, l).expect("nonzero denominator")
}

impl TlElement {
    pub fn zero(nb: usize, nt: usize) -> Self {
        TlElement {
            nb,
            nt,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: TlDiagram, c: RatFun) -> Self {
        let mut e = Self::zero(d.nb(), d.nt());
        if !c.is_zero() {
            e.terms.insert(d, c);
        }
        e
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(TlDiagram::identity(n), RatFun::one(Var::D))
    }

    /// E_i = (1/d)·(cup-cap on strands i, i+1), 1 ≤ i ≤ n−1.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                strands: n,
            });
        }
        Ok(Self::from_diagram(
            TlDiagram::cupcap(n, i - 1),
            RatFun::x_pow(Var::D, -1),
        ))
    }

    pub fn from_terms(
        nb: usize,
        nt: usize,
        terms: impl IntoIterator<Item = (TlDiagram, RatFun)>,
    ) -> Result<Self> {
        let mut e = Self::zero(nb, nt);
        for (d, c) in terms {
            if d.nb() != nb || d.nt() != nt {
                return Err(Error::ArityMismatch {
                    expected: nb + nt,
                    found: d.nb() + d.nt(),
                });
            }
            e.add_term(d, &c);
        }
        Ok(e)
    }

    pub fn nb(&self) -> usize {
        self.nb
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    /// Strand count of an algebra element.
    pub fn n(&self) -> usize {
        self.nb
    }

    pub fn terms(&self) -> &BTreeMap<TlDiagram, RatFun> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &TlDiagram) -> RatFun {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(Var::D))
    }

    pub fn add_term(&mut self, d: TlDiagram, c: &RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(x) => {
                let s = &*x + c;
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }

    fn check_same(&self, o: &TlElement) -> Result<()> {
        if (self.nb, self.nt) != (o.nb, o.nt) {
            return Err(Error::StrandMismatch(self.nb + self.nt, o.nb + o.nt));
        }
        Ok(())
    }

    pub fn add(&self, o: &TlElement) -> Result<TlElement> {
        self.check_same(o)?;
        let mut r = self.clone();
        for (d, c) in &o.terms {
            r.add_term(d.clone(), c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &TlElement) -> Result<TlElement> {
        self.add(&o.scale(&RatFun::from_int(Var::D, -1)))
    }

    pub fn scale(&self, c: &RatFun) -> TlElement {
        let mut r = TlElement::zero(self.nb, self.nt);
        if c.is_zero() {
            return r;
        }
        for (d, x) in &self.terms {
            r.terms.insert(d.clone(), x * c);
        }
        r
    }

    /// `self` stacked on top of `below`.
    pub fn mul(&self, below: &TlElement) -> Result<TlElement> {
        self.mul_skipping(below, &[], &[])
    }

    /// Product that omits terms known to vanish: `upper_killed` lists i with
    /// self·E_i = 0 (0-based cup index), so diagrams of `below` with a top cup
    /// at i contribute nothing; `lower_killed` lists i with E_i·below = 0, so
    /// diagrams of `self` with a bottom cap at i contribute nothing.
    pub fn mul_skipping(
        &self,
        below: &TlElement,
        upper_killed: &[usize],
        lower_killed: &[usize],
    ) -> Result<TlElement> {
        if self.nb != below.nt {
            return Err(Error::StrandMismatch(self.nb, below.nt));
        }
        let ups: Vec<(&TlDiagram, &RatFun)> = self
            .terms
            .iter()
            .filter(|(d, _)| !lower_killed.iter().any(|&i| d.bottom_cap(i)))
            .collect();
        let downs: Vec<(&TlDiagram, &RatFun)> = below
            .terms
            .iter()
            .filter(|(d, _)| !upper_killed.iter().any(|&i| d.top_cup(i)))
            .collect();
        if ups.is_empty() || downs.is_empty() {
            return Ok(TlElement::zero(below.nb, self.nt));
        }
        let (la, na) = common_denominator(ups.iter().map(|(_, c)| *c));
        let (lb, nbv) = common_denominator(downs.iter().map(|(_, c)| *c));
        let partial: Vec<BTreeMap<TlDiagram, IntPoly>> = ups
            .par_iter()
            .zip(na.par_iter())
            .map(|((du, _), pu)| {
                let mut acc: BTreeMap<TlDiagram, IntPoly> = BTreeMap::new();
                for ((dd, _), pd) in downs.iter().zip(&nbv) {
                    let c = du.compose(dd);
                    let v = d_shift(&(pu * pd), c.loops);
                    let slot = acc
                        .entry(c.diagram)
                        .or_insert_with(|| IntPoly::zero(Var::D));
                    *slot = &*slot + &v;
                }
                acc
            })
            .collect();
        let mut total: BTreeMap<TlDiagram, IntPoly> = BTreeMap::new();
        for m in partial {
            for (d, p) in m {
                let slot = total.entry(d).or_insert_with(|| IntPoly::zero(Var::D));
                *slot = &*slot + &p;
            }
        }
        let den = &la * &lb;
        let terms: Vec<(TlDiagram, RatFun)> = total
            .into_par_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(d, p)| (d, RatFun::new(p, den.clone()).expect("nonzero denominator")))
            .collect();
        let mut out = TlElement::zero(below.nb, self.nt);
        out.terms.extend(terms);
        Ok(out)
    }

    /// Σ c·d^{#loops of the closure}.
    pub fn trace(&self) -> RatFun {
        assert_eq!(self.nb, self.nt, "trace needs a square element");
        let items: Vec<(&RatFun, usize)> = self
            .terms
            .iter()
            .map(|(d, c)| (c, d.closure_loops()))
            .collect();
        sum_with_loops(&items)
    }

    pub fn partial_trace(&self, side: Side) -> Result<TlElement> {
        if self.nb != self.nt || self.nb == 0 {
            return Err(Error::InvalidParameters(
                "partial trace needs a square element with n ≥ 1".into(),
            ));
        }
        let mut groups: BTreeMap<TlDiagram, Vec<(&RatFun, usize)>> = BTreeMap::new();
        for (d, c) in &self.terms {
            let (nd, lp) = d.partial_trace(side == Side::Right);
            groups.entry(nd).or_default().push((c, usize::from(lp)));
        }
        let mut out = TlElement::zero(self.nb - 1, self.nt - 1);
        for (d, items) in groups {
            let c = sum_with_loops(&items);
            if !c.is_zero() {
                out.terms.insert(d, c);
            }
        }
        Ok(out)
    }

    pub fn reflect(&self) -> TlElement {
        let mut out = TlElement::zero(self.nt, self.nb);
        for (d, c) in &self.terms {
            out.terms.insert(d.reflect(), c.clone());
        }
        out
    }

    /// ⟨a, b⟩ = tr(a · b̄).
    pub fn inner(&self, o: &TlElement) -> Result<RatFun> {
        self.check_same(o)?;
        Ok(self.mul(&o.reflect())?.trace())
    }

    pub fn tensor(&self, o: &TlElement) -> TlElement {
        let mut out = TlElement::zero(self.nb + o.nb, self.nt + o.nt);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(a.tensor(b), &(ca * cb));
            }
        }
        out
    }

    pub fn bend_right(&self) -> TlElement {
        let mut out = TlElement::zero(self.nb - 1, self.nt + 1);
        for (d, c) in &self.terms {
            out.terms.insert(d.bend_right(), c.clone());
        }
        out
    }

    /// Coefficients reduced modulo `m`; zero residues dropped.
    pub fn reduce_mod(&self, m: &IntPoly) -> Result<BTreeMap<TlDiagram, QPoly>> {
        let mut out = BTreeMap::new();
        for (d, c) in &self.terms {
            let r = c.reduce_mod(m)?;
            if !r.is_zero() {
                out.insert(d.clone(), r);
            }
        }
        Ok(out)
    }

    /// Whether two elements agree after reduction modulo `m`.
    pub fn congruent_mod(&self, o: &TlElement, m: &IntPoly) -> Result<bool> {
        Ok(self.sub(o)?.reduce_mod(m)?.is_empty())
    }

    pub fn to_json(&self) -> TlElementJson {
        TlElementJson {
            n: self.nb,
            nb: self.nb,
            nt: self.nt,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson {
                    pairing: d.pairing(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &TlElementJson) -> Result<Self> {
        let mut e = TlElement::zero(j.nb, j.nt);
        for t in &j.terms {
            e.add_term(TlDiagram::new(j.nb, j.nt, t.pairing.clone())?, &t.coeff);
        }
        Ok(e)
    }

    /// Multiply every coefficient by an integer.
    pub fn scale_int(&self, k: i64) -> TlElement {
        self.scale(&RatFun::from_bigint(Var::D, BigInt::from(k)))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub pairing: Vec<usize>,
    pub coeff: RatFun,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TlElementJson {
    pub n: usize,
    pub nb: usize,
    pub nt: usize,
    pub terms: Vec<TermJson>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> TlElement {
        TlElement::generator(n, i).unwrap()
    }

    #[test]
    fn generator_relations() {
        let e1 = e(3, 1);
        let e2 = e(3, 2);
        assert_eq!(e1.mul(&e1).unwrap(), e1);
        let x = e1.mul(&e2).unwrap().mul(&e1).unwrap();
        assert_eq!(x, e1.scale(&RatFun::x_pow(Var::D, -2)));
        assert_eq!(TlElement::identity(3).mul(&e2).unwrap(), e2);
        assert!(matches!(
            TlElement::generator(3, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(TlElement::identity(2).mul(&e1).is_err());
    }

    #[test]
    fn traces_and_inner() {
        let d = RatFun::x(Var::D);
        assert_eq!(TlElement::identity(3).trace(), d.pow(3));
        assert_eq!(e(2, 1).trace(), RatFun::one(Var::D));
        assert_eq!(
            TlElement::identity(2)
                .inner(&TlElement::identity(2))
                .unwrap(),
            d.pow(2)
        );
        assert_eq!(e(2, 1).inner(&e(2, 1)).unwrap(), RatFun::one(Var::D));
    }

    #[test]
    fn partial_traces() {
        let d = RatFun::x(Var::D);
        let pt = TlElement::identity(3).partial_trace(Side::Right).unwrap();
        assert_eq!(pt, TlElement::identity(2).scale(&d));
        let pe = e(3, 2).partial_trace(Side::Right).unwrap();
        assert_eq!(pe, TlElement::identity(2).scale(&RatFun::x_pow(Var::D, -1)));
        let pl = e(3, 1).partial_trace(Side::Left).unwrap();
        assert_eq!(pl, TlElement::identity(2).scale(&RatFun::x_pow(Var::D, -1)));
    }

    #[test]
    fn json_roundtrip() {
        let x = e(3, 1).add(&TlElement::identity(3)).unwrap();
        let j = serde_json::to_string(&x.to_json()).unwrap();
        let back = TlElement::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, x);
    }
}
