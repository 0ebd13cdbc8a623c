//! Linear combinations of rectangle graphs.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::phi::{phi_laurent, PhiImage};
use crate::algebra::{IntPoly, Laurent, QPoly, RatFun, Var};
use crate::chromatic::{markov_trace_chrom_with, ChromCache};
use crate::error::{Error, Result};
use crate::planar::{GraphJson, RectGraph};
use crate::tl::TlElement;

/// Σ c_i G_i with c_i ∈ Q(d), times (√d)^parity.
///
/// Terms are keyed by the embedding key, so isotopic graphs merge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromElement {
    nb: usize,
    nt: usize,
    parity: u8,
    terms: BTreeMap<Vec<u32>, (RectGraph, RatFun)>,
}

impl ChromElement {
    pub fn zero(nb: usize, nt: usize) -> Self {
        ChromElement {
            nb,
            nt,
            parity: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_graph(g: RectGraph) -> Self {
        Self::from_term(g, RatFun::one(Var::D), 0)
    }

    pub fn from_term(g: RectGraph, c: RatFun, parity: u8) -> Self {
        let (nb, nt) = g.arity();
        let mut e = ChromElement {
            nb,
            nt,
            parity: parity % 2,
            terms: BTreeMap::new(),
        };
        e.push(g, c);
        e
    }

    fn push(&mut self, g: RectGraph, c: RatFun) {
        if c.is_zero() {
            return;
        }
        let key = g.embedding_key();
        match self.terms.get_mut(&key) {
            Some((_, old)) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, (g, c));
            }
        }
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.nb, self.nt)
    }

    pub fn parity(&self) -> u8 {
        self.parity
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

    pub fn terms(&self) -> impl Iterator<Item = (&RectGraph, &RatFun)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    fn compatible(&self, o: &ChromElement) -> Result<u8> {
        if (self.nb, self.nt) != (o.nb, o.nt) {
            return Err(Error::ArityMismatch {
                expected: self.nb + self.nt,
                found: o.nb + o.nt,
            });
        }
        match (self.is_zero(), o.is_zero()) {
            (true, _) => Ok(o.parity),
            (_, true) => Ok(self.parity),
            _ if self.parity == o.parity => Ok(self.parity),
            _ => Err(Error::MixedParity),
        }
    }

    pub fn add(&self, o: &ChromElement) -> Result<ChromElement> {
        let parity = self.compatible(o)?;
        let mut out = self.clone();
        out.parity = parity;
        for (g, c) in o.terms() {
            out.push(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &ChromElement) -> Result<ChromElement> {
        self.add(&o.scale(&RatFun::from_int(Var::D, -1)))
    }

    pub fn scale(&self, c: &RatFun) -> ChromElement {
        let mut out = ChromElement::zero(self.nb, self.nt);
        out.parity = self.parity;
        if c.is_zero() {
            return out;
        }
        for (k, (g, x)) in &self.terms {
            out.terms.insert(k.clone(), (g.clone(), x * c));
        }
        out
    }

    /// Multiply by √d.
    pub fn scale_sqrt_d(&self) -> ChromElement {
        if self.parity == 0 {
            let mut out = self.clone();
            out.parity = 1;
            out
        } else {
            let mut out = self.scale(&RatFun::x(Var::D));
            out.parity = 0;
            out
        }
    }

    fn combine(
        &self,
        o: &ChromElement,
        op: impl Fn(&RectGraph, &RectGraph) -> Result<RectGraph> + Sync,
        nb: usize,
        nt: usize,
    ) -> Result<ChromElement> {
        let pairs: Vec<(&RectGraph, &RatFun, &RectGraph, &RatFun)> = self
            .terms()
            .flat_map(|(a, x)| o.terms().map(move |(b, y)| (a, x, b, y)))
            .collect();
        let made: Vec<(RectGraph, RatFun)> = pairs
            .par_iter()
            .map(|&(a, x, b, y)| Ok((op(a, b)?, x * y)))
            .collect::<Result<_>>()?;
        let mut out = ChromElement::zero(nb, nt);
        for (g, c) in made {
            out.push(g, c);
        }
        let p = self.parity + o.parity;
        if p == 2 {
            out = out.scale(&RatFun::x(Var::D));
        }
        out.parity = p % 2;
        Ok(out)
    }

    /// `self` stacked on top of `below`.
    pub fn glue(&self, below: &ChromElement) -> Result<ChromElement> {
        if self.nb != below.nt {
            return Err(Error::ArityMismatch {
                expected: below.nt,
                found: self.nb,
            });
        }
        self.combine(below, |a, b| a.glue(b), below.nb, self.nt)
    }

    pub fn tensor(&self, o: &ChromElement) -> Result<ChromElement> {
        self.combine(o, |a, b| Ok(a.tensor(b)), self.nb + o.nb, self.nt + o.nt)
    }

    pub fn reflect(&self) -> ChromElement {
        let mut out = ChromElement::zero(self.nt, self.nb);
        out.parity = self.parity;
        for (g, c) in self.terms() {
            out.push(g.reflect(), c.clone());
        }
        out
    }

    /// Σ c_i tr(G_i) with Q = d², ignoring the overall √d factor.
    pub fn trace_d_with(&self, cache: &ChromCache) -> Result<RatFun> {
        if self.nb != self.nt {
            return Err(Error::BoundaryMismatch {
                bottom: self.nb,
                top: self.nt,
            });
        }
        let graphs: Vec<(&RectGraph, &RatFun)> = self.terms().collect();
        let parts: Vec<RatFun> = graphs
            .par_iter()
            .map(|&(g, c)| {
                let t = markov_trace_chrom_with(g, cache)?;
                Ok(&RatFun::from_poly(t).square_var(Var::D) * c)
            })
            .collect::<Result<_>>()?;
        Ok(parts.iter().fold(RatFun::zero(Var::D), |a, b| &a + b))
    }

    /// The Markov trace as a function of Q. Needs even parity and
    /// coefficients that only involve d².
    pub fn markov_trace_with(&self, cache: &ChromCache) -> Result<RatFun> {
        if self.parity != 0 {
            return Err(Error::OddRootParity);
        }
        self.trace_d_with(cache)?
            .even_to_half(Var::Q)
            .ok_or_else(|| Error::InvalidParameters("trace is not a function of Q = d^2".into()))
    }

    /// Coefficients reduced modulo a polynomial in d, zero residues dropped.
    pub fn reduce_mod(&self, m: &IntPoly) -> Result<Vec<(RectGraph, QPoly)>> {
        let mut out = Vec::new();
        for (g, c) in self.terms() {
            let r = c.reduce_mod(m)?;
            if !r.is_zero() {
                out.push((g.clone(), r));
            }
        }
        Ok(out)
    }

    pub fn congruent_mod(&self, o: &ChromElement, m: &IntPoly) -> Result<bool> {
        Ok(self.sub(o)?.reduce_mod(m)?.is_empty())
    }

    /// Φ, grouping graphs that share a coefficient before converting.
    pub fn phi(&self) -> Result<PhiImage> {
        let graphs: Vec<(&RectGraph, &RatFun)> = self.terms().collect();
        let images: Vec<_> = graphs
            .par_iter()
            .map(|&(g, c)| (phi_laurent(g), c))
            .collect();
        let mut parity = None;
        let mut groups: HashMap<(RatFun, bool), BTreeMap<crate::tl::TlDiagram, Laurent>> =
            HashMap::new();
        for (img, c) in images {
            let p = (img.parity + self.parity) % 2;
            let carry = img.parity + self.parity == 2;
            if img.terms.is_empty() {
                continue;
            }
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return Err(Error::MixedParity),
                _ => {}
            }
            let slot = groups.entry((c.clone(), carry)).or_default();
            for (d, w) in img.terms {
                slot.entry(d).or_default().add_assign(&w);
            }
        }
        let mut out = TlElement::zero(2 * self.nb, 2 * self.nt);
        for ((c, carry), terms) in groups {
            let c = if carry { &c * &RatFun::x(Var::D) } else { c };
            for (d, w) in terms {
                if !w.is_zero() {
                    out.add_term(d, &(&w.to_ratfun() * &c));
                }
            }
        }
        Ok(PhiImage {
            parity: parity.unwrap_or(self.parity),
            element: out,
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChromTermJson {
    pub graph: GraphJson,
    pub coeff: RatFun,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChromElementJson {
    pub nb: usize,
    pub nt: usize,
    #[serde(default)]
    pub parity: u8,
    pub terms: Vec<ChromTermJson>,
}

impl ChromElement {
    pub fn to_json(&self) -> ChromElementJson {
        ChromElementJson {
            nb: self.nb,
            nt: self.nt,
            parity: self.parity,
            terms: self
                .terms()
                .map(|(g, c)| ChromTermJson {
                    graph: g.to_json(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &ChromElementJson) -> Result<ChromElement> {
        let mut e = ChromElement::zero(j.nb, j.nt);
        e.parity = j.parity % 2;
        for t in &j.terms {
            let g = RectGraph::from_json(&t.graph)?;
            if g.arity() != (j.nb, j.nt) {
                return Err(Error::ArityMismatch {
                    expected: j.nb + j.nt,
                    found: g.arity().0 + g.arity().1,
                });
            }
            e.push(g, t.coeff.clone());
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromalg::phi;

    fn g(x: RectGraph) -> ChromElement {
        ChromElement::from_graph(x)
    }

    #[test]
    fn isotopic_terms_merge() {
        let a = g(RectGraph::vertex(1, 1));
        let b = g(RectGraph::strand());
        let s = a.sub(&b).unwrap();
        assert!(s.is_zero() || s.len() == 2);
        let two = a.add(&a).unwrap();
        assert_eq!(two.len(), 1);
    }

    #[test]
    fn glue_is_bilinear_and_phi_multiplicative() {
        let y = g(RectGraph::vertex(1, 2));
        let m = g(RectGraph::vertex(2, 1));
        let glued = y.glue(&m).unwrap();
        assert_eq!(glued.parity(), 0);
        let lhs = glued.phi().unwrap();
        let pa = phi(&RectGraph::vertex(1, 2));
        let pb = phi(&RectGraph::vertex(2, 1));
        let rhs = pa
            .element
            .mul(&pb.element)
            .unwrap()
            .scale(&RatFun::x(Var::D));
        assert_eq!(lhs.parity, 0);
        assert_eq!(lhs.element, rhs);
    }

    #[test]
    fn json_round_trip() {
        let e = g(RectGraph::vertex(1, 2))
            .scale(&RatFun::from_ratio(Var::D, 2, 3))
            .scale_sqrt_d();
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back = ChromElement::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn mixed_parity_rejected() {
        let a = g(RectGraph::strand());
        let b = a.scale_sqrt_d();
        assert_eq!(a.add(&b), Err(Error::MixedParity));
    }
}
