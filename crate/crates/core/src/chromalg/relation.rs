//! Trace-radical relations and their verification on contexts.

use rayon::prelude::*;
use serde::Serialize;

use super::contexts::generate_contexts;
use super::element::{ChromElement, ChromElementJson};
use super::pullback::{pullback_even, pullback_odd, r_element};
use crate::algebra::{minpoly_d, minpoly_q, IntPoly, QPoly, RatFun, Var};
use crate::chromatic::{markov_trace_chrom_with, ChromCache};
use crate::error::{Error, Result};
use crate::planar::RectGraph;

/// An element expected to lie in the trace radical at
/// d = 2cos(πj/(n+1)), Q = d².
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub element: ChromElement,
    pub j: i64,
    pub n: i64,
    pub minpoly_q: IntPoly,
    pub minpoly_d: IntPoly,
}

impl Relation {
    pub fn new(name: impl Into<String>, element: ChromElement, j: i64, n: i64) -> Result<Relation> {
        Ok(Relation {
            name: name.into(),
            element,
            j,
            n,
            minpoly_q: minpoly_q(j, n)?,
            minpoly_d: minpoly_d(j, n)?,
        })
    }

    /// The same element checked at a different point.
    pub fn at(&self, j: i64, n: i64) -> Result<Relation> {
        Relation::new(
            format!("{} at ({j},{n})", self.name),
            self.element.clone(),
            j,
            n,
        )
    }

    /// Context arity (bottom, top) that closes against the element.
    pub fn context_arity(&self) -> (usize, usize) {
        let (nb, nt) = self.element.arity();
        (nt, nb)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationJson {
    pub name: String,
    pub j: i64,
    pub n: i64,
    pub minpoly_q: IntPoly,
    pub minpoly_d: IntPoly,
    pub source: String,
    pub element: ChromElementJson,
}

impl Relation {
    pub fn to_json(&self) -> RelationJson {
        RelationJson {
            name: self.name.clone(),
            j: self.j,
            n: self.n,
            minpoly_q: self.minpoly_q.clone(),
            minpoly_d: self.minpoly_d.clone(),
            source: format!("chromalg {}", env!("CARGO_PKG_VERSION")),
            element: self.element.to_json(),
        }
    }
}

/// The four graphs H, I, ∪∩ and )( on two bottom and two top endpoints.
pub fn two_line_graphs() -> [RectGraph; 4] {
    let s = RectGraph::strand();
    let h = s
        .tensor(&RectGraph::vertex(2, 1))
        .glue(&RectGraph::vertex(1, 2).tensor(&s))
        .expect("arity");
    let i = RectGraph::vertex(1, 2)
        .glue(&RectGraph::vertex(2, 1))
        .expect("arity");
    let turnback = RectGraph::cup().glue(&RectGraph::cap()).expect("arity");
    [h, i, turnback, RectGraph::identity(2)]
}

/// Z₁ + Z₂ − φ⁻³(Y₁ + Y₂) with φ⁻³ written as d⁻³.
pub fn tutte_phi1_relation() -> Relation {
    let [h, i, turnback, id] = two_line_graphs();
    let c = RatFun::x_pow(Var::D, -3);
    let neg = -&c;
    let e = [
        (h, RatFun::one(Var::D)),
        (i, RatFun::one(Var::D)),
        (turnback, neg.clone()),
        (id, neg),
    ]
    .into_iter()
    .map(|(g, c)| ChromElement::from_term(g, c, 0))
    .try_fold(ChromElement::zero(2, 2), |a, b| a.add(&b))
    .expect("same arity");
    Relation::new("tutte-phi+1", e, 1, 4).expect("valid point")
}

fn combination(terms: Vec<(RectGraph, RatFun)>) -> ChromElement {
    terms
        .into_iter()
        .map(|(g, c)| ChromElement::from_term(g, c, 0))
        .try_fold(ChromElement::zero(2, 2), |a, b| a.add(&b))
        .expect("same arity")
}

/// I + ∪∩ − H − )(, zero in the chromatic algebra for every Q.
pub fn hi_relation() -> ChromElement {
    let [h, i, turnback, id] = two_line_graphs();
    let one = RatFun::one(Var::D);
    let neg = RatFun::from_int(Var::D, -1);
    combination(vec![
        (i, one.clone()),
        (turnback, one),
        (h, neg.clone()),
        (id, neg),
    ])
}

/// φI − )( − (1−φ)∪∩ and φH − ∪∩ − (1−φ))(, with φ written as d.
pub fn golden_rewirings() -> [ChromElement; 2] {
    let [h, i, turnback, id] = two_line_graphs();
    let d = RatFun::x(Var::D);
    let neg = RatFun::from_int(Var::D, -1);
    let c = &d - &RatFun::one(Var::D);
    [
        combination(vec![
            (i, d.clone()),
            (id.clone(), neg.clone()),
            (turnback.clone(), c.clone()),
        ]),
        combination(vec![(h, d), (turnback, neg), (id, c)]),
    ]
}

/// The pulled-back projector P̄^(n) at d = 2cos(πj/(n+1)).
pub fn beraha_relation(j: i64, n: i64) -> Result<Relation> {
    if n < 2 || j <= 0 || j >= n {
        return Err(Error::InvalidParameters(format!(
            "need 0 < j < n, got j={j}, n={n}"
        )));
    }
    let m = (n / 2) as usize;
    let e = if n % 2 == 0 {
        pullback_even(m)?
    } else {
        pullback_odd(m)?
    };
    Relation::new(format!("pullback-{n}"), e, j, n)
}

/// r_element(m) at d = 2cos(π/(2m)).
pub fn radical_relation(m: usize) -> Result<Relation> {
    if m < 2 {
        return Err(Error::InvalidSize(m));
    }
    Relation::new(format!("r-{m}"), r_element(m)?, 1, 2 * m as i64 - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextStatus {
    Zero,
    Nonzero,
    Pole,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContextResult {
    pub index: usize,
    pub status: ContextStatus,
    /// True when every term closes to a zero trace on its own.
    pub trivial: bool,
    pub residue: Option<QPoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub j: i64,
    pub n: i64,
    pub minpoly: IntPoly,
    pub contexts: usize,
    pub zero: usize,
    pub nonzero: usize,
    pub poles: usize,
    pub trivial: usize,
    pub passed: bool,
    pub results: Vec<ContextResult>,
}

fn check_one(
    terms: &[(&RectGraph, &RatFun)],
    t: &RectGraph,
    cache: &ChromCache,
) -> Result<(RatFun, bool)> {
    let mut total = RatFun::zero(Var::D);
    let mut trivial = true;
    for &(g, c) in terms {
        let tr = markov_trace_chrom_with(&g.glue(t)?, cache)?;
        if !tr.is_zero() {
            trivial = false;
            total = &total + &(&RatFun::from_poly(tr).square_var(Var::D) * c);
        }
    }
    Ok((total, trivial))
}

/// Σ c_i tr(G_i ∘ T) reduced at the relation's point, for every context T.
/// Sums that only involve d² are reduced modulo the polynomial in Q.
pub fn relation_check(
    rel: &Relation,
    contexts: &[RectGraph],
    cache: &ChromCache,
) -> Result<RelationReport> {
    let want = rel.context_arity();
    if let Some(bad) = contexts.iter().find(|t| t.arity() != want) {
        return Err(Error::ArityMismatch {
            expected: want.0 + want.1,
            found: bad.arity().0 + bad.arity().1,
        });
    }
    let terms: Vec<(&RectGraph, &RatFun)> = rel.element.terms().collect();
    let results: Vec<ContextResult> = contexts
        .par_iter()
        .enumerate()
        .map(|(index, t)| {
            let (total, trivial) = check_one(&terms, t, cache)?;
            let reduced = match total.even_to_half(Var::Q) {
                Some(q) => q.reduce_mod(&rel.minpoly_q),
                None => total.reduce_mod(&rel.minpoly_d),
            };
            let (status, residue) = match reduced {
                Ok(r) if r.is_zero() => (ContextStatus::Zero, Some(r)),
                Ok(r) => (ContextStatus::Nonzero, Some(r)),
                Err(Error::DenominatorNotInvertible) => (ContextStatus::Pole, None),
                Err(e) => return Err(e),
            };
            Ok(ContextResult {
                index,
                status,
                trivial,
                residue,
            })
        })
        .collect::<Result<_>>()?;
    let count = |s| results.iter().filter(|r| r.status == s).count();
    let zero = count(ContextStatus::Zero);
    Ok(RelationReport {
        name: rel.name.clone(),
        j: rel.j,
        n: rel.n,
        minpoly: rel.minpoly_q.clone(),
        contexts: results.len(),
        zero,
        nonzero: count(ContextStatus::Nonzero),
        poles: count(ContextStatus::Pole),
        trivial: results.iter().filter(|r| r.trivial).count(),
        passed: !results.is_empty() && zero == results.len(),
        results,
    })
}

/// `count` distinct contexts on which at least one term of the relation
/// has a nonzero trace, drawn in order from a seeded pool.
pub fn select_contexts(
    rel: &Relation,
    count: usize,
    seed: u64,
    cache: &ChromCache,
) -> Result<Vec<RectGraph>> {
    let (a, b) = rel.context_arity();
    let terms: Vec<(&RectGraph, &RatFun)> = rel.element.terms().collect();
    let mut pool_size = 4 * count;
    loop {
        let pool = generate_contexts(a, b, pool_size, 3, seed);
        let keep: Vec<bool> = pool
            .par_iter()
            .map(|t| Ok(!check_one(&terms, t, cache)?.1))
            .collect::<Result<_>>()?;
        let chosen: Vec<RectGraph> = pool
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(t, _)| t.clone())
            .take(count)
            .collect();
        if chosen.len() == count || pool.len() < pool_size || pool_size >= 64 * count {
            return Ok(chosen);
        }
        pool_size *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromalg::generate_contexts;

    #[test]
    fn tutte_relation_on_identity_context() {
        let rel = tutte_phi1_relation();
        assert_eq!(rel.element.len(), 4);
        let cache = ChromCache::new();
        let r = relation_check(&rel, &[RectGraph::identity(2)], &cache).unwrap();
        assert!(r.passed);
        assert_eq!(r.trivial, 0);
    }

    #[test]
    fn p4_relation_and_negative_control() {
        let rel = beraha_relation(1, 4).unwrap();
        let cache = ChromCache::new();
        let cs = generate_contexts(2, 2, 12, 2, 1);
        assert!(relation_check(&rel, &cs, &cache).unwrap().passed);
        let wrong = rel.at(1, 5).unwrap();
        assert!(relation_check(&wrong, &cs, &cache).unwrap().nonzero > 0);
    }

    #[test]
    fn hi_relation_is_killed_by_phi() {
        assert!(hi_relation().phi().unwrap().element.is_zero());
    }

    #[test]
    fn rewirings_are_tutte_plus_hi() {
        let t = tutte_phi1_relation();
        let hi = hi_relation();
        let half_d = RatFun::from_ratio(Var::D, 1, 2) * RatFun::x(Var::D);
        let [f1, f2] = golden_rewirings();
        let e1 = t.element.add(&hi).unwrap().scale(&half_d);
        let e2 = t.element.sub(&hi).unwrap().scale(&half_d);
        assert!(f1.congruent_mod(&e1, &t.minpoly_d).unwrap());
        assert!(f2.congruent_mod(&e2, &t.minpoly_d).unwrap());
        assert!(!f1.congruent_mod(&e2, &t.minpoly_d).unwrap());
    }

    #[test]
    fn selected_contexts_are_nontrivial() {
        let rel = tutte_phi1_relation();
        let cache = ChromCache::new();
        let cs = select_contexts(&rel, 20, 3, &cache).unwrap();
        assert_eq!(cs.len(), 20);
        let r = relation_check(&rel, &cs, &cache).unwrap();
        assert_eq!(r.trivial, 0);
        assert!(r.passed);
    }
}
