//! Verification campaigns behind the command-line verbs.

mod corpus;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

pub use corpus::{
    builtin, closed_trivalent, exhaustive, generated, load_dir, Named, TriangulationJson,
};
pub use report::{timed_item, ItemResult, Timing, VerifyReport};

use crate::algebra::minpoly_d;
use crate::chromalg::{
    beraha_relation, phi_pullback_even, relation_check, select_contexts, trace_pair_with,
    tutte_phi1_relation, ContextStatus, Relation,
};
use crate::chromatic::{
    chromatic_dc_with, chromatic_statesum, golden_identity_check_with, tutte_estimate_check_with,
    ChromCache,
};
use crate::error::Result;
use crate::planar::{PlanarMap, RectGraph, Triangulation};
use crate::tl::{jones_wenzl, TlDiagram};

/// Size the rayon pool; later calls are ignored.
pub fn configure_jobs(jobs: usize) {
    if jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

pub fn verify_golden(
    corpus: &Named<Triangulation>,
    label: &str,
    cache: &ChromCache,
) -> VerifyReport {
    let t0 = Instant::now();
    let items = corpus
        .par_iter()
        .map(|(name, t)| {
            timed_item(name.clone(), || {
                let c = golden_identity_check_with(t, cache)?;
                Ok((c.holds, json!({ "vertices": t.num_vertices(), "lhs": c.lhs, "rhs": c.rhs, "chi_phi1": c.chi_phi1 })))
            })
        })
        .collect();
    VerifyReport::new("verify-golden", label, items, t0)
}

pub fn verify_estimate(
    corpus: &Named<Triangulation>,
    label: &str,
    cache: &ChromCache,
) -> VerifyReport {
    let t0 = Instant::now();
    let items = corpus
        .par_iter()
        .map(|(name, t)| {
            timed_item(name.clone(), || {
                let c = tutte_estimate_check_with(t, cache)?;
                Ok((c.holds, json!({ "vertices": t.num_vertices(), "chi_phi1": c.lhs, "bound": format!("phi^{}", c.bound_exponent) })))
            })
        })
        .collect();
    VerifyReport::new("verify-estimate", label, items, t0)
}

fn context_items(
    rel: &Relation,
    contexts: &[RectGraph],
    cache: &ChromCache,
) -> Result<Vec<ItemResult>> {
    let t = Instant::now();
    let r = relation_check(rel, contexts, cache)?;
    let per = (t.elapsed().as_micros() as u64) / r.results.len().max(1) as u64;
    Ok(r.results
        .into_iter()
        .map(|c| ItemResult {
            name: format!("context-{}", c.index),
            passed: c.status == ContextStatus::Zero,
            detail: json!({ "status": c.status, "trivial": c.trivial, "residue": c.residue }),
            micros: per,
        })
        .collect())
}

/// Trace-radical check of the pulled-back projector P̄^(n) at
/// d = 2cos(πj/(n+1)) on `contexts` nontrivial contexts.
pub fn verify_beraha(
    j: i64,
    n: i64,
    contexts: usize,
    seed: u64,
    cache: &ChromCache,
) -> Result<VerifyReport> {
    let t0 = Instant::now();
    let rel = beraha_relation(j, n)?;
    let cs = select_contexts(&rel, contexts, seed, cache)?;
    let mut items = context_items(&rel, &cs, cache)?;
    if items.len() < contexts {
        items.push(ItemResult {
            name: "context-supply".into(),
            passed: false,
            detail: json!({ "wanted": contexts, "found": items.len() }),
            micros: 0,
        });
    }
    let label = format!("j={j} n={n} minpoly={} seed={seed}", rel.minpoly_q);
    Ok(VerifyReport::new("verify-beraha", label, items, t0))
}

/// The Tutte relation at Q = φ+1 on `contexts` contexts, its image under
/// Φ against P^(4) at d = φ, and the same relation at Q = 3.
pub fn verify_tutte(contexts: usize, seed: u64, cache: &ChromCache) -> Result<VerifyReport> {
    let t0 = Instant::now();
    let rel = tutte_phi1_relation();
    let cs = select_contexts(&rel, contexts, seed, cache)?;
    let mut items = context_items(&rel, &cs, cache)?;
    items.push(timed_item("image-proportional-to-p4".into(), || {
        let img = rel.element.phi()?;
        let p4 = jones_wenzl(4);
        let id = TlDiagram::identity(4);
        let factor = &img.element.coeff(&id) / &p4.coeff(&id);
        let ok = img.parity == 0
            && img
                .element
                .congruent_mod(&p4.scale(&factor), &rel.minpoly_d)?;
        Ok((
            ok,
            json!({ "factor": factor, "factor_mod": factor.reduce_mod(&rel.minpoly_d)? }),
        ))
    }));
    items.push(timed_item("pullback-image-is-p4".into(), || {
        let img = phi_pullback_even(2, 2)?;
        Ok((
            img.parity == 0 && img.element == jones_wenzl(4),
            json!(null),
        ))
    }));
    items.push(timed_item("negative-control-q3".into(), || {
        let wrong = rel.at(1, 5)?;
        let r = relation_check(&wrong, &cs, cache)?;
        Ok((
            r.nonzero > 0,
            json!({ "nonzero": r.nonzero, "contexts": r.contexts }),
        ))
    }));
    Ok(VerifyReport::new(
        "verify-tutte",
        format!("contexts={contexts} seed={seed}"),
        items,
        t0,
    ))
}

/// Trace commutation with Φ on closed graphs and square rectangle graphs.
pub fn verify_phi_commutes(
    corpus: &Named<RectGraph>,
    label: &str,
    cache: &ChromCache,
) -> VerifyReport {
    let t0 = Instant::now();
    let items = corpus
        .par_iter()
        .map(|(name, g)| {
            timed_item(name.clone(), || {
                let (a, b) = trace_pair_with(g, cache)?;
                Ok((a == b, json!({ "chromatic": a, "temperley_lieb": b })))
            })
        })
        .collect();
    VerifyReport::new("verify-phi-commutes", label, items, t0)
}

/// Deletion-contraction against the state sum.
pub fn cross_check(m: &PlanarMap, cache: &ChromCache) -> Result<bool> {
    Ok(chromatic_dc_with(m, cache)?.poly == chromatic_statesum(m)?)
}

/// The odd pullback image against the bent projector at d = 2cos(πj/(2m+2)).
pub fn odd_image_matches(m: usize, j: i64, expand: usize) -> Result<bool> {
    let img = crate::chromalg::phi_pullback_odd(m, expand)?;
    let bent = jones_wenzl(2 * m + 1).bend_right();
    let mp = minpoly_d(j, 2 * m as i64 + 1)?;
    img.element.congruent_mod(&bent, &mp)
}
