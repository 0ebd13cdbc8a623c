//! Traces on both sides of Φ.

use super::element::ChromElement;
use super::phi::phi;
use crate::algebra::{RatFun, Var};
use crate::chromatic::{global_cache, markov_trace_chrom_with, ChromCache};
use crate::error::{Error, Result};
use crate::planar::RectGraph;

/// Markov trace of an element as a function of Q.
pub fn markov_trace(e: &ChromElement) -> Result<RatFun> {
    e.markov_trace_with(&global_cache())
}

/// (chromatic trace with Q = d², Temperley-Lieb trace of Φ(g)).
pub fn trace_pair_with(g: &RectGraph, cache: &ChromCache) -> Result<(RatFun, RatFun)> {
    let chrom = RatFun::from_poly(markov_trace_chrom_with(g, cache)?).square_var(Var::D);
    let img = phi(g);
    if img.parity != 0 {
        return Err(Error::OddRootParity);
    }
    Ok((chrom, img.element.trace()))
}

pub fn check_phi_trace_commutes_with(g: &RectGraph, cache: &ChromCache) -> bool {
    matches!(trace_pair_with(g, cache), Ok((a, b)) if a == b)
}

pub fn check_phi_trace_commutes(g: &RectGraph) -> bool {
    check_phi_trace_commutes_with(g, &global_cache())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;

    #[test]
    fn theta_and_circle() {
        let theta = RectGraph::vertex(3, 0)
            .glue(&RectGraph::vertex(0, 3))
            .unwrap();
        let (a, b) = trace_pair_with(&theta, &ChromCache::new()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a,
            RatFun::from_poly(IntPoly::from_i64(Var::D, &[2, 0, -3, 0, 1]))
        );
        assert!(check_phi_trace_commutes(&RectGraph::circle()));
        assert!(check_phi_trace_commutes(&RectGraph::vertex(2, 2)));
        assert!(check_phi_trace_commutes(
            &RectGraph::vertex(1, 2)
                .glue(&RectGraph::vertex(2, 1))
                .unwrap()
        ));
    }
}
