//! Markov trace on rectangle graphs and the golden-ratio checks on triangulations.

use serde::Serialize;

use super::engine::{chromatic_dc_with, global_cache, ChromCache};
use crate::algebra::{golden_eval, GoldenNum, GoldenPoint, IntPoly, Sign, Var};
use crate::error::Result;
use crate::planar::{PlanarMap, RectGraph, Triangulation};

/// Q^{-1} χ of the dual of a closed map, taken per component.
pub fn closed_trace_with(m: &PlanarMap, cache: &ChromCache) -> Result<IntPoly> {
    let q = IntPoly::x(Var::Q);
    let mut acc = IntPoly::one(Var::Q);
    for c in m.components() {
        let chi = chromatic_dc_with(&c.dual()?, cache)?.poly;
        let t = chi
            .div_exact(&q)
            .expect("chromatic polynomial has no constant term");
        acc = &acc * &t;
    }
    Ok(acc)
}

pub fn markov_trace_chrom_with(g: &RectGraph, cache: &ChromCache) -> Result<IntPoly> {
    closed_trace_with(&g.closure()?, cache)
}

pub fn markov_trace_chrom(g: &RectGraph) -> Result<IntPoly> {
    markov_trace_chrom_with(g, &global_cache())
}

#[derive(Debug, Clone, Serialize)]
pub struct EstimateCheck {
    pub holds: bool,
    pub lhs: GoldenNum,
    pub bound_exponent: i64,
}

/// |χ_T(φ+1)| ≤ φ^{5−k}, compared through squares.
pub fn tutte_estimate_check_with(t: &Triangulation, cache: &ChromCache) -> Result<EstimateCheck> {
    let chi = chromatic_dc_with(t.map(), cache)?.poly;
    let lhs = golden_eval(&chi, GoldenPoint::PhiPlus1);
    let k = t.num_vertices() as i64;
    let exponent = 5 - k;
    let diff = &GoldenNum::phi_pow(2 * exponent) - &(&lhs * &lhs);
    Ok(EstimateCheck {
        holds: diff.sign() != Sign::Neg,
        lhs,
        bound_exponent: exponent,
    })
}

pub fn tutte_estimate_check(t: &Triangulation) -> Result<EstimateCheck> {
    tutte_estimate_check_with(t, &global_cache())
}

#[derive(Debug, Clone, Serialize)]
pub struct GoldenCheck {
    pub holds: bool,
    pub lhs: GoldenNum,
    pub rhs: GoldenNum,
    pub chi_phi1: GoldenNum,
}

/// χ(φ+2) = (φ+2)·φ^{3V−10}·χ(φ+1)² for a triangulation with V vertices.
pub fn golden_identity_check_with(t: &Triangulation, cache: &ChromCache) -> Result<GoldenCheck> {
    let chi = chromatic_dc_with(t.map(), cache)?.poly;
    Ok(golden_identity_from_poly(&chi, t.num_vertices()))
}

pub fn golden_identity_from_poly(chi: &IntPoly, v: usize) -> GoldenCheck {
    let a = golden_eval(chi, GoldenPoint::PhiPlus1);
    let lhs = golden_eval(chi, GoldenPoint::PhiPlus2);
    let factor = &GoldenNum::from_ints(2, 1) * &GoldenNum::phi_pow(3 * v as i64 - 10);
    let rhs = &factor * &(&a * &a);
    GoldenCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
        chi_phi1: a,
    }
}

pub fn golden_identity_check(t: &Triangulation) -> Result<GoldenCheck> {
    golden_identity_check_with(t, &global_cache())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::triangulation::{octahedron, tetrahedron};

    #[test]
    fn strand_and_empty_traces() {
        assert_eq!(
            markov_trace_chrom(&RectGraph::strand()).unwrap(),
            IntPoly::from_i64(Var::Q, &[-1, 1])
        );
        assert_eq!(
            markov_trace_chrom(&RectGraph::empty()).unwrap(),
            IntPoly::one(Var::Q)
        );
        let theta = RectGraph::vertex(0, 3)
            .glue(&RectGraph::vertex(3, 0))
            .unwrap();
        assert_eq!(
            markov_trace_chrom(&theta).unwrap(),
            IntPoly::from_i64(Var::Q, &[2, -3, 1])
        );
    }

    #[test]
    fn tetrahedron_checks() {
        let g = golden_identity_check(&tetrahedron()).unwrap();
        assert!(g.holds);
        assert_eq!(g.lhs, GoldenNum::from_ints(3, 4));
        let e = tutte_estimate_check(&tetrahedron()).unwrap();
        assert!(e.holds);
        assert_eq!(e.lhs, GoldenNum::from_ints(-1, 0));
        assert!(tutte_estimate_check(&octahedron()).unwrap().holds);
    }
}
