//! Chromatic elements whose image under Φ is a Jones-Wenzl projector.
//!
//! The recursion is written once over [`PlanarAlgebra`], so the same
//! formulas run on graphs and, factor by factor, on their images.

use super::element::ChromElement;
use super::phi::{phi, PhiImage};
use crate::algebra::{delta, RatFun, Var};
use crate::error::{Error, Result};
use crate::planar::RectGraph;

/// Operations shared by chromatic elements and their Φ-images.
pub trait PlanarAlgebra: Sized + Clone {
    fn graph(g: &RectGraph) -> Self;
    fn glue(&self, below: &Self) -> Result<Self>;
    fn tensor(&self, o: &Self) -> Result<Self>;
    fn add(&self, o: &Self) -> Result<Self>;
    fn scale(&self, c: &RatFun) -> Self;
    fn scale_sqrt_d(&self) -> Self;

    fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&RatFun::from_int(Var::D, -1)))
    }
}

impl PlanarAlgebra for ChromElement {
    fn graph(g: &RectGraph) -> Self {
        ChromElement::from_graph(g.clone())
    }
    fn glue(&self, below: &Self) -> Result<Self> {
        ChromElement::glue(self, below)
    }
    fn tensor(&self, o: &Self) -> Result<Self> {
        ChromElement::tensor(self, o)
    }
    fn add(&self, o: &Self) -> Result<Self> {
        ChromElement::add(self, o)
    }
    fn scale(&self, c: &RatFun) -> Self {
        ChromElement::scale(self, c)
    }
    fn scale_sqrt_d(&self) -> Self {
        ChromElement::scale_sqrt_d(self)
    }
}

impl PlanarAlgebra for PhiImage {
    fn graph(g: &RectGraph) -> Self {
        phi(g)
    }
    fn glue(&self, below: &Self) -> Result<Self> {
        self.mul(below)
    }
    fn tensor(&self, o: &Self) -> Result<Self> {
        Ok(PhiImage::tensor(self, o))
    }
    fn add(&self, o: &Self) -> Result<Self> {
        PhiImage::add(self, o)
    }
    fn scale(&self, c: &RatFun) -> Self {
        PhiImage::scale(self, c)
    }
    fn scale_sqrt_d(&self) -> Self {
        PhiImage::scale_sqrt_d(self)
    }
}

fn dr(k: usize) -> RatFun {
    RatFun::from_poly(delta(k))
}

fn ratio(num: &[usize], den: &[usize]) -> RatFun {
    let n = num.iter().fold(RatFun::one(Var::D), |a, &k| &a * &dr(k));
    let d = den.iter().fold(RatFun::one(Var::D), |a, &k| &a * &dr(k));
    &n / &d
}

fn d_inv() -> RatFun {
    RatFun::x_pow(Var::D, -1)
}

fn id_with<A: PlanarAlgebra>(k: usize, g: RectGraph) -> A {
    A::graph(&RectGraph::identity(k).tensor(&g))
}

/// (bar, G2) for the step from `lower` on m−1 lines to m lines.
fn even_pieces<A: PlanarAlgebra>(m: usize, lower: &A) -> Result<(A, A, RatFun)> {
    let bar = lower.tensor(&A::graph(&RectGraph::strand()))?;
    let x4: A = id_with(m - 2, RectGraph::vertex(2, 2));
    let g2 = bar.glue(&x4)?.glue(&bar)?;
    let c1 = &d_inv() * &ratio(&[2 * m - 3], &[2 * m - 2]);
    Ok((bar, g2, c1))
}

/// One step of the even recursion; `lower` is the element on m−1 lines.
pub fn pullback_even_step<A: PlanarAlgebra>(m: usize, lower: &A) -> Result<A> {
    let (bar, g2, c1) = even_pieces(m, lower)?;
    let split: A = id_with(m - 2, RectGraph::vertex(1, 2));
    let merge: A = id_with(m - 2, RectGraph::vertex(2, 1));
    let g3 = bar.glue(&split)?.glue(lower)?.glue(&merge)?.glue(&bar)?;
    let c2 = &d_inv() * &ratio(&[2 * m - 3, 2 * m - 3], &[2 * m - 1, 2 * m - 2]);
    bar.sub(&g2.scale(&c1))?.sub(&g3.scale(&c2))
}

/// One step of the odd recursion from the even element on m lines.
pub fn pullback_odd_step<A: PlanarAlgebra>(m: usize, even: &A) -> Result<A> {
    let bar = even.tensor(&A::graph(&RectGraph::strand()))?;
    let split: A = id_with(m - 1, RectGraph::vertex(1, 2));
    let g = bar.glue(&split)?.glue(even)?;
    let c = &ratio(&[2 * m - 1], &[2 * m]) * &RatFun::x_pow(Var::D, -1);
    Ok(g.scale(&(-&c)).scale_sqrt_d())
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidSize(m));
    }
    Ok(())
}

/// P̄ on m lines, with Φ(P̄) = P^(2m).
pub fn pullback_even_in<A: PlanarAlgebra>(m: usize) -> Result<A> {
    check_m(m)?;
    let mut cur = A::graph(&RectGraph::strand());
    for k in 2..=m {
        cur = pullback_even_step(k, &cur)?;
    }
    Ok(cur)
}

pub fn pullback_even(m: usize) -> Result<ChromElement> {
    pullback_even_in(m)
}

/// Arity (m, m+1); its image is P^(2m+1) with one end bent to the top.
pub fn pullback_odd_in<A: PlanarAlgebra>(m: usize) -> Result<A> {
    let even = pullback_even_in::<A>(m)?;
    pullback_odd_step(m, &even)
}

pub fn pullback_odd(m: usize) -> Result<ChromElement> {
    pullback_odd_in(m)
}

/// The even recursion cut after the 4-valent term.
pub fn r_element_in<A: PlanarAlgebra>(m: usize) -> Result<A> {
    check_m(m)?;
    if m == 1 {
        return Ok(A::graph(&RectGraph::strand()));
    }
    let lower = pullback_even_in::<A>(m - 1)?;
    let (bar, g2, c1) = even_pieces(m, &lower)?;
    bar.sub(&g2.scale(&c1))
}

pub fn r_element(m: usize) -> Result<ChromElement> {
    r_element_in(m)
}

/// Φ of the even pullback, expanding into graphs up to `expand` lines and
/// multiplying images above that.
pub fn phi_pullback_even(m: usize, expand: usize) -> Result<PhiImage> {
    check_m(m)?;
    if m <= expand.max(1) {
        return pullback_even(m)?.phi();
    }
    let lower = phi_pullback_even(m - 1, expand)?;
    pullback_even_step(m, &lower)
}

pub fn phi_pullback_odd(m: usize, expand: usize) -> Result<PhiImage> {
    check_m(m)?;
    if m <= expand.max(1) {
        return pullback_odd(m)?.phi();
    }
    pullback_odd_step(m, &phi_pullback_even(m, expand)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::{jones_wenzl, TlElement};

    #[test]
    fn even_pullback_small() {
        let p4 = pullback_even(2).unwrap();
        assert_eq!(p4.len(), 3);
        for m in 1..=2 {
            let img = pullback_even(m).unwrap().phi().unwrap();
            assert_eq!(img.parity, 0);
            assert_eq!(img.element, jones_wenzl(2 * m));
        }
    }

    #[test]
    fn r_image_is_paired_projector() {
        for m in 1..=3 {
            let n = 2 * m;
            let img = r_element(m).unwrap().phi().unwrap();
            let p2 = TlElement::identity(n - 2).tensor(&jones_wenzl(2));
            let mid = jones_wenzl(n - 1).tensor(&TlElement::identity(1));
            let r = p2.mul(&mid).unwrap().mul(&p2).unwrap();
            assert_eq!(img.parity, 0);
            assert_eq!(img.element, r, "m = {m}");
            for j in 1..n {
                let e = TlElement::generator(n, j).unwrap();
                let killed = e.mul(&r).unwrap().is_zero() && r.mul(&e).unwrap().is_zero();
                // every turnback except the one straddling the two projectors
                assert_eq!(killed, j + 2 != n, "m = {m}, j = {j}");
            }
        }
    }
}
