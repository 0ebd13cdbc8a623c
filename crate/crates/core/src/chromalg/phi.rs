//! The map Φ from rectangle graphs to Temperley-Lieb elements.
//!
//! Every edge is doubled into two parallel strands, or replaced by a
//! turnback pair with weight −1/d; around each vertex consecutive strands
//! are joined. Closed curves give powers of d, the rest a noncrossing
//! pairing of the doubled boundary. A k-valent vertex carries d^{(k−2)/2}.
//!
//! Dart h has two sides, L_h (left, looking away from its vertex) = point 2h
//! and R_h = point 2h+1. A vertex joins L_h to R_{σ(h)}.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{Laurent, RatFun, Var};
use crate::planar::RectGraph;
use crate::tl::{TlDiagram, TlElement};

const CLOSED: u32 = u32::MAX;

/// Φ(g) = (√d)^parity · element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub parity: u8,
    pub element: TlElement,
}

/// Φ(g) before conversion: diagram → Laurent polynomial in d, plus the
/// √d parity of the whole image.
pub struct PhiLaurent {
    pub nb: usize,
    pub nt: usize,
    pub parity: u8,
    pub terms: Vec<(TlDiagram, Laurent)>,
}

struct State {
    partner: Vec<u32>,
}

/// Join strand ends `a` and `b`; returns true when a closed loop forms.
fn join(p: &mut [u32], a: usize, b: usize) -> bool {
    let a2 = p[a] as usize;
    let b2 = p[b] as usize;
    if a2 == b && a != b {
        p[a] = CLOSED;
        p[b] = CLOSED;
        return true;
    }
    p[a2] = b2 as u32;
    p[b2] = a2 as u32;
    if a != a2 {
        p[a] = CLOSED;
    }
    if b != b2 {
        p[b] = CLOSED;
    }
    false
}

/// Edge order starting from the boundary, to keep the frontier small.
fn edge_order(g: &RectGraph) -> Vec<usize> {
    let m = g.map();
    let n = m.num_darts();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = g.bottom().iter().chain(g.top()).copied().collect();
    let mut starts = 0..n;
    loop {
        while let Some(h) = queue.pop_front() {
            if seen[h] {
                continue;
            }
            // whole vertex of h, then the far ends of its edges
            let mut x = h;
            loop {
                if !seen[x] {
                    let y = m.alpha()[x];
                    seen[x] = true;
                    seen[y] = true;
                    order.push(x.min(y));
                    queue.push_back(m.sigma()[y]);
                    let mut z = m.sigma()[y];
                    while z != y {
                        queue.push_back(z);
                        z = m.sigma()[z];
                    }
                }
                x = m.sigma()[x];
                if x == h {
                    break;
                }
            }
        }
        match starts.find(|&s| !seen[s]) {
            Some(s) => queue.push_back(s),
            None => break,
        }
    }
    order
}

pub fn phi_laurent(g: &RectGraph) -> PhiLaurent {
    let m = g.map();
    let n = m.num_darts();
    let (nb, nt) = g.arity();
    let mut is_end = vec![false; n];
    for &h in g.bottom().iter().chain(g.top()) {
        is_end[h] = true;
    }
    let parity = ((nb + nt) % 2) as u8;
    // interior 1-valent vertices annihilate the image
    if (0..n).any(|h| !is_end[h] && m.sigma()[h] == h) {
        return PhiLaurent {
            nb: 2 * nb,
            nt: 2 * nt,
            parity,
            terms: Vec::new(),
        };
    }
    let interior_vertices = m.vertex_cycles().len() - (nb + nt);
    let e2 = (2 * m.num_edges()) as i64 - (nb + nt) as i64 - 2 * interior_vertices as i64;
    let vertex_exp = (e2 - parity as i64) / 2;

    let mut init = vec![0u32; 2 * n];
    for h in 0..n {
        if is_end[h] {
            init[2 * h] = (2 * h) as u32;
            init[2 * h + 1] = (2 * h + 1) as u32;
        } else {
            let s = m.sigma()[h];
            init[2 * h] = (2 * s + 1) as u32;
            init[2 * s + 1] = (2 * h) as u32;
        }
    }
    let mut states: HashMap<Vec<u32>, Laurent> = HashMap::new();
    states.insert(init, Laurent::monomial(BigInt::one(), vertex_exp));
    let minus_one = BigInt::from(-1);
    for h in edge_order(g) {
        let a = m.alpha()[h];
        let mut next: HashMap<Vec<u32>, Laurent> = HashMap::with_capacity(states.len() * 2);
        for (p, w) in states {
            let st = State { partner: p };
            // parallel strands
            let mut q = st.partner.clone();
            let mut loops = 0i64;
            loops += i64::from(join(&mut q, 2 * h, 2 * a + 1));
            loops += i64::from(join(&mut q, 2 * h + 1, 2 * a));
            let mut wq = w.clone();
            wq.mul_monomial(&BigInt::one(), loops);
            next.entry(q).or_default().add_assign(&wq);
            // turnbacks, weight −1/d
            let mut r = st.partner;
            let mut loops = -1i64;
            loops += i64::from(join(&mut r, 2 * h, 2 * h + 1));
            loops += i64::from(join(&mut r, 2 * a, 2 * a + 1));
            let mut wr = w;
            wr.mul_monomial(&minus_one, loops);
            next.entry(r).or_default().add_assign(&wr);
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
    }
    // boundary point of each end dart side
    let mut tl_point = vec![usize::MAX; 2 * n];
    for (i, &b) in g.bottom().iter().enumerate() {
        tl_point[2 * b] = 2 * i;
        tl_point[2 * b + 1] = 2 * i + 1;
    }
    for (i, &t) in g.top().iter().enumerate() {
        tl_point[2 * t + 1] = 2 * nb + 2 * i;
        tl_point[2 * t] = 2 * nb + 2 * i + 1;
    }
    let mut terms = Vec::with_capacity(states.len());
    for (p, w) in states {
        let mut pairing = vec![0usize; 2 * (nb + nt)];
        for x in 0..2 * n {
            if p[x] == CLOSED {
                continue;
            }
            debug_assert!(
                tl_point[x] != usize::MAX,
                "open strand inside the rectangle"
            );
            pairing[tl_point[x]] = tl_point[p[x] as usize];
        }
        let d = TlDiagram::new(2 * nb, 2 * nt, pairing).expect("image pairing is noncrossing");
        terms.push((d, w));
    }
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    PhiLaurent {
        nb: 2 * nb,
        nt: 2 * nt,
        parity,
        terms,
    }
}

impl PhiLaurent {
    pub fn to_image(&self) -> PhiImage {
        let terms = self.terms.iter().map(|(d, w)| (d.clone(), w.to_ratfun()));
        PhiImage {
            parity: self.parity,
            element: TlElement::from_terms(self.nb, self.nt, terms).expect("arity"),
        }
    }
}

pub fn phi(g: &RectGraph) -> PhiImage {
    phi_laurent(g).to_image()
}

/// Φ of a closed graph as a scalar; `None` if the parity is odd.
pub fn phi_scalar(g: &RectGraph) -> Option<RatFun> {
    let img = phi(g);
    if img.parity != 0 {
        return None;
    }
    let empty = TlDiagram::identity(0);
    Some(
        img.element
            .terms()
            .get(&empty)
            .cloned()
            .unwrap_or_else(|| RatFun::zero(Var::D)),
    )
}

impl PhiImage {
    pub fn zero(nb: usize, nt: usize) -> Self {
        PhiImage {
            parity: 0,
            element: TlElement::zero(nb, nt),
        }
    }

    /// Product in Temperley-Lieb, `self` on top.
    pub fn mul(&self, below: &PhiImage) -> crate::Result<PhiImage> {
        let mut element = self.element.mul(&below.element)?;
        let p = self.parity + below.parity;
        if p == 2 {
            element = element.scale(&RatFun::x(Var::D));
        }
        Ok(PhiImage {
            parity: p % 2,
            element,
        })
    }

    pub fn tensor(&self, o: &PhiImage) -> PhiImage {
        let mut element = self.element.tensor(&o.element);
        let p = self.parity + o.parity;
        if p == 2 {
            element = element.scale(&RatFun::x(Var::D));
        }
        PhiImage {
            parity: p % 2,
            element,
        }
    }

    pub fn add(&self, o: &PhiImage) -> crate::Result<PhiImage> {
        let parity = match (self.element.is_zero(), o.element.is_zero()) {
            (true, _) => o.parity,
            (_, true) => self.parity,
            _ if self.parity == o.parity => self.parity,
            _ => return Err(crate::Error::MixedParity),
        };
        Ok(PhiImage {
            parity,
            element: self.element.add(&o.element)?,
        })
    }

    pub fn scale(&self, c: &RatFun) -> PhiImage {
        PhiImage {
            parity: self.parity,
            element: self.element.scale(c),
        }
    }

    pub fn scale_sqrt_d(&self) -> PhiImage {
        if self.parity == 0 {
            PhiImage {
                parity: 1,
                element: self.element.clone(),
            }
        } else {
            PhiImage {
                parity: 0,
                element: self.element.scale(&RatFun::x(Var::D)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;

    fn dpoly(c: &[i64]) -> RatFun {
        RatFun::from_poly(IntPoly::from_i64(Var::D, c))
    }

    #[test]
    fn strand_maps_to_p2() {
        let img = phi(&RectGraph::strand());
        assert_eq!(img.parity, 0);
        let p2 = TlElement::identity(2)
            .sub(&TlElement::generator(2, 1).unwrap())
            .unwrap();
        assert_eq!(img.element, p2);
    }

    #[test]
    fn theta_and_circle_scalars() {
        let theta = RectGraph::vertex(3, 0)
            .glue(&RectGraph::vertex(0, 3))
            .unwrap();
        assert_eq!(phi_scalar(&theta).unwrap(), dpoly(&[2, 0, -3, 0, 1]));
        assert_eq!(
            phi_scalar(&RectGraph::circle()).unwrap(),
            dpoly(&[-1, 0, 1])
        );
        assert_eq!(phi_scalar(&RectGraph::empty()).unwrap(), dpoly(&[1]));
    }

    #[test]
    fn tadpole_vanishes() {
        let stick = RectGraph::vertex(0, 1)
            .glue(&RectGraph::vertex(1, 0))
            .unwrap();
        assert!(phi(&stick).element.is_zero());
        let tadpole = RectGraph::cap()
            .tensor(&RectGraph::vertex(1, 0))
            .glue(&RectGraph::vertex(0, 3))
            .unwrap();
        assert!(phi(&tadpole).element.is_zero());
    }
}
