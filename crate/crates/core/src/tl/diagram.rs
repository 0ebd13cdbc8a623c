//! Noncrossing pairings of boundary points of a rectangle.
//!
//! Points `0..nb` are the bottom points left to right and `nb..nb+nt` the
//! top points left to right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TlDiagram {
    nb: u8,
    nt: u8,
    pairing: Vec<u8>,
}

/// How two diagrams compose: the combined diagram and the number of closed loops.
pub struct Composite {
    pub diagram: TlDiagram,
    pub loops: usize,
}

impl TlDiagram {
    pub fn new(nb: usize, nt: usize, pairing: Vec<usize>) -> Result<Self> {
        let total = nb + nt;
        if total % 2 == 1 || pairing.len() != total || total > 250 {
            return Err(Error::InvalidParameters(
                "pairing has the wrong size".into(),
            ));
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= total || q == p || pairing[q] != p {
                return Err(Error::InvalidParameters("not a perfect matching".into()));
            }
        }
        let d = TlDiagram {
            nb: nb as u8,
            nt: nt as u8,
            pairing: pairing.iter().map(|&x| x as u8).collect(),
        };
        if !d.is_noncrossing() {
            return Err(Error::InvalidParameters("pairing crosses".into()));
        }
        Ok(d)
    }

    fn raw(nb: usize, nt: usize, pairing: Vec<u8>) -> Self {
        TlDiagram {
            nb: nb as u8,
            nt: nt as u8,
            pairing,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut p = vec![0u8; 2 * n];
        for i in 0..n {
            p[i] = (n + i) as u8;
            p[n + i] = i as u8;
        }
        Self::raw(n, n, p)
    }

    /// Cap on bottom points i, i+1 and cup on top points i, i+1 (0-based).
    pub fn cupcap(n: usize, i: usize) -> Self {
        let mut d = Self::identity(n);
        let p = &mut d.pairing;
        p[i] = (i + 1) as u8;
        p[i + 1] = i as u8;
        p[n + i] = (n + i + 1) as u8;
        p[n + i + 1] = (n + i) as u8;
        d
    }

    pub fn nb(&self) -> usize {
        self.nb as usize
    }

    pub fn nt(&self) -> usize {
        self.nt as usize
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p] as usize
    }

    pub fn pairing(&self) -> Vec<usize> {
        self.pairing.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.nb == self.nt && (0..self.nb()).all(|i| self.partner(i) == self.nb() + i)
    }

    /// Position of each point once the boundary is read counterclockwise:
    /// bottom left→right, then top right→left.
    fn cyclic_pos(&self, p: usize) -> usize {
        let nb = self.nb();
        if p < nb {
            p
        } else {
            nb + (self.nt() - 1 - (p - nb))
        }
    }

    pub fn is_noncrossing(&self) -> bool {
        let total = self.pairing.len();
        let mut at = vec![0usize; total];
        for p in 0..total {
            at[self.cyclic_pos(p)] = p;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &p in &at {
            let q = self.partner(p);
            if stack.last() == Some(&q) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    /// Whether top points i, i+1 are paired with each other.
    pub fn top_cup(&self, i: usize) -> bool {
        let nb = self.nb();
        self.partner(nb + i) == nb + i + 1
    }

    /// Whether bottom points i, i+1 are paired with each other.
    pub fn bottom_cap(&self, i: usize) -> bool {
        self.partner(i) == i + 1
    }

    /// `self` stacked on top of `below` (requires self.nb == below.nt).
    pub fn compose(&self, below: &TlDiagram) -> Composite {
        debug_assert_eq!(self.nb, below.nt);
        let k = self.nb();
        let (bb, bt) = (below.nb(), self.nt());
        let mut out = vec![0u8; bb + bt];
        let mut seen_mid = vec![false; k];
        // external point -> (which diagram, local index)
        let start = |x: usize| {
            if x < bb {
                (false, x)
            } else {
                (true, k + (x - bb))
            }
        };
        for x in 0..bb + bt {
            let (mut upper, mut idx) = start(x);
            loop {
                if upper {
                    let q = self.partner(idx);
                    if q >= k {
                        out[x] = (bb + q - k) as u8;
                        break;
                    }
                    seen_mid[q] = true;
                    upper = false;
                    idx = below.nb() + q;
                } else {
                    let q = below.partner(idx);
                    if q < bb {
                        out[x] = q as u8;
                        break;
                    }
                    let m = q - bb;
                    seen_mid[m] = true;
                    upper = true;
                    idx = m;
                }
            }
        }
        // remaining middle points lie on closed loops
        let mut loops = 0;
        for m in 0..k {
            if seen_mid[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                seen_mid[cur] = true;
                let q = self.partner(cur);
                seen_mid[q] = true;
                let r = below.partner(below.nb() + q) - bb;
                if r == m {
                    break;
                }
                cur = r;
            }
        }
        Composite {
            diagram: TlDiagram::raw(bb, bt, out),
            loops,
        }
    }

    /// Loops after joining top i to bottom i for every i.
    pub fn closure_loops(&self) -> usize {
        debug_assert_eq!(self.nb, self.nt);
        let n = self.nb();
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                let next = if q < n { q + n } else { q - n };
                if seen[next] {
                    break;
                }
                p = next;
            }
        }
        loops
    }

    /// Join the rightmost (or leftmost) top point to the corresponding
    /// bottom point; returns the smaller diagram and whether a loop closed.
    pub fn partial_trace(&self, right: bool) -> (TlDiagram, bool) {
        let n = self.nb();
        debug_assert_eq!(self.nb, self.nt);
        let (b, t) = if right { (n - 1, 2 * n - 1) } else { (0, n) };
        if self.partner(b) == t {
            return (self.drop_points(b, t, None), true);
        }
        let x = self.partner(b);
        let y = self.partner(t);
        (self.drop_points(b, t, Some((x, y))), false)
    }

    /// Remove bottom point `b` and top point `t`, optionally joining `x`–`y`.
    fn drop_points(&self, b: usize, t: usize, join: Option<(usize, usize)>) -> TlDiagram {
        let n = self.nb();
        let remap = |p: usize| -> usize {
            if p < n {
                p - usize::from(p > b)
            } else {
                (n - 1) + (p - n) - usize::from(p > t)
            }
        };
        let mut out = vec![0u8; 2 * (n - 1)];
        for p in 0..2 * n {
            if p == b || p == t {
                continue;
            }
            let mut q = self.partner(p);
            if let Some((x, y)) = join {
                if p == x {
                    q = y;
                } else if p == y {
                    q = x;
                }
            }
            out[remap(p)] = remap(q) as u8;
        }
        TlDiagram::raw(n - 1, n - 1, out)
    }

    /// Mirror in a horizontal line.
    pub fn reflect(&self) -> TlDiagram {
        let (nb, nt) = (self.nb(), self.nt());
        let flip = |p: usize| if p < nb { nt + p } else { p - nb };
        let mut out = vec![0u8; nb + nt];
        for p in 0..nb + nt {
            out[flip(p)] = flip(self.partner(p)) as u8;
        }
        TlDiagram::raw(nt, nb, out)
    }

    /// `self` to the left of `other`.
    pub fn tensor(&self, other: &TlDiagram) -> TlDiagram {
        let (ab, at, bb, bt) = (self.nb(), self.nt(), other.nb(), other.nt());
        let nb = ab + bb;
        let ma = |p: usize| if p < ab { p } else { nb + (p - ab) };
        let mb = |p: usize| if p < bb { ab + p } else { nb + at + (p - bb) };
        let mut out = vec![0u8; nb + at + bt];
        for p in 0..ab + at {
            out[ma(p)] = ma(self.partner(p)) as u8;
        }
        for p in 0..bb + bt {
            out[mb(p)] = mb(other.partner(p)) as u8;
        }
        TlDiagram::raw(nb, at + bt, out)
    }

    /// Move the rightmost bottom point around the right side to become the
    /// rightmost top point.
    pub fn bend_right(&self) -> TlDiagram {
        let (nb, nt) = (self.nb(), self.nt());
        let m = |p: usize| {
            if p + 1 == nb {
                nb - 1 + nt
            } else if p < nb {
                p
            } else {
                p - 1
            }
        };
        let mut out = vec![0u8; nb + nt];
        for p in 0..nb + nt {
            out[m(p)] = m(self.partner(p)) as u8;
        }
        TlDiagram::raw(nb - 1, nt + 1, out)
    }

    /// ASCII rendering: one line per arc, listing joined points.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let label = |p: usize| {
            if p < self.nb() {
                format!("b{}", p + 1)
            } else {
                format!("t{}", p - self.nb() + 1)
            }
        };
        for p in 0..self.pairing.len() {
            let q = self.partner(p);
            if p < q {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&format!("{}-{}", label(p), label(q)));
            }
        }
        s
    }
}

/// All noncrossing diagrams with the given arities, in a fixed order.
pub fn all_diagrams(nb: usize, nt: usize) -> Vec<TlDiagram> {
    let total = nb + nt;
    if total % 2 == 1 {
        return Vec::new();
    }
    fn matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            let inner = matchings(lo + 1, j);
            let outer = matchings(j + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                    m.push((lo, j));
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    out.push(m);
                }
            }
        }
        out
    }
    let out: Vec<Vec<usize>> = matchings(0, total)
        .into_iter()
        .map(|pairs| {
            let mut m = vec![0usize; total];
            for (a, b) in pairs {
                m[a] = b;
                m[b] = a;
            }
            m
        })
        .collect();
    let point_at = |c: usize| if c < nb { c } else { nb + (nt - 1 - (c - nb)) };
    let mut ds: Vec<TlDiagram> = out
        .into_iter()
        .map(|m| {
            let mut p = vec![0u8; total];
            for c in 0..total {
                p[point_at(c)] = point_at(m[c]) as u8;
            }
            TlDiagram::raw(nb, nt, p)
        })
        .collect();
    ds.sort();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let c: Vec<usize> = (0..=7).map(|n| all_diagrams(n, n).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert!(all_diagrams(4, 4).iter().all(|d| d.is_noncrossing()));
        assert_eq!(all_diagrams(1, 3).len(), 2);
    }

    #[test]
    fn compose_counts_loops() {
        let e = TlDiagram::cupcap(2, 0);
        let c = e.compose(&e);
        assert_eq!(c.loops, 1);
        assert_eq!(c.diagram, e);
        let id = TlDiagram::identity(3);
        let e1 = TlDiagram::cupcap(3, 0);
        let e2 = TlDiagram::cupcap(3, 1);
        let x = e1.compose(&e2).diagram.compose(&e1);
        assert_eq!(x.loops, 0);
        assert_eq!(x.diagram, e1);
        assert_eq!(id.compose(&e2).diagram, e2);
    }

    #[test]
    fn closure_and_partial_trace() {
        assert_eq!(TlDiagram::identity(3).closure_loops(), 3);
        assert_eq!(TlDiagram::cupcap(2, 0).closure_loops(), 1);
        let (d, lp) = TlDiagram::identity(3).partial_trace(true);
        assert!(lp);
        assert_eq!(d, TlDiagram::identity(2));
        let (d, lp) = TlDiagram::cupcap(3, 1).partial_trace(true);
        assert!(!lp);
        assert_eq!(d, TlDiagram::identity(2));
    }

    #[test]
    fn crossing_rejected() {
        assert!(TlDiagram::new(2, 2, vec![3, 2, 1, 0]).is_err());
        assert!(TlDiagram::new(2, 2, vec![2, 3, 0, 1]).is_ok());
    }

    #[test]
    fn bend_keeps_noncrossing() {
        for d in all_diagrams(3, 3) {
            let b = d.bend_right();
            assert!(b.is_noncrossing());
            assert_eq!((b.nb(), b.nt()), (2, 4));
        }
    }
}
