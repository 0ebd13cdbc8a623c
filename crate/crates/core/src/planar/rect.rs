//! Graphs in a rectangle with ordered bottom and top endpoints.
//!
//! Endpoints are 1-valent vertices; `bottom[i]` / `top[i]` is the dart
//! sitting at the i-th endpoint from the left. Rotations are
//! counterclockwise in the plane of the rectangle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::map::{GraphJson, PlanarMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectGraph {
    map: PlanarMap,
    bottom: Vec<usize>,
    top: Vec<usize>,
}

impl RectGraph {
    /// Validating constructor: endpoints are distinct 1-valent darts and the
    /// graph with all endpoints coned off outside the rectangle is planar.
    pub fn new(map: PlanarMap, bottom: Vec<usize>, top: Vec<usize>) -> Result<Self> {
        let g = RectGraph { map, bottom, top };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(
        map: PlanarMap,
        bottom: Vec<usize>,
        top: Vec<usize>,
    ) -> Self {
        let g = RectGraph { map, bottom, top };
        debug_assert!(g.validate().is_ok(), "invalid rectangle graph");
        g
    }

    fn validate(&self) -> Result<()> {
        let n = self.map.num_darts();
        let mut seen = vec![false; n];
        for &h in self.bottom.iter().chain(&self.top) {
            if h >= n || seen[h] {
                return Err(Error::InvalidMap(
                    "boundary darts must be distinct darts".into(),
                ));
            }
            seen[h] = true;
            if self.map.sigma()[h] != h {
                return Err(Error::InvalidMap(
                    "boundary dart must sit at a 1-valent vertex".into(),
                ));
            }
        }
        if !self.cone().is_planar() {
            return Err(Error::InvalidMap(
                "boundary order is inconsistent with the embedding".into(),
            ));
        }
        Ok(())
    }

    /// Add a vertex outside the rectangle joined to every endpoint.
    fn cone(&self) -> PlanarMap {
        let n = self.map.num_darts();
        let k = self.bottom.len() + self.top.len();
        if k == 0 {
            return self.map.clone();
        }
        let mut alpha = self.map.alpha().to_vec();
        let mut sigma = self.map.sigma().to_vec();
        alpha.resize(n + 2 * k, 0);
        sigma.resize(n + 2 * k, 0);
        // outer rotation: top left→right, then bottom right→left
        let order: Vec<usize> = self
            .top
            .iter()
            .copied()
            .chain(self.bottom.iter().rev().copied())
            .collect();
        for (i, &h) in order.iter().enumerate() {
            let at_end = n + 2 * i;
            let at_outer = at_end + 1;
            alpha[at_end] = at_outer;
            alpha[at_outer] = at_end;
            sigma[h] = at_end;
            sigma[at_end] = h;
            sigma[at_outer] = n + 2 * ((i + 1) % k) + 1;
        }
        PlanarMap::from_parts_unchecked(alpha, sigma, self.map.isolated())
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.bottom.len(), self.top.len())
    }

    /// Nothing at all: the unit of the tensor product on zero points.
    pub fn empty() -> Self {
        RectGraph {
            map: PlanarMap::empty(),
            bottom: Vec::new(),
            top: Vec::new(),
        }
    }

    /// A vertical edge from bottom to top.
    pub fn strand() -> Self {
        let map = PlanarMap::from_parts_unchecked(vec![1, 0], vec![0, 1], 0);
        RectGraph {
            map,
            bottom: vec![0],
            top: vec![1],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut g = Self::empty();
        for _ in 0..k {
            g = g.tensor(&Self::strand());
        }
        g
    }

    /// Arc joining the two top endpoints.
    pub fn cup() -> Self {
        let map = PlanarMap::from_parts_unchecked(vec![1, 0], vec![0, 1], 0);
        RectGraph {
            map,
            bottom: Vec::new(),
            top: vec![0, 1],
        }
    }

    /// Arc joining the two bottom endpoints.
    pub fn cap() -> Self {
        let map = PlanarMap::from_parts_unchecked(vec![1, 0], vec![0, 1], 0);
        RectGraph {
            map,
            bottom: vec![0, 1],
            top: Vec::new(),
        }
    }

    /// One interior vertex joined to `k` bottom and `m` top endpoints.
    pub fn vertex(k: usize, m: usize) -> Self {
        let deg = k + m;
        if deg == 0 {
            return RectGraph {
                map: PlanarMap::single_vertex(),
                bottom: Vec::new(),
                top: Vec::new(),
            };
        }
        // darts: centre side 2i, endpoint side 2i+1; i runs over top right→left, then bottom left→right
        let mut alpha = vec![0; 2 * deg];
        let mut sigma = vec![0; 2 * deg];
        for i in 0..deg {
            alpha[2 * i] = 2 * i + 1;
            alpha[2 * i + 1] = 2 * i;
            sigma[2 * i] = 2 * ((i + 1) % deg);
            sigma[2 * i + 1] = 2 * i + 1;
        }
        let top = (0..m).map(|j| 2 * (m - 1 - j) + 1).collect();
        let bottom = (0..k).map(|j| 2 * (m + j) + 1).collect();
        RectGraph::from_parts_unchecked(
            PlanarMap::from_parts_unchecked(alpha, sigma, 0),
            bottom,
            top,
        )
    }

    /// A closed loop carrying one 2-valent vertex.
    pub fn circle() -> Self {
        let map = PlanarMap::from_parts_unchecked(vec![1, 0], vec![1, 0], 0);
        RectGraph {
            map,
            bottom: Vec::new(),
            top: Vec::new(),
        }
    }

    /// A closed map viewed as a graph with no endpoints.
    pub fn closed(map: PlanarMap) -> Self {
        RectGraph {
            map,
            bottom: Vec::new(),
            top: Vec::new(),
        }
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, other: &RectGraph) -> RectGraph {
        let off = self.map.num_darts();
        let map = self.map.disjoint_union(&other.map);
        let bottom = self
            .bottom
            .iter()
            .copied()
            .chain(other.bottom.iter().map(|&h| h + off))
            .collect();
        let top = self
            .top
            .iter()
            .copied()
            .chain(other.top.iter().map(|&h| h + off))
            .collect();
        RectGraph { map, bottom, top }
    }

    /// `self` stacked on top of `below`; matched endpoints become 2-valent vertices.
    pub fn glue(&self, below: &RectGraph) -> Result<RectGraph> {
        if self.bottom.len() != below.top.len() {
            return Err(Error::ArityMismatch {
                expected: below.top.len(),
                found: self.bottom.len(),
            });
        }
        let off = self.map.num_darts();
        let u = self.map.disjoint_union(&below.map);
        let mut sigma = u.sigma().to_vec();
        for (&x, &y) in self.bottom.iter().zip(&below.top) {
            let y = y + off;
            sigma[x] = y;
            sigma[y] = x;
        }
        let map = PlanarMap::from_parts_unchecked(u.alpha().to_vec(), sigma, u.isolated());
        let bottom = below.bottom.iter().map(|&h| h + off).collect();
        Ok(RectGraph {
            map,
            bottom,
            top: self.top.clone(),
        })
    }

    /// Close by joining bottom i to top i around the right side.
    pub fn closure(&self) -> Result<PlanarMap> {
        if self.bottom.len() != self.top.len() {
            return Err(Error::BoundaryMismatch {
                bottom: self.bottom.len(),
                top: self.top.len(),
            });
        }
        let n = self.map.num_darts();
        let k = self.bottom.len();
        let mut alpha = self.map.alpha().to_vec();
        let mut sigma = self.map.sigma().to_vec();
        alpha.resize(n + 2 * k, 0);
        sigma.resize(n + 2 * k, 0);
        for i in 0..k {
            let (b, t) = (self.bottom[i], self.top[i]);
            let (x, y) = (n + 2 * i, n + 2 * i + 1);
            alpha[x] = y;
            alpha[y] = x;
            sigma[b] = x;
            sigma[x] = b;
            sigma[t] = y;
            sigma[y] = t;
        }
        Ok(PlanarMap::from_parts_unchecked(
            alpha,
            sigma,
            self.map.isolated(),
        ))
    }

    /// Mirror image in a horizontal line (bottom and top exchanged).
    pub fn reflect(&self) -> RectGraph {
        let n = self.map.num_darts();
        let inv = {
            let mut inv = vec![0; n];
            for (h, &s) in self.map.sigma().iter().enumerate() {
                inv[s] = h;
            }
            inv
        };
        let map =
            PlanarMap::from_parts_unchecked(self.map.alpha().to_vec(), inv, self.map.isolated());
        RectGraph {
            map,
            bottom: self.top.clone(),
            top: self.bottom.clone(),
        }
    }

    /// Replace every 2-valent vertex by a plain edge, except where the two
    /// darts already form a single loop.
    pub fn smooth(&self) -> RectGraph {
        let n = self.map.num_darts();
        let mut alpha = self.map.alpha().to_vec();
        let sigma = self.map.sigma();
        let mut gone = vec![false; n];
        for x in 0..n {
            let y = sigma[x];
            if gone[x] || y == x || sigma[y] != x || x > y {
                continue;
            }
            if alpha[x] == y {
                continue;
            }
            let (a, b) = (alpha[x], alpha[y]);
            alpha[a] = b;
            alpha[b] = a;
            gone[x] = true;
            gone[y] = true;
            // the pair may now be a bare loop at another 2-valent vertex; handled on its own turn
        }
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for h in 0..n {
            if !gone[h] {
                relabel[h] = next;
                next += 1;
            }
        }
        let mut na = vec![0; next];
        let mut ns = vec![0; next];
        for h in 0..n {
            if !gone[h] {
                na[relabel[h]] = relabel[alpha[h]];
                ns[relabel[h]] = relabel[sigma[h]];
            }
        }
        let map = PlanarMap::from_parts_unchecked(na, ns, self.map.isolated());
        RectGraph {
            map,
            bottom: self.bottom.iter().map(|&h| relabel[h]).collect(),
            top: self.top.iter().map(|&h| relabel[h]).collect(),
        }
    }

    /// Key equal exactly for isotopic graphs (boundary order respected, closed
    /// components compared up to isomorphism of rotation systems, 2-valent
    /// vertices ignored).
    pub fn embedding_key(&self) -> Vec<u32> {
        let g = self.smooth();
        let m = &g.map;
        let n = m.num_darts();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &h in g.bottom.iter().chain(&g.top) {
            label[h] = order.len() as u32;
            order.push(h);
            queue.push_back(h);
        }
        bfs(m, &mut label, &mut order, &mut queue);
        let mut key = vec![
            g.bottom.len() as u32,
            g.top.len() as u32,
            order.len() as u32,
        ];
        for &h in &order {
            key.push(label[m.alpha()[h]]);
            key.push(label[m.sigma()[h]]);
        }
        // closed components
        let mut floating: Vec<Vec<u32>> = Vec::new();
        let mut done = label.iter().map(|&l| l != u32::MAX).collect::<Vec<_>>();
        for s in 0..n {
            if done[s] {
                continue;
            }
            let comp = component_darts(m, s);
            for &h in &comp {
                done[h] = true;
            }
            let best = comp
                .iter()
                .map(|&start| rooted_code(m, start))
                .min()
                .expect("nonempty");
            floating.push(best);
        }
        floating.sort();
        key.push(floating.len() as u32);
        for f in floating {
            key.push(f.len() as u32);
            key.extend(f);
        }
        key.push(m.isolated() as u32);
        key
    }

    pub fn to_json(&self) -> GraphJson {
        let mut j = self.map.to_json();
        j.boundary_bottom = self.bottom.clone();
        j.boundary_top = self.top.clone();
        j
    }

    pub fn from_json(j: &GraphJson) -> Result<RectGraph> {
        if j.alpha.len() != j.darts || j.sigma.len() != j.darts {
            return Err(Error::InvalidMap(
                "dart count does not match permutations".into(),
            ));
        }
        let map = PlanarMap::from_parts(j.alpha.clone(), j.sigma.clone(), j.isolated)?;
        RectGraph::new(map, j.boundary_bottom.clone(), j.boundary_top.clone())
    }
}

fn bfs(m: &PlanarMap, label: &mut [u32], order: &mut Vec<usize>, queue: &mut VecDeque<usize>) {
    while let Some(h) = queue.pop_front() {
        for g in [m.alpha()[h], m.sigma()[h]] {
            if label[g] == u32::MAX {
                label[g] = order.len() as u32;
                order.push(g);
                queue.push_back(g);
            }
        }
    }
}

fn component_darts(m: &PlanarMap, s: usize) -> Vec<usize> {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![s];
    seen.insert(s);
    while let Some(h) = stack.pop() {
        for g in [m.alpha()[h], m.sigma()[h]] {
            if seen.insert(g) {
                stack.push(g);
            }
        }
    }
    let mut v: Vec<usize> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

/// BFS code of the component containing `start`, rooted there.
fn rooted_code(m: &PlanarMap, start: usize) -> Vec<u32> {
    let n = m.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = vec![start];
    label[start] = 0;
    let mut queue = VecDeque::from([start]);
    bfs(m, &mut label, &mut order, &mut queue);
    let mut code = Vec::with_capacity(2 * order.len());
    for &h in &order {
        code.push(label[m.alpha()[h]]);
        code.push(label[m.sigma()[h]]);
    }
    code
}

/// Serde helper so rectangle graphs can be embedded in larger documents.
#[derive(Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectGraphJson(pub GraphJson);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_pieces_are_valid() {
        for (k, m) in [(1, 2), (2, 1), (2, 2), (0, 3), (3, 0), (1, 1)] {
            let v = RectGraph::vertex(k, m);
            assert!(v.validate().is_ok(), "{k} {m}");
        }
        // swapping the top endpoints of a Y contradicts its rotation
        let v = RectGraph::vertex(1, 2);
        let bad = RectGraph::new(v.map.clone(), v.bottom.clone(), vec![v.top[1], v.top[0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn closures() {
        let c = RectGraph::strand().closure().unwrap();
        assert_eq!(c.num_components(), 1);
        assert_eq!(c.num_edges(), 2);
        assert_eq!(
            RectGraph::identity(2).closure().unwrap().num_components(),
            2
        );
        let turnback = RectGraph::cup().glue(&RectGraph::cap()).unwrap();
        assert_eq!(turnback.arity(), (2, 2));
        assert_eq!(turnback.closure().unwrap().num_components(), 1);
        let cc = RectGraph::cap().glue(&RectGraph::strand()).unwrap_err();
        assert!(matches!(cc, Error::ArityMismatch { .. }));
        let lp = RectGraph::cap().glue(&RectGraph::cup()).unwrap();
        assert_eq!(lp.arity(), (0, 0));
        assert_eq!(lp.map().num_components(), 1);
        assert!(RectGraph::vertex(1, 2).closure().is_err());
    }

    #[test]
    fn glue_identity_smooths_back() {
        let y = RectGraph::vertex(1, 2);
        let g = RectGraph::identity(2)
            .glue(&y)
            .unwrap()
            .glue(&RectGraph::strand())
            .unwrap();
        assert_eq!(g.embedding_key(), y.embedding_key());
        let h = RectGraph::vertex(2, 2);
        assert_ne!(g.embedding_key(), h.embedding_key());
    }

    #[test]
    fn reflection_is_valid() {
        let y = RectGraph::vertex(1, 2).reflect();
        assert!(y.validate().is_ok());
        assert_eq!(y.embedding_key(), RectGraph::vertex(2, 1).embedding_key());
    }
}
