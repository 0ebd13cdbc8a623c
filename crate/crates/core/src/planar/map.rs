//! Combinatorial maps: darts, edge involution `alpha`, vertex rotation `sigma`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A planar map given by a rotation system. Vertices are the orbits of
/// `sigma`, edges the orbits of `alpha`, faces the orbits of `sigma ∘ alpha`.
/// Vertices without darts are counted separately in `isolated`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    isolated: usize,
}

/// Abstract multigraph: vertex count and edge list (loops and repeats allowed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

fn orbits(perm: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut id = vec![usize::MAX; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if id[s] != usize::MAX {
            continue;
        }
        let mut cyc = Vec::new();
        let mut h = s;
        while id[h] == usize::MAX {
            id[h] = out.len();
            cyc.push(h);
            h = perm[h];
        }
        out.push(cyc);
    }
    (out, id)
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl PlanarMap {
    /// Validating constructor; checks the permutations and the Euler
    /// characteristic of every component.
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>, isolated: usize) -> Result<Self> {
        let m = Self::from_parts(alpha, sigma, isolated)?;
        if !m.is_planar() {
            return Err(Error::InvalidMap("rotation system is not planar".into()));
        }
        Ok(m)
    }

    /// Checks permutations only.
    pub fn from_parts(alpha: Vec<usize>, sigma: Vec<usize>, isolated: usize) -> Result<Self> {
        if alpha.len() != sigma.len() {
            return Err(Error::InvalidMap("alpha and sigma lengths differ".into()));
        }
        if !is_permutation(&sigma) {
            return Err(Error::InvalidMap("sigma is not a permutation".into()));
        }
        if !is_permutation(&alpha)
            || alpha
                .iter()
                .enumerate()
                .any(|(h, &a)| a == h || alpha[a] != h)
        {
            return Err(Error::InvalidMap(
                "alpha is not a fixed-point-free involution".into(),
            ));
        }
        Ok(PlanarMap {
            alpha,
            sigma,
            isolated,
        })
    }

    pub(crate) fn from_parts_unchecked(
        alpha: Vec<usize>,
        sigma: Vec<usize>,
        isolated: usize,
    ) -> Self {
        debug_assert!(Self::from_parts(alpha.clone(), sigma.clone(), isolated).is_ok());
        PlanarMap {
            alpha,
            sigma,
            isolated,
        }
    }

    pub fn empty() -> Self {
        PlanarMap {
            alpha: Vec::new(),
            sigma: Vec::new(),
            isolated: 0,
        }
    }

    /// One vertex, no edges.
    pub fn single_vertex() -> Self {
        PlanarMap {
            alpha: Vec::new(),
            sigma: Vec::new(),
            isolated: 1,
        }
    }

    /// Build from per-vertex counterclockwise dart lists and an edge list of dart pairs.
    pub fn from_rotations(rotations: &[Vec<usize>], edges: &[(usize, usize)]) -> Result<Self> {
        let n = 2 * edges.len();
        let mut alpha = vec![usize::MAX; n];
        for &(a, b) in edges {
            if a >= n || b >= n || alpha[a] != usize::MAX || alpha[b] != usize::MAX {
                return Err(Error::InvalidMap("bad edge list".into()));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        let mut sigma = vec![usize::MAX; n];
        let mut isolated = 0;
        for rot in rotations {
            if rot.is_empty() {
                isolated += 1;
            }
            for (i, &h) in rot.iter().enumerate() {
                if h >= n || sigma[h] != usize::MAX {
                    return Err(Error::InvalidMap("bad rotation list".into()));
                }
                sigma[h] = rot[(i + 1) % rot.len()];
            }
        }
        Self::new(alpha, sigma, isolated)
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    pub fn num_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    /// Face successor of a dart: `sigma(alpha(h))`.
    pub fn face_next(&self, h: usize) -> usize {
        self.sigma[self.alpha[h]]
    }

    pub fn face_perm(&self) -> Vec<usize> {
        (0..self.num_darts()).map(|h| self.face_next(h)).collect()
    }

    /// Rotation cycles of the vertices carrying darts.
    pub fn vertex_cycles(&self) -> Vec<Vec<usize>> {
        orbits(&self.sigma).0
    }

    /// Vertex index of each dart (vertices with darts are numbered first).
    pub fn vertex_of(&self) -> Vec<usize> {
        orbits(&self.sigma).1
    }

    pub fn num_vertices(&self) -> usize {
        orbits(&self.sigma).0.len() + self.isolated
    }

    /// Face cycles; isolated vertices contribute no dart cycle.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        orbits(&self.face_perm()).0
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len() + self.isolated
    }

    /// Component index for every dart, and the number of dart-carrying components.
    pub fn dart_components(&self) -> (Vec<usize>, usize) {
        let n = self.num_darts();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(h) = stack.pop() {
                for g in [self.alpha[h], self.sigma[h]] {
                    if comp[g] == usize::MAX {
                        comp[g] = count;
                        stack.push(g);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn num_components(&self) -> usize {
        self.dart_components().1 + self.isolated
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// V − E + F = 2 per component.
    pub fn is_planar(&self) -> bool {
        let v = self.num_vertices() as i64;
        let e = self.num_edges() as i64;
        let f = self.num_faces() as i64;
        v - e + f == 2 * self.num_components() as i64
    }

    /// Split into connected maps (darts relabelled, isolated vertices separate).
    pub fn components(&self) -> Vec<PlanarMap> {
        let (comp, count) = self.dart_components();
        let mut out = Vec::with_capacity(count + self.isolated);
        for c in 0..count {
            let keep: Vec<bool> = comp.iter().map(|&x| x == c).collect();
            out.push(self.restrict(&keep));
        }
        for _ in 0..self.isolated {
            out.push(PlanarMap::single_vertex());
        }
        out
    }

    /// Sub-map on a sigma/alpha-closed dart subset.
    fn restrict(&self, keep: &[bool]) -> PlanarMap {
        let mut relabel = vec![usize::MAX; self.num_darts()];
        let mut next = 0;
        for h in 0..self.num_darts() {
            if keep[h] {
                relabel[h] = next;
                next += 1;
            }
        }
        let mut alpha = vec![0; next];
        let mut sigma = vec![0; next];
        for h in 0..self.num_darts() {
            if keep[h] {
                alpha[relabel[h]] = relabel[self.alpha[h]];
                sigma[relabel[h]] = relabel[self.sigma[h]];
            }
        }
        PlanarMap {
            alpha,
            sigma,
            isolated: 0,
        }
    }

    /// Dual map: same darts and alpha, rotation `sigma ∘ alpha`.
    pub fn dual(&self) -> Result<PlanarMap> {
        if !self.is_connected() {
            return Err(Error::DisconnectedMap);
        }
        if self.num_darts() == 0 {
            return Ok(self.clone());
        }
        Ok(PlanarMap {
            alpha: self.alpha.clone(),
            sigma: self.face_perm(),
            isolated: 0,
        })
    }

    /// Remove a set of darts, closing each rotation over the gaps. Vertices
    /// that lose all their darts become isolated.
    fn remove_darts(&self, sigma: &[usize], removed: &[usize]) -> PlanarMap {
        let n = self.num_darts();
        let mut gone = vec![false; n];
        for &h in removed {
            gone[h] = true;
        }
        let (cycles, _) = orbits(sigma);
        let mut new_isolated = self.isolated;
        for cyc in &cycles {
            if cyc.iter().all(|&h| gone[h]) {
                new_isolated += 1;
            }
        }
        let mut relabel = vec![usize::MAX; n];
        let mut next = 0;
        for h in 0..n {
            if !gone[h] {
                relabel[h] = next;
                next += 1;
            }
        }
        let mut alpha = vec![0; next];
        let mut sig = vec![0; next];
        for h in 0..n {
            if gone[h] {
                continue;
            }
            alpha[relabel[h]] = relabel[self.alpha[h]];
            let mut s = sigma[h];
            while gone[s] {
                s = sigma[s];
            }
            sig[relabel[h]] = relabel[s];
        }
        PlanarMap {
            alpha,
            sigma: sig,
            isolated: new_isolated,
        }
    }

    /// Delete the edge containing dart `h`.
    pub fn delete_edge(&self, h: usize) -> PlanarMap {
        self.remove_darts(&self.sigma, &[h, self.alpha[h]])
    }

    /// Contract the edge containing dart `h`; loops cannot be contracted.
    pub fn contract_edge(&self, h: usize) -> Result<PlanarMap> {
        let g = self.alpha[h];
        let vid = self.vertex_of();
        if vid[h] == vid[g] {
            return Err(Error::ContractLoop);
        }
        // swapping successors merges the two rotations
        let mut sigma = self.sigma.clone();
        sigma[h] = self.sigma[g];
        sigma[g] = self.sigma[h];
        Ok(self.remove_darts(&sigma, &[h, g]))
    }

    /// Disjoint union; darts of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &PlanarMap) -> PlanarMap {
        let off = self.num_darts();
        let mut alpha = self.alpha.clone();
        let mut sigma = self.sigma.clone();
        alpha.extend(other.alpha.iter().map(|&x| x + off));
        sigma.extend(other.sigma.iter().map(|&x| x + off));
        PlanarMap {
            alpha,
            sigma,
            isolated: self.isolated + other.isolated,
        }
    }

    /// Apply a dart relabelling `perm` (old → new).
    pub fn relabel(&self, perm: &[usize]) -> PlanarMap {
        let n = self.num_darts();
        let mut alpha = vec![0; n];
        let mut sigma = vec![0; n];
        for h in 0..n {
            alpha[perm[h]] = perm[self.alpha[h]];
            sigma[perm[h]] = perm[self.sigma[h]];
        }
        PlanarMap {
            alpha,
            sigma,
            isolated: self.isolated,
        }
    }

    /// Underlying abstract multigraph.
    pub fn to_multigraph(&self) -> MultiGraph {
        let vid = self.vertex_of();
        let nv = self.num_vertices();
        let mut edges = Vec::with_capacity(self.num_edges());
        for h in 0..self.num_darts() {
            let g = self.alpha[h];
            if h < g {
                edges.push((vid[h], vid[g]));
            }
        }
        MultiGraph { n: nv, edges }
    }

    /// Graphviz-style text: vertices and edges, rotations as comments.
    pub fn to_dot(&self) -> String {
        let vid = self.vertex_of();
        let mut s = String::from("graph G {\n");
        for (v, cyc) in self.vertex_cycles().iter().enumerate() {
            let _ = writeln!(s, "  v{v}; // rotation {cyc:?}");
        }
        let base = self.vertex_cycles().len();
        for i in 0..self.isolated {
            let _ = writeln!(s, "  v{};", base + i);
        }
        for h in 0..self.num_darts() {
            let g = self.alpha[h];
            if h < g {
                let _ = writeln!(s, "  v{} -- v{}; // darts {h},{g}", vid[h], vid[g]);
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            darts: self.num_darts(),
            alpha: self.alpha.clone(),
            sigma: self.sigma.clone(),
            boundary_bottom: Vec::new(),
            boundary_top: Vec::new(),
            isolated: self.isolated,
        }
    }
}

/// Wire format shared by closed maps and rectangle graphs.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    #[serde(default)]
    pub boundary_bottom: Vec<usize>,
    #[serde(default)]
    pub boundary_top: Vec<usize>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub isolated: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl GraphJson {
    pub fn to_map(&self) -> Result<PlanarMap> {
        if self.alpha.len() != self.darts || self.sigma.len() != self.darts {
            return Err(Error::InvalidMap(
                "dart count does not match permutations".into(),
            ));
        }
        PlanarMap::new(self.alpha.clone(), self.sigma.clone(), self.isolated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle: vertex i has darts 2i (towards i+1) and 2i+1 (towards i-1).
    pub(crate) fn triangle() -> PlanarMap {
        let rot = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        PlanarMap::from_rotations(&rot, &[(0, 3), (2, 5), (4, 1)]).unwrap()
    }

    fn theta() -> PlanarMap {
        PlanarMap::from_rotations(&[vec![0, 2, 4], vec![5, 3, 1]], &[(0, 1), (2, 3), (4, 5)])
            .unwrap()
    }

    #[test]
    fn faces_and_euler() {
        let t = triangle();
        assert_eq!(t.num_faces(), 2);
        let lp = PlanarMap::from_rotations(&[vec![0, 1]], &[(0, 1)]).unwrap();
        assert_eq!(lp.num_faces(), 2);
        assert_eq!(theta().num_faces(), 3);
        let bad =
            PlanarMap::from_rotations(&[vec![0, 2, 4], vec![1, 3, 5]], &[(0, 1), (2, 3), (4, 5)]);
        assert!(bad.is_err());
    }

    #[test]
    fn theta_dual_is_triangle() {
        let d = theta().dual().unwrap();
        assert_eq!(d.num_vertices(), 3);
        assert_eq!(d.num_edges(), 3);
        assert!(d.to_multigraph().edges.iter().all(|(a, b)| a != b));
        assert_eq!(d.dual().unwrap(), theta());
    }

    #[test]
    fn single_edge_dual_is_loop() {
        let e = PlanarMap::from_rotations(&[vec![0], vec![1]], &[(0, 1)]).unwrap();
        let d = e.dual().unwrap();
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.num_faces(), 2);
    }

    #[test]
    fn delete_and_contract_triangle() {
        let t = triangle();
        let p = t.delete_edge(0);
        assert_eq!((p.num_vertices(), p.num_edges(), p.num_faces()), (3, 2, 1));
        assert!(p.is_connected());
        let c = t.contract_edge(0).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges()), (2, 2));
        assert!(c.is_planar());
        let l = c.contract_edge(0).unwrap();
        assert_eq!((l.num_vertices(), l.num_edges(), l.num_faces()), (1, 1, 2));
        assert_eq!(l.contract_edge(0), Err(Error::ContractLoop));
    }
}
