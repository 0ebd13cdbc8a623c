//! Sphere triangulations: random generation, a named catalog and
//! exhaustive enumeration through the flip graph.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canon::canonical_key;
use super::map::PlanarMap;
use crate::error::{Error, Result};

/// A triangulation as a list of counterclockwise triangles on vertices 0..n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    n: usize,
    faces: Vec<[usize; 3]>,
    map: PlanarMap,
}

impl Triangulation {
    /// Build from consistently oriented faces and check the invariants.
    pub fn from_faces(n: usize, faces: Vec<[usize; 3]>) -> Result<Self> {
        let map = faces_to_map(n, &faces)?;
        let t = Triangulation { n, faces, map };
        t.check()?;
        Ok(t)
    }

    /// Orient an unoriented face list by propagation, then build.
    pub fn from_unoriented(n: usize, faces: &[[usize; 3]]) -> Result<Self> {
        Self::from_faces(n, orient(faces)?)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    fn check(&self) -> Result<()> {
        let m = &self.map;
        if !m.is_connected() || !m.is_planar() {
            return Err(Error::InvalidMap(
                "triangulation must be a connected sphere map".into(),
            ));
        }
        if m.faces().iter().any(|f| f.len() != 3) {
            return Err(Error::InvalidMap("every face must be a triangle".into()));
        }
        if m.to_multigraph().edges.iter().any(|(a, b)| a == b) {
            return Err(Error::InvalidMap("triangulation has a loop".into()));
        }
        Ok(())
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for f in &self.faces {
            for &v in f {
                d[v] += 1;
            }
        }
        d
    }

    fn edge_set(&self) -> HashSet<(usize, usize)> {
        let mut s = HashSet::new();
        for f in &self.faces {
            for i in 0..3 {
                let (a, b) = (f[i], f[(i + 1) % 3]);
                s.insert((a.min(b), a.max(b)));
            }
        }
        s
    }

    /// Put a new vertex inside face `fi`.
    fn insert_vertex(&mut self, fi: usize) {
        let [u, v, w] = self.faces[fi];
        let x = self.n;
        self.n += 1;
        self.faces[fi] = [u, v, x];
        self.faces.push([v, w, x]);
        self.faces.push([w, u, x]);
    }

    /// All flippable interior edges as (face, face, u, v, w, x).
    fn flips(&self) -> Vec<(usize, usize, usize, usize, usize, usize)> {
        let mut owner: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            for i in 0..3 {
                owner.insert((f[i], f[(i + 1) % 3]), (fi, f[(i + 2) % 3]));
            }
        }
        let deg = self.degrees();
        let edges = self.edge_set();
        let mut out = Vec::new();
        for (&(u, v), &(f1, w)) in &owner {
            if u > v {
                continue;
            }
            let (f2, x) = owner[&(v, u)];
            if w == x || edges.contains(&(w.min(x), w.max(x))) || deg[u] <= 3 || deg[v] <= 3 {
                continue;
            }
            out.push((f1, f2, u, v, w, x));
        }
        out.sort_unstable();
        out
    }

    fn apply_flip(&mut self, (f1, f2, u, v, w, x): (usize, usize, usize, usize, usize, usize)) {
        self.faces[f1] = [u, x, w];
        self.faces[f2] = [x, v, w];
    }

    fn rebuild(mut self) -> Self {
        self.map = faces_to_map(self.n, &self.faces).expect("flips keep a valid triangulation");
        self
    }
}

/// Darts are directed edges u→v; rotation at u follows each triangle (u,v,w): u→v ↦ u→w.
fn faces_to_map(n: usize, faces: &[[usize; 3]]) -> Result<PlanarMap> {
    let mut id: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        for i in 0..3 {
            let e = (f[i], f[(i + 1) % 3]);
            if e.0 >= n || e.1 >= n {
                return Err(Error::InvalidMap("face uses an unknown vertex".into()));
            }
            let k = id.len();
            if id.insert(e, k).is_some() {
                return Err(Error::InvalidMap(
                    "directed edge used twice; faces not consistently oriented".into(),
                ));
            }
        }
    }
    let mut alpha = vec![0; id.len()];
    let mut sigma = vec![usize::MAX; id.len()];
    for (&(a, b), &h) in &id {
        alpha[h] = *id
            .get(&(b, a))
            .ok_or_else(|| Error::InvalidMap("surface has a boundary".into()))?;
    }
    for f in faces {
        for i in 0..3 {
            let (u, v, w) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
            sigma[id[&(u, v)]] = id[&(u, w)];
        }
    }
    let used: HashSet<usize> = faces.iter().flatten().copied().collect();
    PlanarMap::new(alpha, sigma, n - used.len())
}

/// Orient faces coherently by breadth-first propagation across shared edges.
fn orient(faces: &[[usize; 3]]) -> Result<Vec<[usize; 3]>> {
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..3 {
            let (a, b) = (f[i], f[(i + 1) % 3]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    let mut out: Vec<Option<[usize; 3]>> = vec![None; faces.len()];
    let has = |f: &[usize; 3], a: usize, b: usize| (0..3).any(|i| f[i] == a && f[(i + 1) % 3] == b);
    for s in 0..faces.len() {
        if out[s].is_some() {
            continue;
        }
        out[s] = Some(faces[s]);
        let mut queue = VecDeque::from([s]);
        while let Some(fi) = queue.pop_front() {
            let f = out[fi].unwrap();
            for i in 0..3 {
                let (a, b) = (f[i], f[(i + 1) % 3]);
                for &g in &by_edge[&(a.min(b), a.max(b))] {
                    if g == fi {
                        continue;
                    }
                    let mut cand = faces[g];
                    if has(&cand, a, b) {
                        cand.swap(0, 1);
                    }
                    match out[g] {
                        None => {
                            out[g] = Some(cand);
                            queue.push_back(g);
                        }
                        Some(existing) if has(&existing, a, b) => {
                            return Err(Error::InvalidMap("surface is not orientable".into()));
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(|f| f.unwrap()).collect())
}

pub fn tetrahedron() -> Triangulation {
    Triangulation::from_faces(4, vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]).expect("valid")
}

/// Ring of `r` vertices with two apexes.
pub fn bipyramid(r: usize) -> Triangulation {
    let (north, south) = (r, r + 1);
    let mut faces = Vec::new();
    for i in 0..r {
        let j = (i + 1) % r;
        faces.push([i, j, north]);
        faces.push([j, i, south]);
    }
    Triangulation::from_faces(r + 2, faces).expect("valid")
}

pub fn octahedron() -> Triangulation {
    bipyramid(4)
}

pub fn icosahedron() -> Triangulation {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push([0, u(i), u(i + 1)]);
        faces.push([u(i), l(i), u(i + 1)]);
        faces.push([u(i + 1), l(i), l(i + 1)]);
        faces.push([11, l(i + 1), l(i)]);
    }
    Triangulation::from_unoriented(12, &faces).expect("valid")
}

/// Named triangulations with known chromatic data.
pub fn catalog() -> Vec<(String, Triangulation)> {
    let mut v = vec![
        ("tetrahedron".to_string(), tetrahedron()),
        ("octahedron".to_string(), octahedron()),
        ("icosahedron".to_string(), icosahedron()),
    ];
    for r in [3, 5, 6, 7] {
        v.push((format!("bipyramid-{r}"), bipyramid(r)));
    }
    v
}

/// `count` random triangulations with `k` vertices: repeated vertex
/// insertion into a uniform face starting from the tetrahedron, then
/// random diagonal flips.
pub fn generate_triangulations(k: usize, count: usize, seed: u64) -> Result<Vec<Triangulation>> {
    if k < 4 {
        return Err(Error::InvalidSize(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut t = tetrahedron();
        while t.n < k {
            let fi = rng.gen_range(0..t.faces.len());
            t.insert_vertex(fi);
        }
        for _ in 0..4 * k {
            let options = t.flips();
            if options.is_empty() {
                break;
            }
            let pick = options[rng.gen_range(0..options.len())];
            t.apply_flip(pick);
        }
        out.push(t.rebuild());
    }
    Ok(out)
}

/// Every triangulation with `k` vertices up to isomorphism, found by
/// breadth-first search of the flip graph.
pub fn all_triangulations(k: usize) -> Result<Vec<Triangulation>> {
    let start = generate_triangulations(k, 1, 0)?.pop().expect("one");
    let mut seen = HashSet::new();
    seen.insert(canonical_key(start.map()));
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for f in t.flips() {
            let mut next = t.clone();
            next.apply_flip(f);
            let next = next.rebuild();
            if seen.insert(canonical_key(next.map())) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid() {
        for (name, t) in catalog() {
            let m = t.map();
            assert_eq!(m.num_faces(), 2 * t.num_vertices() - 4, "{name}");
        }
        assert_eq!(icosahedron().map().num_edges(), 30);
    }

    #[test]
    fn generator_properties() {
        let t = generate_triangulations(4, 1, 7).unwrap();
        assert_eq!(
            canonical_key(t[0].map()),
            canonical_key(tetrahedron().map())
        );
        for t in generate_triangulations(8, 20, 3).unwrap() {
            assert_eq!(t.map().num_faces(), 12);
            assert!(t.check().is_ok());
        }
        assert_eq!(generate_triangulations(3, 1, 0), Err(Error::InvalidSize(3)));
    }

    #[test]
    fn exhaustive_counts() {
        let counts: Vec<usize> = (4..=8)
            .map(|k| all_triangulations(k).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }
}
