//! Memoized deletion-contraction on simple graphs stored as bitsets.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{IntPoly, Var};
use crate::error::{Error, Result};
use crate::planar::canon::{canonical_form, code_to_bytes, Adjacency};
use crate::planar::{MultiGraph, PlanarMap};

pub const MAX_VERTICES: usize = 128;

/// Simple graph, adjacency rows as bitsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<u128>,
}

impl SimpleGraph {
    /// Collapse parallel edges; `None` when a loop is present.
    pub fn from_multigraph(g: &MultiGraph) -> Result<Option<SimpleGraph>> {
        if g.n > MAX_VERTICES {
            return Err(Error::GraphTooLarge(g.n));
        }
        let mut adj = vec![0u128; g.n];
        for &(a, b) in &g.edges {
            if a == b {
                return Ok(None);
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Some(SimpleGraph { adj }))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn num_edges(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut row = 0u128;
                let mut bits = self.adj[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if pos[u] != usize::MAX {
                        row |= 1 << pos[u];
                    }
                }
                row
            })
            .collect();
        SimpleGraph { adj }
    }

    fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Merge `v` into `u` and drop `v`.
    fn contract(&self, u: usize, v: usize) -> SimpleGraph {
        let mut g = self.clone();
        let merged = (g.adj[u] | g.adj[v]) & !(1 << u) & !(1 << v);
        g.adj[u] = merged;
        let mut bits = merged;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            g.adj[w] |= 1 << u;
        }
        let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
        g.induced(&keep)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = 0u128;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u128 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u128;
                let mut bits = frontier;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits_to_vec(comp));
        }
        out
    }

    /// Biconnected blocks of a connected graph (vertex lists), via Tarjan.
    fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        // iterative DFS: (vertex, parent, remaining neighbours)
        let mut stack: Vec<(usize, usize, u128)> = Vec::new();
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        stack.push((0, usize::MAX, self.adj[0]));
        while let Some(top) = stack.last_mut() {
            let (v, parent, rest) = *top;
            if rest != 0 {
                let u = rest.trailing_zeros() as usize;
                top.2 &= rest - 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, v, self.adj[u]));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut verts = 0u128;
                        while let Some((a, b)) = edge_stack.pop() {
                            verts |= 1 << a | 1 << b;
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        out.push(bits_to_vec(verts));
                    }
                }
            }
        }
        out
    }

    fn to_adjacency(&self) -> Adjacency {
        self.adj
            .iter()
            .map(|&r| bits_to_vec(r).into_iter().map(|u| (u, 1)).collect())
            .collect()
    }

    fn key(&self) -> Vec<u8> {
        code_to_bytes(&canonical_form(&self.to_adjacency()).0)
    }
}

fn bits_to_vec(mut bits: u128) -> Vec<usize> {
    let mut v = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        v.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    v
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct ChromStats {
    pub recursion_nodes: u64,
    pub cache_hits: u64,
    pub wall_time_us: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChromResult {
    pub poly: IntPoly,
    pub stats: ChromStats,
}

/// Thread-safe memo table keyed by canonical form.
#[derive(Default)]
pub struct ChromCache {
    table: RwLock<HashMap<Vec<u8>, IntPoly>>,
}

impl ChromCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &[u8]) -> Option<IntPoly> {
        self.table.read().unwrap().get(key).cloned()
    }

    pub fn insert(&self, key: Vec<u8>, p: IntPoly) {
        self.table.write().unwrap().insert(key, p);
    }

    /// Sorted snapshot, for persistence.
    pub fn entries(&self) -> Vec<(Vec<u8>, IntPoly)> {
        let mut v: Vec<_> = self
            .table
            .read()
            .unwrap()
            .iter()
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect();
        v.sort();
        v
    }
}

/// Process-wide cache used by the convenience entry points.
pub fn global_cache() -> Arc<ChromCache> {
    static CACHE: OnceLock<Arc<ChromCache>> = OnceLock::new();
    CACHE.get_or_init(|| Arc::new(ChromCache::new())).clone()
}

/// Graphs this small are not worth a canonical form.
const MEMO_MIN_VERTICES: usize = 5;

struct Run<'a> {
    cache: &'a ChromCache,
    nodes: AtomicU64,
    hits: AtomicU64,
}

fn q_pow(k: usize) -> IntPoly {
    IntPoly::monomial(Var::Q, BigInt::one(), k)
}

fn q_minus(c: i64) -> IntPoly {
    IntPoly::from_i64(Var::Q, &[-c, 1])
}

impl Run<'_> {
    fn chi(&self, g: &SimpleGraph) -> IntPoly {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        let n = g.n();
        if n == 0 {
            return IntPoly::one(Var::Q);
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = IntPoly::one(Var::Q);
            for c in comps {
                acc = &acc * &self.chi_connected(&g.induced(&c));
            }
            return acc;
        }
        self.chi_connected(g)
    }

    fn chi_connected(&self, g: &SimpleGraph) -> IntPoly {
        let mut g = g.clone();
        // peel leaves: each contributes (Q − 1)
        let mut leaves = 0;
        while g.n() > 1 {
            match (0..g.n()).find(|&v| g.degree(v) == 1) {
                Some(v) => {
                    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
                    g = g.induced(&keep);
                    leaves += 1;
                }
                None => break,
            }
        }
        let mut factor = IntPoly::one(Var::Q);
        for _ in 0..leaves {
            factor = &factor * &q_minus(1);
        }
        &factor * &self.chi_leafless(&g)
    }

    fn chi_leafless(&self, g: &SimpleGraph) -> IntPoly {
        let n = g.n();
        let m = g.num_edges();
        if n == 1 {
            return q_pow(1);
        }
        if m == n * (n - 1) / 2 {
            let mut acc = IntPoly::one(Var::Q);
            for i in 0..n {
                acc = &acc * &q_minus(i as i64);
            }
            return acc;
        }
        if m == n && (0..n).all(|v| g.degree(v) == 2) {
            // cycle: (Q−1)^n + (−1)^n (Q−1)
            let mut p = IntPoly::one(Var::Q);
            for _ in 0..n {
                p = &p * &q_minus(1);
            }
            let t = if n.is_multiple_of(2) {
                q_minus(1)
            } else {
                -q_minus(1)
            };
            return &p + &t;
        }
        let blocks = g.blocks();
        if blocks.len() > 1 {
            let mut acc = IntPoly::one(Var::Q);
            for b in &blocks {
                acc = &acc * &self.chi_leafless(&g.induced(b));
            }
            let qb = q_pow(blocks.len() - 1);
            return acc
                .div_exact(&qb)
                .expect("block product divisible by Q^(b-1)");
        }
        let key = if n >= MEMO_MIN_VERTICES {
            Some(g.key())
        } else {
            None
        };
        if let Some(k) = &key {
            if let Some(p) = self.cache.get(k) {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return p;
            }
        }
        let (u, v) = pick_edge(g);
        let del = self.chi(&g.without_edge(u, v));
        let con = self.chi(&g.contract(u, v));
        let p = &del - &con;
        if let Some(k) = key {
            self.cache.insert(k, p.clone());
        }
        p
    }
}

/// Edge maximizing deg(u) + deg(v); ties go to the smallest (u, v).
fn pick_edge(g: &SimpleGraph) -> (usize, usize) {
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..g.n() {
        for v in bits_to_vec(g.adj[u]) {
            if v <= u {
                continue;
            }
            let s = g.degree(u) + g.degree(v);
            if best.is_none_or(|(bs, _, _)| s > bs) {
                best = Some((s, u, v));
            }
        }
    }
    let (_, u, v) = best.expect("graph has an edge");
    (u, v)
}

/// Chromatic polynomial of an abstract multigraph.
pub fn chromatic_multigraph(g: &MultiGraph, cache: &ChromCache) -> Result<ChromResult> {
    let start = Instant::now();
    let run = Run {
        cache,
        nodes: AtomicU64::new(0),
        hits: AtomicU64::new(0),
    };
    let poly = match SimpleGraph::from_multigraph(g)? {
        None => IntPoly::zero(Var::Q),
        Some(s) => run.chi(&s),
    };
    let stats = ChromStats {
        recursion_nodes: run.nodes.load(Ordering::Relaxed),
        cache_hits: run.hits.load(Ordering::Relaxed),
        wall_time_us: start.elapsed().as_micros() as u64,
    };
    Ok(ChromResult { poly, stats })
}

pub fn chromatic_dc_with(m: &PlanarMap, cache: &ChromCache) -> Result<ChromResult> {
    chromatic_multigraph(&m.to_multigraph(), cache)
}

/// Deletion-contraction with the process-wide cache.
pub fn chromatic_dc(m: &PlanarMap) -> Result<ChromResult> {
    chromatic_dc_with(m, &global_cache())
}

/// Plain polynomial using the process-wide cache.
pub fn chromatic_poly(m: &PlanarMap) -> Result<IntPoly> {
    Ok(chromatic_dc(m)?.poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mg(n: usize, e: &[(usize, usize)]) -> MultiGraph {
        MultiGraph {
            n,
            edges: e.to_vec(),
        }
    }

    fn chi(n: usize, e: &[(usize, usize)]) -> IntPoly {
        chromatic_multigraph(&mg(n, e), &ChromCache::new())
            .unwrap()
            .poly
    }

    #[test]
    fn base_cases() {
        assert_eq!(chi(1, &[]), IntPoly::from_i64(Var::Q, &[0, 1]));
        assert_eq!(
            chi(3, &[(0, 1), (1, 2), (2, 0)]),
            IntPoly::from_i64(Var::Q, &[0, 2, -3, 1])
        );
        assert!(chi(1, &[(0, 0)]).is_zero());
        assert_eq!(
            chi(2, &[(0, 1), (0, 1)]),
            IntPoly::from_i64(Var::Q, &[0, -1, 1])
        );
    }

    #[test]
    fn octahedron_polynomial() {
        // K_{2,2,2}
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    e.push((i, j));
                }
            }
        }
        assert_eq!(
            chi(6, &e),
            IntPoly::from_i64(Var::Q, &[0, -64, 154, -137, 58, -12, 1])
        );
    }

    #[test]
    fn blocks_multiply() {
        // two triangles sharing vertex 0, plus a 4-cycle hanging off vertex 2
        let e = [
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 4),
            (4, 0),
            (2, 5),
            (5, 6),
            (6, 7),
            (7, 2),
        ];
        let tri = IntPoly::from_i64(Var::Q, &[0, 2, -3, 1]);
        let c4 = chi(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let expect = (&(&tri * &tri) * &c4).div_exact(&q_pow(2)).unwrap();
        assert_eq!(chi(8, &e), expect);
    }
}
