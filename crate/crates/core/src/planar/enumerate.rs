//! Every connected planar map with a given number of edges, up to
//! orientation-preserving isomorphism.
//!
//! Maps with E edges come from maps with E−1 edges by adding a pendant edge
//! at a corner or an edge between two corners; every connected map with an
//! edge has a non-bridge edge or a leaf, so nothing is missed.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::map::PlanarMap;

/// Relabel darts in discovery order from `root` (α before σ) and list
/// (α, σ) in the new labels.
fn rooted_code(m: &PlanarMap, root: usize) -> Vec<u32> {
    let n = m.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let h = order[i];
        for next in [m.alpha()[h], m.sigma()[h]] {
            if label[next] == u32::MAX {
                label[next] = order.len() as u32;
                order.push(next);
            }
        }
        i += 1;
    }
    let mut code = Vec::with_capacity(2 * order.len());
    for &h in &order {
        code.push(label[m.alpha()[h]]);
        code.push(label[m.sigma()[h]]);
    }
    code
}

/// Canonical code of a connected map: the least rooted code.
pub fn map_code(m: &PlanarMap) -> Vec<u32> {
    let mut best = (0..m.num_darts())
        .map(|r| rooted_code(m, r))
        .min()
        .unwrap_or_default();
    best.push(m.isolated() as u32);
    best
}

/// Add a dart pair x at `a` (after dart a in its rotation) and y either
/// after `b` or, when `b` is `None`, at a new vertex.
fn insert_edge(m: &PlanarMap, a: usize, b: Option<usize>, y_first: bool) -> PlanarMap {
    let n = m.num_darts();
    let (x, y) = (n, n + 1);
    let mut alpha = m.alpha().to_vec();
    let mut sigma = m.sigma().to_vec();
    alpha.extend([y, x]);
    sigma.extend([x, y]);
    let put_after = |sigma: &mut Vec<usize>, h: usize, new: usize| {
        let nx = sigma[h];
        sigma[h] = new;
        sigma[new] = nx;
    };
    match b {
        None => put_after(&mut sigma, a, x),
        Some(b) if b == a && y_first => {
            put_after(&mut sigma, a, y);
            put_after(&mut sigma, a, x);
        }
        Some(b) => {
            put_after(&mut sigma, a, x);
            put_after(&mut sigma, b, y);
        }
    }
    PlanarMap::from_parts_unchecked(alpha, sigma, 0)
}

/// Connected planar maps indexed by edge count, `0..=max_edges`.
pub fn connected_maps(max_edges: usize) -> Vec<Vec<PlanarMap>> {
    let mut levels = vec![vec![PlanarMap::single_vertex()]];
    if max_edges == 0 {
        return levels;
    }
    let edge = PlanarMap::from_parts_unchecked(vec![1, 0], vec![0, 1], 0);
    let lp = PlanarMap::from_parts_unchecked(vec![1, 0], vec![1, 0], 0);
    levels.push(vec![edge, lp]);
    for _ in 2..=max_edges {
        let prev = levels.last().expect("nonempty");
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        let mut offer = |g: PlanarMap| {
            if g.is_planar() && seen.insert(map_code(&g)) {
                next.push(g);
            }
        };
        for m in prev {
            let n = m.num_darts();
            for a in 0..n {
                offer(insert_edge(m, a, None, false));
                for b in 0..n {
                    offer(insert_edge(m, a, Some(b), false));
                    if a == b {
                        offer(insert_edge(m, a, Some(b), true));
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// A connected planar map with `edges` edges grown by random insertions
/// (ChaCha8 seeded by `seed`); a third of the insertions are pendant edges.
pub fn random_map(edges: usize, seed: u64) -> PlanarMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if edges == 0 {
        return PlanarMap::single_vertex();
    }
    let mut m = PlanarMap::from_parts_unchecked(vec![1, 0], vec![0, 1], 0);
    while m.num_edges() < edges {
        let n = m.num_darts();
        let a = rng.gen_range(0..n);
        let g = if rng.gen_range(0..3) == 0 {
            insert_edge(&m, a, None, false)
        } else {
            let b = rng.gen_range(0..n);
            insert_edge(&m, a, Some(b), rng.gen())
        };
        if g.is_planar() {
            m = g;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_values() {
        let counts: Vec<usize> = connected_maps(5).iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 14, 57, 312]);
    }

    #[test]
    fn code_ignores_labels() {
        let m = &connected_maps(3)[3][5];
        let n = m.num_darts();
        let perm: Vec<usize> = (0..n).map(|i| (i + 3) % n).collect();
        assert_eq!(map_code(m), map_code(&m.relabel(&perm)));
    }

    #[test]
    fn random_maps_are_connected_planar() {
        for seed in 0..20 {
            let m = random_map(12, seed);
            assert_eq!(m.num_edges(), 12);
            assert!(m.is_connected() && m.is_planar());
        }
    }
}
