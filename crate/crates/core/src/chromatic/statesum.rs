//! Subset expansion χ(Q) = Σ_{s ⊆ E} (−1)^{|s|} Q^{k(s)}.

use num_bigint::BigInt;

use crate::algebra::{IntPoly, Var};
use crate::error::{Error, Result};
use crate::planar::{MultiGraph, PlanarMap};

pub const DEFAULT_EDGE_LIMIT: usize = 24;

/// Union-find with an undo log.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            log: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two components merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.log.push(None);
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push(Some((a, b)));
        true
    }

    fn undo(&mut self) {
        if let Some((a, b)) = self.log.pop().expect("undo matches union") {
            self.parent[b] = b;
            self.size[a] -= self.size[b];
        }
    }
}

struct Walk<'a> {
    edges: &'a [(usize, usize)],
    vertices: usize,
    dsu: Dsu,
    components: usize,
    cycles: usize,
    chosen: usize,
    // counts[k] indexed by component number, split by parity of |s|
    even: Vec<i64>,
    odd: Vec<i64>,
}

impl Walk<'_> {
    fn go(&mut self, i: usize) {
        // k(s) − n(s) + |s| stays equal to V
        assert_eq!(
            self.components + self.chosen,
            self.vertices + self.cycles,
            "state-sum invariant broken"
        );
        if i == self.edges.len() {
            if self.chosen.is_multiple_of(2) {
                self.even[self.components] += 1;
            } else {
                self.odd[self.components] += 1;
            }
            return;
        }
        self.go(i + 1);
        let (a, b) = self.edges[i];
        let merged = self.dsu.union(a, b);
        if merged {
            self.components -= 1;
        } else {
            self.cycles += 1;
        }
        self.chosen += 1;
        self.go(i + 1);
        self.chosen -= 1;
        if merged {
            self.components += 1;
        } else {
            self.cycles -= 1;
        }
        self.dsu.undo();
    }
}

pub fn statesum_multigraph(g: &MultiGraph, limit: usize) -> Result<IntPoly> {
    if g.edges.len() > limit {
        return Err(Error::TooManyEdges {
            edges: g.edges.len(),
            limit,
        });
    }
    let mut w = Walk {
        edges: &g.edges,
        vertices: g.n,
        dsu: Dsu::new(g.n),
        components: g.n,
        cycles: 0,
        chosen: 0,
        even: vec![0; g.n + 1],
        odd: vec![0; g.n + 1],
    };
    w.go(0);
    let coeffs = (0..=g.n)
        .map(|k| BigInt::from(w.even[k] - w.odd[k]))
        .collect();
    Ok(IntPoly::new(Var::Q, coeffs))
}

pub fn chromatic_statesum_with_limit(m: &PlanarMap, limit: usize) -> Result<IntPoly> {
    statesum_multigraph(&m.to_multigraph(), limit)
}

pub fn chromatic_statesum(m: &PlanarMap) -> Result<IntPoly> {
    chromatic_statesum_with_limit(m, DEFAULT_EDGE_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(n: usize, e: &[(usize, usize)]) -> IntPoly {
        statesum_multigraph(
            &MultiGraph {
                n,
                edges: e.to_vec(),
            },
            DEFAULT_EDGE_LIMIT,
        )
        .unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(ss(2, &[(0, 1)]), IntPoly::from_i64(Var::Q, &[0, -1, 1]));
        assert_eq!(ss(3, &[]), IntPoly::from_i64(Var::Q, &[0, 0, 0, 1]));
        assert_eq!(
            ss(3, &[(0, 1), (1, 2), (2, 0)]),
            IntPoly::from_i64(Var::Q, &[0, 2, -3, 1])
        );
        assert!(ss(1, &[(0, 0)]).is_zero());
        let big = MultiGraph {
            n: 2,
            edges: vec![(0, 1); 25],
        };
        assert_eq!(
            statesum_multigraph(&big, 24),
            Err(Error::TooManyEdges {
                edges: 25,
                limit: 24
            })
        );
    }
}
