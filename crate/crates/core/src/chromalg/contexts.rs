//! Test contexts for trace-radical checks.
//!
//! A context is a word in four trivalent pieces placed on a row of lines:
//! split (1→2), merge (2→1), cup (0→2) and cap (2→0). Short words are
//! enumerated exhaustively, longer ones sampled with a seeded RNG.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::planar::RectGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece {
    Split,
    Merge,
    Cup,
    Cap,
}

impl Piece {
    const ALL: [Piece; 4] = [Piece::Split, Piece::Merge, Piece::Cup, Piece::Cap];

    fn graph(self) -> RectGraph {
        match self {
            Piece::Split => RectGraph::vertex(1, 2),
            Piece::Merge => RectGraph::vertex(2, 1),
            Piece::Cup => RectGraph::cup(),
            Piece::Cap => RectGraph::cap(),
        }
    }

    fn consumes(self) -> usize {
        match self {
            Piece::Split => 1,
            Piece::Merge | Piece::Cap => 2,
            Piece::Cup => 0,
        }
    }

    fn produces(self) -> usize {
        match self {
            Piece::Merge => 1,
            Piece::Split | Piece::Cup => 2,
            Piece::Cap => 0,
        }
    }
}

/// Stack one piece at line `pos` on top of `g`.
fn apply(g: &RectGraph, piece: Piece, pos: usize) -> RectGraph {
    let w = g.arity().1;
    let rest = w - pos - piece.consumes();
    let layer = RectGraph::identity(pos)
        .tensor(&piece.graph())
        .tensor(&RectGraph::identity(rest));
    layer.glue(g).expect("layer arity matches")
}

fn moves(w: usize, max_width: usize) -> Vec<(Piece, usize)> {
    let mut out = Vec::new();
    for p in Piece::ALL {
        if p.consumes() > w || w - p.consumes() + p.produces() > max_width {
            continue;
        }
        for pos in 0..=w - p.consumes() {
            out.push((p, pos));
        }
    }
    out
}

struct Collector {
    seen: HashSet<Vec<u32>>,
    out: Vec<RectGraph>,
    want: usize,
}

impl Collector {
    fn offer(&mut self, g: &RectGraph) {
        if self.out.len() < self.want && self.seen.insert(g.embedding_key()) {
            self.out.push(g.clone());
        }
    }

    fn full(&self) -> bool {
        self.out.len() >= self.want
    }
}

/// Up to `count` distinct contexts with `bottom` and `top` endpoints:
/// all words with at most `depth` pieces first, then seeded random words.
pub fn generate_contexts(
    bottom: usize,
    top: usize,
    count: usize,
    depth: usize,
    seed: u64,
) -> Vec<RectGraph> {
    let max_width = bottom.max(top) + 2;
    let mut col = Collector {
        seen: HashSet::new(),
        out: Vec::new(),
        want: count,
    };
    let mut layer = vec![RectGraph::identity(bottom)];
    for _ in 0..=depth {
        for g in &layer {
            if g.arity().1 == top {
                col.offer(g);
            }
        }
        if col.full() {
            return col.out;
        }
        let mut next = Vec::new();
        let mut keys = HashSet::new();
        for g in &layer {
            for (p, pos) in moves(g.arity().1, max_width) {
                let h = apply(g, p, pos);
                if keys.insert(h.embedding_key()) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while !col.full() && attempts < 100 * count {
        attempts += 1;
        let len = rng.gen_range(depth + 1..=depth + 8);
        let mut g = RectGraph::identity(bottom);
        for _ in 0..len {
            let ms = moves(g.arity().1, max_width);
            let (p, pos) = ms[rng.gen_range(0..ms.len())];
            g = apply(&g, p, pos);
        }
        // steer to the requested width
        while g.arity().1 != top {
            let w = g.arity().1;
            let dist = |x: usize| x.abs_diff(top);
            let closer: Vec<(Piece, usize)> = moves(w, max_width)
                .into_iter()
                .filter(|&(p, _)| dist(w - p.consumes() + p.produces()) < dist(w))
                .collect();
            let (p, pos) = if closer.is_empty() && w == 0 {
                // width 0 with target 1: cup, then merge
                (Piece::Cup, 0)
            } else if closer.is_empty() {
                // width 1 with target 0: split, then cap
                (Piece::Split, rng.gen_range(0..w))
            } else {
                closer[rng.gen_range(0..closer.len())]
            };
            g = apply(&g, p, pos);
        }
        col.offer(&g);
    }
    col.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contexts_are_distinct_and_sized() {
        let cs = generate_contexts(2, 2, 60, 3, 7);
        assert_eq!(cs.len(), 60);
        let keys: HashSet<_> = cs.iter().map(|g| g.embedding_key()).collect();
        assert_eq!(keys.len(), 60);
        assert!(cs.iter().all(|g| g.arity() == (2, 2)));
        let odd = generate_contexts(2, 1, 30, 3, 7);
        assert_eq!(odd.len(), 30);
        assert!(odd.iter().all(|g| g.arity() == (2, 1)));
    }

    #[test]
    fn deterministic_for_seed() {
        let a = generate_contexts(3, 3, 40, 2, 11);
        let b = generate_contexts(3, 3, 40, 2, 11);
        assert_eq!(a, b);
    }
}
