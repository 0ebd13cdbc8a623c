//! Canonical forms of abstract multigraphs by colour refinement and
//! individualization, with automorphism pruning.

use super::map::{MultiGraph, PlanarMap};

/// Adjacency with multiplicities; loops appear once in their own list.
pub type Adjacency = Vec<Vec<(usize, u32)>>;

pub fn adjacency(g: &MultiGraph) -> Adjacency {
    let mut adj: Vec<std::collections::BTreeMap<usize, u32>> = vec![Default::default(); g.n];
    for &(a, b) in &g.edges {
        *adj[a].entry(b).or_default() += 1;
        if a != b {
            *adj[b].entry(a).or_default() += 1;
        }
    }
    adj.into_iter().map(|m| m.into_iter().collect()).collect()
}

/// Refine a colouring to the coarsest equitable one; colours are renumbered
/// 0..k by sorted signatures so the result is isomorphism-invariant.
fn refine(adj: &Adjacency, colors: &mut Vec<u32>) {
    let n = adj.len();
    let mut ncolors = count_colors(colors);
    loop {
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<u32> = Vec::with_capacity(1 + 2 * adj[v].len());
                let mut nb: Vec<(u32, u32)> = adj[v]
                    .iter()
                    .map(|&(u, m)| (colors[u], if u == v { m + (1 << 20) } else { m }))
                    .collect();
                nb.sort_unstable();
                s.push(colors[v]);
                for (c, m) in nb {
                    s.push(c);
                    s.push(m);
                }
                (s, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                c += 1;
            }
            next[sigs[i].1] = c;
        }
        let k = if n == 0 { 0 } else { c as usize + 1 };
        *colors = next;
        if k == ncolors {
            return;
        }
        ncolors = k;
    }
}

fn count_colors(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    // v gets its cell's colour, the rest of the cell moves one step up
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            if u != v && c >= colors[v] {
                2 * c + 1
            } else {
                2 * c
            }
        })
        .collect()
}

fn encode(adj: &Adjacency, pos: &[u32]) -> Vec<u32> {
    let mut e: Vec<(u32, u32, u32)> = Vec::new();
    for (v, nb) in adj.iter().enumerate() {
        for &(u, m) in nb {
            let (a, b) = (pos[v], pos[u]);
            if a <= b {
                e.push((a, b, m));
            }
        }
    }
    e.sort_unstable();
    let mut out = Vec::with_capacity(1 + 3 * e.len());
    out.push(adj.len() as u32);
    for (a, b, m) in e {
        out.extend([a, b, m]);
    }
    out
}

struct Search<'a> {
    adj: &'a Adjacency,
    best: Option<(Vec<u32>, Vec<u32>)>,
    first: Option<(Vec<u32>, Vec<u32>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, pos: Vec<u32>) {
        let code = encode(self.adj, &pos);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == code {
                // pos⁻¹ ∘ ref gives an automorphism
                let n = pos.len();
                let mut inv = vec![0usize; n];
                for (v, &p) in pos.iter().enumerate() {
                    inv[p as usize] = v;
                }
                let auto: Vec<usize> = (0..n).map(|v| inv[reference.1[v] as usize]).collect();
                if auto.iter().enumerate().any(|(i, &x)| i != x) {
                    self.autos.push(auto);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code.clone(), pos.clone()));
        }
        if self.best.as_ref().is_none_or(|b| code < b.0) {
            self.best = Some((code, pos));
        }
    }

    fn node(&mut self, colors: Vec<u32>, fixed: &mut Vec<usize>) {
        let n = colors.len();
        // first smallest non-singleton cell
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c));
        let Some(cell) = target else {
            self.leaf(colors);
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if self.same_orbit(fixed, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut c = individualize(&colors, v);
            refine(self.adj, &mut c);
            fixed.push(v);
            self.node(c, fixed);
            fixed.pop();
        }
    }

    /// Whether `v` is in the orbit of an already-tried vertex under the known
    /// automorphisms that fix the current individualized prefix.
    fn same_orbit(&self, fixed: &[usize], tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| fixed.iter().all(|&f| a[f] == f))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            if tried.contains(&x) {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// Canonical code and a canonical position for each vertex.
pub fn canonical_form(adj: &Adjacency) -> (Vec<u32>, Vec<u32>) {
    let n = adj.len();
    if n == 0 {
        return (vec![0], Vec::new());
    }
    let mut colors = vec![0u32; n];
    refine(adj, &mut colors);
    let mut s = Search {
        adj,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    s.node(colors, &mut Vec::new());
    s.best.expect("search reaches a leaf")
}

pub fn code_to_bytes(code: &[u32]) -> Vec<u8> {
    code.iter().flat_map(|x| x.to_le_bytes()).collect()
}

/// Key equal for two maps exactly when their multigraphs are isomorphic.
pub fn canonical_key(m: &PlanarMap) -> Vec<u8> {
    multigraph_key(&m.to_multigraph())
}

pub fn multigraph_key(g: &MultiGraph) -> Vec<u8> {
    code_to_bytes(&canonical_form(&adjacency(g)).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> MultiGraph {
        MultiGraph {
            n,
            edges: e.to_vec(),
        }
    }

    #[test]
    fn relabelled_graphs_agree() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let b = g(4, &[(1, 3), (3, 0), (0, 2), (2, 1), (1, 0)]);
        assert_eq!(multigraph_key(&a), multigraph_key(&b));
        let c = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 0)]);
        assert_ne!(multigraph_key(&a), multigraph_key(&c));
    }

    #[test]
    fn triangle_vs_path() {
        assert_ne!(
            multigraph_key(&g(3, &[(0, 1), (1, 2), (2, 0)])),
            multigraph_key(&g(3, &[(0, 1), (1, 2)]))
        );
    }

    #[test]
    fn complete_graph_is_fast() {
        let mut e = Vec::new();
        for i in 0..12 {
            for j in i + 1..12 {
                e.push((i, j));
            }
        }
        let k = multigraph_key(&g(12, &e));
        e.reverse();
        assert_eq!(k, multigraph_key(&g(12, &e)));
    }

    #[test]
    fn multiplicity_matters() {
        assert_ne!(
            multigraph_key(&g(2, &[(0, 1), (0, 1)])),
            multigraph_key(&g(2, &[(0, 1)]))
        );
    }
}
