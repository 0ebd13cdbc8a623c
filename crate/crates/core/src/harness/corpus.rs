//! Triangulation and graph corpora: built-in, generated, or read from disk.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chromalg::generate_contexts;
use crate::error::{Error, Result};
use crate::planar::{
    all_triangulations, catalog, generate_triangulations, RectGraph, Triangulation,
};

/// On-disk triangulation: vertex count and oriented triangles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub n: usize,
    pub faces: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl TriangulationJson {
    pub fn from_triangulation(t: &Triangulation) -> Self {
        TriangulationJson {
            n: t.num_vertices(),
            faces: t.faces().to_vec(),
            source: None,
        }
    }

    pub fn with_source(mut self, s: &str) -> Self {
        self.source = Some(s.to_string());
        self
    }

    pub fn to_triangulation(&self) -> Result<Triangulation> {
        Triangulation::from_unoriented(self.n, &self.faces)
    }
}

pub type Named<T> = Vec<(String, T)>;

/// `count` triangulations per vertex count in `ks`, seeded per size.
pub fn generated(
    ks: impl IntoIterator<Item = usize>,
    count: usize,
    seed: u64,
) -> Result<Named<Triangulation>> {
    let mut out = Vec::new();
    for k in ks {
        for (i, t) in generate_triangulations(k, count, seed.wrapping_add(k as u64))?
            .into_iter()
            .enumerate()
        {
            out.push((format!("random-{k}-{i}"), t));
        }
    }
    Ok(out)
}

/// Every triangulation with `lo..=hi` vertices.
pub fn exhaustive(lo: usize, hi: usize) -> Result<Named<Triangulation>> {
    let mut out = Vec::new();
    for k in lo..=hi {
        for (i, t) in all_triangulations(k)?.into_iter().enumerate() {
            out.push((format!("all-{k}-{i}"), t));
        }
    }
    Ok(out)
}

pub fn builtin() -> Named<Triangulation> {
    catalog()
}

/// All `*.json` triangulation files in a directory, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Named<Triangulation>> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let text =
            fs::read_to_string(&p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
        let j: TriangulationJson = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
        let name = p
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        out.push((name, j.to_triangulation()?));
    }
    Ok(out)
}

/// Closed graphs with at most `max_vertices` vertices once 2-valent
/// vertices are smoothed: duals of all small triangulations, closed words
/// in the context pieces, and the circle.
pub fn closed_trivalent(max_vertices: usize, words: usize, seed: u64) -> Result<Named<RectGraph>> {
    let mut out = vec![("circle".to_string(), RectGraph::circle())];
    let max_tri = (max_vertices + 4) / 2;
    for (name, t) in exhaustive(4, max_tri.max(4))? {
        let dual = t.map().dual()?;
        if dual.num_vertices() <= max_vertices {
            out.push((format!("dual-{name}"), RectGraph::closed(dual)));
        }
    }
    for (i, g) in generate_contexts(0, 0, words, 4, seed)
        .into_iter()
        .enumerate()
    {
        if g.smooth().map().num_vertices() <= max_vertices && g.map().num_edges() > 0 {
            out.push((format!("word-{i}"), g));
        }
    }
    Ok(out)
}
