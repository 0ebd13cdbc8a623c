pub mod canon;
pub mod enumerate;
pub mod map;
pub mod rect;
pub mod triangulation;

pub use canon::{canonical_key, multigraph_key};
pub use enumerate::{connected_maps, map_code, random_map};
pub use map::{GraphJson, MultiGraph, PlanarMap};
pub use rect::RectGraph;
pub use triangulation::{
    all_triangulations, bipyramid, catalog, generate_triangulations, icosahedron, octahedron,
    tetrahedron, Triangulation,
};
