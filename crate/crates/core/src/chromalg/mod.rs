//! The chromatic algebra and its map into Temperley-Lieb.

mod contexts;
mod element;
mod phi;
mod pullback;
mod relation;
mod trace;

pub use contexts::generate_contexts;
pub use element::{ChromElement, ChromElementJson, ChromTermJson};
pub use phi::{phi, phi_laurent, phi_scalar, PhiImage, PhiLaurent};
pub use pullback::{
    phi_pullback_even, phi_pullback_odd, pullback_even, pullback_even_in, pullback_even_step,
    pullback_odd, pullback_odd_in, pullback_odd_step, r_element, r_element_in, PlanarAlgebra,
};
pub use relation::{
    beraha_relation, golden_rewirings, hi_relation, radical_relation, relation_check,
    select_contexts, tutte_phi1_relation, two_line_graphs, ContextResult, ContextStatus, Relation,
    RelationReport,
};
pub use trace::{
    check_phi_trace_commutes, check_phi_trace_commutes_with, markov_trace, trace_pair_with,
};
