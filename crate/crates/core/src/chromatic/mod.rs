pub mod engine;
pub mod persist;
pub mod statesum;
pub mod trace;

pub use engine::{
    chromatic_dc, chromatic_dc_with, chromatic_poly, global_cache, ChromCache, ChromResult,
    ChromStats,
};
pub use statesum::{chromatic_statesum, chromatic_statesum_with_limit};
pub use trace::{
    closed_trace_with, golden_identity_check, golden_identity_check_with,
    golden_identity_from_poly, markov_trace_chrom, markov_trace_chrom_with, tutte_estimate_check,
    tutte_estimate_check_with, EstimateCheck, GoldenCheck,
};
