pub mod diagram;
pub mod element;
pub mod jw;
pub mod render;

pub use diagram::{all_diagrams, TlDiagram};
pub use element::{Side, TlElement, TlElementJson};
pub use jw::{jones_wenzl, jones_wenzl_naive};
