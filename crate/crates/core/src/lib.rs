//! Exact chromatic algebra, Temperley-Lieb algebra and the map between them.

pub mod algebra;
pub mod chromalg;
pub mod chromatic;
pub mod error;
pub mod harness;
pub mod planar;
pub mod tl;

pub use error::{Error, Result};
