pub mod cli;
pub mod cycles;
pub mod error;
pub mod grassmann;
pub mod groebner;
pub mod hurwitz;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod random;
pub mod reciprocal;

pub use error::{Error, Result};
