pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod constructions;
mod error;
pub mod group;
pub mod sat;
pub mod search;
pub mod verifier;

pub use error::{Error, Result};
