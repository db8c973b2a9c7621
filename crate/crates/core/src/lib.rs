pub mod algebra;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod invariants;
pub mod report;
pub mod search;

pub use error::{Error, Result};
