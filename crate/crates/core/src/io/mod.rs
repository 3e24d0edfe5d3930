//! Text formats and instance generators.

pub mod corpus;
pub mod generate;
pub mod lace;

pub use lace::{parse, serialize, ParseError};
