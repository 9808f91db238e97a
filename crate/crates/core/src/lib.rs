pub mod cli;
pub mod complex;
pub mod embedding;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod perm;
pub mod search;
pub mod snf;

pub use error::{GemError, Result};
pub use graph::{ColorSet, ColoredGraph};
