//! Shift spaces presented by labeled graphs: languages, covers, sliding
//! block codes and the structure theory of factor maps between them.

pub mod alphabet;
pub mod analysis;
pub mod codes;
pub mod covers;
pub mod error;
pub mod graph;
pub mod language;
pub mod oracle;
pub mod point;
pub mod report;

pub use alphabet::{Alphabet, Block, Symbol};
pub use codes::{BlockCode, FactorMap, Horizon};
pub use error::{Error, Result};
pub use graph::{Edge, LabeledGraph, VertexSet};
pub use oracle::ShiftOracle;
pub use point::Point;
