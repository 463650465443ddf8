//! Signed circuit covers of signed graphs without a K4 minor.

pub mod circuits;
pub mod coverability;
pub mod construct;
pub mod cover;
pub mod error;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod par;
pub mod sp;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Sign, SignedGraph, SwitchSet, VertexId};
