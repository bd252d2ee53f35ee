//! Abstract argumentation toolkit.
//!
//! Extension enumeration and acceptance for the classic Dung semantics,
//! membership and deletion distance for the graph classes ACY, NOEVEN, BIP
//! and SYM, hardness reductions from two-block QBFs and MINSAT, and a harness
//! that checks the correctness claims of those reductions against
//! brute-force oracles.

pub mod error;
pub mod framework;
pub mod graph_classes;
pub mod io;
pub mod logic;
pub mod reductions;
pub mod semantics;
pub mod validate;

pub use error::{Error, Result};
pub use framework::{ArgSet, Framework};
pub use graph_classes::GraphClass;
pub use reductions::{ReductionArtifact, Variant};
pub use semantics::Semantics;
