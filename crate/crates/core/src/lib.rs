//! Exact computations with the rank-one Nichols algebra `B_p` at a `2p`-th
//! root of unity and its multivertex Yetter-Drinfeld modules.

pub mod classify;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod fusion;
pub mod fusionring;
pub mod linalg;
pub mod loop_op;
pub mod nichols;
pub mod report;
pub mod suites;
pub mod ydspace;

pub use cyclo::{CycNum, Field};
pub use error::{AlgebraError, Result};
