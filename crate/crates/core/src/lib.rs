//! Regular covers of one-vertex simplicial sets, lifted finite group actions
//! and their fixed points, with exhaustive checkers and exact homology.

pub mod cli;
pub mod covering;
pub mod error;
pub mod groups;
pub mod homology;
pub mod io;
pub mod operator;
pub mod pi_one;
pub mod report;
pub mod sset;
pub mod theorems;

pub use error::{Error, Result};
pub use report::Report;
