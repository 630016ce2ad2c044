//! Plucking polynomials of plane rooted trees.
//!
//! The crate computes `Q(T)` and the delay-function variant `Q(T, f)` with
//! exact integer arithmetic, evaluates closed forms for hedgehog families,
//! and runs exhaustive unimodality scans over delay assignments.
//!
//! ```
//! use plucking::{plucking::plucking, tree::parse_tree};
//!
//! let t = parse_tree("(()(()()))").unwrap();
//! assert_eq!(plucking(&t).to_string(), "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
//! ```

pub mod plucking;
pub mod qpoly;
pub mod search;
pub mod tree;

use thiserror::Error;

pub use plucking::{plucking as plucking_polynomial, plucking_delay, Plucker, PluckingError};
pub use qpoly::{QPolyError, QPolynomial};
pub use search::SearchError;
pub use tree::{DelayAssignment, DelayedTree, LeafRef, PlaneRootedTree, TreeError};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    QPoly(#[from] QPolyError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Plucking(#[from] PluckingError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
