//! Hypermatrix PROs over commutative semirings.
//!
//! The crate evaluates circuits (terms of free PROs) in hypermatrices,
//! implements the Kronecker and quasi-direct-sum calculus on them, and
//! builds word, tree, branching and PRO automata, Temperley-Lieb diagrams
//! and small quantum gate networks on top of that evaluation.

pub mod automata;
pub mod checks;
pub mod cli;
pub mod circuit;
pub mod error;
pub mod hypermat;
pub mod paths;
pub mod quantum_gates;
pub mod represent;
pub mod semiring;
pub mod temperley_lieb;

pub use error::{Error, Result};
