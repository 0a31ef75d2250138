//! Automata encoded as representations: word, tree and branching automata,
//! and PRO automata with intersection and union.

pub mod bossut;
pub mod branching;
pub mod pro;
pub mod tree;
pub mod word;

pub use branching::BranchingAutomaton;
pub use pro::{in_matrix, out_matrix, ProAutomaton};
pub use tree::{tree_to_circuit, Tree, TreeAutomaton};
pub use word::{lang_odot, shift_union, word_odot, word_to_circuit, WordAutomaton};
