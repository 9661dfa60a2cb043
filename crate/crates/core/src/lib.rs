//! Regular insertion encodings of permutation classes.
//!
//! Given a finite basis `B`, this crate decides whether `Av(B)` has a
//! regular insertion encoding, builds the finite automaton accepting that
//! encoding, and turns the automaton into the class's rational generating
//! function. A brute-force enumerator serves as ground truth.

pub mod automaton;
pub mod cli;
pub mod config;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod ratfunc;
pub mod regularity;

pub use error::{Error, Result};
