//! Exact computations for one-dimensional shifts of finite type and their
//! high-dimensional axial powers.
//!
//! The central quantity is the independence entropy, computed as a maximum
//! geometric-mean cycle over a window graph of set-letters and reported as an
//! exact pair `(P, n)` meaning `(1/n)·ln P`.

pub mod automaton;
pub mod caps;
pub mod counting;
pub mod error;
pub mod measures;
pub mod models;
pub mod optimize;
pub mod score;
pub mod shift;

pub use caps::Caps;
pub use error::{Error, Result};
pub use score::{ExactScore, RationalScore};
pub use shift::{Alphabet, SetLetter, SetWord, SubshiftSpec, Word};
