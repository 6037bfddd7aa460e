//! Exact computations with braid and ribbon-braid operads.
//!
//! Braids compose left to right: in `a.concat(b)` the braid `a` is read
//! first, and [`BraidWord::perm_of`] sends a start position to the position
//! the strand ends at. Objects of the operads are one-line words listing the
//! label at each position.

pub mod braid;
pub mod coherence;
pub mod error;
pub mod gt;
pub mod operads;
pub mod perm;
pub mod quotients;
pub mod ribbon;

pub use braid::{braid_equal, fg_substitute, full_twist, pure_generator, BraidWord, FreeGroupWord};
pub use error::{Error, Result};
pub use operads::{Instance, Object, OperadMorphism, ParenTree};
pub use perm::Permutation;
pub use ribbon::{ribbon_equal, RibbonBraid};
