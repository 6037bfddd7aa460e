//! Braid words, the word problem and free-group substitution.

mod free;
mod garside;
mod word;

pub use free::{fg_substitute, substitute, FreeGroupWord, GroupElement};
pub use garside::{braid_equal, normal_form, GarsideNormalForm};
pub use word::{full_twist, pure_generator, BraidWord};
