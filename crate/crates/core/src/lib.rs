//! Arc permutations: the family of permutations whose every prefix is an
//! interval in `Z_n`, together with the tableau, weak-order, graph and
//! character-theoretic structures that go with them.

pub mod arc_graph;
pub mod bijections;
pub mod characters;
pub mod descent_stats;
pub mod error;
pub mod export;
pub mod families;
#[doc(hidden)]
pub mod fuzzing;
pub mod graph;
pub mod perm;
pub mod poset;
pub mod shuffles;
pub mod tableaux;
pub mod verify;
pub mod weak_order;

pub use error::{Error, Result};
pub use families::{DescentWord, Family, Letter, PsiCode};
pub use perm::{DescentSet, Permutation};
