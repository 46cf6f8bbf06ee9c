//! Models used to evaluate morphisms and spans.
//!
//! - [`free`]: the free involutive monoid, evaluating IF(as) morphisms on words.
//! - [`group`]: finite groups and their group bialgebras, evaluating morphisms
//!   (monoid side), their opposites (comonoid side) and spans as exact
//!   [`TensorMap`]s.

pub mod free;
pub mod group;
pub mod tensor;

pub use free::{eval_monoid, InvWord, Letter};
pub use group::{GroupAlgebra, GroupModel};
pub use tensor::{Ring, TensorMap};
