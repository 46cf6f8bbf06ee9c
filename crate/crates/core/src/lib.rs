//! Exact computations in the PROP of involutive non-commutative sets.
//!
//! Objects are finite ordinals `n = {1, ..., n}`, stored as bare sizes. Internally
//! every element index is 0-based; the text DSL and the JSON mirrors use 1-based
//! indices.
//!
//! The crate is organised bottom-up:
//!
//! - [`finset`]: plain set maps and pullbacks.
//! - [`morphism`]: the morphism algebra of IF(as) (ordered, labelled fibers) and
//!   IF (labels only), with composition, tensor and symmetries.
//! - [`enumerate`]: canonical enumeration of hom-sets.
//! - [`factor`]: unique factorisation through signed permutations and
//!   order-preserving maps, the induced distributive law, hyperoctahedral groups.
//! - [`doublecat`]: bimorphisms of the four double categories and the star
//!   completion.
//! - [`spans`]: composite PROPs as canonical spans.
//! - [`models`]: free involutive monoids and group bialgebras used to evaluate
//!   morphisms as exact linear maps.
//! - [`dsl`] / [`json`]: text and JSON formats.
//! - [`check`]: law suites producing deterministic [`check::Report`]s.

pub mod check;
pub mod doublecat;
pub mod dsl;
pub mod enumerate;
mod error;
pub mod factor;
pub mod finset;
pub mod json;
pub mod label;
pub mod models;
pub mod morphism;
pub mod par;
pub mod random;
pub mod spans;

pub use error::{Error, Result};
pub use label::Label;
pub use morphism::{Entry, Fiber, IfMor, IfasMor, Kind, Morphism};
