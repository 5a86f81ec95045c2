//! Exact finite-group and Lie-algebra computations behind essential-dimension
//! style upper bounds: permutation and matrix groups, character tables,
//! a catalog of covering groups, and a structure-constant Lie toolkit.

pub mod bound;
pub mod catalog;
pub mod character;
pub mod cyclotomic;
pub mod element;
pub mod error;
pub mod field;
pub mod group;
pub mod groupfile;
pub mod lie;
pub mod modp;

pub use character::{CharError, CharacterTable, FaithfulChoice, RealityType};
pub use cyclotomic::{Cyclotomic, CyclotomicField, RootSum};
pub use element::{Ambient, FqMatrix, GroupElement, Permutation};
pub use error::{Error, GroupError, Result};
pub use field::FiniteField;
pub use group::{ConjugacyClass, FiniteGroup, DEFAULT_ORDER_CAP};
pub use groupfile::GroupDefinition;
