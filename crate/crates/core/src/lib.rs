//! An exact-arithmetic engine for graphical symplectic algebra.
//!
//! The crate builds string diagrams of phased spiders and box-weighted
//! edges over an exact field, evaluates them to affine subspaces of the
//! doubled phase space, normalizes discard-free diagrams to a unique
//! reduced form, and decides diagram equality. Frontends translate
//! odd-prime qudit stabiliser circuits and linear electrical networks
//! into the same diagram language.

pub mod scalar;
pub mod matrix;
pub mod relation;
pub mod symplectic;
pub mod diagram;
pub mod normalize;
pub mod stab;
pub mod netlist;

pub use relation::AffineRelation;
pub use scalar::{FieldKind, Scalar};
