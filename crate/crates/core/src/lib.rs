//! Torsion theories relative to a class of zero objects, computed on finite
//! algebras.
//!
//! Four families of finite structures are supported: MV-algebras, Heyting
//! algebras, M-sets over a finite monoid, and pointed abelian groups (the
//! coslice `ℤ_m/Ab`). Every structure is an explicit carrier with full
//! operation tables, and every universal construction is checked against
//! bounded catalogs of small instances.
//!
//! The M-set torsion theory lives in the opposite category. Arrows of that
//! ambient category are stored as plain M-set maps pointing the other way;
//! [`zeroclass::Ambient`] hides the reversal.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod factorization;
pub mod galois;
pub mod morphisms;
pub mod structures;
pub mod torsion;
pub mod zeroclass;

pub use error::Error;
pub use morphisms::{Congruence, Morphism};
pub use structures::{Algebra, Catalog, CatalogKind, Elem, Family, Monoid};
pub use torsion::{TheoryTag, TorsionTheory, ZExactSequence};
pub use zeroclass::Ambient;
