use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Table dimensions or entries do not describe a structure.
    Malformed(String),
    /// The lattice has no relative pseudo-complement `y ⇒ z`.
    NotHeyting {
        y: String,
        z: String,
    },
    /// A bounded-lattice law fails on the input tables.
    NotALattice(String),
    /// The structure violates an axiom of its family.
    Invalid(String),
    /// Two structures from different families (or different monoids/moduli).
    FamilyMismatch,
    /// The element map does not preserve the structure.
    NotAMorphism(String),
    NotComposable,
    /// The ambient category has no construction for this input.
    Unsupported(String),
    /// No short Z-exact sequence exists for the named object.
    NoExactSequence(String),
    /// The arrow is not an effective descent morphism.
    NotDescent,
    /// A square handed to the diagonal search does not commute.
    NotCommuting,
    /// The torsion theory fails (M') or (S) on the active catalog.
    NotAdmissible(String),
    /// A certified construction failed its own check.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(s) => write!(f, "malformed structure: {s}"),
            Error::NotHeyting { y, z } => {
                write!(f, "lattice is not Heyting: no greatest x with x∧{y} ≤ {z}")
            }
            Error::NotALattice(s) => write!(f, "not a bounded lattice: {s}"),
            Error::Invalid(s) => write!(f, "invalid structure: {s}"),
            Error::FamilyMismatch => write!(f, "structures belong to different families"),
            Error::NotAMorphism(s) => write!(f, "not a morphism: {s}"),
            Error::NotComposable => write!(f, "arrows are not composable"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::NoExactSequence(s) => write!(f, "no short Z-exact sequence for {s}"),
            Error::NotDescent => write!(f, "arrow is not an effective descent morphism"),
            Error::NotCommuting => write!(f, "square does not commute"),
            Error::NotAdmissible(s) => write!(f, "Galois structure not admissible: {s}"),
            Error::Internal(s) => write!(f, "internal certification failure: {s}"),
        }
    }
}

impl core::error::Error for Error {}
