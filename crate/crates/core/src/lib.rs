//! Exact finite-dimensional algebra over the rationals: structure-constant
//! algebras, radicals, Hensel lifting modulo nil ideals, and searches for
//! complex and quaternion witnesses.

pub mod algebra;
pub mod classify;
pub mod lifting;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod structure;
pub mod subspace;

pub use algebra::{
    Algebra, AlgebraError, AlgebraFile, CatalogError, CatalogSpec, Element, FormatError,
    ShapeError, Side, ValidationError,
};
pub use classify::{
    frobenius_classify, ClassifyOutcome, Finding, Frobenius, IdealCertificate, Search, Witness,
};
pub use lifting::{
    hensel_lift, inseparable_witness, lift_idempotent, lift_mth_root, quaternion_lift_feasibility,
    Feasibility, LiftError, LiftResult, NoLiftWitness,
};
pub use matrix::{kernel, rref, solve_linear, LinalgError, QMatrix};
pub use poly::{parse_poly, Poly, PolyError, PolyParseError};
pub use rational::{Rational, RationalParseError};
pub use structure::{jordan_chevalley, nilpotency_index, radical, RadicalReport, StructureError};
pub use subspace::Subspace;
