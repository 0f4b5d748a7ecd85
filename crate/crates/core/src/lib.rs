//! Exact computation of minimal angles of spherical Tits diagrams.
//!
//! The crate works bottom-up:
//!
//! * [`diagram`] holds Coxeter diagrams, the builtin finite types, and
//!   diagram automorphisms.
//! * [`geometry`] realizes crystallographic diagrams with exact rational
//!   roots and fundamental weights in the usual Bourbaki coordinates.
//! * [`weyl`] enumerates Weyl orbits, builds longest elements and the
//!   opposition involution.
//! * [`fold`] computes the Coxeter diagram of the centralizer of a group of
//!   diagram automorphisms.
//! * [`tits`] validates Tits diagrams and computes angular distances,
//!   minimal angles and the π/3 verdict.
//! * [`dsl`] parses the small line-oriented diagram description format.
//!
//! No floating-point value participates in any decision; see [`Angle`].

pub mod angle;
pub mod catalog;
pub mod diagram;
pub mod dsl;
pub mod error;
pub mod fold;
pub mod geometry;
pub mod linalg;
pub mod tits;
pub mod weyl;

/// Node label of a Coxeter diagram. Labels are positive integers.
pub type Node = u32;

/// Exact rational scalar.
pub type Q = num_rational::BigRational;

pub use angle::{Angle, Verdict};
pub use catalog::{paper_catalog, CatalogEntry, CatalogGroup};
pub use diagram::{AutGroup, CartanType, ComponentType, CoxeterDiagram, Permutation};
pub use dsl::{parse_spec, render_spec, ParseError, Payload, SpecDocument, SpecError};
pub use error::{Error, Result};
pub use fold::{fold, fold_tits, FoldResult};
pub use geometry::{realize, Realization, Vector};
pub use linalg::Matrix;
pub use tits::{
    admissibility, angular_distance, enumerate_indices, minimal_angle, rank_one_subdiagrams,
    relative_rank, validate, IndexRow, Limits, MinimalAngle, TitsDiagram, ValidationReport,
    Violation, ViolationKind,
};
pub use weyl::{
    element_order, fundamental_orbit_size, group_order, longest_element, opposition, weyl_orbit,
    OrthogonalElement,
};
