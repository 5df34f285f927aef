//! Exact arithmetic on numerical semigroups.
//!
//! - [`NumericalSemigroup`]: gap-set representation with membership, element
//!   indexing, minimal generators and the `gens:`/`gaps:` text form.
//! - [`apery`]: Apéry data `s_i = e_i m + i` relative to a chosen element.
//! - [`enumerate`]: the genus tree, streaming every semigroup of a given genus.
//! - [`classify`]: type `(N, γ)` verdicts, the structure results that follow
//!   from them, symmetry profiles and the projection `π`.
//! - [`bounds`]: closed-form genus bounds (`ρ₁`..`ρ₅`, Castelnuovo, Jenkins).
//! - [`obstruction`]: sums of gaps, the Buchweitz bound and the excess `Λ`.
//! - [`families`]: constructors for the explicit semigroup families, each
//!   returned with the properties it was checked against.

pub mod apery;
pub mod arith;
pub mod bitset;
pub mod bounds;
pub mod classify;
pub mod enumerate;
mod error;
pub mod families;
pub mod obstruction;
mod semigroup;

pub use apery::{apery_profile, AperyProfile};
pub use enumerate::{enumerate_by_genus, enumerate_by_genus_with_cap, DEFAULT_GENUS_CAP};
pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
pub use bounds::BoundReport;
pub use classify::{SymmetryProfile, TypeVerdict};
pub use families::FamilyResult;
pub use obstruction::GapSumProfile;
pub use serde::Serialize;
