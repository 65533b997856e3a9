//! Exact arithmetic for beta-expansions and linear recurrence numeration.
//!
//! The crate is organised around a real algebraic base `β > 1`:
//!
//! - [`arith`] — integer polynomials, Sturm root isolation, number fields
//!   `ℚ(β)` with exact element arithmetic and certified conjugate embeddings.
//! - [`words`] — eventually periodic digit words and the lexicographic
//!   admissibility condition for greedy expansions.
//! - [`dynamics`] — the beta-transformation and its quasi-greedy variant:
//!   expansion of 1, orbit finiteness, positive finiteness and weak
//!   finiteness checkers, Pisot/Parry classification.
//! - [`numeration`] — the integer sequence `G` built from the expansion of 1,
//!   greedy digit vectors, the odometer successor, carry pattern analysis and
//!   the carry-locality (gap) falsifier.
//! - [`spectral`] — the substitution attached to a Parry base, its incidence
//!   matrix, the characteristic polynomial identity and four independent
//!   rank-style checkers that must agree.
//! - [`rauzy`] — contracting-space embeddings, central tile point clouds with
//!   certified truncation radii, and a lattice-translate overlap estimator.
//! - [`corpus`] — named reference bases and base-spec parsing shared with the
//!   command line front end.
//!
//! Everything mathematical is computed exactly over arbitrary-precision
//! integers and rationals; floating point appears only in reports.

pub mod arith;
pub mod corpus;
pub mod dynamics;
pub mod numeration;
pub mod rauzy;
pub mod spectral;
pub mod words;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
