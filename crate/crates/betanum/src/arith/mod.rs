//! Exact arithmetic foundation: integer polynomials, real root isolation by
//! Sturm sequences, number fields `ℚ(β)` with rational power-basis elements,
//! and certified conjugate embeddings at adaptive precision.

pub mod embed;
pub mod field;
pub mod minpoly;
pub mod poly;
pub mod roots;

pub use embed::{ComplexBall, EmbedBall, RealBall};
pub use field::{FieldElement, NumberField};
pub use minpoly::minimal_polynomial;
pub use poly::IntPolynomial;
pub use roots::{isolate_real_roots, RatInterval};
