//! Exact zero-divisors on artinian local rings `K[x_1..x_n]/I`.
//!
//! The crate builds a finite-dimensional presentation of the ring (standard
//! monomials and multiplication matrices) and answers questions about exact
//! zero-divisor pairs and sequences by exact linear algebra over the
//! coefficient field.

pub mod classify;
pub mod error;
pub mod ezd;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{buchberger, GroebnerBasis};
pub use linalg::{Matrix, Subspace, Vector};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ideal::IdealInRing;
pub use ring::{build_ring, build_ring_from_strs, inverse_system_ring, Algebra, ArtinianRing, QuotientData, RingElement};
