//! Exact arithmetic and degree-sequence analysis for birational maps of
//! projective and affine space: sparse multivariate polynomials over Q,
//! Z/p^N, and F_{p^e}; map composition with per-step normalization; degree
//! sequence reports and boundedness certificates; the tower recursion for
//! sequence growth bounds; and p-adic flow interpolation.

pub mod batch;
mod dense;
pub mod error;
pub mod gcd;
pub mod maps;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use maps::{AffineMap, Divisor, ExceptionalData, ProjectiveMap};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use poly::{jacobian_det, Polynomial};
pub use ring::{Coef, CoefRing};
