//! Exact knot-theory computations on planar diagram codes: Kauffman
//! brackets, Jones polynomials, checkerboard (Tait) graphs, and the
//! closed-form extreme-coefficient analytics of almost alternating
//! diagrams.
//!
//! All arithmetic is exact. Polynomial coefficients are generic over an
//! overflow-checked integer scalar (see [`laurent::Coeff`]); the concrete
//! aliases below fix `i64`, which covers every diagram within the default
//! 24-crossing enumeration cap.

pub mod aa;
pub mod checkerboard;
pub mod diagram;
pub mod error;
pub mod kauffman;
pub mod laurent;
pub mod plane;

pub use diagram::LinkDiagram;
pub use error::Error;
pub use laurent::{CoeffVector, ExpUnit, Frac, LaurentPoly};

/// Default coefficient scalar: overflow-checked 64-bit integers.
pub type Int = i64;

/// Bracket polynomials in the variable `A` with integer exponents.
pub type BracketPoly = LaurentPoly<Int>;

/// Jones polynomials in `t` with half-integer exponents.
pub type JonesPoly = LaurentPoly<Int>;
