//! Exact symbolic computation for crossed tensor products of algebras.
//!
//! The engine works with two alphabets of generators, `A` (coordinates or
//! creators `x^i`) and `B` (`y^i`, or conjugates `x*^i` in the Wick setting).
//! A generator-level twist `y^i x^j -> sum t^{ij}_{kl} x^k y^l` extends to a
//! unique homogeneous cross on the free algebras; the crossed product is then
//! realized on Wick-ordered words (all `A` letters left of all `B` letters).
//!
//! Everything is generic over the coefficient field through [`Coeff`]. The
//! default instantiation is the exact Gaussian rational [`Scalar`], and the
//! aliases below fix it so that most callers never spell the parameter.

pub mod cross;
pub mod fock;
pub mod linalg;
pub mod poly;
pub mod quadratic;
pub mod scalar;
pub mod wick;
pub mod word;

pub use scalar::{Coeff, GaussianRational, ParseScalarError};
pub use word::{Alphabet, Letter, Word};

/// Exact complex scalar with rational real and imaginary parts.
pub type Scalar = GaussianRational;
/// Noncommutative polynomial over [`Scalar`].
pub type Poly = poly::NCPoly<Scalar>;
pub type Twist = cross::TwistMatrix<Scalar>;
pub type ScalarCross = cross::Cross<Scalar>;
pub type Matrix = linalg::Matrix<Scalar>;
pub type Operator = quadratic::Operator2<Scalar>;
pub type Quadratic = quadratic::QuadraticAlgebra<Scalar>;
pub type Wick = wick::WickSpec<Scalar>;
pub type Gram = fock::GramMatrix<Scalar>;
pub type Fock = fock::FockVector<Scalar>;
