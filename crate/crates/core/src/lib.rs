//! Exact commutative algebra for residual intersections.

pub mod error;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod io;
pub mod koszul;
pub mod module;
pub mod oracle;
pub mod poly;
pub mod residual;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use groebner::{GroebnerBasis, Ideal, Limits, QuotientRing};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Rational coefficients.
pub type Q = Rational;
/// The default prime field for heavy computations.
pub type F32003 = Fp<32003>;
pub type PolyQ = Polynomial<Q>;
pub type PolyF32003 = Polynomial<F32003>;
pub type IdealQ = Ideal<Q>;
pub type IdealF32003 = Ideal<F32003>;
