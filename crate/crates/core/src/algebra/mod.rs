//! Exact arithmetic substrate: rationals, univariate polynomials,
//! resultants and certified root isolation.

pub mod interval;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use num_rational::BigRational;
pub use poly::RationalPolynomial;
pub use resultant::{resultant, resultant_in_y, sylvester_resultant};
pub use roots::{isolate_roots, roots_equal, IsolatingBox};
