//! Polynomial arithmetic: sparse polynomials over arbitrary exponent monoids, dense univariate
//! polynomials over a field, and factorization over Q and Q(sqrt 2).

mod coeff;
mod dense;
mod factor;
mod qsqrt2;
mod sparse;

pub use coeff::{is_prime_int, positive_divisors, prime_factors, Coeff, Field, F2};
pub use dense::UPoly;
pub use factor::{factor_q, factor_z, factor_z_reference, is_irreducible_q, to_integer_poly, ZFactors, ZPoly};
pub use qsqrt2::{factor_qsqrt2, is_irreducible_qsqrt2};
pub use sparse::{Exponent, Poly};
