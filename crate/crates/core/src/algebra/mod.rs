//! Complex scalar arithmetic (exact and floating), univariate
//! polynomials, rational functions, meromorphic forms and divisors on
//! the Riemann sphere.

pub mod divisor;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
