//! Minimal surfaces in ℝ³/ℝ⁴/ℝⁿ from meromorphic Weierstrass data on
//! punctured spheres.
//!
//! The library constructs the forms φᵢ of the Enneper–Weierstrass
//! representation from data (hdz, g), (hdz, g₁, g₂) or (φ₁,…,φₙ) on a
//! basic domain M = P¹∖{p₁,…,p_k}, computes value-distribution invariants
//! of the Gauss map (degree, exceptional values, branch divisor, totally
//! ramified value number), verifies the ramification / unicity /
//! Plücker-type inequalities on concrete data, and realizes surfaces as
//! meshes by integrating x(z) = Re ∫ φ.
//!
//! Arithmetic runs in one of two modes: EXACT (Gaussian rationals,
//! optionally extended by a single √m) for all divisor / multiplicity /
//! inequality logic, and FLOAT (complex f64) for quadrature and meshing.

pub mod algebra;
pub mod catalog;
pub mod curves;
pub mod error;
pub mod gauss;
pub mod json;
pub mod parallel;
pub mod periods;
pub mod quad;
pub mod report;
pub mod surface;
pub mod theorems;
pub mod tol;
pub mod weierstrass;

pub use algebra::divisor::{Divisor, SpherePoint};
pub use algebra::poly::Polynomial;
pub use algebra::ratfunc::{MeromorphicForm, RationalFunction};
pub use algebra::scalar::ComplexScalar;
pub use error::Error;
pub use tol::Tolerances;
