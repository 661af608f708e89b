//! Numerical verification lab for coupled elliptic PDE systems with
//! transparent boundary conditions on thin product-type ends.
//!
//! The crate is organized around six subsystems:
//!
//! - [`geometry`]: graph curves, thin ends, subregions with tagged boundary
//!   segments, structured triangular meshes, and nearest-lateral-point search.
//! - [`cgo`]: complex geometrical optics solutions `u0 = exp(rho . x)`,
//!   decay-direction certificates, and their closed-form / quadrature integrals.
//! - [`fields`]: analytic and nodal complex scalar fields, manufactured
//!   families with vanishing lateral Cauchy data, discrete Hoelder estimates,
//!   boundary traces, and the Liouville transform.
//! - [`identity`]: Green's formula residuals, the transmission integral
//!   identities and their term decompositions, term-bound scaling checks,
//!   and the anchored lower bound for the CGO volume integral.
//! - [`scattering`]: a Lippmann-Schwinger volume-integral solver for 2D
//!   acoustic medium scattering, far-field patterns, and visibility /
//!   boundedness sweeps.
//! - [`estimates`]: exact rational decay exponents, feasibility constraints,
//!   and log-log decay-rate fitting.

pub mod cgo;
pub mod error;
pub mod estimates;
pub mod fields;
pub mod geometry;
pub mod identity;
pub mod point;
pub mod quad;
pub mod scattering;
pub mod special;

pub use error::{Error, Result};
pub use point::{Point, Point3};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
