//! Numerical bicomplex harmonic analysis.
//!
//! Bicomplex and hyperbolic arithmetic ([`algebra`]), product-type quadrature
//! ([`quadrature`]), the bicomplex Fourier transform ([`transform`]), the
//! half-plane extension and recovery operators together with band-limited
//! synthesis ([`paley_wiener`]), and the bicomplex Cauchy integral
//! ([`cauchy`]). [`verify`] bundles the numerical checks behind the CLI.

// `!(x <= y)` is used on purpose so that NaN fails every guard.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cauchy;
pub mod densities;
pub mod paley_wiener;
pub mod product_fn;
pub mod quadrature;
pub mod report;
pub mod transform;
pub mod verify;

pub use algebra::{AlgebraError, Bicomplex, DOrder, Hyperbolic};
pub use num_complex::Complex64;
