//! Paley-Wiener operators on the bicomplex upper half-plane: the half-line
//! extension and its line energies, recovery of the density from one
//! horizontal line, contour and ray integrals, and band-limited synthesis.

mod band;
mod contour;
mod extension;
mod recovery;

pub use band::{
    band_synthesize, epsilon_damped_transform, exponential_type_bound, ray_transform, BandDensity,
    ExponentialTypeBound,
};
pub use contour::{rectangle_contour_integral, ContourRect};
pub use extension::{
    extend, horizontal_line_energy, kernel_norm, sup_energy, HalfPlaneDensity, HorizontalLine,
};
pub use recovery::{recover, RecoveryOptions, TailModel};

use thiserror::Error;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::quadrature::QuadError;
use crate::transform::TransformError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PwError {
    #[error("{0} is outside the upper half-plane (needs x1 > |x2|)")]
    OutOfDomain(Bicomplex),
    #[error("horizontal line needs x1 > |x2|, got x1 = {x1}, x2 = {x2}")]
    InvalidLine { x1: f64, x2: f64 },
    #[error("contour rectangle needs alpha > 0 and y > 1, got alpha = {alpha}, y = {y}")]
    InvalidRect { alpha: f64, y: f64 },
    #[error("no horizontal lines given")]
    EmptyLines,
    #[error("invalid density: {0}")]
    InvalidDensity(String),
    #[error("damping parameter must be positive in both components, got {0}")]
    NonPositiveEps(Hyperbolic),
    #[error("non-finite value in quadrature")]
    NonFinite,
    #[error("tail fit: {0}")]
    TailFit(String),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    Quad(#[from] QuadError),
}
