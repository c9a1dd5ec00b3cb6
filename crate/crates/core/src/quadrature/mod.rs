//! Product-type domains, quadrature grids and the `𝔻`-integral.
//!
//! Every integral over a product-type domain is the pair of scalar integrals
//! over its idempotent slices. A hyperbolic measure `e m1 + e† m2` is
//! realized as the weight sequences of two quadrature rules.

mod domain;
mod rule;
mod sampled;

pub use domain::{
    in_lower_half_plane, in_upper_half_plane, make_grid, Bound, DInterval, GridConfig,
    IntervalConfig, Part, ProductGrid, Scheme,
};
pub use rule::{pairwise_sum, QuadratureRule, PANEL_ORDER};
pub use sampled::SampledProductFunction;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError {
    #[error("empty or reversed interval [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
    #[error("infinite interval bound requires a positive finite truncation")]
    BadTruncation,
    #[error("quadrature needs more nodes (got {0})")]
    TooFewNodes(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("nodes must be strictly increasing")]
    NotIncreasing,
    #[error("negative quadrature weight (signed measures are not enabled)")]
    NegativeWeight,
    #[error("non-finite sample or weight")]
    NonFinite,
    #[error("sampled functions live on different grids")]
    GridMismatch,
    #[error("unknown quadrature scheme {0:?}")]
    UnknownScheme(String),
    #[error("grid config: {0}")]
    Config(String),
    #[error("csv: {0}")]
    Csv(String),
}
