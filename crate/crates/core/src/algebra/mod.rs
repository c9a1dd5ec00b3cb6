//! Bicomplex and hyperbolic arithmetic.

mod bicomplex;
mod hyperbolic;

pub use bicomplex::Bicomplex;
pub use hyperbolic::{DOrder, Hyperbolic};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("{0} is a zero divisor (an idempotent component vanishes)")]
    ZeroDivisor(Bicomplex),
    #[error("cannot parse bicomplex number from {0:?}")]
    Parse(String),
}
