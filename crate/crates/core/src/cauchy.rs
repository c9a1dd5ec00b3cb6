//! The bicomplex Cauchy integral over the boundary line `{x₀ + k x₃}`.
//!
//! Per component it is the scalar Cauchy integral
//! `(1/2πi) ∫ H_i(w)/(w - β_i) dw`: it reproduces Hardy-class functions in
//! the upper half-plane and vanishes in the lower one.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::product_fn::ProductFunction;
use crate::quadrature::{
    in_upper_half_plane, pairwise_sum, Part, ProductGrid, QuadError, SampledProductFunction,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CauchyError {
    #[error("{0} lies on the boundary (an idempotent component is real)")]
    OnBoundary(Bicomplex),
    #[error("{0} is outside the upper half-plane")]
    OutOfDomain(Bicomplex),
    #[error("invalid boundary function: {0}")]
    InvalidBoundary(String),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// Boundary samples `H` on a truncated real-line grid with exponent `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryFunction {
    samples: SampledProductFunction,
    p: f64,
}

impl BoundaryFunction {
    pub fn new(samples: SampledProductFunction) -> Result<Self, CauchyError> {
        Self::with_exponent(samples, 2.0)
    }

    pub fn with_exponent(samples: SampledProductFunction, p: f64) -> Result<Self, CauchyError> {
        if !(p >= 1.0 && p.is_finite()) {
            return Err(CauchyError::InvalidBoundary(format!("exponent must be >= 1, got {p}")));
        }
        if !samples.is_finite() {
            return Err(CauchyError::InvalidBoundary("non-finite sample".into()));
        }
        Ok(Self { samples, p })
    }

    /// Samples `f` at the real nodes of `grid`.
    pub fn from_function(
        f: &impl ProductFunction,
        grid: ProductGrid,
    ) -> Result<Self, CauchyError> {
        let sample = |part: Part| -> Vec<Complex64> {
            grid.rule(part)
                .nodes()
                .par_iter()
                .map(|&x| f.component(part, Complex64::new(x, 0.0)))
                .collect()
        };
        let (v1, v2) = (sample(Part::First), sample(Part::Second));
        Self::new(SampledProductFunction::new(grid, v1, v2)?)
    }

    pub fn samples(&self) -> &SampledProductFunction {
        &self.samples
    }

    pub fn exponent(&self) -> f64 {
        self.p
    }

    /// Componentwise `(∫|H_i|^p)^{1/p}`.
    pub fn norm(&self) -> Hyperbolic {
        self.samples.lpk_norm(self.p).expect("finite by construction")
    }
}

fn scalar_cauchy(h: &SampledProductFunction, part: Part, beta: Complex64) -> Complex64 {
    let rule = h.rule(part);
    let terms: Vec<Complex64> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .zip(h.values(part))
        .map(|((&x, &w), &v)| v * w / (x - beta))
        .collect();
    pairwise_sum(&terms) / Complex64::new(0.0, 2.0 * PI)
}

pub fn cauchy_integral(h: &BoundaryFunction, z: &Bicomplex) -> Result<Bicomplex, CauchyError> {
    let (b1, b2) = z.to_idempotent();
    if b1.im == 0.0 || b2.im == 0.0 {
        return Err(CauchyError::OnBoundary(*z));
    }
    Ok(Bicomplex::from_idempotent(
        scalar_cauchy(&h.samples, Part::First, b1),
        scalar_cauchy(&h.samples, Part::Second, b2),
    ))
}

/// `(C(Z) - C(Z*), F(Z))` for `Z` in the upper half-plane, where `Z*`
/// flips the sign of `x1` and `x2`.
pub fn jump_identity_check(
    h: &BoundaryFunction,
    z: &Bicomplex,
    f_exact: &impl ProductFunction,
) -> Result<(Bicomplex, Bicomplex), CauchyError> {
    if !in_upper_half_plane(z) {
        return Err(CauchyError::OutOfDomain(*z));
    }
    let lhs = cauchy_integral(h, z)? - cauchy_integral(h, &z.conjugate_star())?;
    Ok((lhs, f_exact.eval(z)))
}
