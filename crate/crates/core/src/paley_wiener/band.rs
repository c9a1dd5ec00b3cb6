//! Densities supported on a symmetric band `(-A, A)_𝔻` and their entire
//! extensions of exponential type.

use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use super::PwError;
use crate::algebra::{Bicomplex, DOrder, Hyperbolic};
use crate::product_fn::ProductFunction;
use crate::quadrature::{pairwise_sum, Part, ProductGrid, SampledProductFunction};
use crate::transform::{TransformError, GROWTH_GUARD};

#[derive(Clone, Debug, PartialEq)]
pub struct BandDensity {
    samples: SampledProductFunction,
    a: f64,
}

impl BandDensity {
    pub fn new(samples: SampledProductFunction, a: f64) -> Result<Self, PwError> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(PwError::InvalidDensity(format!("band half-width must be positive, got {a}")));
        }
        for part in Part::BOTH {
            let (lo, hi) = samples.rule(part).span();
            if lo < -a || hi > a {
                return Err(PwError::InvalidDensity(format!(
                    "nodes [{lo}, {hi}] leave the band (-{a}, {a})"
                )));
            }
        }
        if !samples.is_finite() {
            return Err(PwError::InvalidDensity("non-finite density sample".into()));
        }
        Ok(Self { samples, a })
    }

    pub fn samples(&self) -> &SampledProductFunction {
        &self.samples
    }

    pub fn half_width(&self) -> f64 {
        self.a
    }
}

/// `F_i(β) = ∫_{-A}^{A} 𝔉_i(t) e^{itβ} dt`; entire, so no domain guard.
impl ProductFunction for BandDensity {
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        let rule = self.samples.rule(part);
        let terms: Vec<Complex64> = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .zip(self.samples.values(part))
            .map(|((&t, &w), &v)| v * (Complex64::i() * t * beta).exp() * w)
            .collect();
        pairwise_sum(&terms)
    }
}

pub fn band_synthesize(density: &BandDensity, z: &Bicomplex) -> Bicomplex {
    density.eval(z)
}

/// The growth bound `‖F(Z)‖ₖ ≤ C exp{A‖Z‖ₖ}` with a real constant
/// `C = √2 · max_i ∫|𝔉_i| dt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentialTypeBound {
    pub c: f64,
    pub a: f64,
}

impl ExponentialTypeBound {
    /// `C exp{A‖Z‖ₖ}` as a hyperbolic number.
    pub fn bound_at(&self, z: &Bicomplex) -> Hyperbolic {
        z.hyperbolic_norm().map(|r| self.c * (self.a * r).exp())
    }

    pub fn check(&self, density: &BandDensity, z: &Bicomplex) -> DOrder {
        band_synthesize(density, z)
            .hyperbolic_norm()
            .leq_d(&self.bound_at(z))
    }
}

pub fn exponential_type_bound(density: &BandDensity) -> ExponentialTypeBound {
    let l1 = density
        .samples()
        .lpk_norm_pow(1.0)
        .expect("finite by construction");
    ExponentialTypeBound {
        c: SQRT_2 * l1.max_component(),
        a: density.half_width(),
    }
}

/// `∫ F_i(x) e^{-ε_i|x|} e^{-i t_i x} dx` per component for boundary samples
/// on the real line, with hyperbolic damping `ε` and point `t`.
pub fn epsilon_damped_transform(
    boundary: &SampledProductFunction,
    eps: Hyperbolic,
    t: Hyperbolic,
) -> Result<Bicomplex, PwError> {
    if !eps.is_positive() {
        return Err(PwError::NonPositiveEps(eps));
    }
    if !boundary.is_finite() {
        return Err(PwError::NonFinite);
    }
    let part = |p: Part, eps: f64, t: f64| {
        let rule = boundary.rule(p);
        let terms: Vec<Complex64> = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .zip(boundary.values(p))
            .map(|((&x, &w), &v)| v * Complex64::from_polar((-eps * x.abs()).exp(), -t * x) * w)
            .collect();
        pairwise_sum(&terms)
    };
    Ok(Bicomplex::from_idempotent(
        part(Part::First, eps.s1(), t.s1()),
        part(Part::Second, eps.s2(), t.s2()),
    ))
}

/// `Ω_α(W) = ∫_0^∞ F(u e^{iα}) exp{-W u e^{iα}} e^{iα} du` per component,
/// with `u_grid` a truncated grid on `(0, ∞)`.
pub fn ray_transform(
    f: &impl ProductFunction,
    alpha: f64,
    w: &Bicomplex,
    u_grid: &ProductGrid,
) -> Result<Bicomplex, PwError> {
    let dir = Complex64::from_polar(1.0, alpha);
    let (w1, w2) = w.to_idempotent();
    let part = |p: Part, wi: Complex64| -> Result<Complex64, PwError> {
        let rule = u_grid.rule(p);
        let mut abs_total = 0.0;
        let terms: Vec<Complex64> = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .map(|(&u, &q)| {
                let z = dir * u;
                let term = f.component(p, z) * (-wi * z).exp() * q;
                abs_total += term.norm();
                term
            })
            .collect();
        if !(abs_total <= GROWTH_GUARD) {
            return Err(TransformError::Divergence(*w).into());
        }
        Ok(pairwise_sum(&terms) * dir)
    };
    Ok(Bicomplex::from_idempotent(part(Part::First, w1)?, part(Part::Second, w2)?))
}
