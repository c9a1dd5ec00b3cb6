//! Recovery of a half-line density from its extension along one horizontal
//! line: `𝔉(t) = exp{t(x₁ - k x₂)} F̂_{x₁,x₂}(t)` with
//! `F̂_{x₁,x₂}(t) = (1/2π) ∫ F(x₀ + i x₁ + j x₂) e^{-i t x₀} dx₀`.
//!
//! Along the line `F` decays only like `1/x₀`, and the weight `e^{t h}`
//! amplifies whatever the truncated quadrature misses. Before transforming,
//! the slowly decaying part of `F` is therefore fitted by a short series
//! `Σ a_m (γ - iβ)^{-m}` whose density `Σ a_m t^{m-1} e^{-γt}/(m-1)!` is known
//! in closed form. Only the fast-decaying remainder goes through quadrature.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::{HorizontalLine, PwError};
use crate::product_fn::ProductFunction;
use crate::quadrature::{pairwise_sum, Part, ProductGrid, QuadratureRule, SampledProductFunction};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecoveryOptions {
    /// Number of fitted terms `M`; `0` disables tail subtraction and leaves a
    /// plain truncated quadrature.
    pub tail_terms: usize,
    /// Pole parameter `γ > 0` of the tail basis `(γ - iβ)^{-m}`.
    pub tail_decay: f64,
    /// The fit uses the samples with `|x₀| ≥ fit_from · max|x₀|`.
    pub fit_from: f64,
}

impl Default for RecoveryOptions {
    fn default() -> Self {
        Self {
            tail_terms: 8,
            tail_decay: 0.5,
            fit_from: 0.25,
        }
    }
}

impl RecoveryOptions {
    /// Plain truncated quadrature with no tail model.
    pub fn plain() -> Self {
        Self {
            tail_terms: 0,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), PwError> {
        if self.tail_terms > 0 {
            if !(self.tail_decay > 0.0 && self.tail_decay.is_finite()) {
                return Err(PwError::TailFit(format!(
                    "tail decay must be positive, got {}",
                    self.tail_decay
                )));
            }
            if !(0.0..1.0).contains(&self.fit_from) {
                return Err(PwError::TailFit(format!(
                    "fit_from must lie in [0, 1), got {}",
                    self.fit_from
                )));
            }
        }
        Ok(())
    }
}

/// The fitted tail `Σ a_m (γ - iβ)^{-m}` of one component.
#[derive(Clone, Debug, PartialEq)]
pub struct TailModel {
    coefficients: Vec<Complex64>,
    decay: f64,
}

impl TailModel {
    pub fn zero() -> Self {
        Self {
            coefficients: Vec::new(),
            decay: 1.0,
        }
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn eval(&self, beta: Complex64) -> Complex64 {
        let w = 1.0 / (self.decay - Complex64::i() * beta);
        let mut power = w;
        let mut sum = Complex64::default();
        for &a in &self.coefficients {
            sum += a * power;
            power *= w;
        }
        sum
    }

    /// Density of the model: zero for `t < 0`, the midpoint `a₁/2` of the
    /// jump at `t = 0`.
    pub fn density(&self, t: f64) -> Complex64 {
        if t < 0.0 || self.coefficients.is_empty() {
            return Complex64::default();
        }
        if t == 0.0 {
            return self.coefficients[0] * 0.5;
        }
        let mut term = (-self.decay * t).exp();
        let mut sum = Complex64::default();
        for (m, &a) in self.coefficients.iter().enumerate() {
            if m > 0 {
                term *= t / m as f64;
            }
            sum += a * term;
        }
        sum
    }

    /// Least-squares fit to `values` at the points `nodes + i·height`, using
    /// only the samples with `|node| ≥ fit_from · max|node|`.
    pub fn fit(
        nodes: &[f64],
        values: &[Complex64],
        height: f64,
        opts: &RecoveryOptions,
    ) -> Result<Self, PwError> {
        let terms = opts.tail_terms;
        if terms == 0 {
            return Ok(Self::zero());
        }
        let reach = nodes.iter().fold(0.0_f64, |m, u| m.max(u.abs()));
        let start = opts.fit_from * reach;
        let rows: Vec<usize> = (0..nodes.len()).filter(|&k| nodes[k].abs() >= start).collect();
        if rows.len() < 2 * terms {
            return Err(PwError::TailFit(format!(
                "{} fit samples for {terms} terms",
                rows.len()
            )));
        }
        // Columns (s·w)^m keep the design matrix well scaled.
        let scale = start.max(1.0);
        let gamma = opts.tail_decay;
        let basis = |k: usize| {
            let beta = Complex64::new(nodes[k], height);
            scale / (gamma - Complex64::i() * beta)
        };
        let a = DMatrix::from_fn(rows.len(), terms, |r, m| basis(rows[r]).powi(m as i32 + 1));
        let b = DMatrix::from_fn(rows.len(), 1, |r, _| values[rows[r]]);
        let svd = a.svd(true, true);
        let x = svd
            .solve(&b, 1e-14)
            .map_err(|e| PwError::TailFit(e.to_string()))?;
        let coefficients = (0..terms)
            .map(|m| x[(m, 0)] * scale.powi(m as i32 + 1))
            .collect::<Vec<_>>();
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(PwError::TailFit("non-finite coefficients".into()));
        }
        Ok(Self {
            coefficients,
            decay: gamma,
        })
    }
}

/// The analysis transform along one component line, evaluated on `t_rule`.
fn recover_component(
    f: &impl ProductFunction,
    part: Part,
    height: f64,
    rule: &QuadratureRule,
    t_nodes: &[f64],
    opts: &RecoveryOptions,
) -> Result<Vec<Complex64>, PwError> {
    let nodes = rule.nodes();
    let values: Vec<Complex64> = nodes
        .par_iter()
        .map(|&u| f.component(part, Complex64::new(u, height)))
        .collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(PwError::NonFinite);
    }
    let tail = TailModel::fit(nodes, &values, height, opts)?;
    let residual: Vec<Complex64> = nodes
        .iter()
        .zip(&values)
        .zip(rule.weights())
        .map(|((&u, &v), &w)| (v - tail.eval(Complex64::new(u, height))) * w)
        .collect();
    Ok(t_nodes
        .par_iter()
        .map(|&t| {
            let terms: Vec<Complex64> = nodes
                .iter()
                .zip(&residual)
                .map(|(&u, &r)| r * Complex64::from_polar(1.0, -t * u))
                .collect();
            pairwise_sum(&terms) * ((t * height).exp() / (2.0 * PI)) + tail.density(t)
        })
        .collect())
}

/// Recovers the density on `t_grid` from `F` along `line`, integrating over
/// `x0_grid` (a truncated real-line grid).
pub fn recover(
    f: &impl ProductFunction,
    line: &HorizontalLine,
    t_grid: &ProductGrid,
    x0_grid: &ProductGrid,
    opts: &RecoveryOptions,
) -> Result<SampledProductFunction, PwError> {
    opts.validate()?;
    let part = |p: Part| {
        recover_component(
            f,
            p,
            line.height(p),
            x0_grid.rule(p),
            t_grid.rule(p).nodes(),
            opts,
        )
    };
    let v1 = part(Part::First)?;
    let v2 = part(Part::Second)?;
    Ok(SampledProductFunction::new(t_grid.clone(), v1, v2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product_fn::{ProductFn, Zero};
    use crate::quadrature::{make_grid, DInterval, Scheme};

    #[test]
    fn model_density_matches_its_transform() {
        // ∫₀^∞ t^{m-1} e^{-γt}/(m-1)! e^{itβ} dt = (γ - iβ)^{-m}
        let model = TailModel {
            coefficients: vec![Complex64::new(1.0, 0.5), Complex64::new(-0.3, 0.0), Complex64::new(0.0, 2.0)],
            decay: 0.7,
        };
        let rule = QuadratureRule::gauss_legendre(0.0, 80.0, 4096).unwrap();
        for beta in [Complex64::new(0.0, 0.5), Complex64::new(3.0, 1.0), Complex64::new(-2.0, 0.1)] {
            let direct = rule.integrate(|t| model.density(t) * (Complex64::i() * t * beta).exp());
            assert!((direct - model.eval(beta)).norm() < 1e-12, "{beta}");
        }
        assert_eq!(model.density(-1.0), Complex64::default());
        assert_eq!(model.density(0.0), Complex64::new(0.5, 0.25));
    }

    #[test]
    fn fit_reproduces_a_series_in_the_basis() {
        let opts = RecoveryOptions::default();
        let exact = TailModel {
            coefficients: (0..opts.tail_terms).map(|m| Complex64::new(0.5_f64.powi(m as i32), 0.1)).collect(),
            decay: opts.tail_decay,
        };
        let rule = QuadratureRule::gauss_legendre(-100.0, 100.0, 1024).unwrap();
        let values: Vec<_> = rule.nodes().iter().map(|&u| exact.eval(Complex64::new(u, 1.0))).collect();
        let fitted = TailModel::fit(rule.nodes(), &values, 1.0, &opts).unwrap();
        // High-order coefficients are poorly determined far out on the line;
        // the leading one and the fitted values there are what matter.
        assert!((fitted.coefficients()[0] - exact.coefficients()[0]).norm() < 1e-10);
        for (&u, v) in rule.nodes().iter().zip(&values).filter(|(u, _)| u.abs() >= 25.0) {
            assert!((fitted.eval(Complex64::new(u, 1.0)) - v).norm() < 1e-12);
        }
    }

    #[test]
    fn options_are_validated() {
        let grid = make_grid(&DInterval::real_line(), 64, Scheme::GaussLegendre, Some(10.0)).unwrap();
        let line = HorizontalLine::new(1.0, 0.0).unwrap();
        let bad = RecoveryOptions {
            tail_decay: -1.0,
            ..Default::default()
        };
        assert!(recover(&Zero, &line, &grid, &grid, &bad).is_err());
        let few = RecoveryOptions {
            tail_terms: 40,
            fit_from: 0.99,
            ..Default::default()
        };
        assert!(matches!(recover(&Zero, &line, &grid, &grid, &few), Err(PwError::TailFit(_))));
    }

    #[test]
    fn zero_recovers_to_zero() {
        let x0 = make_grid(&DInterval::real_line(), 512, Scheme::GaussLegendre, Some(50.0)).unwrap();
        let t = make_grid(&DInterval::diagonal(0.1, 5.0).unwrap(), 32, Scheme::GaussLegendre, None).unwrap();
        let line = HorizontalLine::new(1.0, 0.0).unwrap();
        let r = recover(&Zero, &line, &t, &x0, &RecoveryOptions::default()).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn exponential_density_round_trip() {
        let f = ProductFn::diagonal(|b: Complex64| 1.0 / (1.0 - Complex64::i() * b));
        let x0 = make_grid(&DInterval::real_line(), 1 << 13, Scheme::GaussLegendre, Some(200.0)).unwrap();
        let t = make_grid(&DInterval::diagonal(0.0, 6.0).unwrap(), 64, Scheme::GaussLegendre, None).unwrap();
        let line = HorizontalLine::new(1.0, 0.5).unwrap();
        let r = recover(&f, &line, &t, &x0, &RecoveryOptions::default()).unwrap();
        for part in Part::BOTH {
            for (&s, v) in t.rule(part).nodes().iter().zip(r.values(part)) {
                assert!((v - (-s).exp()).norm() < 1e-6, "t = {s}: {v}");
            }
        }
        // Without the tail model the jump at t = 0 and the weight e^{th}
        // leave errors many orders of magnitude larger.
        let plain = recover(&f, &line, &t, &x0, &RecoveryOptions::plain()).unwrap();
        let worst = t
            .rule(Part::Second)
            .nodes()
            .iter()
            .zip(plain.values(Part::Second))
            .map(|(&s, v)| (v - (-s).exp()).norm())
            .fold(0.0, f64::max);
        assert!(worst > 1e-4);
    }
}
