//! The bicomplex Fourier transform and its inverse.
//!
//! With the idempotent split `Z = e β1 + e† β2` the transform of
//! `F = e F1 + e† F2` is `e 𝓕(F1)(β1) + e† 𝓕(F2)(β2)`, so everything reduces
//! to two scalar quadratures. The normalization is an explicit
//! [`TransformConvention`].

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Bicomplex, Hyperbolic};
use crate::quadrature::{pairwise_sum, Part, ProductGrid, QuadError, QuadratureRule, SampledProductFunction};

/// Quadrature sums whose absolute terms add up beyond this are treated as
/// divergent (the kernel grows faster than the integrand decays).
pub const GROWTH_GUARD: f64 = 1e12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TransformError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error("kernel sum diverges at {0} (partial sums exceed {GROWTH_GUARD:e})")]
    Divergence(Bicomplex),
    #[error("invalid transform convention: {0}")]
    Convention(String),
}

/// Normalization and sign of the transform pair.
///
/// The forward (analysis) transform is
/// `c ∫ F(t) exp{-i s t Z} dt` and the inverse is
/// `1/(2π c) ∫ G(t) exp{+i s t Z} dt`, so inverse ∘ forward is the identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformConvention {
    forward_prefactor: f64,
    sign: f64,
}

impl Default for TransformConvention {
    /// Forward prefactor `1/(2π)`, synthesis prefactor `1`.
    fn default() -> Self {
        Self::analysis()
    }
}

impl TransformConvention {
    pub fn new(forward_prefactor: f64, sign: i8) -> Result<Self, TransformError> {
        if !(forward_prefactor.is_finite() && forward_prefactor > 0.0) {
            return Err(TransformError::Convention(format!(
                "prefactor must be positive and finite, got {forward_prefactor}"
            )));
        }
        if sign != 1 && sign != -1 {
            return Err(TransformError::Convention(format!("sign must be ±1, got {sign}")));
        }
        Ok(Self {
            forward_prefactor,
            sign: f64::from(sign),
        })
    }

    /// Forward `1/(2π)`, inverse `1`.
    pub fn analysis() -> Self {
        Self {
            forward_prefactor: 1.0 / (2.0 * PI),
            sign: 1.0,
        }
    }

    /// Forward `1`, inverse `1/(2π)`.
    pub fn unnormalized() -> Self {
        Self {
            forward_prefactor: 1.0,
            sign: 1.0,
        }
    }

    /// `1/√(2π)` both ways.
    pub fn symmetric() -> Self {
        Self {
            forward_prefactor: 1.0 / (2.0 * PI).sqrt(),
            sign: 1.0,
        }
    }

    pub fn forward_prefactor(&self) -> f64 {
        self.forward_prefactor
    }

    pub fn inverse_prefactor(&self) -> f64 {
        1.0 / (2.0 * PI * self.forward_prefactor)
    }

    pub fn sign(&self) -> f64 {
        self.sign
    }

    /// Factor turning `∫|F̂|²` into `∫|F|²`.
    pub fn plancherel_factor(&self) -> f64 {
        1.0 / (2.0 * PI * self.forward_prefactor * self.forward_prefactor)
    }
}

/// `prefactor · Σ w_k v_k exp{i·freq·t_k·β}` with the divergence guard.
pub(crate) fn kernel_sum(
    rule: &QuadratureRule,
    values: &[Complex64],
    beta: Complex64,
    freq: f64,
    prefactor: f64,
) -> Option<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let mut abs_total = 0.0;
    let terms: Vec<Complex64> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .zip(values)
        .map(|((&t, &w), &v)| {
            let term = v * (i * freq * t * beta).exp() * w;
            abs_total += term.norm();
            term
        })
        .collect();
    if !(abs_total <= GROWTH_GUARD) {
        return None;
    }
    Some(pairwise_sum(&terms) * prefactor)
}

/// Transform of one component at a complex point.
pub fn scalar_fourier(
    rule: &QuadratureRule,
    values: &[Complex64],
    beta: Complex64,
    conv: &TransformConvention,
) -> Option<Complex64> {
    kernel_sum(rule, values, beta, -conv.sign, conv.forward_prefactor)
}

fn evaluate(
    f: &SampledProductFunction,
    points: &[Bicomplex],
    freq: f64,
    prefactor: f64,
) -> Result<Vec<Bicomplex>, TransformError> {
    if !f.is_finite() {
        return Err(QuadError::NonFinite.into());
    }
    points
        .par_iter()
        .map(|z| {
            let (b1, b2) = z.to_idempotent();
            let part = |p: Part, b: Complex64| {
                kernel_sum(f.rule(p), f.values(p), b, freq, prefactor)
                    .ok_or(TransformError::Divergence(*z))
            };
            Ok(Bicomplex::from_idempotent(
                part(Part::First, b1)?,
                part(Part::Second, b2)?,
            ))
        })
        .collect()
}

/// Forward transform `c (e ∫F1 e^{-i s t β1} dt + e† ∫F2 e^{-i s t β2} dt)`
/// at each output point.
pub fn bicomplex_fourier(
    f: &SampledProductFunction,
    points: &[Bicomplex],
    conv: &TransformConvention,
) -> Result<Vec<Bicomplex>, TransformError> {
    evaluate(f, points, -conv.sign, conv.forward_prefactor)
}

/// Inverse transform with the conjugate kernel and complementary prefactor.
pub fn inverse_fourier(
    g: &SampledProductFunction,
    points: &[Bicomplex],
    conv: &TransformConvention,
) -> Result<Vec<Bicomplex>, TransformError> {
    evaluate(g, points, conv.sign, conv.inverse_prefactor())
}

/// Transform of a sampled function evaluated on the nodes of a frequency
/// grid: component `i` is sampled at the real points of `freq.rule_i`.
pub fn fourier_on_grid(
    f: &SampledProductFunction,
    freq: &ProductGrid,
    conv: &TransformConvention,
) -> Result<SampledProductFunction, TransformError> {
    if !f.is_finite() {
        return Err(QuadError::NonFinite.into());
    }
    let part = |p: Part| -> Result<Vec<Complex64>, TransformError> {
        freq.rule(p)
            .nodes()
            .par_iter()
            .map(|&w| {
                scalar_fourier(f.rule(p), f.values(p), Complex64::new(w, 0.0), conv)
                    .ok_or(TransformError::Divergence(Bicomplex::real(w)))
            })
            .collect()
    };
    let v1 = part(Part::First)?;
    // Diagonal inputs (same samples and grids on both components) share the work.
    let diagonal = f.rule(Part::First) == f.rule(Part::Second)
        && f.values(Part::First) == f.values(Part::Second)
        && freq.rule(Part::First) == freq.rule(Part::Second);
    let v2 = if diagonal { v1.clone() } else { part(Part::Second)? };
    Ok(SampledProductFunction::new(freq.clone(), v1, v2)?)
}

/// `(‖F‖²ₖ, normalized ‖F̂‖²ₖ)`, the transform side integrated on `freq`.
pub fn plancherel_check(
    f: &SampledProductFunction,
    conv: &TransformConvention,
    freq: &ProductGrid,
) -> Result<(Hyperbolic, Hyperbolic), TransformError> {
    let lhs = f.l2k_norm_squared()?;
    let hat = fourier_on_grid(f, freq, conv)?;
    let rhs = hat.l2k_norm_squared()?.scale(conv.plancherel_factor());
    Ok((lhs, rhs))
}

/// Writes `x0,x1,x2,x3,re_beta1,im_beta1,re_beta2,im_beta2`: the evaluation
/// point followed by the idempotent components of the value there.
pub fn write_values_csv<W: Write>(
    writer: W,
    points: &[Bicomplex],
    values: &[Bicomplex],
) -> Result<(), QuadError> {
    let mut w = csv::Writer::from_writer(writer);
    let err = |e: csv::Error| QuadError::Csv(e.to_string());
    w.write_record([
        "x0", "x1", "x2", "x3", "re_beta1", "im_beta1", "re_beta2", "im_beta2",
    ])
    .map_err(err)?;
    for (z, v) in points.iter().zip(values) {
        let (b1, b2) = v.to_idempotent();
        let row = [z.x0, z.x1, z.x2, z.x3, b1.re, b1.im, b2.re, b2.im];
        w.write_record(row.iter().map(|x| x.to_string())).map_err(err)?;
    }
    w.flush().map_err(|e| QuadError::Csv(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{make_grid, DInterval, Scheme};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn line_grid(n: usize, t: f64) -> ProductGrid {
        make_grid(&DInterval::real_line(), n, Scheme::GaussLegendre, Some(t)).unwrap()
    }

    /// Independent oracle: composite Simpson rule on a fine uniform grid.
    fn simpson(f: impl Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for k in 1..n {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            s += f(a + h * k as f64) * w;
        }
        s * (h / 3.0)
    }

    #[test]
    fn double_exponential_pair() {
        let f = SampledProductFunction::diagonal(line_grid(1 << 12, 40.0), |t| c((-t.abs()).exp()));
        let pts: Vec<_> = [0.0, 0.5, 2.0].iter().map(|&z| Bicomplex::real(z)).collect();
        let out = bicomplex_fourier(&f, &pts, &TransformConvention::unnormalized()).unwrap();
        for (z, v) in pts.iter().zip(&out) {
            let expected = 2.0 / (1.0 + z.x0 * z.x0);
            assert!((*v - Bicomplex::real(expected)).max_abs() < 1e-9, "{z}: {v}");
        }
        assert!((out[0] - Bicomplex::real(2.0)).max_abs() < 1e-9);
    }

    #[test]
    fn zero_maps_to_zero() {
        let f = SampledProductFunction::zeros(line_grid(64, 5.0));
        let pts = [Bicomplex::new(0.3, 0.1, -0.2, 1.0)];
        for conv in [TransformConvention::analysis(), TransformConvention::symmetric()] {
            assert_eq!(bicomplex_fourier(&f, &pts, &conv).unwrap()[0], Bicomplex::ZERO);
            assert_eq!(inverse_fourier(&f, &pts, &conv).unwrap()[0], Bicomplex::ZERO);
        }
    }

    #[test]
    fn gaussian_with_symmetric_prefactor() {
        let f = SampledProductFunction::diagonal(line_grid(1024, 12.0), |t| c((-0.5 * t * t).exp()));
        let out = bicomplex_fourier(&f, &[Bicomplex::ONE], &TransformConvention::symmetric()).unwrap();
        let oracle = simpson(
            |t| c((-0.5 * t * t).exp()) * Complex64::new(0.0, -t).exp(),
            -12.0,
            12.0,
            20_000,
        ) / (2.0 * PI).sqrt();
        assert!((oracle.re - 0.6065306597126334).abs() < 1e-12);
        let (b1, b2) = out[0].to_idempotent();
        assert!((b1 - oracle).norm() < 1e-12 && (b2 - oracle).norm() < 1e-12);
    }

    #[test]
    fn idempotent_split_is_structural() {
        let grid = line_grid(256, 8.0);
        let f = SampledProductFunction::from_fn(
            grid,
            |t| c((-t * t).exp()),
            |t| Complex64::new(t, 1.0) * (-t * t).exp(),
        );
        let conv = TransformConvention::analysis();
        let (b1, b2) = (Complex64::new(0.7, -0.2), Complex64::new(-1.1, 0.4));
        let z = Bicomplex::from_idempotent(b1, b2);
        let v = bicomplex_fourier(&f, &[z], &conv).unwrap()[0];
        let s1 = scalar_fourier(f.rule(Part::First), f.values(Part::First), b1, &conv).unwrap();
        let s2 = scalar_fourier(f.rule(Part::Second), f.values(Part::Second), b2, &conv).unwrap();
        assert!((v.beta1() - s1).norm() < 1e-12);
        assert!((v.beta2() - s2).norm() < 1e-12);
    }

    #[test]
    fn inverse_of_lorentzian() {
        // G = 2/(1+t²) decays slowly; truncate far out.
        let g = SampledProductFunction::diagonal(line_grid(1 << 16, 2e4), |t| c(2.0 / (1.0 + t * t)));
        let out = inverse_fourier(&g, &[Bicomplex::ZERO], &TransformConvention::unnormalized()).unwrap();
        // tail beyond T: (1/2π)·2·2/T
        assert!((out[0] - Bicomplex::ONE).max_abs() < 1e-4, "{}", out[0]);
    }

    #[test]
    fn growth_guard_trips() {
        let f = SampledProductFunction::diagonal(line_grid(256, 40.0), |_| c(1.0));
        let z = Bicomplex::I.scale(2.0);
        assert!(matches!(
            bicomplex_fourier(&f, &[z], &TransformConvention::unnormalized()),
            Err(TransformError::Divergence(_))
        ));
    }

    #[test]
    fn convention_validation() {
        assert!(TransformConvention::new(0.0, 1).is_err());
        assert!(TransformConvention::new(1.0, 0).is_err());
        let conv = TransformConvention::new(0.25, -1).unwrap();
        assert!((conv.forward_prefactor() * conv.inverse_prefactor() - 1.0 / (2.0 * PI)).abs() < 1e-16);
    }

    #[test]
    fn plancherel_scaling() {
        let grid = line_grid(1024, 12.0);
        let f = SampledProductFunction::from_fn(
            grid,
            |t| c((-0.5 * t * t).exp()),
            |t| c(2.0 * (-0.5 * t * t).exp()),
        );
        let freq = line_grid(512, 12.0);
        let (lhs, rhs) = plancherel_check(&f, &TransformConvention::symmetric(), &freq).unwrap();
        let ratio = rhs.s2() / rhs.s1();
        assert!((ratio - 4.0).abs() < 1e-12);
        assert!((lhs.s1() - PI.sqrt()).abs() < 1e-12);
        assert!((rhs.s1() - lhs.s1()).abs() < 1e-10);
    }
}
