use num_complex::Complex64;

use super::PwError;
use crate::algebra::Bicomplex;
use crate::product_fn::ProductFunction;
use crate::quadrature::{pairwise_sum, Part, QuadratureRule};

/// Rectangle with vertices `±α + i` and `±α + iy` on each component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourRect {
    alpha: f64,
    y: f64,
}

impl ContourRect {
    pub fn new(alpha: f64, y: f64) -> Result<Self, PwError> {
        if !(alpha > 0.0 && alpha.is_finite() && y > 1.0 && y.is_finite()) {
            return Err(PwError::InvalidRect { alpha, y });
        }
        Ok(Self { alpha, y })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Vertices in counterclockwise order starting at `-α + i`.
    pub fn vertices(&self) -> [Complex64; 4] {
        let (a, y) = (self.alpha, self.y);
        [
            Complex64::new(-a, 1.0),
            Complex64::new(a, 1.0),
            Complex64::new(a, y),
            Complex64::new(-a, y),
        ]
    }
}

fn edge_integral(
    g: impl Fn(Complex64) -> Complex64,
    from: Complex64,
    to: Complex64,
    rule: &QuadratureRule,
) -> Complex64 {
    let d = to - from;
    let terms: Vec<Complex64> = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&s, &w)| g(from + d * s) * w)
        .collect();
    pairwise_sum(&terms) * d
}

/// `∮ F_i(β) e^{-itβ} dβ` around the rectangle on each component, with
/// `n_edge` Gauss-Legendre nodes per edge.
pub fn rectangle_contour_integral(
    f: &impl ProductFunction,
    t: f64,
    rect: &ContourRect,
    n_edge: usize,
) -> Result<Bicomplex, PwError> {
    let rule = QuadratureRule::gauss_legendre(0.0, 1.0, n_edge)?;
    let v = rect.vertices();
    let part = |p: Part| {
        let g = |b: Complex64| f.component(p, b) * (-Complex64::i() * t * b).exp();
        let edges: Vec<Complex64> = (0..4)
            .map(|k| edge_integral(g, v[k], v[(k + 1) % 4], &rule))
            .collect();
        pairwise_sum(&edges)
    };
    let value = Bicomplex::from_idempotent(part(Part::First), part(Part::Second));
    if value.is_finite() {
        Ok(value)
    } else {
        Err(PwError::NonFinite)
    }
}
