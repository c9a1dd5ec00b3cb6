use std::f64::consts::PI;

use num_complex::Complex64;

use super::PwError;
use crate::algebra::{Bicomplex, Hyperbolic};
use crate::product_fn::ProductFunction;
use crate::quadrature::{in_upper_half_plane, pairwise_sum, Part, ProductGrid, SampledProductFunction};
use crate::transform::kernel_sum;

/// A density `𝔉` supported on `(0, ∞)_𝔻`, sampled on a truncated grid.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPlaneDensity {
    samples: SampledProductFunction,
}

impl HalfPlaneDensity {
    pub fn new(samples: SampledProductFunction) -> Result<Self, PwError> {
        for part in Part::BOTH {
            if samples.rule(part).nodes().iter().any(|&t| t <= 0.0) {
                return Err(PwError::InvalidDensity(
                    "half-plane density nodes must be positive".into(),
                ));
            }
        }
        if !samples.is_finite() {
            return Err(PwError::InvalidDensity("non-finite density sample".into()));
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &SampledProductFunction {
        &self.samples
    }

    pub fn l2k_norm_squared(&self) -> Hyperbolic {
        self.samples
            .l2k_norm_squared()
            .expect("finite by construction")
    }
}

/// `F_i(β) = ∫_0^∞ 𝔉_i(t) e^{itβ} dt` by quadrature. Outside the upper
/// half-plane the sum may grow without bound; non-convergent sums give NaN.
impl ProductFunction for HalfPlaneDensity {
    fn component(&self, part: Part, beta: Complex64) -> Complex64 {
        kernel_sum(
            self.samples.rule(part),
            self.samples.values(part),
            beta,
            1.0,
            1.0,
        )
        .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
    }
}

/// Half-plane extension `F(Z) = ∫_{(0,∞)_𝔻} 𝔉(t) exp{itZ} dt ⊙ dt†`.
pub fn extend(density: &HalfPlaneDensity, z: &Bicomplex) -> Result<Bicomplex, PwError> {
    if !in_upper_half_plane(z) {
        return Err(PwError::OutOfDomain(*z));
    }
    Ok(density.eval(z))
}

/// `exp{-t(x1 - k x2)} = e·e^{-t(x1-x2)} + e†·e^{-t(x1+x2)}`, the hyperbolic
/// modulus of `exp{itZ}`.
pub fn kernel_norm(t: f64, z: &Bicomplex) -> Hyperbolic {
    Hyperbolic::from_idempotent((-t * (z.x1 - z.x2)).exp(), (-t * (z.x1 + z.x2)).exp())
}

/// The horizontal line `{x0 + i x1 + j x2 + k x3}` at fixed heights
/// `x1 > |x2|`. On component `i` it is the complex line `Im β = h_i` with
/// `h_1 = x1 - x2`, `h_2 = x1 + x2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HorizontalLine {
    x1: f64,
    x2: f64,
}

impl HorizontalLine {
    pub fn new(x1: f64, x2: f64) -> Result<Self, PwError> {
        if !(x1 > x2.abs()) || !x1.is_finite() {
            return Err(PwError::InvalidLine { x1, x2 });
        }
        Ok(Self { x1, x2 })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn height(&self, part: Part) -> f64 {
        match part {
            Part::First => self.x1 - self.x2,
            Part::Second => self.x1 + self.x2,
        }
    }

    /// The point with the given real part on component `part`.
    pub fn point(&self, part: Part, re: f64) -> Complex64 {
        Complex64::new(re, self.height(part))
    }

    /// The bicomplex point `x0 + i x1 + j x2` (with `x3 = 0`).
    pub fn at(&self, x0: f64) -> Bicomplex {
        Bicomplex::new(x0, self.x1, self.x2, 0.0)
    }
}

/// `(1/2π) ∫ ‖F‖ₖ² dx0` along a horizontal line, componentwise.
pub fn horizontal_line_energy(
    f: &impl ProductFunction,
    line: &HorizontalLine,
    x0_grid: &ProductGrid,
) -> Result<Hyperbolic, PwError> {
    let energy = |part: Part| -> Result<f64, PwError> {
        let rule = x0_grid.rule(part);
        let terms: Vec<f64> = rule
            .nodes()
            .iter()
            .zip(rule.weights())
            .map(|(&u, &w)| w * f.component(part, line.point(part, u)).norm_sqr())
            .collect();
        let e = pairwise_sum(&terms) / (2.0 * PI);
        if e.is_finite() {
            Ok(e)
        } else {
            Err(PwError::NonFinite)
        }
    };
    Ok(Hyperbolic::from_idempotent(
        energy(Part::First)?,
        energy(Part::Second)?,
    ))
}

/// Componentwise supremum of the line energies.
pub fn sup_energy(
    f: &impl ProductFunction,
    lines: &[HorizontalLine],
    x0_grid: &ProductGrid,
) -> Result<Hyperbolic, PwError> {
    let (first, rest) = lines.split_first().ok_or(PwError::EmptyLines)?;
    let mut sup = horizontal_line_energy(f, first, x0_grid)?;
    for line in rest {
        sup = sup.sup(&horizontal_line_energy(f, line, x0_grid)?);
    }
    Ok(sup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product_fn::{ProductFn, Zero};
    use crate::quadrature::{make_grid, DInterval, Scheme};
    use approx::assert_abs_diff_eq;

    fn exp_density(n: usize, t: f64) -> HalfPlaneDensity {
        let grid = make_grid(&DInterval::half_line(), n, Scheme::GaussLegendre, Some(t)).unwrap();
        HalfPlaneDensity::new(SampledProductFunction::diagonal(grid, |t| Complex64::new((-t).exp(), 0.0)))
            .unwrap()
    }

    fn closed_form() -> impl ProductFunction {
        ProductFn::diagonal(|b: Complex64| 1.0 / (1.0 - Complex64::i() * b))
    }

    #[test]
    fn extension_at_i() {
        let d = exp_density(2048, 40.0);
        let v = extend(&d, &Bicomplex::I).unwrap();
        assert!((v - Bicomplex::real(0.5)).max_abs() < 1e-12);
        let z = Bicomplex::new(0.0, 1.0, 0.5, 0.0);
        let (b1, b2) = z.to_idempotent();
        assert_eq!((b1, b2), (Complex64::new(0.0, 0.5), Complex64::new(0.0, 1.5)));
        let v = extend(&d, &z).unwrap();
        let expected = Bicomplex::from_idempotent(Complex64::new(2.0 / 3.0, 0.0), Complex64::new(0.4, 0.0));
        assert!((v - expected).max_abs() < 1e-12);
        assert!((v - closed_form().eval(&z)).max_abs() < 1e-12);
    }

    #[test]
    fn extension_rejects_points_outside_half_plane() {
        let d = exp_density(64, 40.0);
        assert!(matches!(
            extend(&d, &Bicomplex::new(0.0, 1.0, 2.0, 0.0)),
            Err(PwError::OutOfDomain(_))
        ));
        assert!(extend(&d, &Bicomplex::ZERO).is_err());
    }

    #[test]
    fn zero_density_extends_to_zero() {
        let grid = make_grid(&DInterval::half_line(), 64, Scheme::GaussLegendre, Some(10.0)).unwrap();
        let d = HalfPlaneDensity::new(SampledProductFunction::zeros(grid)).unwrap();
        assert_eq!(extend(&d, &Bicomplex::I).unwrap(), Bicomplex::ZERO);
    }

    #[test]
    fn density_nodes_must_be_positive() {
        let grid = make_grid(&DInterval::half_line(), 8, Scheme::Trapezoid, Some(10.0)).unwrap();
        assert!(HalfPlaneDensity::new(SampledProductFunction::zeros(grid)).is_err());
    }

    #[test]
    fn kernel_norm_examples() {
        assert_eq!(kernel_norm(0.0, &Bicomplex::new(0.3, 2.0, 1.0, -4.0)), Hyperbolic::ONE);
        let h = kernel_norm(1.0, &Bicomplex::I.scale(2.0));
        assert_abs_diff_eq!(h.s1(), (-2.0_f64).exp(), epsilon = 1e-16);
        assert_abs_diff_eq!(h.s2(), (-2.0_f64).exp(), epsilon = 1e-16);
        let z = Bicomplex::new(0.0, 2.0, 1.0, 0.0);
        let h = kernel_norm(1.0, &z);
        let direct = (Bicomplex::I * z).exp().hyperbolic_norm();
        assert_abs_diff_eq!(h.s1(), (-1.0_f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(h.s2(), (-3.0_f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(h.s1(), direct.s1(), epsilon = 1e-15);
        assert_abs_diff_eq!(h.s2(), direct.s2(), epsilon = 1e-15);
    }

    #[test]
    fn line_validation() {
        assert!(HorizontalLine::new(1.0, 1.0).is_err());
        assert!(HorizontalLine::new(0.0, 0.0).is_err());
        assert!(HorizontalLine::new(f64::NAN, 0.0).is_err());
        let l = HorizontalLine::new(2.0, -0.5).unwrap();
        assert_eq!((l.height(Part::First), l.height(Part::Second)), (2.5, 1.5));
        let z = l.at(0.7);
        assert_eq!(z.beta1(), l.point(Part::First, 0.7));
        assert_eq!(z.beta2(), l.point(Part::Second, 0.7));
    }

    #[test]
    fn line_energies() {
        let grid = make_grid(&DInterval::real_line(), 1 << 14, Scheme::GaussLegendre, Some(2000.0)).unwrap();
        let f = closed_form();
        // (1/2π) ∫ du / ((1+h)² + u²) = 1/(2(1+h)), truncation tail ≈ 1/(π T)
        let line = HorizontalLine::new(1.0, 0.0).unwrap();
        let e = horizontal_line_energy(&f, &line, &grid).unwrap();
        assert_abs_diff_eq!(e.s1(), 0.25, epsilon = 2e-4);
        assert_abs_diff_eq!(e.s2(), 0.25, epsilon = 2e-4);
        assert_eq!(horizontal_line_energy(&Zero, &line, &grid).unwrap(), Hyperbolic::ZERO);

        let lines: Vec<_> = [0.1, 0.01, 0.001]
            .iter()
            .map(|&x1| HorizontalLine::new(x1, 0.0).unwrap())
            .collect();
        let sup = sup_energy(&f, &lines, &grid).unwrap();
        let nearest = horizontal_line_energy(&f, &lines[2], &grid).unwrap();
        assert_eq!(sup, nearest);
        assert_abs_diff_eq!(sup.s1(), 0.5, epsilon = 1e-2);
        assert!(matches!(sup_energy(&f, &[], &grid), Err(PwError::EmptyLines)));
    }
}
