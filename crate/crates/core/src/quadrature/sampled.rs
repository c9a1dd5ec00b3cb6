use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{pairwise_sum, Part, ProductGrid, QuadError, QuadratureRule};
use crate::algebra::{Bicomplex, Hyperbolic};

/// Samples of a product-type function `F = e F1 + e† F2` on a grid: `F1` on
/// the first rule's nodes, `F2` on the second's.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledProductFunction {
    grid: ProductGrid,
    values1: Vec<Complex64>,
    values2: Vec<Complex64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    t1: f64,
    f1_re: f64,
    f1_im: f64,
    t2: f64,
    f2_re: f64,
    f2_im: f64,
}

impl SampledProductFunction {
    pub fn new(
        grid: ProductGrid,
        values1: Vec<Complex64>,
        values2: Vec<Complex64>,
    ) -> Result<Self, QuadError> {
        for (rule, values) in [(&grid.rule1, &values1), (&grid.rule2, &values2)] {
            if rule.len() != values.len() {
                return Err(QuadError::LengthMismatch {
                    expected: rule.len(),
                    found: values.len(),
                });
            }
        }
        Ok(Self {
            grid,
            values1,
            values2,
        })
    }

    pub fn from_fn(
        grid: ProductGrid,
        f1: impl Fn(f64) -> Complex64,
        f2: impl Fn(f64) -> Complex64,
    ) -> Self {
        let values1 = grid.rule1.nodes().iter().map(|&t| f1(t)).collect();
        let values2 = grid.rule2.nodes().iter().map(|&t| f2(t)).collect();
        Self {
            grid,
            values1,
            values2,
        }
    }

    /// Same scalar profile on both components.
    pub fn diagonal(grid: ProductGrid, f: impl Fn(f64) -> Complex64) -> Self {
        Self::from_fn(grid, &f, &f)
    }

    pub fn zeros(grid: ProductGrid) -> Self {
        Self::from_fn(grid, |_| Complex64::default(), |_| Complex64::default())
    }

    pub fn grid(&self) -> &ProductGrid {
        &self.grid
    }

    pub fn values(&self, part: Part) -> &[Complex64] {
        match part {
            Part::First => &self.values1,
            Part::Second => &self.values2,
        }
    }

    pub fn rule(&self, part: Part) -> &QuadratureRule {
        self.grid.rule(part)
    }

    pub fn is_zero(&self) -> bool {
        self.values1
            .iter()
            .chain(&self.values2)
            .all(|v| *v == Complex64::default())
    }

    pub fn is_finite(&self) -> bool {
        self.values1
            .iter()
            .chain(&self.values2)
            .all(|v| v.re.is_finite() && v.im.is_finite())
    }

    fn check_finite(&self) -> Result<(), QuadError> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(QuadError::NonFinite)
        }
    }

    /// Weighted sum of one component, `Σ w_k g(t_k, F_i(t_k))`.
    pub fn integrate_part(
        &self,
        part: Part,
        g: impl Fn(f64, Complex64) -> Complex64,
    ) -> Complex64 {
        self.rule(part).sum_samples(self.values(part), g)
    }

    /// `𝔻`-integral `e ∫F1 dm1 + e† ∫F2 dm2`.
    pub fn d_integral(&self) -> Result<Bicomplex, QuadError> {
        self.check_finite()?;
        let q1 = self.integrate_part(Part::First, |_, v| v);
        let q2 = self.integrate_part(Part::Second, |_, v| v);
        Ok(Bicomplex::from_idempotent(q1, q2))
    }

    /// `e ∫|F1|² dm1 + e† ∫|F2|² dm2`.
    pub fn l2k_norm_squared(&self) -> Result<Hyperbolic, QuadError> {
        self.lpk_norm_pow(2.0)
    }

    /// Componentwise `∫|F_i|^p dm_i`.
    pub fn lpk_norm_pow(&self, p: f64) -> Result<Hyperbolic, QuadError> {
        self.check_finite()?;
        let part_norm = |part: Part| {
            let terms: Vec<f64> = self
                .rule(part)
                .weights()
                .iter()
                .zip(self.values(part))
                .map(|(w, v)| w * v.norm().powf(p))
                .collect();
            pairwise_sum(&terms)
        };
        Ok(Hyperbolic::from_idempotent(
            part_norm(Part::First),
            part_norm(Part::Second),
        ))
    }

    /// Componentwise `(∫|F_i|^p dm_i)^{1/p}`.
    pub fn lpk_norm(&self, p: f64) -> Result<Hyperbolic, QuadError> {
        Ok(self.lpk_norm_pow(p)?.map(|v| v.powf(1.0 / p)))
    }

    /// Multiplies by a bicomplex scalar (componentwise on idempotent parts).
    pub fn scaled(&self, c: Bicomplex) -> Self {
        let (c1, c2) = c.to_idempotent();
        Self {
            grid: self.grid.clone(),
            values1: self.values1.iter().map(|v| v * c1).collect(),
            values2: self.values2.iter().map(|v| v * c2).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, QuadError> {
        if self.grid != other.grid {
            return Err(QuadError::GridMismatch);
        }
        let add = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Ok(Self {
            grid: self.grid.clone(),
            values1: add(&self.values1, &other.values1),
            values2: add(&self.values2, &other.values2),
        })
    }

    /// Writes the `t1,f1_re,f1_im,t2,f2_re,f2_im` CSV, one row per node
    /// index. Both components must have the same number of nodes.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), QuadError> {
        if self.values1.len() != self.values2.len() {
            return Err(QuadError::LengthMismatch {
                expected: self.values1.len(),
                found: self.values2.len(),
            });
        }
        let mut w = csv::Writer::from_writer(writer);
        let (n1, n2) = (self.grid.rule1.nodes(), self.grid.rule2.nodes());
        for k in 0..n1.len() {
            w.serialize(CsvRow {
                t1: n1[k],
                f1_re: self.values1[k].re,
                f1_im: self.values1[k].im,
                t2: n2[k],
                f2_re: self.values2[k].re,
                f2_im: self.values2[k].im,
            })
            .map_err(|e| QuadError::Csv(e.to_string()))?;
        }
        w.flush().map_err(|e| QuadError::Csv(e.to_string()))
    }

    /// Reads the CSV written by [`write_csv`](Self::write_csv). The file
    /// carries no weights, so each component gets trapezoid weights on its
    /// nodes.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self, QuadError> {
        let mut r = csv::Reader::from_reader(reader);
        let mut t1 = Vec::new();
        let mut t2 = Vec::new();
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        for row in r.deserialize::<CsvRow>() {
            let row = row.map_err(|e| QuadError::Csv(e.to_string()))?;
            t1.push(row.t1);
            t2.push(row.t2);
            v1.push(Complex64::new(row.f1_re, row.f1_im));
            v2.push(Complex64::new(row.f2_re, row.f2_im));
        }
        let grid = ProductGrid::new(
            QuadratureRule::trapezoid_on_nodes(t1)?,
            QuadratureRule::trapezoid_on_nodes(t2)?,
        );
        Self::new(grid, v1, v2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{make_grid, DInterval, Scheme};
    use approx::assert_abs_diff_eq;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn unit_grid(n: usize, scheme: Scheme) -> ProductGrid {
        make_grid(&DInterval::diagonal(0.0, 1.0).unwrap(), n, scheme, None).unwrap()
    }

    #[test]
    fn constant_integrates_to_one() {
        let f = SampledProductFunction::diagonal(unit_grid(2, Scheme::Trapezoid), |_| c(1.0));
        assert_eq!(f.d_integral().unwrap(), Bicomplex::ONE);
    }

    #[test]
    fn polynomial_components() {
        let f = SampledProductFunction::from_fn(
            unit_grid(4, Scheme::GaussLegendre),
            c,
            |t| c(t * t),
        );
        let z = f.d_integral().unwrap();
        // exact antiderivatives: 1/2 and 1/3
        let expected = Bicomplex::from_idempotent(c(0.5), c(1.0 / 3.0));
        assert_abs_diff_eq!((z - expected).max_abs(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn truncated_exponential_on_half_line() {
        let grid = make_grid(&DInterval::half_line(), 4000, Scheme::GaussLegendre, Some(40.0)).unwrap();
        let f = SampledProductFunction::diagonal(grid, |t| c((-t).exp()));
        let z = f.d_integral().unwrap();
        assert!((z - Bicomplex::ONE).max_abs() < 1e-10);
    }

    #[test]
    fn l2k_norms() {
        let grid = make_grid(&DInterval::half_line(), 4096, Scheme::GaussLegendre, Some(40.0)).unwrap();
        assert_eq!(
            SampledProductFunction::zeros(grid.clone()).l2k_norm_squared().unwrap(),
            Hyperbolic::ZERO
        );
        let f = SampledProductFunction::from_fn(grid, |t| c((-t).exp()), |t| c(2.0 * (-t).exp()));
        let (s1, s2) = f.l2k_norm_squared().unwrap().idempotent();
        assert_abs_diff_eq!(s1, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(s2, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn non_finite_samples_are_rejected() {
        let f = SampledProductFunction::diagonal(unit_grid(8, Scheme::Trapezoid), |t| {
            if t > 0.5 { c(f64::NAN) } else { c(1.0) }
        });
        assert!(matches!(f.d_integral(), Err(QuadError::NonFinite)));
        assert!(matches!(f.l2k_norm_squared(), Err(QuadError::NonFinite)));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let g = unit_grid(8, Scheme::Trapezoid);
        assert!(SampledProductFunction::new(g, vec![c(0.0); 8], vec![c(0.0); 7]).is_err());
    }

    #[test]
    fn gaussian_refinement_converges() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        let err = |n: usize, scheme: Scheme| {
            let grid = make_grid(&DInterval::real_line(), n, scheme, Some(6.0)).unwrap();
            let f = SampledProductFunction::diagonal(grid, |t| c((-t * t).exp()));
            let z = f.d_integral().unwrap();
            (z.beta1().re - sqrt_pi).abs().max((z.beta2().re - sqrt_pi).abs())
        };
        for scheme in [Scheme::Trapezoid, Scheme::GaussLegendre] {
            let (coarse, fine) = (err(9, scheme), err(17, scheme));
            assert!(fine <= 0.5 * coarse || fine < 1e-14, "{scheme}: {coarse} -> {fine}");
        }
    }

    #[test]
    fn csv_round_trip() {
        let grid = unit_grid(5, Scheme::Trapezoid);
        let f = SampledProductFunction::from_fn(
            grid,
            |t| Complex64::new(t, -t),
            |t| Complex64::new(1.0 + t, 0.25),
        );
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("t1,f1_re,f1_im,t2,f2_re,f2_im\n"));
        let back = SampledProductFunction::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, f);
    }
}
