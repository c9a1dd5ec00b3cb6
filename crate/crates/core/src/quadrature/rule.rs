use std::num::NonZeroUsize;
use std::ops::Add;

use gauss_quad::GaussLegendre;
use num_complex::Complex64;

use super::QuadError;

/// Nodes per Gauss-Legendre panel in composite rules.
pub const PANEL_ORDER: usize = 16;

/// Below this length `pairwise_sum` adds sequentially.
const PAIRWISE_BLOCK: usize = 16;

/// Sums in ascending index order with pairwise splitting, so the result
/// depends only on the input sequence.
pub fn pairwise_sum<T>(xs: &[T]) -> T
where
    T: Copy + Default + Add<Output = T>,
{
    if xs.len() <= PAIRWISE_BLOCK {
        return xs.iter().fold(T::default(), |acc, &x| acc + x);
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// A one-dimensional quadrature rule: strictly increasing nodes with weights.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Validated constructor. Negative weights are rejected unless
    /// `allow_signed` is set.
    pub fn new(nodes: Vec<f64>, weights: Vec<f64>, allow_signed: bool) -> Result<Self, QuadError> {
        if nodes.len() != weights.len() {
            return Err(QuadError::LengthMismatch {
                expected: nodes.len(),
                found: weights.len(),
            });
        }
        if nodes.is_empty() {
            return Err(QuadError::TooFewNodes(0));
        }
        if nodes.iter().chain(&weights).any(|v| !v.is_finite()) {
            return Err(QuadError::NonFinite);
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QuadError::NotIncreasing);
        }
        if !allow_signed && weights.iter().any(|&w| w < 0.0) {
            return Err(QuadError::NegativeWeight);
        }
        Ok(Self { nodes, weights })
    }

    /// Composite trapezoid rule with `n` equispaced nodes including both ends.
    pub fn trapezoid(lo: f64, hi: f64, n: usize) -> Result<Self, QuadError> {
        check_finite_interval(lo, hi)?;
        if n < 2 {
            return Err(QuadError::TooFewNodes(n));
        }
        let h = (hi - lo) / (n - 1) as f64;
        let nodes: Vec<f64> = (0..n)
            .map(|k| if k == n - 1 { hi } else { lo + h * k as f64 })
            .collect();
        let mut weights = vec![h; n];
        weights[0] = 0.5 * h;
        weights[n - 1] = 0.5 * h;
        Self::new(nodes, weights, false)
    }

    /// Composite Gauss-Legendre rule with at least `n` nodes.
    ///
    /// For `n <= PANEL_ORDER` this is a single `n`-point rule, exact for
    /// polynomials of degree `2n - 1`. Otherwise the interval is split into
    /// `ceil(n / PANEL_ORDER)` equal panels of `PANEL_ORDER` nodes each.
    pub fn gauss_legendre(lo: f64, hi: f64, n: usize) -> Result<Self, QuadError> {
        check_finite_interval(lo, hi)?;
        let order = NonZeroUsize::new(n.min(PANEL_ORDER)).ok_or(QuadError::TooFewNodes(n))?;
        let panels = n.div_ceil(order.get());
        Ok(Self::gauss_legendre_panels(lo, hi, panels, order))
    }

    fn gauss_legendre_panels(lo: f64, hi: f64, panels: usize, order: NonZeroUsize) -> Self {
        let mut reference: Vec<(f64, f64)> = GaussLegendre::new(order)
            .as_node_weight_pairs()
            .to_vec();
        reference.sort_by(|a, b| a.0.total_cmp(&b.0));

        let width = (hi - lo) / panels as f64;
        let mut nodes = Vec::with_capacity(panels * order.get());
        let mut weights = Vec::with_capacity(panels * order.get());
        for p in 0..panels {
            let a = lo + width * p as f64;
            let b = if p + 1 == panels { hi } else { lo + width * (p + 1) as f64 };
            let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
            for &(x, w) in &reference {
                nodes.push(mid + half * x);
                weights.push(half * w);
            }
        }
        Self { nodes, weights }
    }

    /// Trapezoid weights on arbitrary strictly increasing nodes.
    pub fn trapezoid_on_nodes(nodes: Vec<f64>) -> Result<Self, QuadError> {
        if nodes.len() < 2 {
            return Err(QuadError::TooFewNodes(nodes.len()));
        }
        let n = nodes.len();
        let mut weights = vec![0.0; n];
        for k in 0..n - 1 {
            let h = nodes[k + 1] - nodes[k];
            weights[k] += 0.5 * h;
            weights[k + 1] += 0.5 * h;
        }
        Self::new(nodes, weights, false)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn span(&self) -> (f64, f64) {
        (self.nodes[0], self.nodes[self.nodes.len() - 1])
    }

    pub fn integrate_real(&self, f: impl Fn(f64) -> f64) -> f64 {
        let terms: Vec<f64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .collect();
        pairwise_sum(&terms)
    }

    pub fn integrate(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let terms: Vec<Complex64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| f(x) * w)
            .collect();
        pairwise_sum(&terms)
    }

    /// Weighted sum of precomputed samples `Σ w_k g(x_k, v_k)`.
    pub fn sum_samples(
        &self,
        values: &[Complex64],
        g: impl Fn(f64, Complex64) -> Complex64,
    ) -> Complex64 {
        let terms: Vec<Complex64> = self
            .nodes
            .iter()
            .zip(&self.weights)
            .zip(values)
            .map(|((&x, &w), &v)| g(x, v) * w)
            .collect();
        pairwise_sum(&terms)
    }
}

fn check_finite_interval(lo: f64, hi: f64) -> Result<(), QuadError> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(QuadError::BadTruncation);
    }
    if !(lo < hi) {
        return Err(QuadError::BadInterval { lo, hi });
    }
    Ok(())
}
