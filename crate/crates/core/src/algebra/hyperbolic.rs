//! Hyperbolic numbers `a + k b` (`k² = 1`), the carrier of all norms and
//! bounds. Ordering is the componentwise partial order on the idempotent
//! components `s1 = a + b`, `s2 = a - b`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Hyperbolic {
    pub a: f64,
    pub b: f64,
}

/// Outcome of comparing two hyperbolic numbers in the partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DOrder {
    /// Both idempotent components satisfy `≤`.
    Leq,
    /// Both idempotent components satisfy `>`.
    Greater,
    /// The component comparisons disagree.
    Incomparable,
}

impl DOrder {
    pub fn is_leq(self) -> bool {
        self == DOrder::Leq
    }
}

impl Hyperbolic {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);

    pub const fn new(a: f64, b: f64) -> Self {
        Self { a, b }
    }

    pub const fn real(a: f64) -> Self {
        Self::new(a, 0.0)
    }

    /// Builds `e s1 + e† s2`.
    pub fn from_idempotent(s1: f64, s2: f64) -> Self {
        Self::new(0.5 * (s1 + s2), 0.5 * (s1 - s2))
    }

    #[inline]
    pub fn s1(&self) -> f64 {
        self.a + self.b
    }

    #[inline]
    pub fn s2(&self) -> f64 {
        self.a - self.b
    }

    pub fn idempotent(&self) -> (f64, f64) {
        (self.s1(), self.s2())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self::from_idempotent(f(self.s1()), f(self.s2()))
    }

    pub fn is_nonneg(&self) -> bool {
        self.s1() >= 0.0 && self.s2() >= 0.0
    }

    pub fn is_positive(&self) -> bool {
        self.s1() > 0.0 && self.s2() > 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }

    pub fn exp(&self) -> Self {
        self.map(f64::exp)
    }

    pub fn sqrt(&self) -> Self {
        self.map(f64::sqrt)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s)
    }

    /// Componentwise maximum (the supremum in the partial order).
    pub fn sup(&self, other: &Self) -> Self {
        Self::from_idempotent(self.s1().max(other.s1()), self.s2().max(other.s2()))
    }

    /// Largest idempotent component.
    pub fn max_component(&self) -> f64 {
        self.s1().max(self.s2())
    }

    /// `self ≤ other` in the componentwise order.
    pub fn leq_d(&self, other: &Self) -> DOrder {
        let first = self.s1() <= other.s1();
        let second = self.s2() <= other.s2();
        match (first, second) {
            (true, true) => DOrder::Leq,
            (false, false) => DOrder::Greater,
            _ => DOrder::Incomparable,
        }
    }
}

impl PartialOrd for Hyperbolic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let c1 = self.s1().partial_cmp(&other.s1())?;
        let c2 = self.s2().partial_cmp(&other.s2())?;
        match (c1, c2) {
            (Ordering::Equal, c) | (c, Ordering::Equal) => Some(c),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

impl From<f64> for Hyperbolic {
    fn from(a: f64) -> Self {
        Self::real(a)
    }
}

impl Add for Hyperbolic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Hyperbolic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Hyperbolic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Hyperbolic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a + self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Mul<f64> for Hyperbolic {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl fmt::Display for Hyperbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} k", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_examples() {
        assert_eq!(Hyperbolic::ZERO.leq_d(&Hyperbolic::ONE), DOrder::Leq);
        let one_k = Hyperbolic::new(1.0, 1.0);
        assert_eq!(one_k.idempotent(), (2.0, 0.0));
        assert_eq!(one_k.leq_d(&Hyperbolic::ONE), DOrder::Incomparable);
        assert_eq!(one_k.leq_d(&one_k), DOrder::Leq);
        assert_eq!(Hyperbolic::real(2.0).leq_d(&Hyperbolic::ONE), DOrder::Greater);
        assert_eq!(one_k.partial_cmp(&Hyperbolic::ONE), None);
        assert!(Hyperbolic::ZERO < Hyperbolic::ONE);
    }

    #[test]
    fn real_embedding_agrees_with_real_arithmetic() {
        let (x, y) = (1.75, -0.3);
        let (hx, hy) = (Hyperbolic::real(x), Hyperbolic::real(y));
        assert_eq!(hx * hy, Hyperbolic::real(x * y));
        assert_eq!(hx + hy, Hyperbolic::real(x + y));
        assert_eq!(hx - hy, Hyperbolic::real(x - y));
    }

    #[test]
    fn product_is_componentwise() {
        let h = Hyperbolic::from_idempotent(2.0, 3.0);
        let g = Hyperbolic::from_idempotent(-1.0, 0.5);
        assert_eq!((h * g).idempotent(), (-2.0, 1.5));
        assert!(Hyperbolic::from_idempotent(0.0, 1e-300).is_nonneg());
        assert!(!Hyperbolic::from_idempotent(-1e-3, 1.0).is_nonneg());
    }
}
