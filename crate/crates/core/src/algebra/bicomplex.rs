//! Bicomplex numbers `Z = x0 + x1 i + x2 j + x3 k` with commuting imaginary
//! units `i`, `j` (`i² = j² = -1`) and the hyperbolic unit `k = ij` (`k² = 1`).
//!
//! The four real coefficients are the stored representation. The complex
//! pair `Z = z1 + j z2` and the idempotent pair `Z = e β1 + e† β2` are
//! computed on demand:
//!
//! ```text
//! z1 = x0 + i x1            β1 = z1 - i z2 = (x0 + x3) + i (x1 - x2)
//! z2 = x2 + i x3            β2 = z1 + i z2 = (x0 - x3) + i (x1 + x2)
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Hyperbolic};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Bicomplex {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Bicomplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    /// Idempotent unit `e = (1 + k) / 2`.
    pub const E: Self = Self::new(0.5, 0.0, 0.0, 0.5);
    /// Idempotent unit `e† = (1 - k) / 2`.
    pub const E_DAGGER: Self = Self::new(0.5, 0.0, 0.0, -0.5);

    #[inline]
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    /// Embeds a real scalar.
    #[inline]
    pub const fn real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// `Z = z1 + j z2`.
    #[inline]
    pub fn from_complex_pair(z1: Complex64, z2: Complex64) -> Self {
        Self::new(z1.re, z1.im, z2.re, z2.im)
    }

    /// `Z = e β1 + e† β2`.
    #[inline]
    pub fn from_idempotent(beta1: Complex64, beta2: Complex64) -> Self {
        let z1 = (beta1 + beta2) * 0.5;
        // β2 - β1 = 2 i z2
        let z2 = (beta2 - beta1) * Complex64::new(0.0, -0.5);
        Self::from_complex_pair(z1, z2)
    }

    #[inline]
    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.x0, self.x1)
    }

    #[inline]
    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.x2, self.x3)
    }

    #[inline]
    pub fn beta1(&self) -> Complex64 {
        Complex64::new(self.x0 + self.x3, self.x1 - self.x2)
    }

    #[inline]
    pub fn beta2(&self) -> Complex64 {
        Complex64::new(self.x0 - self.x3, self.x1 + self.x2)
    }

    /// The idempotent components `(β1, β2)`.
    #[inline]
    pub fn to_idempotent(&self) -> (Complex64, Complex64) {
        (self.beta1(), self.beta2())
    }

    /// Coefficients in the basis `1, i, j, k`.
    #[inline]
    pub fn coefficients(&self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn is_finite(&self) -> bool {
        self.coefficients().iter().all(|c| c.is_finite())
    }

    /// Applies a complex map to each idempotent component.
    #[inline]
    pub fn map_idempotent(
        &self,
        f1: impl FnOnce(Complex64) -> Complex64,
        f2: impl FnOnce(Complex64) -> Complex64,
    ) -> Self {
        let (b1, b2) = self.to_idempotent();
        Self::from_idempotent(f1(b1), f2(b2))
    }

    /// Multiplicative inverse, defined exactly when neither idempotent
    /// component vanishes.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let (b1, b2) = self.to_idempotent();
        if b1 == Complex64::new(0.0, 0.0) || b2 == Complex64::new(0.0, 0.0) {
            return Err(AlgebraError::ZeroDivisor(*self));
        }
        Ok(Self::from_idempotent(b1.inv(), b2.inv()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(*self * rhs.invert()?)
    }

    /// Bar conjugation of both idempotent components, `Z* = e β̄1 + e† β̄2`.
    ///
    /// In cartesian coefficients this flips the signs of `x1` and `x2`, so it
    /// maps the upper half-plane `x1 > |x2|` onto the lower one.
    #[inline]
    pub fn conjugate_star(&self) -> Self {
        Self::new(self.x0, -self.x1, -self.x2, self.x3)
    }

    /// Bicomplex exponential, computed componentwise on `(β1, β2)`.
    pub fn exp(&self) -> Self {
        self.map_idempotent(|b| b.exp(), |b| b.exp())
    }

    /// Hyperbolic-valued modulus `e |β1| + e† |β2|`.
    pub fn hyperbolic_norm(&self) -> Hyperbolic {
        let (b1, b2) = self.to_idempotent();
        Hyperbolic::from_idempotent(b1.norm(), b2.norm())
    }

    /// Largest absolute cartesian coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coefficients()
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// Sum of absolute cartesian coefficients.
    pub fn abs_sum(&self) -> f64 {
        self.coefficients().iter().map(|c| c.abs()).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl From<f64> for Bicomplex {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<Hyperbolic> for Bicomplex {
    fn from(h: Hyperbolic) -> Self {
        Self::new(h.a, 0.0, 0.0, h.b)
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

/// `(z1 + j z2)(w1 + j w2) = (z1 w1 - z2 w2) + j (z1 w2 + z2 w1)`.
impl Mul for Bicomplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (z1, z2) = (self.z1(), self.z2());
        let (w1, w2) = (rhs.z1(), rhs.z2());
        Self::from_complex_pair(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Bicomplex> for f64 {
    type Output = Bicomplex;
    fn mul(self, rhs: Bicomplex) -> Bicomplex {
        rhs.scale(self)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Bicomplex {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::ZERO, |acc, z| acc + z)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} i + {} j + {} k",
            self.x0, self.x1, self.x2, self.x3
        )
    }
}

/// Accepts either a comma-separated 4-tuple `x0,x1,x2,x3` (optionally in
/// parentheses) or the text form `x0 + x1 i + x2 j + x3 k`, where terms may
/// appear in any order, be omitted, or use `-` between terms.
impl FromStr for Bicomplex {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Err(bad());
        }
        if trimmed.contains(',') {
            let parts: Vec<f64> = trimmed
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            return match parts.as_slice() {
                [a, b, c, d] => Ok(Self::new(*a, *b, *c, *d)),
                _ => Err(bad()),
            };
        }
        parse_terms(trimmed).ok_or_else(bad)
    }
}

fn parse_terms(s: &str) -> Option<Bicomplex> {
    // Split into signed terms without breaking exponents such as `1e-3`.
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let chars: Vec<char> = compact.chars().collect();
    for (idx, &c) in chars.iter().enumerate() {
        let after_exponent = idx > 0 && matches!(chars[idx - 1], 'e' | 'E') && {
            // `e` directly after a digit or '.' is an exponent marker.
            idx > 1 && (chars[idx - 2].is_ascii_digit() || chars[idx - 2] == '.')
        };
        let sign_only = current.chars().all(|ch| ch == '+' || ch == '-');
        if (c == '+' || c == '-') && !sign_only && !after_exponent {
            terms.push(std::mem::take(&mut current));
        }
        if c == '-' && sign_only && !current.is_empty() {
            // `+-` and `--` collapse to a single sign.
            let negative = current.chars().filter(|&ch| ch == '-').count() % 2 == 0;
            current = if negative { "-".into() } else { "+".into() };
            continue;
        }
        if c == '+' && sign_only && !current.is_empty() {
            continue;
        }
        current.push(c);
    }
    if !current.is_empty() {
        terms.push(current);
    }

    let mut coeffs = [0.0_f64; 4];
    for term in terms {
        let (body, slot) = match term.chars().last()? {
            'i' => (&term[..term.len() - 1], 1),
            'j' => (&term[..term.len() - 1], 2),
            'k' => (&term[..term.len() - 1], 3),
            _ => (term.as_str(), 0),
        };
        let body = body.trim_end_matches('*');
        let value = match body {
            "" | "+" => 1.0,
            "-" => -1.0,
            b => b.parse::<f64>().ok()?,
        };
        coeffs[slot] += value;
    }
    Some(Bicomplex::new(coeffs[0], coeffs[1], coeffs[2], coeffs[3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Brute-force product on the 4-dimensional real basis using the
    /// multiplication table of 1, i, j, k.
    fn table_mul(a: Bicomplex, b: Bicomplex) -> Bicomplex {
        // basis index: 0=1, 1=i, 2=j, 3=k; table[p][q] = (sign, index)
        let table = [
            [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
            [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
            [(1.0, 2), (1.0, 3), (-1.0, 0), (-1.0, 1)],
            [(1.0, 3), (-1.0, 2), (-1.0, 1), (1.0, 0)],
        ];
        let (ac, bc) = (a.coefficients(), b.coefficients());
        let mut out = [0.0; 4];
        for p in 0..4 {
            for q in 0..4 {
                let (sign, idx) = table[p][q];
                out[idx] += sign * ac[p] * bc[q];
            }
        }
        Bicomplex::new(out[0], out[1], out[2], out[3])
    }

    #[test]
    fn idempotent_components_of_units() {
        assert_eq!(Bicomplex::J.to_idempotent(), (c(0.0, -1.0), c(0.0, 1.0)));
        assert_eq!(Bicomplex::K.to_idempotent(), (c(1.0, 0.0), c(-1.0, 0.0)));
    }

    #[test]
    fn idempotent_components_of_generic_value() {
        let z = Bicomplex::new(1.0, 2.0, 3.0, 4.0);
        let (b1, b2) = z.to_idempotent();
        assert_eq!((b1, b2), (c(5.0, -1.0), c(-3.0, 5.0)));
        // Oracle: e β1 + e† β2 expanded with the multiplication table.
        let e_b1 = table_mul(Bicomplex::E, Bicomplex::from_complex_pair(b1, c(0.0, 0.0)));
        let ed_b2 = table_mul(
            Bicomplex::E_DAGGER,
            Bicomplex::from_complex_pair(b2, c(0.0, 0.0)),
        );
        assert_eq!(e_b1 + ed_b2, z);
    }

    #[test]
    fn idempotent_identities_are_exact() {
        let (e, ed) = (Bicomplex::E, Bicomplex::E_DAGGER);
        assert_eq!(e * e, e);
        assert_eq!(ed * ed, ed);
        assert_eq!(e * ed, Bicomplex::ZERO);
        assert_eq!(e + ed, Bicomplex::ONE);
        assert_eq!(Bicomplex::I * Bicomplex::J, Bicomplex::K);
        assert_eq!(Bicomplex::K * Bicomplex::K, Bicomplex::ONE);
    }

    #[test]
    fn products() {
        let z = Bicomplex::new(0.3, -1.2, 2.5, 0.7);
        assert_eq!(z * Bicomplex::ONE, z);
        let one_j = Bicomplex::new(1.0, 0.0, 1.0, 0.0);
        let one_mj = Bicomplex::new(1.0, 0.0, -1.0, 0.0);
        assert_eq!(one_j * one_mj, Bicomplex::real(2.0));
        assert_eq!(table_mul(one_j, one_mj), Bicomplex::real(2.0));
    }

    #[test]
    fn inverse() {
        assert_eq!(Bicomplex::real(2.0).invert().unwrap(), Bicomplex::real(0.5));
        assert!(matches!(
            Bicomplex::E.invert(),
            Err(AlgebraError::ZeroDivisor(_))
        ));
        assert!(Bicomplex::E_DAGGER.invert().is_err());
        assert!(Bicomplex::ZERO.invert().is_err());
        let inv_j = Bicomplex::J.invert().unwrap();
        assert_eq!(inv_j, -Bicomplex::J);
        assert_eq!(table_mul(Bicomplex::J, inv_j), Bicomplex::ONE);
    }

    #[test]
    fn conjugate_star_examples() {
        assert_eq!(Bicomplex::I.conjugate_star(), -Bicomplex::I);
        assert_eq!(Bicomplex::real(3.5).conjugate_star(), Bicomplex::real(3.5));
        let z = Bicomplex::new(0.0, 1.0, 2.0, 0.0);
        let (b1, b2) = z.to_idempotent();
        assert_eq!((b1, b2), (c(0.0, -1.0), c(0.0, 3.0)));
        let oracle = Bicomplex::from_idempotent(b1.conj(), b2.conj());
        assert_eq!(z.conjugate_star(), oracle);
        assert_eq!(z.conjugate_star(), Bicomplex::new(0.0, -1.0, -2.0, 0.0));
    }

    #[test]
    fn exponential() {
        assert_eq!(Bicomplex::ZERO.exp(), Bicomplex::ONE);
        let minus_one = Bicomplex::I.scale(std::f64::consts::PI).exp();
        assert_abs_diff_eq!(minus_one.x0, -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(minus_one.max_abs().max(1.0), 1.0, epsilon = 1e-15);

        let z = Bicomplex::K.scale(2.0_f64.ln());
        let w = z.exp();
        // Oracle: power series with the table product.
        let mut term = Bicomplex::ONE;
        let mut sum = Bicomplex::ONE;
        for n in 1..40 {
            term = table_mul(term, z).scale(1.0 / n as f64);
            sum += term;
        }
        for (a, b) in w.coefficients().iter().zip(sum.coefficients()) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-14);
        }
        assert_abs_diff_eq!(w.x0, 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(w.x3, 0.75, epsilon = 1e-15);
    }

    #[test]
    fn hyperbolic_norm_examples() {
        assert_eq!(Bicomplex::ZERO.hyperbolic_norm(), Hyperbolic::ZERO);
        let z = Bicomplex::from_idempotent(c(3.0, 0.0), c(4.0, 0.0));
        let h = z.hyperbolic_norm();
        assert_eq!((h.a, h.b), (3.5, -0.5));
        assert_eq!(h.idempotent(), (3.0, 4.0));
        // ‖exp{i t Z}‖ at t = 1, Z = 2i
        let n = (Bicomplex::I * Bicomplex::I.scale(2.0)).exp().hyperbolic_norm();
        let (s1, s2) = n.idempotent();
        assert_abs_diff_eq!(s1, (-2.0_f64).exp(), epsilon = 1e-16);
        assert_abs_diff_eq!(s2, 0.1353352832366127, epsilon = 1e-16);
    }

    #[test]
    fn parse_and_display() {
        let z: Bicomplex = "0,0,1,0".parse().unwrap();
        assert_eq!(z, Bicomplex::J);
        let z: Bicomplex = "1 + 2 i + 3 j + 4 k".parse().unwrap();
        assert_eq!(z, Bicomplex::new(1.0, 2.0, 3.0, 4.0));
        let z: Bicomplex = "(1.5e-3, -2, 0, 4)".parse().unwrap();
        assert_eq!(z, Bicomplex::new(1.5e-3, -2.0, 0.0, 4.0));
        let z: Bicomplex = "-i - 2.5e-1j + k".parse().unwrap();
        assert_eq!(z, Bicomplex::new(0.0, -1.0, -0.25, 1.0));
        let w = Bicomplex::new(-1.0, 0.5, 2.0, -3.25);
        assert_eq!(w.to_string().parse::<Bicomplex>().unwrap(), w);
        assert!("1,2,3".parse::<Bicomplex>().is_err());
        assert!("two + i".parse::<Bicomplex>().is_err());
        assert!("".parse::<Bicomplex>().is_err());
    }
}
