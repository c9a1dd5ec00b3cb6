//! Built-in test densities with closed-form transforms.
//!
//! Each density has a real-line profile, a half-line restriction used as the
//! `𝔉` of the half-plane extension, and where available the closed forms of
//! its extension and of its Fourier transform. Both idempotent components
//! carry the same scalar function.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::product_fn::ProductFunction;
use crate::quadrature::{Part, ProductGrid, SampledProductFunction};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum NamedDensity {
    /// `e^{-|t|}`, half-line `e^{-t}`.
    ExpDecay,
    /// Unit-energy Gaussian `π^{-1/4} e^{-t²/2}`.
    Gaussian,
    /// `1` on `(-A, A)`, half-line `1` on `(0, A)`.
    Indicator(f64),
    /// Half-line `-t e^{-t}`, whose extension is `1/(β + i)²`.
    RationalHardy,
    Zero,
}

fn gaussian_scale() -> f64 {
    PI.powf(-0.25)
}

impl NamedDensity {
    /// Profile on the whole real line.
    pub fn profile(&self, t: f64) -> Complex64 {
        let v = match *self {
            Self::ExpDecay => (-t.abs()).exp(),
            Self::Gaussian => gaussian_scale() * (-0.5 * t * t).exp(),
            Self::Indicator(a) => f64::from(u8::from(t.abs() < a)),
            Self::RationalHardy => {
                if t > 0.0 {
                    -t * (-t).exp()
                } else {
                    0.0
                }
            }
            Self::Zero => 0.0,
        };
        Complex64::new(v, 0.0)
    }

    /// The density on `(0, ∞)`.
    pub fn half_line(&self, t: f64) -> Complex64 {
        if t <= 0.0 {
            return Complex64::default();
        }
        match *self {
            Self::Indicator(a) => Complex64::new(f64::from(u8::from(t < a)), 0.0),
            other => other.profile(t),
        }
    }

    /// `∫_0^∞ 𝔉(t) e^{itβ} dt` in closed form.
    pub fn extension(&self, beta: Complex64) -> Option<Complex64> {
        let i = Complex64::i();
        match *self {
            Self::ExpDecay => Some(1.0 / (1.0 - i * beta)),
            Self::Gaussian => None,
            Self::Indicator(a) => Some(if beta.norm() < 1e-8 {
                Complex64::new(a, 0.0) + i * beta * (a * a / 2.0)
            } else {
                // (e^{iaβ} - 1)/(iβ) without the cancellation near 0
                2.0 * (i * a * beta * 0.5).exp() * (a * beta * 0.5).sin() / beta
            }),
            Self::RationalHardy => Some(1.0 / ((beta + i) * (beta + i))),
            Self::Zero => Some(Complex64::default()),
        }
    }

    pub fn has_extension(&self) -> bool {
        self.extension(Complex64::i()).is_some()
    }

    /// `∫ profile(t) e^{-izt} dt` in closed form.
    pub fn fourier(&self, z: Complex64) -> Option<Complex64> {
        let i = Complex64::i();
        match *self {
            Self::ExpDecay => Some(2.0 / (1.0 + z * z)),
            Self::Gaussian => Some(gaussian_scale() * (2.0 * PI).sqrt() * (-0.5 * z * z).exp()),
            Self::Indicator(a) => Some(band_closed_form(a, z)),
            Self::RationalHardy => Some(-1.0 / ((1.0 + i * z) * (1.0 + i * z))),
            Self::Zero => Some(Complex64::default()),
        }
    }

    /// `∫_{-A}^{A} profile(t) e^{itz} dt` in closed form, only for the
    /// densities that are band-limited.
    pub fn band_synthesis(&self, z: Complex64) -> Option<Complex64> {
        match *self {
            Self::Indicator(a) => Some(band_closed_form(a, z)),
            Self::Zero => Some(Complex64::default()),
            _ => None,
        }
    }

    /// Band half-width: the support for compactly supported densities.
    pub fn band_half_width(&self) -> Option<f64> {
        match *self {
            Self::Indicator(a) => Some(a),
            Self::Zero => Some(1.0),
            _ => None,
        }
    }

    /// Point beyond which the profile is negligible (below `1e-17`).
    pub fn natural_reach(&self) -> f64 {
        match *self {
            Self::ExpDecay | Self::RationalHardy => 40.0,
            Self::Gaussian => 9.0,
            Self::Indicator(a) => a,
            Self::Zero => 1.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::Zero
    }

    pub fn sample_profile(&self, grid: ProductGrid) -> SampledProductFunction {
        SampledProductFunction::diagonal(grid, |t| self.profile(t))
    }

    pub fn sample_half_line(&self, grid: ProductGrid) -> SampledProductFunction {
        SampledProductFunction::diagonal(grid, |t| self.half_line(t))
    }

    /// The closed-form extension as a product function.
    pub fn closed_form(&self) -> Option<ClosedFormExtension> {
        self.has_extension().then_some(ClosedFormExtension(*self))
    }
}

fn band_closed_form(a: f64, z: Complex64) -> Complex64 {
    if z.norm() < 1e-8 {
        Complex64::new(2.0 * a, 0.0) - z * z * (a * a * a / 3.0)
    } else {
        2.0 * (z * a).sin() / z
    }
}

/// Extension `F` of a named density in closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormExtension(NamedDensity);

impl ProductFunction for ClosedFormExtension {
    fn component(&self, _: Part, beta: Complex64) -> Complex64 {
        self.0
            .extension(beta)
            .expect("constructed only for densities with a closed form")
    }
}

impl fmt::Display for NamedDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ExpDecay => write!(f, "exp_decay"),
            Self::Gaussian => write!(f, "gaussian"),
            Self::Indicator(a) => write!(f, "indicator({a})"),
            Self::RationalHardy => write!(f, "rational_hardy"),
            Self::Zero => write!(f, "zero"),
        }
    }
}

impl FromStr for NamedDensity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        match s {
            "exp_decay" => return Ok(Self::ExpDecay),
            "gaussian" => return Ok(Self::Gaussian),
            "indicator" => return Ok(Self::Indicator(1.0)),
            "rational_hardy" => return Ok(Self::RationalHardy),
            "zero" => return Ok(Self::Zero),
            _ => {}
        }
        let arg = s
            .strip_prefix("indicator(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("unknown density {s:?}"))?;
        let a: f64 = arg
            .trim()
            .parse()
            .map_err(|_| format!("bad indicator half-width {arg:?}"))?;
        if !(a > 0.0 && a.is_finite()) {
            return Err(format!("indicator half-width must be positive, got {a}"));
        }
        Ok(Self::Indicator(a))
    }
}

impl From<NamedDensity> for String {
    fn from(d: NamedDensity) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for NamedDensity {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}
