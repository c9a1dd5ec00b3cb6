use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{QuadError, QuadratureRule};
use crate::algebra::Bicomplex;

/// `Z ∈ Π⁺` iff `x1 > |x2|`, i.e. both idempotent components lie in the
/// complex upper half-plane.
pub fn in_upper_half_plane(z: &Bicomplex) -> bool {
    z.x1 > z.x2.abs()
}

/// `Z ∈ Π⁻` iff `-x1 > |x2|`.
pub fn in_lower_half_plane(z: &Bicomplex) -> bool {
    -z.x1 > z.x2.abs()
}

/// A product-type interval `e I1 + e† I2`. Bounds may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DInterval {
    pub i1_lo: f64,
    pub i1_hi: f64,
    pub i2_lo: f64,
    pub i2_hi: f64,
}

impl DInterval {
    pub fn new(i1_lo: f64, i1_hi: f64, i2_lo: f64, i2_hi: f64) -> Result<Self, QuadError> {
        for (lo, hi) in [(i1_lo, i1_hi), (i2_lo, i2_hi)] {
            if !(lo < hi) {
                return Err(QuadError::BadInterval { lo, hi });
            }
        }
        Ok(Self {
            i1_lo,
            i1_hi,
            i2_lo,
            i2_hi,
        })
    }

    /// The same interval on both idempotent components.
    pub fn diagonal(lo: f64, hi: f64) -> Result<Self, QuadError> {
        Self::new(lo, hi, lo, hi)
    }

    /// `(-∞, ∞)_𝔻`.
    pub fn real_line() -> Self {
        Self::diagonal(f64::NEG_INFINITY, f64::INFINITY).expect("valid interval")
    }

    /// `(0, ∞)_𝔻`.
    pub fn half_line() -> Self {
        Self::diagonal(0.0, f64::INFINITY).expect("valid interval")
    }

    pub fn is_bounded(&self) -> bool {
        [self.i1_lo, self.i1_hi, self.i2_lo, self.i2_hi]
            .iter()
            .all(|b| b.is_finite())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    Trapezoid,
    #[default]
    GaussLegendre,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Trapezoid => "trapezoid",
            Scheme::GaussLegendre => "gauss_legendre",
        })
    }
}

impl std::str::FromStr for Scheme {
    type Err = QuadError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trapezoid" => Ok(Scheme::Trapezoid),
            "gauss_legendre" | "gauss-legendre" | "gl" => Ok(Scheme::GaussLegendre),
            other => Err(QuadError::UnknownScheme(other.to_string())),
        }
    }
}

/// Quadrature discretization of a product-type domain: one rule per
/// idempotent component, realizing the hyperbolic measure `e m1 + e† m2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductGrid {
    pub rule1: QuadratureRule,
    pub rule2: QuadratureRule,
    pub truncation: Option<f64>,
}

impl ProductGrid {
    pub fn new(rule1: QuadratureRule, rule2: QuadratureRule) -> Self {
        Self {
            rule1,
            rule2,
            truncation: None,
        }
    }

    /// Same rule on both components.
    pub fn diagonal(rule: QuadratureRule) -> Self {
        Self::new(rule.clone(), rule)
    }

    pub fn rule(&self, part: Part) -> &QuadratureRule {
        match part {
            Part::First => &self.rule1,
            Part::Second => &self.rule2,
        }
    }
}

/// Selects one idempotent component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    /// The `e` component (`β1`).
    First,
    /// The `e†` component (`β2`).
    Second,
}

impl Part {
    pub const BOTH: [Part; 2] = [Part::First, Part::Second];
}

/// Builds the quadrature grid for `interval`. Infinite bounds are replaced by
/// `±truncation`, which must then be given and positive.
pub fn make_grid(
    interval: &DInterval,
    n: usize,
    scheme: Scheme,
    truncation: Option<f64>,
) -> Result<ProductGrid, QuadError> {
    let clip = |b: f64| -> Result<f64, QuadError> {
        if b.is_finite() {
            return Ok(b);
        }
        match truncation {
            Some(t) if t > 0.0 && t.is_finite() => Ok(t.copysign(b)),
            _ => Err(QuadError::BadTruncation),
        }
    };
    let build = |lo: f64, hi: f64| -> Result<QuadratureRule, QuadError> {
        let (lo, hi) = (clip(lo)?, clip(hi)?);
        match scheme {
            Scheme::Trapezoid => QuadratureRule::trapezoid(lo, hi, n),
            Scheme::GaussLegendre => QuadratureRule::gauss_legendre(lo, hi, n),
        }
    };
    let rule1 = build(interval.i1_lo, interval.i1_hi)?;
    let rule2 = if (interval.i1_lo, interval.i1_hi) == (interval.i2_lo, interval.i2_hi) {
        rule1.clone()
    } else {
        build(interval.i2_lo, interval.i2_hi)?
    };
    Ok(ProductGrid {
        rule1,
        rule2,
        truncation,
    })
}

/// Serializable grid description with keys `interval`, `n`, `scheme`,
/// `truncation`. Interval bounds may be the strings `"inf"` / `"-inf"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    pub interval: IntervalConfig,
    pub n: usize,
    #[serde(default)]
    pub scheme: Scheme,
    #[serde(default)]
    pub truncation: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalConfig {
    pub i1: [Bound; 2],
    pub i2: [Bound; 2],
}

impl GridConfig {
    pub fn interval(&self) -> Result<DInterval, QuadError> {
        DInterval::new(
            self.interval.i1[0].0,
            self.interval.i1[1].0,
            self.interval.i2[0].0,
            self.interval.i2[1].0,
        )
    }

    pub fn build(&self) -> Result<ProductGrid, QuadError> {
        make_grid(&self.interval()?, self.n, self.scheme, self.truncation)
    }

    pub fn from_json(s: &str) -> Result<Self, QuadError> {
        serde_json::from_str(s).map_err(|e| QuadError::Config(e.to_string()))
    }
}

/// An extended real bound, serialized as a number or `"inf"` / `"-inf"`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bound(pub f64);

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else if self.0 > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Bound(v)),
            Raw::Text(t) => match t.trim() {
                "inf" | "+inf" | "infinity" => Ok(Bound(f64::INFINITY)),
                "-inf" | "-infinity" => Ok(Bound(f64::NEG_INFINITY)),
                other => other
                    .parse::<f64>()
                    .map(Bound)
                    .map_err(serde::de::Error::custom),
            },
        }
    }
}
