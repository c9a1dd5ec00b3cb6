//! Numerical verification suites. Each suite evaluates one family of
//! identities against closed-form or structural oracles and returns report
//! rows; `Suite::All` runs them in a fixed order.

mod suites;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Bicomplex;
use crate::cauchy::CauchyError;
use crate::densities::NamedDensity;
use crate::paley_wiener::PwError;
use crate::quadrature::{QuadError, SampledProductFunction, Scheme};
use crate::report::Report;
use crate::transform::TransformError;

pub use suites::{
    DAMPING_STEPS, ENERGY_HEIGHTS, PLANCHEREL_FREQ_NODES, RECOVERY_LINES, RECOVERY_WINDOW,
};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Transform(#[from] TransformError),
    #[error(transparent)]
    PaleyWiener(#[from] PwError),
    #[error(transparent)]
    Cauchy(#[from] CauchyError),
    #[error("config: {0}")]
    Config(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    ExpTransform,
    Plancherel,
    Energy,
    Recovery,
    Contour,
    ExponentialType,
    Damped,
    Cauchy,
    Ray,
    All,
}

impl Suite {
    /// Every individual suite, in the order `All` runs them.
    pub const EACH: [Suite; 10] = [
        Suite::Algebra,
        Suite::ExpTransform,
        Suite::Plancherel,
        Suite::Energy,
        Suite::Recovery,
        Suite::Contour,
        Suite::ExponentialType,
        Suite::Damped,
        Suite::Cauchy,
        Suite::Ray,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::ExpTransform => "exp-transform",
            Suite::Plancherel => "plancherel",
            Suite::Energy => "energy",
            Suite::Recovery => "recovery",
            Suite::Contour => "contour",
            Suite::ExponentialType => "exponential-type",
            Suite::Damped => "damped",
            Suite::Cauchy => "cauchy",
            Suite::Ray => "ray",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s.trim())
            .copied()
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Where a suite takes its density from.
#[derive(Clone, Debug, PartialEq)]
pub enum DensitySource {
    Named(NamedDensity),
    /// Samples read from disk. Suites read them as a real-line profile, a
    /// half-line density or a band density depending on what they check.
    Samples(SampledProductFunction),
}

impl DensitySource {
    pub fn is_zero(&self) -> bool {
        match self {
            DensitySource::Named(d) => d.is_zero(),
            DensitySource::Samples(s) => s.is_zero(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            DensitySource::Named(d) => d.to_string(),
            DensitySource::Samples(_) => "samples".into(),
        }
    }
}

/// Overrides for a suite run. `None` keeps each suite's own default.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub density: Option<DensitySource>,
    /// Node count of the suite's main grid.
    pub n: Option<usize>,
    /// Truncation of the suite's main grid.
    pub truncation: Option<f64>,
    /// Reach of the transform-side grid in the Plancherel suite.
    pub freq_reach: Option<f64>,
    pub scheme: Scheme,
    pub seed: u64,
    /// Replaces the main tolerance of each suite.
    pub tolerance: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            density: None,
            n: None,
            truncation: None,
            freq_reach: None,
            scheme: Scheme::GaussLegendre,
            seed: 20_240_601,
            tolerance: None,
        }
    }
}

impl VerifyConfig {
    pub fn with_density(density: NamedDensity) -> Self {
        Self {
            density: Some(DensitySource::Named(density)),
            ..Self::default()
        }
    }

    pub(crate) fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    pub(crate) fn truncation_or(&self, default: f64) -> f64 {
        self.truncation.unwrap_or(default)
    }

    pub(crate) fn tol_or(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }

    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn validate(&self) -> Result<(), VerifyError> {
        let positive = |name: &str, v: Option<f64>| match v {
            Some(x) if !(x > 0.0 && x.is_finite()) => {
                Err(VerifyError::Config(format!("{name} must be positive, got {x}")))
            }
            _ => Ok(()),
        };
        positive("truncation", self.truncation)?;
        positive("freq_reach", self.freq_reach)?;
        positive("tolerance", self.tolerance)?;
        if self.n == Some(0) {
            return Err(VerifyError::Config("n must be positive".into()));
        }
        Ok(())
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<Report, VerifyError> {
    cfg.validate()?;
    match suite {
        Suite::Algebra => suites::algebra(cfg),
        Suite::ExpTransform => suites::exp_transform(cfg),
        Suite::Plancherel => suites::plancherel(cfg),
        Suite::Energy => suites::energy(cfg),
        Suite::Recovery => suites::recovery(cfg),
        Suite::Contour => suites::contour(cfg),
        Suite::ExponentialType => suites::exponential_type(cfg),
        Suite::Damped => suites::damped(cfg),
        Suite::Cauchy => suites::cauchy(cfg),
        Suite::Ray => suites::ray(cfg),
        Suite::All => {
            let mut report = Report::default();
            for s in Suite::EACH {
                report.extend(run(s, cfg)?);
            }
            Ok(report)
        }
    }
}

/// A uniformly random complex number in the disc of radius `r`.
pub(crate) fn random_in_disc(rng: &mut impl Rng, r: f64) -> Complex64 {
    let radius = r * rng.gen::<f64>().sqrt();
    Complex64::from_polar(radius, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// A random bicomplex number with idempotent components whose real parts lie
/// in `re` and imaginary parts in `im`.
pub(crate) fn random_point(
    rng: &mut impl Rng,
    re: (f64, f64),
    im: (f64, f64),
) -> Bicomplex {
    let mut c = || Complex64::new(rng.gen_range(re.0..re.1), rng.gen_range(im.0..im.1));
    let b1 = c();
    let b2 = c();
    Bicomplex::from_idempotent(b1, b2)
}
