//! Run configuration: command-line flags layered over an optional JSON file.

use std::fs;
use std::path::{Path, PathBuf};

use bcpw::densities::NamedDensity;
use bcpw::quadrature::{SampledProductFunction, Scheme};
use bcpw::transform::TransformConvention;
use bcpw::verify::{DensitySource, Suite};
use clap::{Args, ValueEnum};
use serde::Deserialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    Decompose,
    Transform,
    Extend,
    Recover,
    Band,
    Cauchy,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionName {
    Analysis,
    Unnormalized,
    Symmetric,
}

impl ConventionName {
    pub fn convention(self) -> TransformConvention {
        match self {
            ConventionName::Analysis => TransformConvention::analysis(),
            ConventionName::Unnormalized => TransformConvention::unnormalized(),
            ConventionName::Symmetric => TransformConvention::symmetric(),
        }
    }
}

/// Every option a run can take. The same struct is filled from flags and
/// from the JSON file, then merged with flags taking precedence.
#[derive(Clone, Debug, Default, Args)]
pub struct Settings {
    /// Built-in density: exp_decay | gaussian | indicator(A) | rational_hardy | zero
    #[arg(long)]
    pub density: Option<String>,

    /// Density samples in CSV (t1,f1_re,f1_im,t2,f2_re,f2_im)
    #[arg(long)]
    pub csv: Option<PathBuf>,

    /// Nodes per component of the main grid
    #[arg(long)]
    pub n: Option<usize>,

    /// Truncation of infinite integration bounds
    #[arg(long = "T")]
    pub truncation: Option<f64>,

    /// Quadrature scheme: gauss-legendre | trapezoid
    #[arg(long)]
    pub scheme: Option<String>,

    /// Fourier normalization
    #[arg(long, value_enum)]
    pub convention: Option<ConventionName>,

    /// Output file (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Seed of the randomized checks
    #[arg(long)]
    pub seed: Option<u64>,

    /// Overrides the main tolerance of a verification suite
    #[arg(long)]
    pub tolerance: Option<f64>,

    /// Verification suite: all, algebra, exp-transform, plancherel, energy,
    /// recovery, contour, exponential-type, damped, cauchy or ray
    #[arg(long)]
    pub suite: Option<String>,

    /// Reach of the frequency grid in the Plancherel suite
    #[arg(long)]
    pub freq_reach: Option<f64>,

    /// Evaluation point "x0,x1,x2,x3" (repeatable)
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<Vec<String>>,

    /// Real-axis sweep "lo,hi"
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<String>,

    /// Number of sweep points
    #[arg(long)]
    pub count: Option<usize>,

    /// Line height x1
    #[arg(long, allow_hyphen_values = true)]
    pub x1: Option<f64>,

    /// Line offset x2
    #[arg(long, allow_hyphen_values = true)]
    pub x2: Option<f64>,
}

/// The JSON file: the same keys as the flags plus an optional `command`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<CommandName>,
    density: Option<String>,
    csv: Option<PathBuf>,
    n: Option<usize>,
    #[serde(rename = "T", alias = "truncation")]
    truncation: Option<f64>,
    scheme: Option<String>,
    convention: Option<ConventionName>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    tolerance: Option<f64>,
    suite: Option<String>,
    freq_reach: Option<f64>,
    z: Option<Vec<String>>,
    range: Option<String>,
    count: Option<usize>,
    x1: Option<f64>,
    x2: Option<f64>,
}

pub fn read_file(path: &Path) -> Result<(Option<CommandName>, Settings), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let f: FileConfig =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let settings = Settings {
        density: f.density,
        csv: f.csv,
        n: f.n,
        truncation: f.truncation,
        scheme: f.scheme,
        convention: f.convention,
        out: f.out,
        seed: f.seed,
        tolerance: f.tolerance,
        suite: f.suite,
        freq_reach: f.freq_reach,
        z: f.z,
        range: f.range,
        count: f.count,
        x1: f.x1,
        x2: f.x2,
    };
    Ok((f.command, settings))
}

impl Settings {
    /// Fills every unset field from `file`. A density given by flag (named or
    /// CSV) replaces both density fields of the file.
    pub fn overlay(self, file: Settings) -> Settings {
        let density_from_flags = self.density.is_some() || self.csv.is_some();
        let (density, csv) = if density_from_flags {
            (self.density, self.csv)
        } else {
            (file.density, file.csv)
        };
        Settings {
            density,
            csv,
            n: self.n.or(file.n),
            truncation: self.truncation.or(file.truncation),
            scheme: self.scheme.or(file.scheme),
            convention: self.convention.or(file.convention),
            out: self.out.or(file.out),
            seed: self.seed.or(file.seed),
            tolerance: self.tolerance.or(file.tolerance),
            suite: self.suite.or(file.suite),
            freq_reach: self.freq_reach.or(file.freq_reach),
            z: self.z.or(file.z),
            range: self.range.or(file.range),
            count: self.count.or(file.count),
            x1: self.x1.or(file.x1),
            x2: self.x2.or(file.x2),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.density.is_some() && self.csv.is_some() {
            return Err("--density and --csv are mutually exclusive".into());
        }
        for (name, v) in [
            ("n", self.n),
            ("count", self.count),
        ] {
            if v == Some(0) {
                return Err(format!("{name} must be positive"));
            }
        }
        for (name, v) in [
            ("T", self.truncation),
            ("tolerance", self.tolerance),
            ("freq_reach", self.freq_reach),
        ] {
            if let Some(x) = v {
                if !(x > 0.0 && x.is_finite()) {
                    return Err(format!("{name} must be positive, got {x}"));
                }
            }
        }
        Ok(())
    }

    pub fn scheme(&self) -> Result<Scheme, String> {
        self.scheme
            .as_deref()
            .map_or(Ok(Scheme::GaussLegendre), |s| s.parse().map_err(|e| format!("{e}")))
    }

    pub fn suite(&self) -> Result<Suite, String> {
        self.suite.as_deref().map_or(Ok(Suite::All), str::parse)
    }

    pub fn convention(&self) -> TransformConvention {
        self.convention.unwrap_or(ConventionName::Analysis).convention()
    }

    /// The density named by flag or file, if any.
    pub fn density_source(&self) -> Result<Option<DensitySource>, String> {
        if let Some(name) = &self.density {
            return Ok(Some(DensitySource::Named(name.parse::<NamedDensity>()?)));
        }
        if let Some(path) = &self.csv {
            let file = fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let samples = SampledProductFunction::read_csv(file)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            return Ok(Some(DensitySource::Samples(samples)));
        }
        Ok(None)
    }

    /// `(lo, hi)` from the `range` field.
    pub fn range(&self, default: (f64, f64)) -> Result<(f64, f64), String> {
        let Some(r) = &self.range else {
            return Ok(default);
        };
        let parts: Vec<&str> = r.split(',').collect();
        let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| format!("bad range {r:?}"));
        match parts.as_slice() {
            [lo, hi] => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                if lo < hi && lo.is_finite() && hi.is_finite() {
                    Ok((lo, hi))
                } else {
                    Err(format!("range needs finite lo < hi, got {r:?}"))
                }
            }
            _ => Err(format!("range must be \"lo,hi\", got {r:?}")),
        }
    }
}
