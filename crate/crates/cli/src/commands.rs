//! One function per subcommand. Library errors are reported as configuration
//! errors; only failed verification checks map to exit status 1.

use std::fs::File;
use std::io::{self, BufWriter, Write};

use bcpw::cauchy::{cauchy_integral, BoundaryFunction};
use bcpw::densities::NamedDensity;
use bcpw::paley_wiener::{
    band_synthesize, extend, recover, BandDensity, HalfPlaneDensity, HorizontalLine,
    RecoveryOptions,
};
use bcpw::quadrature::{make_grid, DInterval, Part, ProductGrid, QuadratureRule};
use bcpw::transform::{bicomplex_fourier, write_values_csv};
use bcpw::verify::{self, DensitySource, VerifyConfig};
use bcpw::Bicomplex;

use crate::config::{CommandName, Settings};
use crate::Failure;

fn cfg_err(e: impl std::fmt::Display) -> Failure {
    Failure::Config(e.to_string())
}

pub fn run(command: CommandName, s: &Settings) -> Result<(), Failure> {
    match command {
        CommandName::Decompose => decompose(s),
        CommandName::Transform => transform(s),
        CommandName::Extend => extension(s),
        CommandName::Recover => recovery(s),
        CommandName::Band => band(s),
        CommandName::Cauchy => cauchy(s),
        CommandName::Verify => verification(s),
    }
}

fn output(s: &Settings) -> Result<Box<dyn Write>, Failure> {
    Ok(match &s.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| cfg_err(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn parse_points(s: &Settings) -> Result<Option<Vec<Bicomplex>>, Failure> {
    s.z.as_ref()
        .map(|zs| zs.iter().map(|z| z.parse::<Bicomplex>().map_err(cfg_err)).collect())
        .transpose()
}

/// The `--z` points, or `count` points spread evenly over `range` and mapped
/// through `at`.
fn points(
    s: &Settings,
    default_range: (f64, f64),
    at: impl Fn(f64) -> Bicomplex,
) -> Result<Vec<Bicomplex>, Failure> {
    if let Some(zs) = parse_points(s)? {
        return Ok(zs);
    }
    let (lo, hi) = s.range(default_range)?;
    let count = s.count.unwrap_or(50);
    if count == 1 {
        return Ok(vec![at(lo)]);
    }
    let rule = QuadratureRule::trapezoid(lo, hi, count).map_err(cfg_err)?;
    Ok(rule.nodes().iter().map(|&x| at(x)).collect())
}

fn density(s: &Settings, default: NamedDensity) -> Result<DensitySource, Failure> {
    Ok(s.density_source()?.unwrap_or(DensitySource::Named(default)))
}

fn decompose(s: &Settings) -> Result<(), Failure> {
    let zs = parse_points(s)?.ok_or_else(|| cfg_err("decompose needs --z"))?;
    let mut out = output(s)?;
    for z in zs {
        let (b1, b2) = z.to_idempotent();
        writeln!(out, "z = {z}").map_err(cfg_err)?;
        writeln!(out, "beta1 = {b1}").map_err(cfg_err)?;
        writeln!(out, "beta2 = {b2}").map_err(cfg_err)?;
        writeln!(out, "norm_k = {}", z.hyperbolic_norm()).map_err(cfg_err)?;
    }
    out.flush().map_err(cfg_err)
}

fn write_values(s: &Settings, pts: &[Bicomplex], values: &[Bicomplex]) -> Result<(), Failure> {
    let mut out = output(s)?;
    write_values_csv(&mut out, pts, values).map_err(cfg_err)?;
    out.flush().map_err(cfg_err)
}

fn transform(s: &Settings) -> Result<(), Failure> {
    let samples = match density(s, NamedDensity::ExpDecay)? {
        DensitySource::Samples(samples) => samples,
        DensitySource::Named(d) => {
            let t = s.truncation.unwrap_or(d.natural_reach());
            let grid = make_grid(&DInterval::real_line(), s.n.unwrap_or(1 << 14), s.scheme()?, Some(t))
                .map_err(cfg_err)?;
            d.sample_profile(grid)
        }
    };
    let pts = points(s, (-5.0, 5.0), Bicomplex::real)?;
    let values = bicomplex_fourier(&samples, &pts, &s.convention()).map_err(cfg_err)?;
    write_values(s, &pts, &values)
}

fn half_line_density(s: &Settings, src: DensitySource) -> Result<HalfPlaneDensity, Failure> {
    let samples = match src {
        DensitySource::Samples(samples) => samples,
        DensitySource::Named(d) => {
            let reach = s.truncation.unwrap_or(d.natural_reach());
            let interval = DInterval::diagonal(0.0, reach).map_err(cfg_err)?;
            let grid = make_grid(&interval, s.n.unwrap_or(4096), s.scheme()?, None).map_err(cfg_err)?;
            d.sample_half_line(grid)
        }
    };
    HalfPlaneDensity::new(samples).map_err(cfg_err)
}

fn line(s: &Settings) -> Result<HorizontalLine, Failure> {
    HorizontalLine::new(s.x1.unwrap_or(1.0), s.x2.unwrap_or(0.0)).map_err(cfg_err)
}

fn extension(s: &Settings) -> Result<(), Failure> {
    let f = half_line_density(s, density(s, NamedDensity::ExpDecay)?)?;
    let l = line(s)?;
    let pts = points(s, (-5.0, 5.0), |x| l.at(x))?;
    let values = pts
        .iter()
        .map(|z| extend(&f, z))
        .collect::<Result<Vec<_>, _>>()
        .map_err(cfg_err)?;
    write_values(s, &pts, &values)
}

fn recovery(s: &Settings) -> Result<(), Failure> {
    let l = line(s)?;
    let x0_grid = make_grid(
        &DInterval::real_line(),
        s.n.unwrap_or(1 << 15),
        s.scheme()?,
        Some(s.truncation.unwrap_or(200.0)),
    )
    .map_err(cfg_err)?;
    let t_grid = match parse_points(s)? {
        Some(_) => return Err(cfg_err("recover samples the density on --range, not at --z points")),
        None => {
            let (lo, hi) = s.range((0.0, 10.0))?;
            ProductGrid::diagonal(
                QuadratureRule::trapezoid(lo, hi, s.count.unwrap_or(101)).map_err(cfg_err)?,
            )
        }
    };
    let opts = RecoveryOptions::default();
    let recovered = match density(s, NamedDensity::ExpDecay)? {
        DensitySource::Named(d) if d.has_extension() => {
            let f = d.closed_form().expect("checked above");
            recover(&f, &l, &t_grid, &x0_grid, &opts)
        }
        src => {
            // Without a closed form, the extension itself comes from quadrature
            // of the density on its default half-line grid.
            let plain = Settings { n: None, truncation: None, ..s.clone() };
            let f = half_line_density(&plain, src)?;
            recover(&f, &l, &t_grid, &x0_grid, &opts)
        }
    }
    .map_err(cfg_err)?;
    let mut out = output(s)?;
    recovered.write_csv(&mut out).map_err(cfg_err)?;
    out.flush().map_err(cfg_err)
}

fn band_density(s: &Settings) -> Result<BandDensity, Failure> {
    match density(s, NamedDensity::Indicator(1.0))? {
        DensitySource::Samples(samples) => {
            let reach = Part::BOTH
                .iter()
                .map(|&p| {
                    let (lo, hi) = samples.rule(p).span();
                    lo.abs().max(hi.abs())
                })
                .fold(0.0, f64::max);
            let a = s.truncation.unwrap_or(reach);
            BandDensity::new(samples, a).map_err(cfg_err)
        }
        DensitySource::Named(d) => {
            let a = s
                .truncation
                .or(d.band_half_width())
                .ok_or_else(|| cfg_err(format!("{d} is not band-limited; give the band with --T")))?;
            let interval = DInterval::diagonal(-a, a).map_err(cfg_err)?;
            let grid = make_grid(&interval, s.n.unwrap_or(64), s.scheme()?, None).map_err(cfg_err)?;
            BandDensity::new(d.sample_profile(grid), a).map_err(cfg_err)
        }
    }
}

fn band(s: &Settings) -> Result<(), Failure> {
    let f = band_density(s)?;
    let pts = points(s, (-10.0, 10.0), Bicomplex::real)?;
    let values: Vec<Bicomplex> = pts.iter().map(|z| band_synthesize(&f, z)).collect();
    write_values(s, &pts, &values)
}

fn cauchy(s: &Settings) -> Result<(), Failure> {
    let h = match density(s, NamedDensity::RationalHardy)? {
        DensitySource::Samples(samples) => BoundaryFunction::new(samples).map_err(cfg_err)?,
        DensitySource::Named(d) => {
            let f = d
                .closed_form()
                .ok_or_else(|| cfg_err(format!("{d} has no closed-form boundary function")))?;
            let grid = make_grid(
                &DInterval::real_line(),
                s.n.unwrap_or(1 << 16),
                s.scheme()?,
                Some(s.truncation.unwrap_or(1000.0)),
            )
            .map_err(cfg_err)?;
            BoundaryFunction::from_function(&f, grid).map_err(cfg_err)?
        }
    };
    let (x1, x2) = (s.x1.unwrap_or(1.0), s.x2.unwrap_or(0.0));
    let pts = points(s, (-5.0, 5.0), |x| Bicomplex::new(x, x1, x2, 0.0))?;
    let values = pts
        .iter()
        .map(|z| cauchy_integral(&h, z))
        .collect::<Result<Vec<_>, _>>()
        .map_err(cfg_err)?;
    write_values(s, &pts, &values)
}

fn verification(s: &Settings) -> Result<(), Failure> {
    let suite = s.suite()?;
    let defaults = VerifyConfig::default();
    let cfg = VerifyConfig {
        density: s.density_source()?,
        n: s.n,
        truncation: s.truncation,
        freq_reach: s.freq_reach,
        scheme: s.scheme()?,
        seed: s.seed.unwrap_or(defaults.seed),
        tolerance: s.tolerance,
    };
    let report = verify::run(suite, &cfg).map_err(cfg_err)?;
    let mut out = output(s)?;
    report.write_csv(&mut out).map_err(cfg_err)?;
    out.flush().map_err(cfg_err)?;

    for reason in &report.skipped {
        eprintln!("skipped: {reason}");
    }
    let failed: Vec<String> = report
        .failures()
        .map(|r| format!("{} [{}]", r.test, r.parameter))
        .collect();
    eprintln!(
        "{suite}: {} checks, {} failed",
        report.rows.iter().filter(|r| !r.bound.is_nan()).count(),
        failed.len()
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed: {}", failed.join(", "))))
    }
}
