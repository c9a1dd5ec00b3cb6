use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rayon::prelude::*;

use super::{random_in_disc, random_point, DensitySource, VerifyConfig, VerifyError};
use crate::algebra::{Bicomplex, DOrder, Hyperbolic};
use crate::cauchy::{cauchy_integral, jump_identity_check, BoundaryFunction};
use crate::densities::NamedDensity;
use crate::paley_wiener::{
    band_synthesize, epsilon_damped_transform, exponential_type_bound, ray_transform, recover,
    rectangle_contour_integral, sup_energy, BandDensity, ContourRect, HalfPlaneDensity,
    HorizontalLine, RecoveryOptions,
};
use crate::product_fn::{Conjugated, ProductFn, ProductFunction, Zero};
use crate::quadrature::{
    make_grid, DInterval, Part, ProductGrid, QuadratureRule, SampledProductFunction, Scheme,
};
use crate::report::{Report, ReportRow};
use crate::transform::{bicomplex_fourier, plancherel_check, TransformConvention};

/// Line heights `x1` (with `x2 = 0`) of the energy suite, moving toward the
/// boundary.
pub const ENERGY_HEIGHTS: [f64; 3] = [0.1, 0.01, 0.001];
/// Lines `(x1, x2)` used by the recovery suite.
pub const RECOVERY_LINES: [(f64, f64); 2] = [(1.0, 0.0), (2.0, 0.0)];
/// Recovered densities are compared on `(0, RECOVERY_WINDOW]`.
pub const RECOVERY_WINDOW: f64 = 10.0;
/// Damping parameters of the damped-transform suite, in decreasing order.
pub const DAMPING_STEPS: [f64; 3] = [0.1, 0.03, 0.01];
/// Node count of the transform-side grid in the Plancherel suite.
pub const PLANCHEREL_FREQ_NODES: usize = 2048;

const HALF_LINE_NODES: usize = 1024;
const BAND_NODES: usize = 64;

type Outcome = Result<Report, VerifyError>;

fn density_or(cfg: &VerifyConfig, default: NamedDensity) -> DensitySource {
    cfg.density
        .clone()
        .unwrap_or(DensitySource::Named(default))
}

fn real_line(cfg: &VerifyConfig, n: usize, reach: f64) -> Result<ProductGrid, VerifyError> {
    Ok(make_grid(&DInterval::real_line(), n, cfg.scheme, Some(reach))?)
}

fn skipped(suite: &str, reason: impl std::fmt::Display) -> Outcome {
    let mut r = Report::default();
    r.skip(format!("{suite}: {reason}"));
    Ok(r)
}

fn max_err<'a>(pairs: impl Iterator<Item = (&'a Bicomplex, Bicomplex)>) -> (f64, f64) {
    pairs.fold((0.0, 0.0), |(m1, m2), (a, b)| {
        let d = *a - b;
        (m1.max(d.beta1().norm()), m2.max(d.beta2().norm()))
    })
}

fn max_abs<'a>(values: impl Iterator<Item = &'a Bicomplex>) -> (f64, f64) {
    values.fold((0.0, 0.0), |(m1, m2), v| {
        (m1.max(v.beta1().norm()), m2.max(v.beta2().norm()))
    })
}

/// `‖a - b‖ / ‖b‖` per component in `L²`; absolute when `b` vanishes.
fn rel_l2k(a: &SampledProductFunction, b: &SampledProductFunction) -> Result<(f64, f64), VerifyError> {
    let diff = a.try_add(&b.scaled(Bicomplex::real(-1.0)))?.l2k_norm_squared()?.sqrt();
    let base = b.l2k_norm_squared()?.sqrt();
    let rel = |d: f64, s: f64| if s > 0.0 { d / s } else { d };
    Ok((rel(diff.s1(), base.s1()), rel(diff.s2(), base.s2())))
}

pub(super) fn algebra(cfg: &VerifyConfig) -> Outcome {
    let count = cfg.n_or(10_000);
    let tol = cfg.tol_or(10.0 * f64::EPSILON);
    let mut rng = cfg.rng(1);
    let mut draw = || {
        use rand::Rng;
        let mut c = || rng.gen_range(-10.0..10.0);
        Bicomplex::new(c(), c(), c(), c())
    };
    let mut mul = (0.0_f64, 0.0_f64);
    let mut add = (0.0_f64, 0.0_f64);
    let mut round_trip = (0.0_f64, 0.0_f64);
    let mut norm = (0.0_f64, 0.0_f64);
    let bump = |m: &mut (f64, f64), e1: f64, e2: f64| {
        m.0 = m.0.max(e1);
        m.1 = m.1.max(e2);
    };
    for _ in 0..count {
        let (z, w) = (draw(), draw());
        let scale = z.abs_sum() * w.abs_sum();
        let (p1, p2) = (z * w).to_idempotent();
        bump(
            &mut mul,
            (p1 - z.beta1() * w.beta1()).norm() / scale,
            (p2 - z.beta2() * w.beta2()).norm() / scale,
        );
        let (s1, s2) = (z + w).to_idempotent();
        let sum_scale = z.abs_sum() + w.abs_sum();
        bump(
            &mut add,
            (s1 - (z.beta1() + w.beta1())).norm() / sum_scale,
            (s2 - (z.beta2() + w.beta2())).norm() / sum_scale,
        );
        let back = Bicomplex::from_idempotent(z.beta1(), z.beta2()) - z;
        let e = back.max_abs() / z.abs_sum();
        bump(&mut round_trip, e, e);
        let lhs = (z * w).hyperbolic_norm();
        let rhs = z.hyperbolic_norm() * w.hyperbolic_norm();
        bump(&mut norm, (lhs.s1() - rhs.s1()).abs() / scale, (lhs.s2() - rhs.s2()).abs() / scale);
    }
    let (e, ed) = (Bicomplex::E, Bicomplex::E_DAGGER);
    let identities = [e * e - e, ed * ed - ed, e * ed, e + ed - Bicomplex::ONE]
        .iter()
        .map(Bicomplex::max_abs)
        .fold(0.0, f64::max);
    let param = format!("{count} random pairs");
    let mut r = Report::default();
    r.push(ReportRow::at_most("algebra/ring-iso-mul", &param, mul, tol));
    r.push(ReportRow::at_most("algebra/ring-iso-add", &param, add, tol));
    r.push(ReportRow::at_most("algebra/idempotent-round-trip", &param, round_trip, tol));
    r.push(ReportRow::at_most("algebra/norm-multiplicative", &param, norm, tol));
    r.push(ReportRow::at_most(
        "algebra/idempotent-identities",
        "e^2=e, e†^2=e†, e e†=0, e+e†=1",
        (identities, identities),
        0.0,
    ));
    Ok(r)
}

pub(super) fn exp_transform(cfg: &VerifyConfig) -> Outcome {
    let d = match density_or(cfg, NamedDensity::ExpDecay) {
        DensitySource::Named(d) => d,
        DensitySource::Samples(_) => return skipped("exp-transform", "sampled density has no closed-form transform"),
    };
    let reach = cfg.truncation_or(match d {
        NamedDensity::Indicator(a) => a,
        _ => 40.0,
    });
    let f = d.sample_profile(real_line(cfg, cfg.n_or(1 << 14), reach)?);
    let points: Vec<Bicomplex> = (0..50).map(|k| Bicomplex::real(-5.0 + 10.0 * k as f64 / 49.0)).collect();
    let values = bicomplex_fourier(&f, &points, &TransformConvention::unnormalized())?;
    let exact: Vec<Bicomplex> = points
        .iter()
        .map(|z| {
            let v = d.fourier(z.beta1()).expect("named densities have closed-form transforms");
            Bicomplex::from_idempotent(v, v)
        })
        .collect();
    let err = max_err(values.iter().zip(exact));
    let mut r = Report::default();
    r.push(ReportRow::at_most(
        "exp-transform",
        format!("{d}, 50 points in [-5,5], T={reach}"),
        err,
        cfg.tol_or(1e-6),
    ));
    Ok(r)
}

pub(super) fn plancherel(cfg: &VerifyConfig) -> Outcome {
    let sources = match &cfg.density {
        Some(s) => vec![s.clone()],
        None => vec![
            DensitySource::Named(NamedDensity::ExpDecay),
            DensitySource::Named(NamedDensity::Gaussian),
        ],
    };
    let freq_reach = cfg.freq_reach.unwrap_or(100.0);
    let freq = make_grid(
        &DInterval::real_line(),
        PLANCHEREL_FREQ_NODES,
        Scheme::GaussLegendre,
        Some(freq_reach),
    )?;
    let mut r = Report::default();
    for src in sources {
        let f = match &src {
            DensitySource::Named(d) => {
                let reach = cfg.truncation_or(match d {
                    NamedDensity::Indicator(a) => *a,
                    _ => 20.0,
                });
                d.sample_profile(real_line(cfg, cfg.n_or(1 << 14), reach)?)
            }
            DensitySource::Samples(s) => s.clone(),
        };
        let (lhs, rhs) = plancherel_check(&f, &TransformConvention::default(), &freq)?;
        let label = src.label();
        r.push(ReportRow::info("plancherel", format!("{label} ‖F‖²"), lhs));
        r.push(ReportRow::info("plancherel", format!("{label} ‖F̂‖² normalized"), rhs));
        let diff = lhs - rhs;
        r.push(ReportRow::at_most(
            "plancherel",
            format!("{label} |difference|, frequency reach {freq_reach}"),
            (diff.s1().abs(), diff.s2().abs()),
            cfg.tol_or(1e-6),
        ));
    }
    Ok(r)
}

enum Oracle {
    Named(NamedDensity),
    Samples(SampledProductFunction),
}

/// A half-line density together with its extension `F`.
struct HalfLine {
    f: Box<dyn ProductFunction>,
    energy: Hyperbolic,
    oracle: Oracle,
    label: String,
    zero: bool,
}

fn half_line(cfg: &VerifyConfig) -> Result<Result<HalfLine, String>, VerifyError> {
    let src = density_or(cfg, NamedDensity::ExpDecay);
    let label = src.label();
    let zero = src.is_zero();
    Ok(Ok(match src {
        DensitySource::Named(d) => {
            let reach = d.natural_reach();
            let fine = make_grid(
                &DInterval::half_line(),
                4 * HALF_LINE_NODES,
                Scheme::GaussLegendre,
                Some(reach),
            )?;
            let energy = d.sample_half_line(fine).l2k_norm_squared()?;
            let f: Box<dyn ProductFunction> = match d.closed_form() {
                Some(c) => Box::new(c),
                None => {
                    let grid = make_grid(
                        &DInterval::half_line(),
                        HALF_LINE_NODES,
                        Scheme::GaussLegendre,
                        Some(reach),
                    )?;
                    Box::new(HalfPlaneDensity::new(d.sample_half_line(grid))?)
                }
            };
            HalfLine {
                f,
                energy,
                oracle: Oracle::Named(d),
                label,
                zero,
            }
        }
        DensitySource::Samples(s) => {
            let density = match HalfPlaneDensity::new(s.clone()) {
                Ok(d) => d,
                Err(e) => return Ok(Err(e.to_string())),
            };
            HalfLine {
                energy: density.l2k_norm_squared(),
                f: Box::new(density),
                oracle: Oracle::Samples(s),
                label,
                zero,
            }
        }
    }))
}

pub(super) fn energy(cfg: &VerifyConfig) -> Outcome {
    let hl = match half_line(cfg)? {
        Ok(h) => h,
        Err(e) => return skipped("energy", e),
    };
    let reach = cfg.truncation_or(200.0);
    let x0 = real_line(cfg, cfg.n_or(1 << 14), reach)?;
    let lines: Vec<HorizontalLine> = ENERGY_HEIGHTS
        .iter()
        .map(|&x1| HorizontalLine::new(x1, 0.0))
        .collect::<Result<_, _>>()?;
    let mut r = Report::default();
    let mut energies = Vec::new();
    for line in &lines {
        let e = crate::paley_wiener::horizontal_line_energy(&hl.f, line, &x0)?;
        r.push(ReportRow::info("energy", format!("{} line x1={}", hl.label, line.x1()), e));
        energies.push(e);
    }
    // Heights decrease along the list, so energies must not decrease.
    let violations = energies.windows(2).fold((0.0, 0.0), |(v1, v2), w| {
        (
            v1 + f64::from(u8::from(w[1].s1() < w[0].s1())),
            v2 + f64::from(u8::from(w[1].s2() < w[0].s2())),
        )
    });
    r.push(ReportRow::at_most("energy", "monotone in x1 (violations)", violations, 0.0));
    let sup = sup_energy(&hl.f, &lines, &x0)?;
    r.push(ReportRow::info("energy", format!("{} ‖𝔉‖²", hl.label), hl.energy));
    let gap = sup - hl.energy;
    r.push(ReportRow::at_most(
        "energy",
        format!("|sup energy - ‖𝔉‖²|, T={reach}"),
        (gap.s1().abs(), gap.s2().abs()),
        cfg.tol_or(1e-2),
    ));
    r.push(ReportRow::at_most("energy", "sup energy - ‖𝔉‖²", gap.idempotent(), 1e-6));
    Ok(r)
}

/// The recovery grid on `(0, window]` and the density values there.
fn recovery_target(oracle: &Oracle) -> Result<Option<(ProductGrid, SampledProductFunction)>, VerifyError> {
    match oracle {
        Oracle::Named(d) => {
            let grid = make_grid(
                &DInterval::diagonal(0.0, RECOVERY_WINDOW)?,
                256,
                Scheme::GaussLegendre,
                None,
            )?;
            Ok(Some((grid.clone(), d.sample_half_line(grid))))
        }
        Oracle::Samples(s) => {
            let restrict = |p: Part| -> Result<Option<(QuadratureRule, Vec<Complex64>)>, VerifyError> {
                let (nodes, values): (Vec<f64>, Vec<Complex64>) = s
                    .rule(p)
                    .nodes()
                    .iter()
                    .zip(s.values(p))
                    .filter(|(&t, _)| t > 0.0 && t <= RECOVERY_WINDOW)
                    .map(|(&t, &v)| (t, v))
                    .unzip();
                if nodes.len() < 2 {
                    return Ok(None);
                }
                Ok(Some((QuadratureRule::trapezoid_on_nodes(nodes)?, values)))
            };
            let (Some((r1, v1)), Some((r2, v2))) = (restrict(Part::First)?, restrict(Part::Second)?) else {
                return Ok(None);
            };
            let grid = ProductGrid::new(r1, r2);
            Ok(Some((grid.clone(), SampledProductFunction::new(grid, v1, v2)?)))
        }
    }
}

pub(super) fn recovery(cfg: &VerifyConfig) -> Outcome {
    let hl = match half_line(cfg)? {
        Ok(h) => h,
        Err(e) => return skipped("recovery", e),
    };
    let Some((t_grid, target)) = recovery_target(&hl.oracle)? else {
        return skipped("recovery", "fewer than two samples in the comparison window");
    };
    let reach = cfg.truncation_or(200.0);
    let x0 = real_line(cfg, cfg.n_or(1 << 15), reach)?;
    let negative = make_grid(
        &DInterval::diagonal(-RECOVERY_WINDOW, 0.0)?,
        64,
        Scheme::GaussLegendre,
        None,
    )?;
    let opts = RecoveryOptions::default();
    let tol = cfg.tol_or(1e-4);
    let mut r = Report::default();
    let mut recovered = Vec::new();
    for (x1, x2) in RECOVERY_LINES {
        let line = HorizontalLine::new(x1, x2)?;
        let rec = recover(&hl.f, &line, &t_grid, &x0, &opts)?;
        r.push(ReportRow::at_most(
            "recovery",
            format!("{} relative error line ({x1},{x2}), T={reach}", hl.label),
            rel_l2k(&rec, &target)?,
            tol,
        ));
        let neg = recover(&hl.f, &line, &negative, &x0, &opts)?;
        let worst = Part::BOTH.map(|p| neg.values(p).iter().map(|v| v.norm()).fold(0.0, f64::max));
        r.push(ReportRow::at_most(
            "recovery",
            format!("max |value| on t<0, line ({x1},{x2})"),
            (worst[0], worst[1]),
            tol,
        ));
        recovered.push(rec);
    }
    r.push(ReportRow::at_most(
        "recovery",
        "line independence (1,0) vs (2,0)",
        rel_l2k(&recovered[0], &recovered[1])?,
        tol,
    ));
    Ok(r)
}

pub(super) fn contour(cfg: &VerifyConfig) -> Outcome {
    let hl = match half_line(cfg)? {
        Ok(h) => h,
        Err(e) => return skipped("contour", e),
    };
    let n_edge = cfg.n_or(256);
    let (t, y) = (1.0, 2.0);
    let mut r = Report::default();
    for alpha in [2.0, 5.0] {
        let rect = ContourRect::new(alpha, y)?;
        let i = rectangle_contour_integral(&hl.f, t, &rect, n_edge)?;
        r.push(ReportRow::at_most(
            "contour",
            format!("{} ‖I‖ alpha={alpha} y={y} t={t}", hl.label),
            i.hyperbolic_norm().idempotent(),
            cfg.tol_or(1e-6),
        ));
        if hl.zero {
            continue;
        }
        let control = rectangle_contour_integral(&Conjugated(&hl.f), t, &rect, n_edge)?;
        r.push(ReportRow::at_least(
            "contour",
            format!("conjugated control alpha={alpha}"),
            control.hyperbolic_norm().idempotent(),
            1e-3,
        ));
    }
    if hl.zero {
        r.skip("contour: negative control needs a nonzero density");
    }
    Ok(r)
}

fn band(cfg: &VerifyConfig) -> Result<Result<(BandDensity, Option<NamedDensity>), String>, VerifyError> {
    match density_or(cfg, NamedDensity::Indicator(1.0)) {
        DensitySource::Named(d) => {
            let a = d.band_half_width().unwrap_or(1.0);
            let grid = make_grid(&DInterval::diagonal(-a, a)?, BAND_NODES, Scheme::GaussLegendre, None)?;
            Ok(Ok((BandDensity::new(d.sample_profile(grid), a)?, Some(d))))
        }
        DensitySource::Samples(s) => {
            let a = Part::BOTH
                .iter()
                .map(|&p| {
                    let (lo, hi) = s.rule(p).span();
                    lo.abs().max(hi.abs())
                })
                .fold(0.0, f64::max);
            Ok(BandDensity::new(s, a).map(|b| (b, None)).map_err(|e| e.to_string()))
        }
    }
}

pub(super) fn exponential_type(cfg: &VerifyConfig) -> Outcome {
    let (density, named) = match band(cfg)? {
        Ok(b) => b,
        Err(e) => return skipped("exponential-type", e),
    };
    let bound = exponential_type_bound(&density);
    let label = named.map_or("samples".to_string(), |d| d.to_string());
    let mut r = Report::default();
    r.push(ReportRow::info("exponential-type", format!("{label} C"), Hyperbolic::real(bound.c)));
    if let Some(NamedDensity::Indicator(a)) = named {
        let e = (bound.c - 2.0 * SQRT_2 * a).abs();
        r.push(ReportRow::at_most("exponential-type", "C vs 2√2·A", (e, e), 1e-12));
    }
    let mut rng = cfg.rng(7);
    let cloud: Vec<Bicomplex> = (0..100)
        .map(|_| Bicomplex::from_idempotent(random_in_disc(&mut rng, 10.0), random_in_disc(&mut rng, 10.0)))
        .collect();
    let mut worst = (0.0_f64, 0.0_f64);
    let mut all_leq = true;
    for z in &cloud {
        let lhs = band_synthesize(&density, z).hyperbolic_norm();
        let rhs = bound.bound_at(z);
        worst = (worst.0.max(lhs.s1() / rhs.s1()), worst.1.max(lhs.s2() / rhs.s2()));
        all_leq &= bound.check(&density, z) == DOrder::Leq;
    }
    r.push(ReportRow::new(
        "exponential-type",
        "max ‖F(Z)‖ / C exp(A‖Z‖), 100 points with |β_i| <= 10",
        worst,
        1.0,
        all_leq,
    ));
    match named.filter(|d| d.band_synthesis(Complex64::default()).is_some()) {
        Some(d) => {
            let mut rng = cfg.rng(8);
            let points: Vec<Bicomplex> = (0..20)
                .map(|_| Bicomplex::from_idempotent(random_in_disc(&mut rng, 5.0), random_in_disc(&mut rng, 5.0)))
                .collect();
            let synthesized: Vec<Bicomplex> = points.iter().map(|z| band_synthesize(&density, z)).collect();
            let exact = points.iter().map(|z| {
                Bicomplex::from_idempotent(
                    d.band_synthesis(z.beta1()).expect("checked above"),
                    d.band_synthesis(z.beta2()).expect("checked above"),
                )
            });
            let err = max_err(synthesized.iter().zip(exact));
            r.push(ReportRow::at_most(
                "exponential-type",
                "synthesis vs closed form, 20 points",
                err,
                cfg.tol_or(1e-8),
            ));
        }
        None => r.skip("exponential-type: no closed-form synthesis for this density"),
    }
    Ok(r)
}

pub(super) fn damped(cfg: &VerifyConfig) -> Outcome {
    let (density, _) = match band(cfg)? {
        Ok(b) => b,
        Err(e) => return skipped("damped", e),
    };
    let eps_min = DAMPING_STEPS[DAMPING_STEPS.len() - 1];
    let reach = cfg.truncation_or(40.0 / eps_min);
    let grid = real_line(cfg, cfg.n_or(1 << 17), reach)?;
    let sample = |p: Part| -> Vec<Complex64> {
        grid.rule(p)
            .nodes()
            .par_iter()
            .map(|&x| density.component(p, Complex64::new(x, 0.0)))
            .collect()
    };
    let (v1, v2) = (sample(Part::First), sample(Part::Second));
    let boundary = SampledProductFunction::new(grid, v1, v2)?;
    let a = density.half_width();
    let outside = Hyperbolic::real(3.0 * a);
    let mut r = Report::default();
    let mut mags = Vec::new();
    for eps in DAMPING_STEPS {
        let v = epsilon_damped_transform(&boundary, Hyperbolic::real(eps), outside)?;
        let m = v.hyperbolic_norm();
        r.push(ReportRow::info("damped", format!("|value| eps={eps} t={}", 3.0 * a), m));
        mags.push(m);
    }
    let zero = density.samples().is_zero();
    // The zero density has all magnitudes 0, so only the non-strict order can hold.
    let below = |b: f64, a: f64| if zero { b <= a } else { b < a };
    let violations = mags.windows(2).fold((0.0, 0.0), |(v1, v2), w| {
        (
            v1 + f64::from(u8::from(!below(w[1].s1(), w[0].s1()))),
            v2 + f64::from(u8::from(!below(w[1].s2(), w[0].s2()))),
        )
    });
    let label = if zero { "non-increasing in eps (violations)" } else { "strictly decreasing in eps (violations)" };
    r.push(ReportRow::at_most("damped", label, violations, 0.0));
    let last = mags[mags.len() - 1];
    r.push(ReportRow::at_most(
        "damped",
        format!("|value| at eps={eps_min}"),
        last.idempotent(),
        cfg.tol_or(1e-2),
    ));
    if zero {
        r.skip("damped: in-band control needs a nonzero density");
    } else {
        let inside = Hyperbolic::real(0.5 * a);
        let v = epsilon_damped_transform(&boundary, Hyperbolic::real(eps_min), inside)?;
        r.push(ReportRow::at_least(
            "damped",
            format!("in-band control t={}", 0.5 * a),
            v.hyperbolic_norm().idempotent(),
            0.1,
        ));
    }
    Ok(r)
}

fn rational_pair(w: Complex64) -> Complex64 {
    1.0 / ((w + Complex64::i()) * (w + Complex64::new(0.0, 2.0)))
}

pub(super) fn cauchy(cfg: &VerifyConfig) -> Outcome {
    let functions: Vec<(String, Box<dyn ProductFunction>)> = match &cfg.density {
        None => vec![
            (
                "1/(w+i)^2".into(),
                Box::new(NamedDensity::RationalHardy.closed_form().expect("closed form")),
            ),
            ("1/((w+i)(w+2i))".into(), Box::new(ProductFn::diagonal(rational_pair))),
        ],
        Some(DensitySource::Named(d)) => match d.closed_form() {
            Some(c) => vec![(d.to_string(), Box::new(c))],
            None => return skipped("cauchy", format!("{d} has no closed-form extension")),
        },
        Some(DensitySource::Samples(_)) => {
            return skipped("cauchy", "sampled density has no closed-form extension")
        }
    };
    let reach = cfg.truncation_or(1e4);
    let grid = real_line(cfg, cfg.n_or(1 << 20), reach)?;
    let mut rng = cfg.rng(9);
    let upper: Vec<Bicomplex> = (0..20).map(|_| random_point(&mut rng, (-5.0, 5.0), (0.5, 5.0))).collect();
    let lower: Vec<Bicomplex> = (0..20).map(|_| random_point(&mut rng, (-5.0, 5.0), (-5.0, -0.5))).collect();
    let tol = cfg.tol_or(1e-4);
    let mut r = Report::default();
    for (label, f) in functions {
        let h = BoundaryFunction::from_function(&f, grid.clone())?;
        let reproduced: Vec<Bicomplex> = upper
            .par_iter()
            .map(|z| cauchy_integral(&h, z))
            .collect::<Result<_, _>>()?;
        let exact: Vec<Bicomplex> = upper.iter().map(|z| f.eval(z)).collect();
        r.push(ReportRow::at_most(
            "cauchy",
            format!("{label} reproduction, 20 upper points, T={reach}"),
            max_err(reproduced.iter().zip(exact)),
            tol,
        ));
        let vanishing: Vec<Bicomplex> = lower
            .par_iter()
            .map(|z| cauchy_integral(&h, z))
            .collect::<Result<_, _>>()?;
        r.push(ReportRow::at_most(
            "cauchy",
            format!("{label} vanishing, 20 lower points"),
            max_abs(vanishing.iter()),
            tol,
        ));
        let jumps: Vec<(Bicomplex, Bicomplex)> = upper
            .par_iter()
            .map(|z| jump_identity_check(&h, z, &f))
            .collect::<Result<_, _>>()?;
        r.push(ReportRow::at_most(
            "cauchy",
            format!("{label} jump identity"),
            max_err(jumps.iter().map(|(l, rhs)| (l, *rhs))),
            2.0 * tol,
        ));
    }
    Ok(r)
}

pub(super) fn ray(cfg: &VerifyConfig) -> Outcome {
    let src = density_or(cfg, NamedDensity::ExpDecay);
    let (right, left): (Box<dyn ProductFunction>, Box<dyn ProductFunction>) = match src {
        DensitySource::Named(NamedDensity::ExpDecay) => (
            Box::new(ProductFn::diagonal(|b: Complex64| (-b).exp())),
            Box::new(ProductFn::diagonal(|b: Complex64| b.exp())),
        ),
        DensitySource::Named(NamedDensity::Zero) => (Box::new(Zero), Box::new(Zero)),
        other => return skipped("ray", format!("no Laplace oracle for {}", other.label())),
    };
    let zero = src_is_zero(cfg);
    let u = make_grid(&DInterval::half_line(), cfg.n_or(2048), cfg.scheme, Some(cfg.truncation_or(60.0)))?;
    let w = |k: usize| 0.5 * (k + 1) as f64;
    let mut values = Vec::new();
    let mut exact = Vec::new();
    for k in 0..10 {
        let (w1, w2) = (w(k), w(9 - k));
        let point = Bicomplex::from_idempotent(Complex64::new(w1, 0.0), Complex64::new(w2, 0.0));
        values.push(ray_transform(&right, 0.0, &point, &u)?);
        let oracle = |x: f64| if zero { Complex64::default() } else { Complex64::new(1.0 / (x + 1.0), 0.0) };
        exact.push(Bicomplex::from_idempotent(oracle(w1), oracle(w2)));
    }
    let tol = cfg.tol_or(1e-6);
    let mut r = Report::default();
    let (oracle0, oracle_pi) = if zero { ("0", "0") } else { ("1/(w+1)", "-1/2") };
    r.push(ReportRow::at_most(
        "ray",
        format!("alpha=0 vs {oracle0}, 10 points"),
        max_err(values.iter().zip(exact)),
        tol,
    ));
    let pi_value = ray_transform(&left, PI, &Bicomplex::real(-1.0), &u)?;
    let target = if zero { Bicomplex::ZERO } else { Bicomplex::real(-0.5) };
    let e = pi_value - target;
    r.push(ReportRow::at_most(
        "ray",
        format!("alpha=pi, reflected boundary, W=-1 vs {oracle_pi}"),
        (e.beta1().norm(), e.beta2().norm()),
        tol,
    ));
    Ok(r)
}

fn src_is_zero(cfg: &VerifyConfig) -> bool {
    cfg.density.as_ref().is_some_and(DensitySource::is_zero)
}
