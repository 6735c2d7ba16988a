use std::path::PathBuf;

use clap::ValueEnum;
use lw_core::elastica::{integrate_frenet_from, unit_tangent, ElasticaProfile, ExcludedSet, FrenetStart, ProfileCurve, ProfileFamily, Termination};
use serde::Serialize;

use super::{model, parse_point, parse_range, positive, usage, CmdResult, Failure, HalfArg, ModelArg};
use crate::output::{fmt_f64, Outputs};

/// `|λ²|` below this rejects C as too close to a constant solution.
pub const C_EXCLUSION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Geodesic,
    Cn,
    Constant,
}

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    #[arg(long, value_enum, default_value = "cn")]
    pub family: Family,
    /// Curvature at the symmetry point `a0` (cn family).
    #[arg(long = "C", default_value_t = 1.0, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a0: f64,
    /// Causal character of the curve: 1 space-like, -1 time-like.
    #[arg(long, allow_hyphen_values = true)]
    pub eps1: Option<f64>,
    /// Causal character of the curve normal; picks `eps1` when that is not given.
    #[arg(long, allow_hyphen_values = true)]
    pub eps2: Option<f64>,
    #[arg(long, value_enum, default_value = "ads-a1")]
    pub model: ModelArg,
    #[arg(long, value_enum, default_value = "plus")]
    pub half: HalfArg,
    /// Initial point; defaults to (0, ±1) in the chosen half-plane.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub start: Option<[f64; 2]>,
    /// Angle parameter of the initial tangent.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta: f64,
    /// Arclength window `a,b`.
    #[arg(long, value_parser = parse_range, default_value = "-1,1", allow_hyphen_values = true)]
    pub span: (f64, f64),
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Negative branch of the constant solutions.
    #[arg(long)]
    pub negative: bool,
    /// Integrate up to the first pole instead of failing.
    #[arg(long)]
    pub allow_poles: bool,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub profile: ElasticaProfile,
    pub lambda_sq: Option<f64>,
    pub span: (f64, f64),
    pub step: f64,
    pub excluded: ExcludedSet,
    pub samples: usize,
    pub termination: Option<Termination>,
    pub arclength_span: Option<(f64, f64)>,
    pub unit_speed_defect: Option<f64>,
    pub el_residual_max: Option<f64>,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn build_profile(a: &Args) -> Result<ElasticaProfile, Failure> {
    let m = model(a.model, a.half);
    let eps1 = match (a.eps1, a.eps2) {
        (Some(e1), Some(e2)) => {
            if m.normal_sign(e1) != e2 {
                return Err(usage(format!("eps1 = {e1} and eps2 = {e2} are inconsistent in this model")));
            }
            e1
        }
        (Some(e1), None) => e1,
        (None, Some(e2)) => [1.0, -1.0]
            .into_iter()
            .find(|&e1| m.normal_sign(e1) == e2 && (m.is_lorentzian() || e1 > 0.0))
            .ok_or_else(|| usage(format!("no curve with eps2 = {e2} in this model")))?,
        (None, None) => 1.0,
    };
    let prof = match a.family {
        Family::Geodesic => ElasticaProfile::geodesic(m, eps1)?,
        Family::Cn => {
            let p = ElasticaProfile::cn(m, eps1, a.c, a.a0)?;
            if p.lambda_sq().abs() < C_EXCLUSION {
                return Err(usage(format!("C = {} is too close to a constant solution, which the cn family excludes", a.c)));
            }
            p
        }
        Family::Constant => ElasticaProfile::constant_critical(m, eps1, !a.negative)?,
    };
    Ok(prof)
}

pub fn integrate(a: &Args, prof: &ElasticaProfile) -> Result<ProfileCurve, Failure> {
    let m = prof.model;
    let start = a.start.unwrap_or([0.0, m.sign_half.sign()]);
    if !m.contains(start) {
        return Err(usage("start point is outside the half-plane"));
    }
    let tangent = unit_tangent(&m, start, prof.eps1, a.theta)?;
    let s0 = a.a0.clamp(a.span.0, a.span.1);
    Ok(integrate_frenet_from(m, |s| prof.curvature_at(s), FrenetStart { position: start, tangent }, s0, a.span, a.step)?)
}

pub fn run(a: &Args) -> CmdResult {
    positive("step", a.step)?;
    positive("tol", a.tol)?;
    let prof = build_profile(a)?;
    let excluded = prof.excluded_domain(a.span);
    let lambda_sq = (prof.family == ProfileFamily::CnFamily).then(|| prof.lambda_sq());
    let mut out = Outputs::default();
    if !excluded.is_empty() && !a.allow_poles {
        eprintln!("curvature has {} pole(s) in the window; pass --allow-poles to integrate up to them", excluded.poles.len());
        let report = Report {
            profile: prof,
            lambda_sq,
            span: a.span,
            step: a.step,
            excluded,
            samples: 0,
            termination: None,
            arclength_span: None,
            unit_speed_defect: None,
            el_residual_max: None,
            tolerance: a.tol,
            passed: false,
        };
        out.report(a.out.as_deref(), &report)?;
        out.flush()?;
        return Ok(false);
    }
    let curve = integrate(a, &prof)?;
    let residual = curve
        .samples
        .iter()
        .filter_map(|c| prof.el_residual(c.s).ok())
        .map(f64::abs)
        .fold(0.0, f64::max);
    let passed = residual < a.tol && curve.samples.len() > 1;
    if let Some(path) = &a.csv {
        out.file(path, curve_csv(&curve)?);
    }
    let report = Report {
        profile: prof,
        lambda_sq,
        span: a.span,
        step: a.step,
        excluded,
        samples: curve.samples.len(),
        termination: Some(curve.termination),
        arclength_span: Some(curve.arclength_span()),
        unit_speed_defect: Some(curve.unit_speed_defect()),
        el_residual_max: Some(residual),
        tolerance: a.tol,
        passed,
    };
    out.report(a.out.as_deref(), &report)?;
    out.flush()?;
    Ok(passed)
}

pub fn curve_csv(curve: &ProfileCurve) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["s", "x", "y", "tx", "ty", "kappa"])?;
    for c in &curve.samples {
        w.write_record([c.s, c.position[0], c.position[1], c.tangent[0], c.tangent[1], c.kappa].map(fmt_f64))?;
    }
    Ok(w.into_inner()?)
}
