use std::path::PathBuf;

use clap::ValueEnum;
use lw_core::mink::AxisKind;
use lw_core::surface::{generate_surface, grid_with_step, willmore_energy, EnergyReport, Profile, RotationalSurface};
use serde::Serialize;

use super::{parse_range, positive, CmdResult, Failure};
use crate::output::Outputs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// One-sheet hyperboloid `x² + y² − z² = 1`.
    Hyperboloid,
    /// Cylinder `y² + z² = r²` about the time-like axis.
    Cylinder,
    /// Plane `x = a`.
    Plane,
    /// Saddle `x = y² − z²`.
    Saddle,
    /// Hyperbolic plane `x² + y² − z² = −1`.
    HyperbolicPlane,
}

impl Preset {
    pub fn axis(self) -> AxisKind {
        match self {
            Preset::Cylinder => AxisKind::A1,
            _ => AxisKind::A2,
        }
    }

    /// Default profile window, away from the axis and from null points.
    pub fn default_s_range(self) -> (f64, f64) {
        match self {
            Preset::Hyperboloid => (0.2, 1.0),
            Preset::Cylinder | Preset::HyperbolicPlane => (-0.5, 0.5),
            Preset::Plane => (0.5, 1.5),
            Preset::Saddle => (0.6, 1.6),
        }
    }
}

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    #[arg(long, value_enum)]
    pub preset: Preset,
    /// Cylinder radius.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    /// Plane offset.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub s_range: Option<(f64, f64)>,
    #[arg(long, value_parser = parse_range, default_value = "0,1", allow_hyphen_values = true)]
    pub t_range: (f64, f64),
    #[arg(long, default_value_t = 1e-2)]
    pub hs: f64,
    #[arg(long, default_value_t = 1e-2)]
    pub ht: f64,
    /// Largest Willmore residual accepted as a solution.
    #[arg(long, default_value_t = lw_core::surface::SOLUTION_THRESHOLD)]
    pub threshold: f64,
    #[arg(long)]
    pub obj: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "SOLUTION")]
    Solution,
    #[serde(rename = "NOT-SOLUTION")]
    NotSolution,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub preset: Preset,
    pub axis: AxisKind,
    pub s_range: (f64, f64),
    pub t_range: (f64, f64),
    pub energies: EnergyReport,
    pub threshold: f64,
    pub verdict: Verdict,
}

pub fn build(preset: Preset, r: f64, a: f64, s: (f64, f64), t: (f64, f64), hs: f64, ht: f64) -> Result<RotationalSurface, Failure> {
    let profile = match preset {
        Preset::Hyperboloid => Profile::hyperboloid(),
        Preset::Cylinder => Profile::cylinder(r),
        Preset::Plane => Profile::plane(a),
        Preset::Saddle => Profile::saddle(),
        Preset::HyperbolicPlane => Profile::hyperbolic_plane(),
    };
    Ok(generate_surface(preset.axis(), profile, grid_with_step(s.0, s.1, hs), grid_with_step(t.0, t.1, ht))?)
}

pub fn run(args: &Args) -> CmdResult {
    positive("hs", args.hs)?;
    positive("ht", args.ht)?;
    positive("r", args.r)?;
    positive("threshold", args.threshold)?;
    let s_range = args.s_range.unwrap_or(args.preset.default_s_range());
    let surface = build(args.preset, args.r, args.a, s_range, args.t_range, args.hs, args.ht)?;
    if surface.ns() < 5 || surface.nt() < 5 {
        return Err(super::usage("the grid needs at least 5 points in each direction"));
    }
    let energies = willmore_energy(&surface, surface.full_window())?;
    let verdict = if energies.residual_field_max < args.threshold { Verdict::Solution } else { Verdict::NotSolution };
    let mut out = Outputs::default();
    if let Some(path) = &args.obj {
        let mut buf = Vec::new();
        surface.write_obj(&mut buf)?;
        out.file(path, buf);
    }
    let report = Report { preset: args.preset, axis: args.preset.axis(), s_range, t_range: args.t_range, energies, threshold: args.threshold, verdict };
    out.report(args.out.as_deref(), &report)?;
    out.flush()?;
    Ok(verdict == Verdict::Solution)
}
