use std::path::PathBuf;

use clap::ValueEnum;
use lw_core::gaussbonnet::{
    gauss_bonnet_residual_panels, FlatPlane, GaussBonnetReport, HyperbolicPlaneGraph, HyperboloidPatch, NonNullPolygon, SaddlePatch,
    SideCurve,
};
use lw_core::shape::ParametricSurface;
use lw_core::surface::{energy_equivalence_check, EquivalenceReport};
use serde::Serialize;

use super::{parse_list, positive, usage, CmdResult, Failure};
use crate::output::Outputs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestSurface {
    /// `(A, u, v)`, metric `du² − dv²`.
    Plane,
    /// `(√(1 − u² + v²), u, v)`.
    Hyperboloid,
    /// `(u² − v², u, v)`.
    Saddle,
    /// `(u, v, √(1 + u² + v²))`, Riemannian.
    HyperbolicPlane,
}

impl TestSurface {
    fn surface(self) -> Box<dyn ParametricSurface> {
        match self {
            TestSurface::Plane => Box::new(FlatPlane { offset: 1.0 }),
            TestSurface::Hyperboloid => Box::new(HyperboloidPatch),
            TestSurface::Saddle => Box::new(SaddlePatch),
            TestSurface::HyperbolicPlane => Box::new(HyperbolicPlaneGraph),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideKind {
    /// Straight segments in the parameter plane.
    Segment,
    /// Geodesics of the hyperboloid.
    Geodesic,
}

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    #[arg(long, value_enum, default_value = "hyperboloid")]
    pub surface: TestSurface,
    /// Rectangle `u0,u1,v0,v1` in parameter space.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "polygon")]
    pub rect: Option<String>,
    /// Counter-clockwise vertices `u,v;u,v;...` in parameter space.
    #[arg(long, allow_hyphen_values = true)]
    pub polygon: Option<String>,
    #[arg(long, value_enum, default_value = "segment")]
    pub sides: SideKind,
    /// Gauss-Legendre panels per side.
    #[arg(long, default_value_t = 64)]
    pub panels: usize,
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    /// Also check the energy identity on the polygon.
    #[arg(long)]
    pub energy: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub surface: TestSurface,
    pub vertices: Vec<[f64; 2]>,
    pub panels: usize,
    #[serde(flatten)]
    pub gauss_bonnet: GaussBonnetReport,
    pub energy: Option<EquivalenceReport>,
    pub tolerance: f64,
    pub passed: bool,
}

fn vertices(a: &Args) -> Result<Vec<[f64; 2]>, Failure> {
    if let Some(p) = &a.polygon {
        let v = p
            .split(';')
            .map(|pt| match parse_list(pt).map_err(usage)?[..] {
                [u, v] => Ok([u, v]),
                _ => Err(usage(format!("polygon vertex `{pt}` needs two coordinates"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if v.len() < 3 {
            return Err(usage("a polygon needs at least 3 vertices"));
        }
        return Ok(v);
    }
    let r = match &a.rect {
        Some(r) => parse_list(r).map_err(usage)?,
        None => match a.surface {
            TestSurface::Plane | TestSurface::HyperbolicPlane => vec![-0.5, 0.5, -0.5, 0.5],
            TestSurface::Hyperboloid | TestSurface::Saddle => vec![-0.3, 0.3, -0.3, 0.3],
        },
    };
    match r[..] {
        [u0, u1, v0, v1] if u0 < u1 && v0 < v1 => Ok(vec![[u0, v0], [u1, v0], [u1, v1], [u0, v1]]),
        _ => Err(usage("rect must be u0,u1,v0,v1 with u0 < u1 and v0 < v1")),
    }
}

pub fn run(a: &Args) -> CmdResult {
    positive("tol", a.tol)?;
    if a.panels == 0 {
        return Err(usage("panels must be positive"));
    }
    let verts = vertices(a)?;
    let surface = a.surface.surface();
    let n = verts.len();
    let curves: Vec<SideCurve> = (0..n)
        .map(|i| {
            let (p, q) = (verts[i], verts[(i + 1) % n]);
            match a.sides {
                SideKind::Segment => Ok(SideCurve::segment(p, q)),
                SideKind::Geodesic if a.surface == TestSurface::Hyperboloid => Ok(HyperboloidPatch.geodesic(p, q)),
                SideKind::Geodesic => Err(usage("geodesic sides are available on the hyperboloid only")),
            }
        })
        .collect::<Result<_, _>>()?;
    let polygon = NonNullPolygon::new(surface.as_ref(), curves)?;
    let gb = gauss_bonnet_residual_panels(surface.as_ref(), &polygon, a.panels)?;
    let energy = if a.energy { Some(energy_equivalence_check(surface.as_ref(), &polygon)?) } else { None };
    let energy_ok = energy.is_none_or(|e| e.gap.abs() / e.sigma.abs().max(1.0) < a.tol);
    let passed = gb.residual.abs() < a.tol && energy_ok;
    let report = Report { surface: a.surface, vertices: verts, panels: a.panels, gauss_bonnet: gb, energy, tolerance: a.tol, passed };
    let mut out = Outputs::default();
    out.report(a.out.as_deref(), &report)?;
    out.flush()?;
    Ok(passed)
}
