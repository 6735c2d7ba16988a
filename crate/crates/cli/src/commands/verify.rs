use std::path::PathBuf;

use lw_core::elastica::{catalog, integrate_frenet, unit_tangent, ElasticaProfile, FrenetStart};
use lw_core::elliptic::jacobi_sncndn;
use lw_core::expr::Expr;
use lw_core::gaussbonnet::{gauss_bonnet_residual, HyperboloidPatch, NonNullPolygon};
use lw_core::gluing::{build_glued_surface, check_local_gluing, classify_glued_solution, seed_graphs, GluedClass, GluingSeed};
use lw_core::surface::{energy_equivalence_check, linspace, willmore_residual};
use serde::Serialize;

use super::surface::{build, Preset};
use super::{CmdResult, Failure};
use crate::output::Outputs;

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: String,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn below(name: &str, value: f64, bound: f64) -> Check {
    Check { name: name.into(), value, bound: format!("< {bound:e}"), passed: value < bound }
}

fn above(name: &str, value: f64, bound: f64) -> Check {
    Check { name: name.into(), value, bound: format!("> {bound:e}"), passed: value > bound }
}

fn elliptic_identities() -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let u = -10.0 + 0.1 * i as f64;
        for m in linspace(0.0, 1.0, 11) {
            let (sn, cn, dn) = jacobi_sncndn(u, m);
            worst = worst.max((sn * sn + cn * cn - 1.0).abs()).max((dn * dn + m * sn * sn - 1.0).abs());
        }
    }
    worst
}

fn elastica_residuals() -> Result<f64, Failure> {
    let mut worst: f64 = 0.0;
    for row in catalog() {
        let prof = ElasticaProfile::cn(row.model, row.eps1, 1.0, 0.0)?;
        let half = prof.pole_free_half_width().map_or(1.0, |h| (0.9 * h).min(1.0));
        for s in linspace(-half, half, 50) {
            worst = worst.max(prof.el_residual(s)?.abs());
        }
    }
    Ok(worst)
}

fn elastica_surface_residual() -> Result<f64, Failure> {
    let row = catalog()[4];
    let prof = ElasticaProfile::cn(row.model, row.eps1, 1.0, 0.0)?;
    let start = [0.2, 1.0];
    let tangent = unit_tangent(&row.model, start, row.eps1, 0.3)?;
    let curve = integrate_frenet(row.model, |s| prof.curvature_at(s), FrenetStart { position: start, tangent }, (-0.2, 0.2), 1e-3)?;
    let s_grid = curve.samples.iter().map(|c| c.s).collect();
    let surface = lw_core::surface::generate_surface(row.model.axis(), lw_core::surface::Profile::Sampled(curve), s_grid, linspace(0.0, 0.01, 11))?;
    Ok(willmore_residual(&surface)?.max_abs())
}

fn preset_residual(p: Preset) -> Result<f64, Failure> {
    let s = build(p, 1.0, 1.0, p.default_s_range(), (0.0, 0.5), 1e-2, 1e-2)?;
    Ok(willmore_residual(&s)?.max_abs())
}

pub fn run(a: &Args) -> CmdResult {
    let mut checks = vec![
        below("elliptic identities", elliptic_identities(), 1e-10),
        below("elastica Euler-Lagrange residual, all catalog rows", elastica_residuals()?, 1e-6),
        below("Willmore residual of an elastica surface", elastica_surface_residual()?, 1e-4),
        below("Willmore residual, hyperboloid", preset_residual(Preset::Hyperboloid)?, 1e-4),
        below("Willmore residual, plane", preset_residual(Preset::Plane)?, 1e-4),
        above("Willmore residual, cylinder", preset_residual(Preset::Cylinder)?, 0.1),
        above("Willmore residual, saddle", preset_residual(Preset::Saddle)?, 0.1),
    ];

    let seed = GluingSeed::parse("sqrt(1+u)", 0.9)?;
    let glued = build_glued_surface(&seed, (0.05, 0.85), 41, &linspace(-0.5, 0.5, 11))?;
    let dev = glued.vertices().map(|p| (p[0] * p[0] + p[1] * p[1] - p[2] * p[2] - 1.0).abs()).fold(0.0, f64::max);
    checks.push(below("glued hyperboloid deviation", dev, 1e-12));
    let (fa, fb) = seed_graphs(&seed);
    let lg = check_local_gluing(&fa, &fb, 3, 1e-8)?;
    checks.push(below("glued hyperboloid smoothness jump", lg.lg3_max_jump, 1e-8));
    let class = classify_glued_solution(&glued, 1e-6)?;
    let ok = matches!(class.class, GluedClass::OneSheetHyperboloid { .. });
    checks.push(Check { name: "glued hyperboloid classified".into(), value: class.hyperboloid_fit_residual, bound: "OneSheetHyperboloid".into(), passed: ok });
    let bad = check_local_gluing(&Expr::parse("u")?, &Expr::parse("u^2")?, 3, 1e-8)?;
    checks.push(Check { name: "non-perpendicular profile rejected".into(), value: 0.0, bound: "lg1 = false".into(), passed: !bad.lg1 && !bad.passed });

    let polygon = NonNullPolygon::rectangle(&HyperboloidPatch, (-0.3, 0.3), (-0.3, 0.3))?;
    let gb = gauss_bonnet_residual(&HyperboloidPatch, &polygon)?;
    checks.push(below("Gauss-Bonnet residual, hyperboloid rectangle", gb.residual.abs(), 1e-3));
    let eq = energy_equivalence_check(&HyperboloidPatch, &polygon)?;
    checks.push(below("energy identity gap, hyperboloid rectangle", eq.gap.abs() / eq.sigma.abs().max(1.0), 1e-3));
    checks.push(Check { name: "catalog rows".into(), value: catalog().len() as f64, bound: "= 7".into(), passed: catalog().len() == 7 });

    for c in &checks {
        eprintln!("{} {}: {:e} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.value, c.bound);
    }
    let passed = checks.iter().all(|c| c.passed);
    let mut out = Outputs::default();
    out.report(a.out.as_deref(), &Report { checks, passed })?;
    out.flush()?;
    Ok(passed)
}
