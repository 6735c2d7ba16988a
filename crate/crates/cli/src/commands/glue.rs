use std::path::PathBuf;

use lw_core::expr::Expr;
use lw_core::gluing::{build_glued_surface, check_local_gluing, classify_glued_solution, seed_graphs, Classification, GluingReport, GluingSeed};
use lw_core::surface::linspace;
use serde::Serialize;

use super::{parse_range, positive, usage, CmdResult};
use crate::output::Outputs;

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    /// Seed `φ(u)`; the gluing function is `F(y, z) = φ(z² − y²)`.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    /// Half-width of the band: `φ` is used on `(−δ², δ²)`.
    #[arg(long, default_value_t = 0.45)]
    pub delta: f64,
    /// Graph of α, `x = f_α(u)` in the plane `y = 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub falpha: Option<String>,
    /// Graph of β, `x = f_β(u)` in the plane `z = 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub fbeta: Option<String>,
    /// Only run the local gluing check.
    #[arg(long)]
    pub check_only: bool,
    /// Profile window `s0,s1` with `0 < s0 < s1 < δ`; defaults to `0.1δ,0.95δ`.
    #[arg(long, value_parser = parse_range)]
    pub s_range: Option<(f64, f64)>,
    #[arg(long, default_value_t = 41)]
    pub ns: usize,
    #[arg(long, value_parser = parse_range, default_value = "-0.5,0.5", allow_hyphen_values = true)]
    pub t_range: (f64, f64),
    #[arg(long, default_value_t = 21)]
    pub nt: usize,
    /// Smoothness order checked across the light cone.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Normalized residual for the plane and hyperboloid fits.
    #[arg(long, default_value_t = 1e-6)]
    pub fit_tol: f64,
    #[arg(long)]
    pub obj: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct PieceInfo {
    pub region: &'static str,
    pub ns: usize,
    pub nt: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub phi: Option<String>,
    pub delta: Option<f64>,
    pub falpha: String,
    pub fbeta: String,
    pub gluing: GluingReport,
    pub s_range: Option<(f64, f64)>,
    pub pieces: Vec<PieceInfo>,
    pub classification: Option<Classification>,
}

pub fn run(a: &Args) -> CmdResult {
    positive("tol", a.tol)?;
    positive("fit-tol", a.fit_tol)?;
    let seed = a.phi.as_deref().map(|p| GluingSeed::parse(p, a.delta)).transpose()?;
    let (fa, fb, fa_src, fb_src) = match (&seed, &a.falpha, &a.fbeta) {
        (Some(seed), None, None) => {
            let (fa, fb) = seed_graphs(seed);
            let (fa_src, fb_src) = (fa.to_string(), fb.to_string());
            (fa, fb, fa_src, fb_src)
        }
        (None, Some(x), Some(y)) => (Expr::parse(x)?, Expr::parse(y)?, x.clone(), y.clone()),
        _ => return Err(usage("give either --phi or both --falpha and --fbeta")),
    };
    let gluing = check_local_gluing(&fa, &fb, a.order, a.tol)?;
    let mut report = Report {
        phi: a.phi.clone(),
        delta: seed.as_ref().map(|s| s.delta),
        falpha: fa_src,
        fbeta: fb_src,
        gluing,
        s_range: None,
        pieces: Vec::new(),
        classification: None,
    };
    let mut out = Outputs::default();
    if let (Some(seed), false) = (&seed, a.check_only) {
        if a.ns < 5 || a.nt < 5 {
            return Err(usage("ns and nt must be at least 5"));
        }
        let s_range = a.s_range.unwrap_or((0.1 * a.delta, 0.95 * a.delta));
        let glued = build_glued_surface(seed, s_range, a.ns, &linspace(a.t_range.0, a.t_range.1, a.nt))?;
        report.s_range = Some(s_range);
        report.pieces = glued.pieces.iter().map(|p| PieceInfo { region: p.region.tag(), ns: p.surface.ns(), nt: p.surface.nt() }).collect();
        report.classification = Some(classify_glued_solution(&glued, a.fit_tol)?);
        if let Some(path) = &a.obj {
            let mut buf = Vec::new();
            glued.write_obj(&mut buf, s_range.1)?;
            out.file(path, buf);
        }
    }
    let passed = report.gluing.passed;
    for d in &report.gluing.diagnostics {
        eprintln!("{d}");
    }
    out.report(a.out.as_deref(), &report)?;
    out.flush()?;
    Ok(passed)
}
