pub mod catalog;
pub mod elastica;
pub mod gaussbonnet;
pub mod glue;
pub mod surface;
pub mod verify;

use anyhow::anyhow;
use clap::ValueEnum;
use lw_core::elastica::{HalfPlaneModel, HalfSign, ModelKind};
use lw_core::Error;

/// Why a command did not produce a verdict.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, config or input values; exit code 1.
    Usage(anyhow::Error),
    /// A numerical degeneracy (null tangent plane, pole, axis contact); exit code 3.
    Degenerate(anyhow::Error),
    /// Already printed by the argument parser; exit code 1.
    Reported,
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Reported => 1,
            Failure::Degenerate(_) => 3,
        }
    }

    pub fn print(&self) {
        match self {
            Failure::Usage(e) => eprintln!("error: {e:#}"),
            Failure::Degenerate(e) => eprintln!("numerical degeneracy: {e:#}"),
            Failure::Reported => {}
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::Expr(_) | Error::OutsideBand(..) | Error::ChartMismatch => Failure::Usage(e.into()),
            _ => Failure::Degenerate(e.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(core) => core.into(),
            Err(e) => Failure::Usage(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

pub type CmdResult = Result<bool, Failure>;

pub fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(anyhow!("{msg}"))
}

/// Caps the global thread pool at `LW_THREADS` when set.
pub fn init_threads() -> anyhow::Result<()> {
    let Ok(v) = std::env::var("LW_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().map_err(|_| anyhow!("LW_THREADS must be a positive integer, got `{v}`"))?;
    if n == 0 {
        anyhow::bail!("LW_THREADS must be a positive integer");
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

/// `a,b` with `a < b`.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let v = parse_list(s)?;
    match v[..] {
        [a, b] if a < b => Ok((a, b)),
        [_, _] => Err("range must be increasing".into()),
        _ => Err("expected two comma-separated numbers".into()),
    }
}

/// `a,b` without ordering constraint.
pub fn parse_point(s: &str) -> Result<[f64; 2], String> {
    match parse_list(s)?[..] {
        [a, b] => Ok([a, b]),
        _ => Err("expected two comma-separated numbers".into()),
    }
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{}`: {e}", p.trim())))
        .collect()
}

pub fn positive(name: &str, x: f64) -> Result<(), Failure> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("{name} must be positive, got {x}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// Anti de Sitter half-plane (time-like axis).
    AdsA1,
    /// De Sitter half-plane (space-like axis, Lorentzian region).
    DeSitter,
    /// Hyperbolic half-plane (space-like axis, Riemannian region).
    Hyperbolic,
    /// Flat half-plane of the light-like axis.
    NullAxis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HalfArg {
    Plus,
    Minus,
}

pub fn model(kind: ModelArg, half: HalfArg) -> HalfPlaneModel {
    let kind = match kind {
        ModelArg::AdsA1 => ModelKind::AdsA1,
        ModelArg::DeSitter => ModelKind::DeSitterR,
        ModelArg::Hyperbolic => ModelKind::HyperbolicQ,
        ModelArg::NullAxis => ModelKind::AdsA3,
    };
    let half = match half {
        HalfArg::Plus => HalfSign::Plus,
        HalfArg::Minus => HalfSign::Minus,
    };
    HalfPlaneModel::new(kind, half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-1, 2.5"), Ok((-1.0, 2.5)));
        assert!(parse_range("2,1").is_err());
        assert!(parse_range("1").is_err());
        assert_eq!(parse_point("0.5,-1"), Ok([0.5, -1.0]));
    }

    #[test]
    fn error_classes() {
        assert_eq!(Failure::from(Error::InvalidInput("x".into())).code(), 1);
        assert_eq!(Failure::from(Error::DegenerateSurface).code(), 3);
        assert_eq!(Failure::from(anyhow::Error::from(Error::NullBoundary)).code(), 3);
    }
}
