mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{catalog, elastica, gaussbonnet, glue, surface, verify, Failure};

/// Rotational Willmore-type surfaces in Lorentz-Minkowski 3-space.
#[derive(Parser)]
#[command(name = "lw", version)]
struct Cli {
    /// File of `key=value` lines; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an elastica profile and check its Euler-Lagrange residual.
    Elastica(elastica::Args),
    /// Generate a preset surface, its energies and its Willmore verdict.
    Surface(surface::Args),
    /// Build a glued surface from a seed or check a pair of graphs.
    Glue(glue::Args),
    /// Gauss-Bonnet residual of a polygon on a test surface.
    Gaussbonnet(gaussbonnet::Args),
    /// The classification table of rotational solutions.
    Catalog(catalog::Args),
    /// Run a quick end-to-end verification suite.
    VerifyAll(verify::Args),
}

fn run() -> Result<bool, Failure> {
    let args = config::merge_config(std::env::args().collect()).map_err(Failure::Usage)?;
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return Ok(true);
        }
        Err(e) => {
            let _ = e.print();
            return Err(Failure::Reported);
        }
    };
    commands::init_threads().map_err(Failure::Usage)?;
    match cli.command {
        Command::Elastica(a) => elastica::run(&a),
        Command::Surface(a) => surface::run(&a),
        Command::Glue(a) => glue::run(&a),
        Command::Gaussbonnet(a) => gaussbonnet::run(&a),
        Command::Catalog(a) => catalog::run(&a),
        Command::VerifyAll(a) => verify::run(&a),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(f) => {
            f.print();
            ExitCode::from(f.code())
        }
    }
}
