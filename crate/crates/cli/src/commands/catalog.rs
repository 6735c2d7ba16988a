use std::path::PathBuf;

use lw_core::elastica::{catalog, CatalogRow};

use super::CmdResult;
use crate::output::Outputs;

#[derive(Debug, clap::Args)]
#[command(args_override_self = true)]
pub struct Args {
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &Args) -> CmdResult {
    let rows: [CatalogRow; 7] = catalog();
    let mut out = Outputs::default();
    out.report(args.out.as_deref(), &rows)?;
    out.flush()?;
    Ok(true)
}
