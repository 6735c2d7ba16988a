//! `key=value` config files, merged into the argument list before parsing.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Parses a config file into `--key value` arguments. Blank lines and lines
/// starting with `#` are skipped; `key=true` becomes a bare flag and
/// `key=false` is dropped.
pub fn config_args(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key=value", n + 1);
        };
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() {
            bail!("config line {}: empty key", n + 1);
        }
        match value {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            _ => {
                out.push(format!("--{key}"));
                out.push(value.to_string());
            }
        }
    }
    Ok(out)
}

/// Inserts the config arguments right after the subcommand so that later
/// command-line flags override them.
pub fn merge_config(args: Vec<String>) -> Result<Vec<String>> {
    let mut config = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut it = args.into_iter();
    if let Some(prog) = it.next() {
        rest.push(prog);
    }
    while let Some(a) = it.next() {
        if a == "--config" {
            config = Some(it.next().context("--config needs a path")?);
        } else if let Some(p) = a.strip_prefix("--config=") {
            config = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = config else { return Ok(rest) };
    let extra = config_args(Path::new(&path))?;
    let sub = rest.iter().skip(1).position(|a| !a.starts_with('-')).map(|i| i + 2).unwrap_or(rest.len());
    rest.splice(sub..sub, extra);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_flags() {
        let args = parse_config("# comment\nC = 1.5\nallow-poles=true\ncheck-only=false\n\nmodel=ads-a1").unwrap();
        assert_eq!(args, ["--C", "1.5", "--allow-poles", "--model", "ads-a1"]);
        assert!(parse_config("oops").is_err());
    }
}
