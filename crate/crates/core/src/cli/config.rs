use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::Path;

use clap::CommandFactory;

use super::args::Cli;
use super::CliError;

type Sections = BTreeMap<Option<String>, Vec<(String, String)>>;

/// `key = value` lines; `#` starts a comment and `[section]` headers restrict
/// the following keys to one subcommand.
pub fn parse_config(text: &str) -> Result<Sections, CliError> {
    let mut out = Sections::new();
    let mut section = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = Some(name.trim().to_string());
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", i + 1)))?;
        let v = v.trim().trim_matches('"').to_string();
        out.entry(section.clone()).or_default().push((k.trim().replace('_', "-"), v));
    }
    Ok(out)
}

/// Inserts config values as flags directly after the subcommand name, so that
/// flags given on the command line take precedence.
pub fn apply_config(args: Vec<OsString>, path: &Path) -> Result<Vec<OsString>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let config = parse_config(&text)?;
    let cmd = Cli::command();
    let Some(pos) = args.iter().position(|a| a.to_str().is_some_and(|s| cmd.find_subcommand(s).is_some())) else {
        return Ok(args);
    };
    let name = args[pos].to_string_lossy().to_string();
    let sub = cmd.find_subcommand(&name).expect("subcommand exists");
    let known: Vec<(String, bool)> =
        sub.get_arguments().filter_map(|a| a.get_long().map(|l| (l.to_string(), a.get_action().takes_values()))).collect();
    let mut extra = Vec::new();
    let entries = config.get(&None).into_iter().flatten().chain(config.get(&Some(name.clone())).into_iter().flatten());
    for (key, value) in entries {
        let Some((_, takes_value)) = known.iter().find(|(l, _)| l == key) else {
            if config.get(&Some(name.clone())).is_some_and(|s| s.iter().any(|(k, _)| k == key)) {
                return Err(CliError::Usage(format!("config key {key:?} is not a flag of {name}")));
            }
            continue;
        };
        if *takes_value {
            extra.push(OsString::from(format!("--{key}={value}")));
        } else if value == "true" {
            extra.push(OsString::from(format!("--{key}")));
        }
    }
    let mut out = args[..=pos].to_vec();
    out.extend(extra);
    out.extend_from_slice(&args[pos + 1..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_and_comments() {
        let c = parse_config("n = 4 # sites\n[sweep]\nshots=100\n").unwrap();
        assert_eq!(c[&None], vec![("n".to_string(), "4".to_string())]);
        assert_eq!(c[&Some("sweep".into())], vec![("shots".to_string(), "100".to_string())]);
        assert!(parse_config("oops").is_err());
    }
}
