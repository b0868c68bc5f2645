//! Fixture lookup and input resolution.
//!
//! An input argument is read from stdin when it is `-`, from a file when the
//! path exists, from the fixture directory when it names a fixture (`K1`,
//! `figure_eight`, `hopf.link`), and is otherwise taken as inline text.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use vkt_core::transform::family::strip_comments;
use vkt_core::{GaussCode, OrderedTwoComponentLink};

use crate::error::CliError;

pub const FIXTURES_ENV: &str = "VKT_FIXTURES";

pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// Path of a named fixture, matched case-insensitively on the file name or
/// its stem.
pub fn find_fixture(name: &str) -> Option<PathBuf> {
    if name.is_empty() || name.contains(['/', '\\']) {
        return None;
    }
    let wanted = name.to_ascii_lowercase();
    let mut hits: Vec<PathBuf> = fs::read_dir(fixture_dir())
        .ok()?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let file = p.file_name().and_then(|s| s.to_str()).unwrap_or("").to_ascii_lowercase();
            let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("").to_ascii_lowercase();
            file == wanted || stem == wanted
        })
        .collect();
    hits.sort();
    hits.into_iter().next()
}

/// Input text with `#` comment lines removed.
pub fn read_input(arg: &str) -> Result<String, CliError> {
    let raw = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::io("<stdin>", e))?;
        s
    } else if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| CliError::io(arg, e))?
    } else if let Some(path) = find_fixture(arg) {
        fs::read_to_string(&path).map_err(|e| CliError::io(&path.display().to_string(), e))?
    } else {
        arg.to_string()
    };
    Ok(strip_comments(&raw))
}

pub fn parse_code(text: &str) -> Result<GaussCode, CliError> {
    GaussCode::parse(text.trim()).map_err(|e| CliError::Domain(vkt_core::Error::Parse(e)))
}

/// `first | second`, each side in the Gauss-code text form.
pub fn parse_link(text: &str) -> Result<OrderedTwoComponentLink, CliError> {
    let (a, b) = text.split_once('|').ok_or(CliError::Domain(vkt_core::Error::InvalidLink("expected `first | second`")))?;
    let offset = a.len() + 1;
    let first = parse_code(a)?;
    let second = GaussCode::parse(b).map_err(|mut e| {
        e.position += offset;
        CliError::Domain(vkt_core::Error::Parse(e))
    })?;
    let link = OrderedTwoComponentLink::new(first.into_entries(), second.into_entries());
    link.validate().map_err(CliError::Domain)?;
    Ok(link)
}

pub fn load_code(arg: &str) -> Result<GaussCode, CliError> {
    parse_code(&read_input(arg)?)
}
