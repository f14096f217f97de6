//! Resolution of instance arguments against the fixture corpus.

use std::env;
use std::path::{Path, PathBuf};

use crate::error::CliError;
use crate::format::{self, Source};

pub const CORPUS_ENV: &str = "PROXKIT_CORPUS";

pub fn corpus_dir() -> PathBuf {
    match env::var_os(CORPUS_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

/// An existing path, or a bare fixture name such as `C3` or `B2-prec0`.
pub fn locate(arg: &str) -> Result<PathBuf, CliError> {
    let direct = PathBuf::from(arg);
    if direct.exists() {
        return Ok(direct);
    }
    let bare = !arg.contains(['/', '\\']) && Path::new(arg).extension().is_none();
    if bare {
        let fixture = corpus_dir().join(format!("{arg}.json"));
        if fixture.exists() {
            return Ok(fixture);
        }
    }
    Err(CliError::Io { path: direct, message: "no such file or fixture".into() })
}

pub fn load(arg: &str) -> Result<Source, CliError> {
    format::read(&locate(arg)?)
}
