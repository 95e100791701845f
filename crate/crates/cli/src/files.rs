use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Parses a file, tagging errors with its path.
pub fn load<T>(path: &Path, parse: impl FnOnce(&str) -> hymis::Result<T>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|e| CliError::core(e).context(path))
}

/// Writes through a temporary file in the same directory and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// `kernel.hgr` -> `kernel.map`, `kernel.trace.jsonl`, ...
pub fn sibling(path: &Path, extension: &str) -> PathBuf {
    path.with_extension(extension)
}
