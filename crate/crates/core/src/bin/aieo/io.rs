use std::fs;
use std::io::Write;
use std::path::Path;

use aieo::serialization::{parse_json, parse_turtle_with_diagnostics, serialize_json, serialize_turtle, ParseError};
use aieo::OntologyStore;

use crate::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

fn parse_failure(path: &Path, err: ParseError) -> CliError {
    let msg = format!("{}:{}", path.display(), err.diagnostic());
    match err {
        ParseError::Ontology { .. } => CliError::Validation(msg),
        ParseError::Syntax(_) | ParseError::UnsupportedFeature(_) => CliError::Parse(msg),
    }
}

/// Loads a store: `.json` files use the interchange format, anything else
/// is read as Turtle. Parser warnings go to stderr.
pub fn load_store(path: &Path) -> Result<OntologyStore, CliError> {
    let text = read(path)?;
    if is_json(path) {
        return parse_json(&text).map_err(|e| parse_failure(path, e));
    }
    let (store, warnings) = parse_turtle_with_diagnostics(&text).map_err(|e| parse_failure(path, e))?;
    for w in warnings {
        eprintln!("{}:{w}", path.display());
    }
    Ok(store)
}

pub fn render_store(store: &OntologyStore, path: Option<&Path>) -> String {
    match path {
        Some(p) if is_json(p) => serialize_json(store),
        _ => serialize_turtle(store),
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failure never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// Writes to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
