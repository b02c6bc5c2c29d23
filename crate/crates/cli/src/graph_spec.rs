use std::fs;
use std::path::Path;

use pmcover::generators::named_graph;
use pmcover::graph::parse_graph6;
use pmcover::CubicGraph;

use crate::CliError;

/// Resolves a graph given on the command line.
///
/// `@path` (or an existing file path) reads the first graph6 line of a file;
/// otherwise the text is tried as a generator name such as `flower(5)` and
/// then as a graph6 literal.
pub fn resolve(spec: &str) -> Result<CubicGraph, CliError> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        return from_file(Path::new(path));
    }
    let gen_err = match named_graph(spec) {
        Ok(g) => return Ok(g),
        Err(e) => e,
    };
    if Path::new(spec).is_file() {
        return from_file(Path::new(spec));
    }
    parse_graph6(spec).map_err(|g6_err| {
        CliError::Usage(format!("cannot read graph {spec:?}: not a generator ({gen_err}) and not graph6 ({g6_err})"))
    })
}

fn from_file(path: &Path) -> Result<CubicGraph, CliError> {
    let text = fs::read_to_string(path)?;
    let line = graph6_lines(&text)
        .next()
        .ok_or_else(|| CliError::Usage(format!("{} contains no graph", path.display())))?;
    parse_graph6(line).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Non-empty lines with any `>>graph6<<` header removed.
pub fn graph6_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.trim())
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l))
        .filter(|l| !l.is_empty())
}
