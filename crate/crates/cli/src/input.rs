use std::fmt;
use std::fs;
use std::path::Path;

use hitset_core::shift::FiniteSeq;
use hitset_core::{Digraph, FunctionalGraph};

/// Anything that should end the run with exit status 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<hitset_core::Error> for CliError {
    fn from(e: hitset_core::Error) -> Self {
        CliError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn context(path: &Path) -> impl Fn(hitset_core::Error) -> CliError + '_ {
    move |e| CliError(format!("{}: {e}", path.display()))
}

pub fn graph(path: &Path) -> Result<FunctionalGraph, CliError> {
    FunctionalGraph::from_json(&read(path)?).map_err(context(path))
}

pub fn template(path: &Path) -> Result<Digraph, CliError> {
    Digraph::from_json(&read(path)?).map_err(context(path))
}

pub fn sequence(path: &Path) -> Result<FiniteSeq, CliError> {
    let values: Vec<u64> = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    FiniteSeq::new(values).map_err(context(path))
}

pub fn labels(path: &Path) -> Result<Vec<Option<usize>>, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError(format!("{}: {e}", path.display())))
}
