use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::Args;
use geneasm::{LegalString, OverlapGraph};

use crate::Failure;

/// Where a command reads its main argument: the positional value, `--file`,
/// or standard input when neither is given.
#[derive(Args, Debug)]
pub struct Source {
    /// Input text; omit to read from --file or standard input.
    #[arg(allow_hyphen_values = true)]
    pub input: Option<String>,

    /// Read the input from this file.
    #[arg(short, long, conflicts_with = "input")]
    pub file: Option<PathBuf>,
}

impl Source {
    pub fn text(&self) -> Result<String, Failure> {
        let raw = match (&self.input, &self.file) {
            (Some(text), _) => text.clone(),
            (None, Some(path)) => read_file(path)?,
            (None, None) => {
                let mut buf = String::new();
                io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::io(format!("reading standard input: {e}")))?;
                buf
            }
        };
        Ok(raw.trim().to_string())
    }

    pub fn legal_string(&self) -> Result<LegalString, Failure> {
        parse_string(&self.text()?)
    }
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

/// `λ` or an empty argument denotes the empty string.
pub fn parse_string(text: &str) -> Result<LegalString, Failure> {
    let text = text.trim();
    if text.is_empty() || text == "λ" {
        return Ok(LegalString::empty());
    }
    Ok(LegalString::parse(text)?)
}

pub fn read_overlap_graph(path: &Path) -> Result<OverlapGraph, Failure> {
    Ok(OverlapGraph::from_json(&read_file(path)?)?)
}
