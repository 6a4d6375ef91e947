//! Input handling: format detection and streaming reads of graph files.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};

use clap::ValueEnum;

use lapsnf::{parse_edge_list, parse_graph6, EdgeListError, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// graph6 lines, one graph per line
    G6,
    /// edge-list text, one graph per file
    Edges,
}

/// A parsed graph together with its `file:line` provenance.
pub struct GraphRecord {
    pub source: String,
    pub graph: Graph,
}

pub enum CliError {
    /// Bad invocation: unknown name, undetectable format, out-of-range
    /// argument. Exit code 2.
    Usage(String),
    /// Unreadable or unparseable input. Exit code 1.
    Input(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) => m,
        }
    }
}

fn detect_format(path: &str, format: Option<InputFormat>) -> Result<InputFormat, CliError> {
    if let Some(f) = format {
        return Ok(f);
    }
    if path == "-" {
        return Ok(InputFormat::G6); // stdin defaults to graph6
    }
    match path.rsplit_once('.').map(|(_, ext)| ext) {
        Some("g6") => Ok(InputFormat::G6),
        Some("el") => Ok(InputFormat::Edges),
        _ => Err(CliError::Usage(format!(
            "cannot detect format of '{path}' (expected .g6 or .el); pass --format"
        ))),
    }
}

fn open(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = File::open(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Streams graphs from `path` into `f`, one record at a time. Under
/// `lenient`, bad records are reported to stderr and skipped; otherwise the
/// first bad record aborts with its line number.
pub fn for_each_graph(
    path: &str,
    format: Option<InputFormat>,
    lenient: bool,
    mut f: impl FnMut(GraphRecord) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let format = detect_format(path, format)?;
    match format {
        InputFormat::G6 => {
            let reader = open(path)?;
            for (idx, line) in reader.lines().enumerate() {
                let line_no = idx + 1;
                let line = line.map_err(|e| CliError::Input(format!("{path}:{line_no}: {e}")))?;
                let trimmed = line.trim();
                if trimmed.is_empty() || trimmed == ">>graph6<<" {
                    continue;
                }
                match parse_graph6(trimmed.as_bytes()) {
                    Ok(graph) => {
                        f(GraphRecord { source: format!("{path}:{line_no}"), graph })?;
                    }
                    Err(e) => {
                        let msg = format!("{path}:{line_no}: {e}");
                        if lenient {
                            eprintln!("warning: {msg} (skipped)");
                        } else {
                            return Err(CliError::Input(msg));
                        }
                    }
                }
            }
        }
        InputFormat::Edges => {
            let mut text = String::new();
            open(path)?
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            match parse_edge_list(&text) {
                Ok(graph) => f(GraphRecord { source: path.to_string(), graph })?,
                Err(EdgeListError::Malformed { line, msg }) => {
                    let msg = format!("{path}:{line}: {msg}");
                    if lenient {
                        eprintln!("warning: {msg} (skipped)");
                    } else {
                        return Err(CliError::Input(msg));
                    }
                }
            }
        }
    }
    Ok(())
}
