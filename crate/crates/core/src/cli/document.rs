//! The line-oriented experts file.
//!
//! ```text
//! # three experts on four hypotheses
//! frame: A B C D
//! expert e1:
//!   A      0.7
//!   THETA  0.3
//! expert e2 reliability 0.9:
//!   B      0.5
//!   THETA  0.5
//! ```
//!
//! `#` starts a comment. Each mass line is a focal set expression followed by
//! its mass; the expression may contain spaces (`A | C 0.6`).

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::frame::{FocalSet, Frame};
use crate::mass::{MassFunction, World};

#[derive(Debug, Clone, PartialEq)]
pub struct Expert {
    pub name: String,
    pub reliability: Option<f64>,
    pub masses: MassFunction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpertsDocument {
    pub frame: Arc<Frame>,
    pub experts: Vec<Expert>,
}

impl ExpertsDocument {
    pub fn masses(&self) -> Vec<MassFunction> {
        self.experts.iter().map(|e| e.masses.clone()).collect()
    }

    pub fn expert(&self, name: &str) -> Option<&Expert> {
        self.experts.iter().find(|e| e.name == name)
    }
}

#[derive(Debug)]
pub enum DocumentError {
    Io { path: String, source: std::io::Error },
    Parse { line: usize, column: usize, message: String },
    Validation(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Io { path, source } => write!(f, "{path}: {source}"),
            DocumentError::Parse { line, column, message } => {
                write!(f, "parse error at {line}:{column}: {message}")
            }
            DocumentError::Validation(message) => write!(f, "invalid document: {message}"),
        }
    }
}

impl std::error::Error for DocumentError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            DocumentError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_experts_file(path: impl AsRef<Path>, world: World) -> Result<ExpertsDocument, DocumentError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_experts(&text, world)
}

struct PendingExpert {
    name: String,
    reliability: Option<f64>,
    line: usize,
    entries: Vec<(FocalSet, f64)>,
}

/// Content of a line with its comment removed, and the 1-based column where
/// the content starts.
fn content(raw: &str) -> Option<(&str, usize)> {
    let without_comment = raw.split('#').next().unwrap_or("");
    let trimmed = without_comment.trim_start();
    let column = raw[..raw.len() - raw.trim_start().len()].chars().count() + 1;
    let trimmed = trimmed.trim_end();
    (!trimmed.is_empty()).then_some((trimmed, column))
}

pub fn parse_experts(text: &str, world: World) -> Result<ExpertsDocument, DocumentError> {
    let mut frame: Option<Arc<Frame>> = None;
    let mut pending: Vec<PendingExpert> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let Some((line, column)) = content(raw) else {
            continue;
        };
        if let Some(rest) = line.strip_prefix("frame:") {
            if frame.is_some() {
                return Err(parse_error(line_no, column, "frame declared twice"));
            }
            let labels: Vec<&str> = rest.split_whitespace().collect();
            let parsed = Frame::new(labels).map_err(|e| parse_error(line_no, column, e.to_string()))?;
            frame = Some(Arc::new(parsed));
            continue;
        }
        let Some(frame) = frame.as_ref() else {
            return Err(parse_error(line_no, column, "expected `frame: <labels>` first"));
        };
        if let Some(header) = line.strip_prefix("expert ").or_else(|| line.strip_prefix("expert\t")) {
            let header = header
                .trim()
                .strip_suffix(':')
                .ok_or_else(|| parse_error(line_no, column + line.len(), "expert header must end with `:`"))?;
            let words: Vec<&str> = header.split_whitespace().collect();
            let (name, reliability) = match words.as_slice() {
                [name] => (*name, None),
                [name, "reliability", value] => {
                    let r: f64 = value.parse().map_err(|_| {
                        parse_error(line_no, column, format!("invalid reliability `{value}`"))
                    })?;
                    (*name, Some(r))
                }
                _ => {
                    return Err(parse_error(
                        line_no,
                        column,
                        "expected `expert <name>:` or `expert <name> reliability <value>:`",
                    ))
                }
            };
            if pending.iter().any(|p| p.name == name) {
                return Err(parse_error(line_no, column, format!("expert `{name}` declared twice")));
            }
            pending.push(PendingExpert {
                name: name.to_string(),
                reliability,
                line: line_no,
                entries: Vec::new(),
            });
            continue;
        }
        let Some(current) = pending.last_mut() else {
            return Err(parse_error(line_no, column, "mass line outside of an expert block"));
        };
        let (set, mass) = parse_valued_line(frame, line, line_no, column)?;
        current.entries.push((set, mass));
    }

    let Some(frame) = frame else {
        return Err(parse_error(last_line.max(1), 1, "missing `frame:` declaration"));
    };
    if pending.is_empty() {
        return Err(parse_error(last_line.max(1), 1, "no expert blocks"));
    }
    let mut experts = Vec::with_capacity(pending.len());
    for p in pending {
        if p.entries.is_empty() {
            return Err(DocumentError::Validation(format!(
                "expert `{}` (line {}) has no focal elements",
                p.name, p.line
            )));
        }
        if let Some(r) = p.reliability {
            if !(0.0..=1.0).contains(&r) {
                return Err(DocumentError::Validation(format!(
                    "expert `{}`: reliability {r} is outside [0, 1]",
                    p.name
                )));
            }
        }
        let masses = MassFunction::new(&frame, p.entries, world)
            .map_err(|e| DocumentError::Validation(format!("expert `{}`: {e}", p.name)))?;
        experts.push(Expert {
            name: p.name,
            reliability: p.reliability,
            masses,
        });
    }
    Ok(ExpertsDocument { frame, experts })
}

fn parse_valued_line(
    frame: &Frame,
    line: &str,
    line_no: usize,
    column: usize,
) -> Result<(FocalSet, f64), DocumentError> {
    let split = line
        .rfind(char::is_whitespace)
        .ok_or_else(|| parse_error(line_no, column, "expected `<focal set> <value>`"))?;
    let (expr, value) = (line[..split].trim(), &line[split + 1..]);
    let value_column = column + line[..split + 1].chars().count();
    let number: f64 = value
        .parse()
        .map_err(|_| parse_error(line_no, value_column, format!("invalid number `{value}`")))?;
    let set = frame
        .parse(expr)
        .map_err(|e| parse_error(line_no, column, e.to_string()))?;
    Ok((set, number))
}

/// Conflict weights file: one `<focal set> <weight>` per line.
pub fn parse_weights(text: &str, frame: &Frame) -> Result<BTreeMap<FocalSet, f64>, DocumentError> {
    let mut weights = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let Some((line, column)) = content(raw) else {
            continue;
        };
        let (set, w) = parse_valued_line(frame, line, idx + 1, column)?;
        if weights.insert(set, w).is_some() {
            return Err(parse_error(idx + 1, column, format!("weight for `{}` given twice", frame.format(set))));
        }
    }
    Ok(weights)
}
