//! Plain-text corpus of root specs with their expected answers.
//!
//! One entry per line: `seed | spec | continuous | discrete`, answers are
//! `YES` or `NO`. Blank lines and lines starting with `#` are skipped.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rootspec::{RootSpec, SpecError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub seed: u64,
    pub spec: RootSpec,
    pub continuous: bool,
    pub discrete: bool,
}

impl CorpusEntry {
    pub fn from_spec(seed: u64, spec: RootSpec) -> Self {
        Self {
            seed,
            continuous: spec.continuous_truth(),
            discrete: spec.discrete_truth(),
            spec,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifestError {
    #[error("line {line}: expected 4 `|`-separated fields")]
    Fields { line: usize },
    #[error("line {line}: bad seed")]
    Seed { line: usize },
    #[error("line {line}: answer must be YES or NO, got `{got}`")]
    Answer { line: usize, got: String },
    #[error("line {line}: {source}")]
    Spec { line: usize, source: SpecError },
}

fn answer(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {}",
            self.seed,
            self.spec,
            answer(self.continuous),
            answer(self.discrete)
        )
    }
}

fn parse_answer(s: &str, line: usize) -> Result<bool, ManifestError> {
    match s {
        "YES" => Ok(true),
        "NO" => Ok(false),
        _ => Err(ManifestError::Answer {
            line,
            got: s.to_string(),
        }),
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<CorpusEntry>, ManifestError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('|').map(str::trim).collect();
        let [seed, spec, cont, disc] = fields[..] else {
            return Err(ManifestError::Fields { line });
        };
        out.push(CorpusEntry {
            seed: u64::from_str(seed).map_err(|_| ManifestError::Seed { line })?,
            spec: spec
                .parse()
                .map_err(|source| ManifestError::Spec { line, source })?,
            continuous: parse_answer(cont, line)?,
            discrete: parse_answer(disc, line)?,
        });
    }
    Ok(out)
}

pub fn format_manifest(header: &str, entries: &[CorpusEntry]) -> String {
    let mut out = String::new();
    for line in header.lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for e in entries {
        out.push_str(&e.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let entries = vec![
            CorpusEntry::from_spec(1, "quad(0,1,1)^2".parse().unwrap()),
            CorpusEntry::from_spec(2, "lin(-1/1) lin(1/1)".parse().unwrap()),
        ];
        let text = format_manifest("test corpus", &entries);
        assert_eq!(parse_manifest(&text).unwrap(), entries);
        assert!(text.contains("2 | lin(-1/1) lin(1/1) | NO | YES"));
    }

    #[test]
    fn errors_carry_line() {
        assert_eq!(
            parse_manifest("\n1 | one | YES"),
            Err(ManifestError::Fields { line: 2 })
        );
        assert!(matches!(
            parse_manifest("1 | one | MAYBE | NO"),
            Err(ManifestError::Answer { line: 1, .. })
        ));
    }
}
