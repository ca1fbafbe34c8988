//! Text format for rational matrices.
//!
//! ```text
//! # comment
//! m n q
//! a11 a12 ... a1n
//! ...
//! am1 am2 ... amn
//! ```
//!
//! The matrix is `B / q` with integer entries `B` and `q > 0`. Everything
//! after `#` on a line is ignored, as are blank lines.

use std::fmt::Write as _;

use lti_bounded::{IntMatrix, RatMatrix};
use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokens(src: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut start = None;
        for (j, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(j),
                (true, Some(s)) => {
                    row.push(Token {
                        text: &content[s..j],
                        line: i + 1,
                        col: s + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !row.is_empty() {
            out.push(row);
        }
    }
    out
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn integer(t: &Token<'_>) -> Result<BigInt, ParseError> {
    let digits = t.text.strip_prefix(['-', '+']).unwrap_or(t.text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(t.line, t.col, format!("expected an integer, found `{}`", t.text)));
    }
    Ok(t.text.parse().expect("validated digits"))
}

fn dimension(t: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    let v = integer(t)?;
    usize::try_from(&v)
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| err(t.line, t.col, format!("{what} must be a positive integer")))
}

pub fn parse_matrix_file(src: &str) -> Result<RatMatrix, ParseError> {
    let rows = tokens(src);
    let Some((header, body)) = rows.split_first() else {
        return Err(err(1, 1, "missing header `m n q`"));
    };
    if header.len() != 3 {
        let t = header.get(3).unwrap_or(&header[0]);
        return Err(err(t.line, t.col, "header must be exactly `m n q`"));
    }
    let m = dimension(&header[0], "row count")?;
    let n = dimension(&header[1], "column count")?;
    let q = integer(&header[2])?;
    if !q.is_positive() {
        return Err(err(header[2].line, header[2].col, "denominator must be positive"));
    }
    let mut entries = Vec::with_capacity(m * n);
    for row in body.iter().take(m) {
        if row.len() != n {
            let t = row.get(n).unwrap_or(&row[row.len() - 1]);
            return Err(err(
                t.line,
                t.col,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        for t in row {
            entries.push(integer(t)?);
        }
    }
    if body.len() != m {
        let (line, col) = match body.get(m) {
            Some(extra) => (extra[0].line, extra[0].col),
            None => (body.last().map_or(header[0].line, |r| r[0].line) + 1, 1),
        };
        return Err(err(line, col, format!("expected {m} rows, found {}", body.len())));
    }
    let b = IntMatrix::new(m, n, entries).expect("entry count checked");
    Ok(RatMatrix::new(b, q).expect("denominator checked"))
}

pub fn format_matrix_file(a: &RatMatrix) -> String {
    let b = a.numerator();
    let mut out = format!("{} {} {}\n", b.rows(), b.cols(), a.denominator());
    for i in 0..b.rows() {
        let row: Vec<String> = b.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let a = parse_matrix_file("# rotation\n2 2 1\n0 1 # top\n\n-1 0\n").unwrap();
        assert_eq!(a.numerator(), &IntMatrix::from_rows([[0, 1], [-1, 0]]));
        assert_eq!(a.denominator(), &BigInt::from(1));
    }

    #[test]
    fn round_trip() {
        let src = "2 3 7\n1 -2 3\n40000000000000000000000 0 -1\n";
        let a = parse_matrix_file(src).unwrap();
        assert_eq!(format_matrix_file(&a), src);
        assert_eq!(parse_matrix_file(&format_matrix_file(&a)).unwrap(), a);
    }

    #[test]
    fn diagnostics_point_at_the_problem() {
        let e = parse_matrix_file("2 2 1\n1 x\n0 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse_matrix_file("2 2 0\n1 0\n0 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        let e = parse_matrix_file("2 2 1\n1 0 5\n0 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
        let e = parse_matrix_file("2 2 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_matrix_file("# nothing\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_matrix_file("0 2 1\n").is_err());
        assert!(parse_matrix_file("1 1 1 1\n1\n").is_err());
        assert!(parse_matrix_file("1 1 1\n--1\n").is_err());
    }
}
