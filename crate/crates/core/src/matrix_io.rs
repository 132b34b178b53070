//! Matrix text formats.
//!
//! Text format: an optional first line holding just the order `m`, then `m`
//! lines of `m` whitespace-separated rational tokens; lines starting with
//! `#` and blank lines are ignored. CSV is the same grid comma-separated.
//! JSON is an array of arrays (or `{"matrix": [...]}`) whose entries are
//! rational strings or number literals; number literals are read as written,
//! so decimals stay exact.
//!
//! Printing a parsed matrix reproduces canonical tokens: `p` for integral
//! values, reduced `p/q` otherwise (see [`DistanceMatrix::to_text`]).
//!
//! [`DistanceMatrix::to_text`]: crate::matrix::DistanceMatrix::to_text

use crate::error::MatrixError;
use crate::matrix::PredistanceMatrix;
use crate::rational::{parse_rat, Rat, RatParseError};
use thiserror::Error;

/// Input encodings understood by [`parse_matrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Text,
    Csv,
    Json,
}

/// Errors from matrix parsing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("no matrix data found")]
    Empty,
    #[error("line {line}, token {col}: {source}")]
    Token {
        line: usize,
        col: usize,
        #[source]
        source: RatParseError,
    },
    #[error("declared order {declared} but found {got} data rows")]
    DeclaredOrderMismatch { declared: usize, got: usize },
    #[error("invalid json matrix: {0}")]
    Json(String),
    #[error(transparent)]
    Shape(#[from] MatrixError),
}

fn parse_grid(input: &str, split_commas: bool) -> Result<PredistanceMatrix, ParseError> {
    // (original line number, tokens)
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = if split_commas {
            trimmed.split(',').map(str::trim).collect()
        } else {
            trimmed.split_whitespace().collect()
        };
        rows.push((idx + 1, tokens));
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }

    // An initial line with a single bare integer declares the order.
    let declared = if rows[0].1.len() == 1 && rows.len() > 1 {
        rows[0].1[0].parse::<usize>().ok()
    } else {
        None
    };
    if declared.is_some() {
        rows.remove(0);
    }
    if let Some(m) = declared {
        if rows.len() != m {
            return Err(ParseError::DeclaredOrderMismatch {
                declared: m,
                got: rows.len(),
            });
        }
    }

    let mut parsed: Vec<Vec<Rat>> = Vec::with_capacity(rows.len());
    for (line, tokens) in rows {
        let mut row = Vec::with_capacity(tokens.len());
        for (col, token) in tokens.iter().enumerate() {
            let value = parse_rat(token).map_err(|source| ParseError::Token {
                line,
                col: col + 1,
                source,
            })?;
            row.push(value);
        }
        parsed.push(row);
    }
    Ok(PredistanceMatrix::from_rows(parsed)?)
}

fn parse_json(input: &str) -> Result<PredistanceMatrix, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let array = match &value {
        serde_json::Value::Array(rows) => rows,
        serde_json::Value::Object(obj) => match obj.get("matrix") {
            Some(serde_json::Value::Array(rows)) => rows,
            _ => return Err(ParseError::Json("expected a \"matrix\" array".into())),
        },
        _ => return Err(ParseError::Json("expected an array of arrays".into())),
    };
    let mut parsed: Vec<Vec<Rat>> = Vec::with_capacity(array.len());
    for (i, row) in array.iter().enumerate() {
        let serde_json::Value::Array(cells) = row else {
            return Err(ParseError::Json(format!("row {} is not an array", i + 1)));
        };
        let mut out = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let token = match cell {
                serde_json::Value::String(s) => s.clone(),
                // With arbitrary precision enabled the literal text is kept,
                // so decimals parse exactly as written.
                serde_json::Value::Number(n) => n.to_string(),
                other => {
                    return Err(ParseError::Json(format!(
                        "entry ({},{}) has unsupported type: {other}",
                        i + 1,
                        j + 1
                    )))
                }
            };
            let value = parse_rat(&token).map_err(|source| ParseError::Token {
                line: i + 1,
                col: j + 1,
                source,
            })?;
            out.push(value);
        }
        parsed.push(out);
    }
    if parsed.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(PredistanceMatrix::from_rows(parsed)?)
}

/// Parses a matrix in the given format.
pub fn parse_matrix(input: &str, format: MatrixFormat) -> Result<PredistanceMatrix, ParseError> {
    match format {
        MatrixFormat::Text => parse_grid(input, false),
        MatrixFormat::Csv => parse_grid(input, true),
        MatrixFormat::Json => parse_json(input),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn parses_plain_text() {
        let p = parse_matrix("0 1\n1 0\n", MatrixFormat::Text).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(*p.get(0, 1), rat_int(1));
    }

    #[test]
    fn parses_header_and_comments() {
        let input = "# fixture\n3\n0 1 3\n1 0 2\n\n3 2 0\n";
        let p = parse_matrix(input, MatrixFormat::Text).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(*p.get(0, 2), rat_int(3));
    }

    #[test]
    fn header_mismatch_is_an_error() {
        let input = "3\n0 1\n1 0\n";
        assert!(matches!(
            parse_matrix(input, MatrixFormat::Text),
            Err(ParseError::DeclaredOrderMismatch { declared: 3, got: 2 })
        ));
    }

    #[test]
    fn reports_token_position() {
        let input = "0 1\n1 x\n";
        match parse_matrix(input, MatrixFormat::Text) {
            Err(ParseError::Token { line: 2, col: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_csv_and_fractions() {
        let p = parse_matrix("0, 5/4\n5/4, 0\n", MatrixFormat::Csv).unwrap();
        assert_eq!(*p.get(0, 1), rat(5, 4));
    }

    #[test]
    fn parses_json_variants() {
        let p = parse_matrix("[[0, \"1/2\"], [0.5, 0]]", MatrixFormat::Json).unwrap();
        assert_eq!(*p.get(0, 1), rat(1, 2));
        assert_eq!(*p.get(1, 0), rat(1, 2));
        let p = parse_matrix("{\"matrix\": [[0, 2], [2, 0]]}", MatrixFormat::Json).unwrap();
        assert_eq!(*p.get(1, 0), rat_int(2));
        assert!(parse_matrix("{\"rows\": 2}", MatrixFormat::Json).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let p = parse_matrix("0 5/4 2\n5/4 0 1.75\n2 7/4 0\n", MatrixFormat::Text).unwrap();
        let d = p.clone().validate().unwrap();
        let reparsed = parse_matrix(&d.to_text(), MatrixFormat::Text).unwrap();
        assert_eq!(reparsed, p);
    }
}
