//! Text formats for squares.
//!
//! * grid: one line per row, values right-aligned and space-separated.
//! * csv: one line per row, comma-separated, no header.
//! * json: `{"n": n, "cells": [[...], ...]}`, row-major.
//! * latex: an `array` body with `&` separators and `\\ \hline` row ends
//!   (emit only).
//!
//! Every emitted document ends with a single line feed.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use franklin_core::{Cell, Square, SquareError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormatKind {
    GridText,
    Csv,
    Json,
    Latex,
}

impl FormatKind {
    pub fn name(self) -> &'static str {
        match self {
            FormatKind::GridText => "grid",
            FormatKind::Csv => "csv",
            FormatKind::Json => "json",
            FormatKind::Latex => "latex",
        }
    }

    pub fn is_parseable(self) -> bool {
        self != FormatKind::Latex
    }
}

impl fmt::Display for FormatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grid" => Ok(FormatKind::GridText),
            "csv" => Ok(FormatKind::Csv),
            "json" => Ok(FormatKind::Json),
            "latex" => Ok(FormatKind::Latex),
            other => Err(format!("unknown format `{other}` (expected grid, csv, json or latex)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: row has {found} values, expected {expected}")]
    RaggedRow { line: usize, found: usize, expected: usize },
    #[error("line {line}, field {field}: `{token}` is not a positive integer")]
    BadToken { line: usize, field: usize, token: String },
    #[error("{rows} rows of {cols} values do not form a square")]
    NotSquare { rows: usize, cols: usize },
    #[error("declared order {declared} does not match {found} rows")]
    OrderMismatch { declared: usize, found: usize },
    #[error("invalid square: {0}")]
    Square(#[from] SquareError),
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0} is an output-only format")]
    Unsupported(FormatKind),
}

#[derive(Serialize, Deserialize)]
struct JsonSquare {
    n: usize,
    cells: Vec<Vec<u64>>,
}

/// Renders a square. Output is byte-for-byte deterministic.
pub fn emit(square: &Square, format: FormatKind) -> String {
    match format {
        FormatKind::GridText => square.to_string(),
        FormatKind::Csv => {
            let mut out = String::new();
            for row in square.rows() {
                push_joined(&mut out, row, ",");
                out.push('\n');
            }
            out
        }
        FormatKind::Json => {
            let doc = JsonSquare {
                n: square.order(),
                cells: square.rows().map(|r| r.iter().map(|&v| u64::from(v)).collect()).collect(),
            };
            let mut out = serde_json::to_string(&doc).expect("plain integers serialize");
            out.push('\n');
            out
        }
        FormatKind::Latex => {
            let mut out = String::from("\\[\n\\begin{array}{|");
            out.push_str(&"c|".repeat(square.order()));
            out.push_str("} \\hline\n");
            for row in square.rows() {
                push_joined(&mut out, row, " & ");
                out.push_str(" \\\\ \\hline\n");
            }
            out.push_str("\\end{array}\n\\]\n");
            out
        }
    }
}

fn push_joined(out: &mut String, row: &[Cell], sep: &str) {
    for (i, v) in row.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        write!(out, "{v}").expect("writing to a String cannot fail");
    }
}

/// Parses a square and validates every [`Square`] invariant.
pub fn parse(text: &str, format: FormatKind) -> Result<Square, ParseError> {
    let rows = match format {
        FormatKind::GridText => parse_lines(text, |line| line.split_whitespace().collect())?,
        FormatKind::Csv => parse_lines(text, |line| line.split(',').map(str::trim).collect())?,
        FormatKind::Json => {
            let doc: JsonSquare = serde_json::from_str(text)?;
            if doc.n != doc.cells.len() {
                return Err(ParseError::OrderMismatch { declared: doc.n, found: doc.cells.len() });
            }
            for (i, row) in doc.cells.iter().enumerate() {
                if row.len() != doc.n {
                    return Err(ParseError::RaggedRow { line: i + 1, found: row.len(), expected: doc.n });
                }
            }
            doc.cells
        }
        FormatKind::Latex => return Err(ParseError::Unsupported(format)),
    };
    build(rows)
}

fn parse_lines<'a>(text: &'a str, split: impl Fn(&'a str) -> Vec<&'a str>) -> Result<Vec<Vec<u64>>, ParseError> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = split(line)
            .into_iter()
            .enumerate()
            .map(|(field, token)| {
                token.parse::<u64>().map_err(|_| ParseError::BadToken {
                    line: idx + 1,
                    field: field + 1,
                    token: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::RaggedRow { line: idx + 1, found: row.len(), expected: first.len() });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn build(rows: Vec<Vec<u64>>) -> Result<Square, ParseError> {
    let order = rows.len();
    if order == 0 {
        return Err(ParseError::Empty);
    }
    if rows[0].len() != order {
        return Err(ParseError::NotSquare { rows: order, cols: rows[0].len() });
    }
    franklin_core::FranklinConstants::for_grid(order).map_err(SquareError::from)?;
    let max = (order * order) as u64;
    let mut cells = Vec::with_capacity(order * order);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > max {
                return Err(SquareError::ValueOutOfRange { row: r + 1, col: c + 1, value: v, max }.into());
            }
            cells.push(v as Cell);
        }
    }
    Ok(Square::from_vec(order, cells)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use franklin_core::builder::generate;
    use franklin_core::OrderError;

    #[test]
    fn csv_lines_sum_to_magic() {
        let text = emit(&generate(8).unwrap(), FormatKind::Csv);
        assert_eq!(text.lines().count(), 8);
        for line in text.lines() {
            let values: Vec<u64> = line.split(',').map(|t| t.parse().unwrap()).collect();
            assert_eq!(values.len(), 8);
            assert_eq!(values.iter().sum::<u64>(), 260);
        }
    }

    #[test]
    fn grid_is_aligned() {
        let text = emit(&generate(8).unwrap(), FormatKind::GridText);
        let widths: Vec<usize> = text.lines().map(str::len).collect();
        assert!(widths.iter().all(|&w| w == widths[0]));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn json_shape() {
        let s = generate(8).unwrap();
        let text = emit(&s, FormatKind::Json);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["n"], 8);
        assert_eq!(value["cells"][0][0], u64::from(s.get(1, 1)));
        assert_eq!(value["cells"][7][7], u64::from(s.get(8, 8)));
        assert_eq!(parse(&text, FormatKind::Json).unwrap(), s);
    }

    #[test]
    fn latex_layout() {
        let s = generate(8).unwrap();
        let text = emit(&s, FormatKind::Latex);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "\\begin{array}{|c|c|c|c|c|c|c|c|} \\hline");
        assert_eq!(lines.len(), 8 + 4);
        assert!(lines[2].ends_with(" \\\\ \\hline"));
        assert_eq!(lines[2].matches(" & ").count(), 7);
        assert!(matches!(parse(&text, FormatKind::Latex), Err(ParseError::Unsupported(FormatKind::Latex))));
    }

    #[test]
    fn whitespace_tolerance() {
        let text = "\n 1 ,2, 3,4 \n5,6,7,8\n\n9,10,11,12\n13,14,15,16\n\n";
        let s = parse(text, FormatKind::Csv).unwrap();
        assert_eq!(s.get(4, 4), 16);
        let grid = "  1  2  3  4\n\t5 6 7 8\n9 10 11 12\n13 14 15 16";
        assert_eq!(parse(grid, FormatKind::GridText).unwrap(), s);
    }

    #[test]
    fn parse_errors_are_located() {
        assert!(matches!(
            parse("1,2\n3", FormatKind::Csv),
            Err(ParseError::RaggedRow { line: 2, found: 1, expected: 2 })
        ));
        assert!(matches!(
            parse("1 2 3 4\n1 x 3 4\n", FormatKind::GridText),
            Err(ParseError::BadToken { line: 2, field: 2, ref token }) if token == "x"
        ));
        assert!(matches!(parse("1,-2\n3,4", FormatKind::Csv), Err(ParseError::BadToken { line: 1, field: 2, .. })));
        assert!(matches!(parse("", FormatKind::Csv), Err(ParseError::Empty)));
        assert!(matches!(parse("1 2 3\n4 5 6", FormatKind::GridText), Err(ParseError::NotSquare { rows: 2, cols: 3 })));
        assert!(matches!(
            parse("1 2 3\n4 5 6\n7 8 9", FormatKind::GridText),
            Err(ParseError::Square(SquareError::Order(OrderError::UnsupportedGrid(3))))
        ));
        assert!(matches!(
            parse("1 2\n3 4", FormatKind::GridText),
            Err(ParseError::Square(SquareError::Order(OrderError::UnsupportedGrid(2))))
        ));
        assert!(matches!(
            parse("1 2 3 4\n5 6 7 8\n9 10 11 12\n13 14 15 17", FormatKind::GridText),
            Err(ParseError::Square(SquareError::ValueOutOfRange { row: 4, col: 4, value: 17, max: 16 }))
        ));
        assert!(matches!(
            parse(r#"{"n": 4, "cells": [[1,2,3,4]]}"#, FormatKind::Json),
            Err(ParseError::OrderMismatch { declared: 4, found: 1 })
        ));
        assert!(matches!(parse("{", FormatKind::Json), Err(ParseError::Json(_))));
        assert!(matches!(
            parse("99999999999 1 1 1\n1 1 1 1\n1 1 1 1\n1 1 1 1", FormatKind::GridText),
            Err(ParseError::Square(SquareError::ValueOutOfRange { row: 1, col: 1, .. }))
        ));
    }

    #[test]
    fn format_names() {
        for f in [FormatKind::GridText, FormatKind::Csv, FormatKind::Json, FormatKind::Latex] {
            assert_eq!(f.name().parse::<FormatKind>(), Ok(f));
        }
        assert!("xml".parse::<FormatKind>().is_err());
    }
}
