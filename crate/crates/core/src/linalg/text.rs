//! Plain-text matrix format.
//!
//! ```text
//! p rows cols
//! a11 a12 ... a1c
//! ...
//! ar1 ar2 ... arc
//! ```
//!
//! Entries must already lie in `[0, p)`; nothing is reduced silently.
//! Blank lines are ignored.

use super::field::Prime;
use super::matrix::Matrix;
use crate::error::{Error, Result};

struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    line: line_no,
                    column: s + 1,
                    text: &line[s..i],
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            line: line_no,
            column: s + 1,
            text: &line[s..],
        });
    }
    out
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn number(tok: &Token<'_>) -> Result<u64> {
    tok.text
        .parse::<u64>()
        .map_err(|_| parse_err(tok.line, tok.column, format!("expected a non-negative integer, found `{}`", tok.text)))
}

pub fn parse_matrix(src: &str) -> Result<Matrix> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let Some((hline, header)) = lines.next() else {
        return Err(parse_err(1, 1, "empty input, expected header `p rows cols`"));
    };
    let head = tokens(hline, header);
    if head.len() != 3 {
        let col = head.get(3).map_or(header.len() + 1, |t| t.column);
        return Err(parse_err(hline, col, format!("header needs exactly 3 fields `p rows cols`, found {}", head.len())));
    }
    let p_raw = number(&head[0])?;
    let p = Prime::new(p_raw).map_err(|e| parse_err(hline, head[0].column, e.to_string()))?;
    let rows = number(&head[1])? as usize;
    let cols = number(&head[2])? as usize;
    if rows == 0 {
        return Err(parse_err(hline, head[1].column, "rows must be at least 1"));
    }
    if cols == 0 {
        return Err(parse_err(hline, head[2].column, "cols must be at least 1"));
    }

    let mut data = Vec::with_capacity(rows * cols);
    let mut last_line = hline;
    for r in 0..rows {
        let Some((ln, line)) = lines.next() else {
            return Err(parse_err(last_line + 1, 1, format!("expected {rows} rows, found {r}")));
        };
        last_line = ln;
        let toks = tokens(ln, line);
        if toks.len() != cols {
            let col = toks.get(cols).map_or(line.len() + 1, |t| t.column);
            return Err(parse_err(ln, col, format!("expected {cols} entries, found {}", toks.len())));
        }
        for tok in &toks {
            let v = number(tok)?;
            if v >= p.get() as u64 {
                return Err(parse_err(ln, tok.column, format!("entry {v} out of range [0, {p})")));
            }
            data.push(v as u32);
        }
    }
    if let Some((ln, line)) = lines.next() {
        let col = line.len() - line.trim_start().len() + 1;
        return Err(parse_err(ln, col, "unexpected trailing content"));
    }
    Matrix::new(p, rows, cols, data)
}

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("{} {} {}\n", m.prime(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.value(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
