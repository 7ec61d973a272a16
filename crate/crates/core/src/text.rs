//! Shared plumbing for the plain-text formats: located parse errors and a
//! small line cursor used by the multi-line readers.

use std::fmt;

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Error at column `column` of a single-line input.
    pub fn at(column: usize, message: impl Into<String>) -> Self {
        Self::new(1, column, message)
    }

    /// Re-anchors an error produced by a single-line parser onto `line` of a
    /// larger document, shifting the column by `offset` characters.
    pub fn relocate(mut self, line: usize, offset: usize) -> Self {
        self.line = line;
        self.column += offset;
        self
    }
}

/// Splits `s` on ASCII whitespace, yielding each token with its 1-based column.
pub fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut consumed = 0usize;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        consumed += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let column = s[..consumed].chars().count() + 1;
        consumed += end;
        rest = &trimmed[end..];
        Some((column, tok))
    })
}

/// Iterates non-blank, non-comment lines (`#` starts a comment line) with
/// their 1-based line numbers.
pub fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}
