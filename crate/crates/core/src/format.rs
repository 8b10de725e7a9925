//! The `.sg` text format.
//!
//! ```text
//! # comment
//! n m
//! u v s      (m lines, 0 <= u < v < n, s in {+, -})
//! ```
//!
//! Blank lines and lines starting with `#` are ignored anywhere.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::ParseError;
use crate::graph::{Sign, SignedGraph};

/// Serializes `g` in `.sg` form, edges in lexicographic order.
pub fn to_sg(g: &SignedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v, s) in g.edges() {
        writeln!(out, "{u} {v} {s}").unwrap();
    }
    out
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &line[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: s + 1 });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn number(tok: &Token<'_>, line: usize, what: &str) -> Result<usize, ParseError> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, tok.column, format!("{what} must be a decimal integer, got `{}`", tok.text)));
    }
    tok.text
        .parse()
        .map_err(|_| err(line, tok.column, format!("{what} `{}` is out of range", tok.text)))
}

/// Parses a `.sg` document.
pub fn parse_sg(text: &str) -> Result<SignedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, 1, "missing `n m` header"))?;
    let toks = tokens(header);
    if toks.len() != 2 {
        let col = toks.get(2).map_or(1, |t| t.column);
        return Err(err(header_line, col, "header must be exactly `n m`"));
    }
    let n = number(&toks[0], header_line, "vertex count")?;
    let m = number(&toks[1], header_line, "edge count")?;
    if n >= 2 && m > n * (n - 1) / 2 || n < 2 && m > 0 {
        return Err(err(header_line, toks[1].column, format!("{m} edges cannot fit in a simple graph on {n} vertices")));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (lineno, line) in lines {
        last_line = lineno;
        if edges.len() == m {
            return Err(err(lineno, 1, format!("more than the declared {m} edge lines")));
        }
        let toks = tokens(line);
        if toks.len() != 3 {
            let col = toks.get(3).map_or(1, |t| t.column);
            return Err(err(lineno, col, "edge line must be `u v s`"));
        }
        let u = number(&toks[0], lineno, "endpoint")?;
        let v = number(&toks[1], lineno, "endpoint")?;
        let sign = match toks[2].text {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(err(lineno, toks[2].column, format!("sign must be `+` or `-`, got `{other}`"))),
        };
        if u == v {
            return Err(err(lineno, toks[1].column, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(err(lineno, toks[0].column, format!("endpoints must satisfy u < v, got {u} > {v}")));
        }
        if v >= n {
            return Err(err(lineno, toks[1].column, format!("vertex {v} out of range 0..{n}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(lineno, toks[0].column, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v, sign));
    }
    if edges.len() != m {
        return Err(err(last_line + 1, 1, format!("expected {m} edge lines, found {}", edges.len())));
    }
    // endpoints and duplicates are already validated above
    Ok(SignedGraph::new(n, edges).expect("validated edge list"))
}

impl FromStr for SignedGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sg(s)
    }
}
