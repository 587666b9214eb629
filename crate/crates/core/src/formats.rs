//! Text formats for colorings, set colorings, codes and weights.
//!
//! * coloring: one `v c` line per vertex (0-based vertex, positive color)
//! * set coloring: one `v c1,c2,...` line per vertex
//! * weights: one `v w` line per vertex (positive capacity)
//! * code: one vertex index per line
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::coloring::{Coloring, SetColoring};
use crate::error::{Error, Result};
use crate::graph::VertexSet;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_error(line, format!("`{tok}` is not a non-negative integer")))
}

/// Parses `v <payload>` lines into a table covering exactly `0..n`.
fn vertex_table<T>(
    text: &str,
    n: usize,
    mut payload: impl FnMut(&str, usize) -> Result<T>,
) -> Result<Vec<T>> {
    let mut table: Vec<Option<T>> = (0..n).map(|_| None).collect();
    for (line, body) in lines(text) {
        let mut fields = body.split_whitespace();
        let (Some(v), Some(rest), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error(line, "expected `vertex value`"));
        };
        let v = parse_usize(v, line)?;
        if v >= n {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range (n = {n})"),
            ));
        }
        if table[v].is_some() {
            return Err(parse_error(line, format!("vertex {v} assigned twice")));
        }
        table[v] = Some(payload(rest, line)?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or(Error::MissingColor(v)))
        .collect()
}

fn positive(tok: &str, line: usize) -> Result<u32> {
    match tok.parse::<u32>() {
        Ok(c) if c > 0 => Ok(c),
        _ => Err(parse_error(
            line,
            format!("`{tok}` is not a positive integer"),
        )),
    }
}

pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    Coloring::new(vertex_table(text, n, positive)?)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{v} {col}");
    }
    out
}

/// Parses the color sets of a set coloring; capacities come separately.
pub fn parse_color_sets(text: &str, n: usize) -> Result<Vec<BTreeSet<u32>>> {
    vertex_table(text, n, |list, line| {
        list.split(',').map(|tok| positive(tok, line)).collect()
    })
}

pub fn parse_set_coloring(text: &str, capacity: Vec<usize>) -> Result<SetColoring> {
    SetColoring::new(parse_color_sets(text, capacity.len())?, capacity)
}

pub fn write_set_coloring(sc: &SetColoring) -> String {
    let mut out = String::new();
    for v in 0..sc.len() {
        let colors: Vec<String> = sc.colors_of(v).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{v} {}", colors.join(","));
    }
    out
}

pub fn parse_weights(text: &str, n: usize) -> Result<Vec<usize>> {
    vertex_table(text, n, |tok, line| Ok(positive(tok, line)? as usize))
}

pub fn parse_code(text: &str, n: usize) -> Result<VertexSet> {
    let mut code = VertexSet::empty(n);
    for (line, body) in lines(text) {
        let v = parse_usize(body, line)?;
        if v >= n {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range (n = {n})"),
            ));
        }
        code.insert(v);
    }
    Ok(code)
}

pub fn write_code(code: &VertexSet) -> String {
    code.iter().map(|v| format!("{v}\n")).collect()
}
