//! Gem file formats.
//!
//! JSON: `{"dimension": d, "vertices": n, "matchings": [[..], ..]}` with one
//! length-`n` involution per color. Text: a header line `d n` followed by one
//! `u v c` line per edge. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GemFile {
    pub dimension: usize,
    pub vertices: usize,
    pub matchings: Vec<Vec<usize>>,
}

impl TryFrom<GemFile> for ColoredGraph {
    type Error = GemError;

    fn try_from(file: GemFile) -> Result<Self> {
        if file.matchings.iter().any(|m| m.len() != file.vertices) {
            return Err(GemError::Parse(format!(
                "every matching must have length {}",
                file.vertices
            )));
        }
        ColoredGraph::new(file.dimension, file.matchings)
    }
}

impl From<ColoredGraph> for GemFile {
    fn from(g: ColoredGraph) -> Self {
        GemFile {
            dimension: g.dimension(),
            vertices: g.order(),
            matchings: g.matchings().to_vec(),
        }
    }
}

pub fn to_json(g: &ColoredGraph) -> String {
    serde_json::to_string(g).expect("gem serialization is infallible")
}

pub fn to_json_pretty(g: &ColoredGraph) -> String {
    serde_json::to_string_pretty(g).expect("gem serialization is infallible")
}

pub fn from_json(s: &str) -> Result<ColoredGraph> {
    serde_json::from_str(s).map_err(|e| GemError::Parse(e.to_string()))
}

pub fn to_text(g: &ColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.dimension(), g.order());
    for (u, v, c) in g.edges() {
        writeln!(out, "{u} {v} {c}").unwrap();
    }
    out
}

pub fn from_text(s: &str) -> Result<ColoredGraph> {
    let mut lines = s
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| GemError::Parse("empty gem file".into()))?;
    let head = parse_numbers(header, 1)?;
    if head.len() != 2 {
        return Err(GemError::Parse("header must be `d n`".into()));
    }
    let (d, n) = (head[0], head[1]);
    let mut edges = Vec::new();
    for (i, line) in lines {
        let nums = parse_numbers(line, i + 1)?;
        if nums.len() != 3 {
            return Err(GemError::Parse(format!("line {}: expected `u v c`", i + 1)));
        }
        edges.push((nums[0], nums[1], nums[2]));
    }
    ColoredGraph::from_edges(d, n, &edges)
}

fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| GemError::Parse(format!("line {lineno}: bad integer `{t}`")))
        })
        .collect()
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_gem(s: &str) -> Result<ColoredGraph> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

/// Graphviz export, one undirected edge per colored edge.
pub fn to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph gem {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, c) in g.edges() {
        writeln!(out, "  {u} -- {v} [color={c}];").unwrap();
    }
    out.push_str("}\n");
    out
}
