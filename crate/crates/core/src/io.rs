//! Input and output formats for graphs and polyominoes.
//!
//! Graph text format:
//!
//! ```text
//! X: x1 x2 x3
//! Y: y1 y2 y3
//! x1 y1
//! x2 y1
//! ```
//!
//! Edge lines may list the endpoints in either order; `#` starts a comment.
//! The JSON form is `{"X": [..], "Y": [..], "edges": [[a, b], ..]}`.
//!
//! Polyominoes are either an ASCII grid (`#` cell, `.` empty, first line
//! is the top row) or JSON: `{"cells": [[x, y], ..]}` or a bare list of
//! pairs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BipartiteGraph, GraphError};
use crate::polyomino::{parse_polyomino, Cell, Polyomino, PolyominoError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Polyomino(#[from] PolyominoError),
}

/// Serializable graph in the JSON input format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(rename = "X")]
    pub x: Vec<String>,
    #[serde(rename = "Y")]
    pub y: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphDoc {
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        Self { x: g.x_labels().to_vec(), y: g.y_labels().to_vec(), edges: g.edge_labels() }
    }

    /// Edges may be written `[y, x]` as well as `[x, y]`.
    pub fn to_graph(&self) -> Result<BipartiteGraph, GraphError> {
        let is_y = |l: &str| self.y.iter().any(|v| v == l);
        let is_x = |l: &str| self.x.iter().any(|v| v == l);
        let edges: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|(a, b)| if is_y(a) && is_x(b) { (b.as_str(), a.as_str()) } else { (a.as_str(), b.as_str()) })
            .collect();
        BipartiteGraph::new(self.x.clone(), self.y.clone(), &edges)
    }
}

/// Parses either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn parse_graph(input: &str) -> Result<BipartiteGraph, InputError> {
    if input.trim_start().starts_with('{') {
        let doc: GraphDoc = serde_json::from_str(input).map_err(|e| InputError::Json(e.to_string()))?;
        return Ok(doc.to_graph()?);
    }
    parse_graph_text(input)
}

fn parse_graph_text(input: &str) -> Result<BipartiteGraph, InputError> {
    let mut x: Option<Vec<String>> = None;
    let mut y: Option<Vec<String>> = None;
    let mut edges: Vec<(usize, String, String)> = Vec::new();
    for (k, raw) in input.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| InputError::Syntax { line: line_no, message };
        if let Some((head, rest)) = line.split_once(':') {
            let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let slot = match head.trim() {
                "X" | "x" => &mut x,
                "Y" | "y" => &mut y,
                other => return Err(syntax(format!("unknown header `{other}`, expected X or Y"))),
            };
            if slot.is_some() {
                return Err(syntax(format!("side {} declared twice", head.trim())));
            }
            *slot = Some(labels);
            continue;
        }
        let parts: Vec<&str> = line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
        if parts.len() != 2 {
            return Err(syntax(format!("expected an edge `a b`, found `{line}`")));
        }
        edges.push((line_no, parts[0].to_string(), parts[1].to_string()));
    }
    let missing = |side: &str| InputError::Syntax { line: 0, message: format!("missing `{side}:` header") };
    let x = x.ok_or_else(|| missing("X"))?;
    let y = y.ok_or_else(|| missing("Y"))?;
    let mut oriented: Vec<(String, String)> = Vec::with_capacity(edges.len());
    for (line, a, b) in edges {
        let side = |l: &str| (x.contains(&l.to_string()), y.contains(&l.to_string()));
        let edge = match (side(&a), side(&b)) {
            ((true, _), (_, true)) => (a, b),
            ((_, true), (true, _)) => (b, a),
            ((false, false), _) => return Err(InputError::Syntax { line, message: format!("unknown vertex `{a}`") }),
            (_, (false, false)) => return Err(InputError::Syntax { line, message: format!("unknown vertex `{b}`") }),
            _ => {
                return Err(InputError::Syntax {
                    line,
                    message: format!("edge `{a} {b}` joins two vertices on the same side"),
                })
            }
        };
        oriented.push(edge);
    }
    let pairs: Vec<(&str, &str)> = oriented.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(BipartiteGraph::new(x, y, &pairs)?)
}

/// The text format, edges in canonical order.
pub fn graph_to_text(g: &BipartiteGraph) -> String {
    let mut out = format!("X: {}\nY: {}\n", g.x_labels().join(" "), g.y_labels().join(" "));
    for (a, b) in g.edge_labels() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn graph_to_json(g: &BipartiteGraph) -> String {
    serde_json::to_string(&GraphDoc::from_graph(g)).expect("graph documents serialize")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CellsDoc {
    Wrapped { cells: Vec<Cell> },
    Bare(Vec<Cell>),
}

/// Parses a polyomino from ASCII art or JSON (chosen by a leading `{` or
/// `[`).
pub fn parse_polyomino_input(input: &str) -> Result<Polyomino, InputError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let doc: CellsDoc = serde_json::from_str(input).map_err(|e| InputError::Json(e.to_string()))?;
        let cells = match doc {
            CellsDoc::Wrapped { cells } | CellsDoc::Bare(cells) => cells,
        };
        return Ok(parse_polyomino(&cells)?);
    }
    Ok(parse_polyomino(&ascii_cells(input)?)?)
}

fn ascii_cells(input: &str) -> Result<Vec<Cell>, InputError> {
    let rows: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .skip_while(|(_, l)| l.is_empty())
        .collect();
    let last = rows.iter().rposition(|(_, l)| !l.is_empty()).map_or(0, |p| p + 1);
    let rows = &rows[..last];
    let height = rows.len() as i64;
    let mut cells = Vec::new();
    for (r, &(line, text)) in rows.iter().enumerate() {
        let y = height - r as i64;
        for (c, ch) in text.chars().enumerate() {
            match ch {
                '#' => cells.push((c as i64 + 1, y)),
                '.' => {}
                other => {
                    return Err(InputError::Syntax { line, message: format!("unexpected character `{other}` in grid") })
                }
            }
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = crate::catalog::obstruction(3);
        let text = graph_to_text(g);
        assert_eq!(&parse_graph(&text).unwrap(), g);
        assert_eq!(&parse_graph(&graph_to_json(g)).unwrap(), g);
    }

    #[test]
    fn edges_in_either_order_and_comments() {
        let g = parse_graph("# square\nX: a b\nY: c d\na c\nd a  # reversed\nb,c\nb d\n").unwrap();
        assert_eq!(g.is_complete_bipartite(), Some((2, 2)));
    }

    #[test]
    fn rejects_same_side_edge() {
        let err = parse_graph("X: x1 x2\nY: y1\nx1 x2\n").unwrap_err();
        assert!(matches!(err, InputError::Syntax { line: 3, .. }), "{err}");
        assert!(matches!(parse_graph("X: a\nY: b\na q\n"), Err(InputError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("X: a\na b\n"), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_graph("X: a\nY: b\na b\nb a\n"), Err(InputError::Graph(GraphError::DuplicateEdge(..)))));
    }

    #[test]
    fn json_with_reversed_edge() {
        let g = parse_graph(r#"{"X":["a","b"],"Y":["c"],"edges":[["c","a"],["b","c"]]}"#).unwrap();
        assert_eq!(g.num_edges(), 2);
    }

    #[test]
    fn ascii_polyominoes() {
        let l = parse_polyomino_input("##\n#.\n").unwrap();
        assert_eq!(l.cells().iter().copied().collect::<Vec<_>>(), vec![(1, 1), (1, 2), (2, 2)]);
        assert_eq!(l.to_ascii(), "##\n#.\n");
        assert!(matches!(
            parse_polyomino_input("##\n..\n##"),
            Err(InputError::Polyomino(PolyominoError::Disconnected(2)))
        ));
        assert!(matches!(parse_polyomino_input("#x"), Err(InputError::Syntax { line: 1, .. })));
        let j = parse_polyomino_input(r#"{"cells": [[0, 0], [1, 0]]}"#).unwrap();
        assert_eq!(j.width(), 2);
        assert_eq!(parse_polyomino_input("[[3, 3]]").unwrap().len(), 1);
    }
}
