//! The `.lace` v1 rotation-system format.
//!
//! ```text
//! lacegraph v1
//! vertex 0: e0- e1- e0+ e1+
//! edge e0: 0 -> 0
//! edge e1: 0 -> 0
//! ```
//!
//! `e<k>-` is the tail-end (outgoing) of edge `k`, `e<k>+` its head-end.
//! Vertex lines list ends in clockwise order. Blank lines and lines starting
//! with `#` are ignored. Vertex and edge ids must be dense from 0.

use std::fmt::Write as _;

use thiserror::Error;

use crate::embedding::{Edge, EdgeEnd, EmbeddedDigraph, Polarity};

pub const HEADER: &str = "lacegraph v1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: {msg}")]
    Structure { line: usize, col: usize, msg: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, col, .. } | ParseError::Structure { line, col, .. } => (*line, *col),
        }
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.col(), msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.s.len()
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.err(format!("expected `{kw}`")))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| ParseError::Syntax {
            line: self.line,
            col: start + 1,
            msg: "number too large".into(),
        })
    }

    fn edge_name(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        if self.s.get(self.pos) != Some(&b'e') {
            return Err(self.err("expected an edge name like `e0`"));
        }
        self.pos += 1;
        if !self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(self.err("expected digits after `e`"));
        }
        self.number()
    }

    fn end(&mut self) -> Result<(EdgeEnd, usize), ParseError> {
        self.skip_ws();
        let col = self.col();
        let edge = self.edge_name()?;
        let polarity = match self.s.get(self.pos) {
            Some(b'-') => Polarity::Tail,
            Some(b'+') => Polarity::Head,
            _ => return Err(self.err("expected `-` or `+` after edge name")),
        };
        self.pos += 1;
        Ok((EdgeEnd { edge, polarity }, col))
    }
}

struct VertexLine {
    id: usize,
    line: usize,
    ends: Vec<(EdgeEnd, usize)>,
}

struct EdgeLine {
    id: usize,
    line: usize,
    tail: usize,
    head: usize,
}

pub fn parse(text: &str) -> Result<EmbeddedDigraph, ParseError> {
    let mut saw_header = false;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !saw_header {
            if trimmed != HEADER {
                return Err(ParseError::Syntax { line, col: 1, msg: format!("expected header `{HEADER}`") });
            }
            saw_header = true;
            continue;
        }
        let mut c = Cursor { s: raw.as_bytes(), pos: 0, line };
        c.skip_ws();
        if c.s[c.pos..].starts_with(b"vertex") {
            c.keyword("vertex")?;
            let id = c.number()?;
            c.keyword(":")?;
            let mut ends = Vec::new();
            while !c.at_end() {
                ends.push(c.end()?);
            }
            vertices.push(VertexLine { id, line, ends });
        } else if c.s[c.pos..].starts_with(b"edge") {
            c.keyword("edge")?;
            let id = c.edge_name()?;
            c.keyword(":")?;
            let tail = c.number()?;
            c.keyword("->")?;
            let head = c.number()?;
            if !c.at_end() {
                return Err(c.err("unexpected trailing input"));
            }
            edges.push(EdgeLine { id, line, tail, head });
        } else {
            return Err(c.err("expected `vertex` or `edge`"));
        }
    }
    if !saw_header {
        return Err(ParseError::Syntax { line: 1, col: 1, msg: format!("missing header `{HEADER}`") });
    }
    build(vertices, edges)
}

fn structure(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Structure { line, col, msg: msg.into() }
}

fn build(vertices: Vec<VertexLine>, edges: Vec<EdgeLine>) -> Result<EmbeddedDigraph, ParseError> {
    let n = vertices.len();
    let m = edges.len();
    let mut edge_list: Vec<Option<(Edge, usize)>> = vec![None; m];
    for el in &edges {
        if el.id >= m {
            return Err(structure(el.line, 1, format!("edge ids must be dense 0..{m}; found e{}", el.id)));
        }
        if edge_list[el.id].is_some() {
            return Err(structure(el.line, 1, format!("edge e{} declared twice", el.id)));
        }
        for v in [el.tail, el.head] {
            if v >= n {
                return Err(structure(el.line, 1, format!("edge e{} references unknown vertex {v}", el.id)));
            }
        }
        edge_list[el.id] = Some((Edge { tail: el.tail, head: el.head }, el.line));
    }
    let edge_list: Vec<(Edge, usize)> = edge_list.into_iter().map(Option::unwrap).collect();

    let mut rotations: Vec<Option<Vec<EdgeEnd>>> = vec![None; n];
    let mut seen = vec![false; 2 * m];
    for vl in &vertices {
        if vl.id >= n {
            return Err(structure(vl.line, 1, format!("vertex ids must be dense 0..{n}; found {}", vl.id)));
        }
        if rotations[vl.id].is_some() {
            return Err(structure(vl.line, 1, format!("vertex {} declared twice", vl.id)));
        }
        for &(end, col) in &vl.ends {
            if end.edge >= m {
                return Err(structure(vl.line, col, format!("undeclared edge e{}", end.edge)));
            }
            if std::mem::replace(&mut seen[end.index()], true) {
                return Err(structure(vl.line, col, format!("end {} appears more than once", end_name(end))));
            }
            let edge = edge_list[end.edge].0;
            let expected = if end.is_tail() { edge.tail } else { edge.head };
            if expected != vl.id {
                return Err(structure(
                    vl.line,
                    col,
                    format!("end {} belongs at vertex {expected}, not {}", end_name(end), vl.id),
                ));
            }
        }
        rotations[vl.id] = Some(vl.ends.iter().map(|&(e, _)| e).collect());
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        let end = EdgeEnd::from_index(i);
        return Err(structure(edge_list[end.edge].1, 1, format!("end {} is never placed", end_name(end))));
    }
    let rotations = rotations.into_iter().map(Option::unwrap).collect();
    let edges = edge_list.into_iter().map(|(e, _)| e).collect();
    EmbeddedDigraph::new(rotations, edges).map_err(|e| structure(0, 0, e.to_string()))
}

fn end_name(end: EdgeEnd) -> String {
    format!("e{}{}", end.edge, if end.is_tail() { '-' } else { '+' })
}

pub fn serialize(g: &EmbeddedDigraph) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for (v, rot) in g.rotations().iter().enumerate() {
        let _ = write!(out, "vertex {v}:");
        for &end in rot {
            let _ = write!(out, " {}", end_name(end));
        }
        out.push('\n');
    }
    for (e, edge) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "edge e{e}: {} -> {}", edge.tail, edge.head);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE_VERTEX: &str = "lacegraph v1\nvertex 0: e0- e1- e0+ e1+\nedge e0: 0 -> 0\nedge e1: 0 -> 0\n";

    #[test]
    fn parses_one_vertex() {
        let g = parse(ONE_VERTEX).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.num_edges(), 2);
        assert_eq!(serialize(&g), ONE_VERTEX);
    }

    #[test]
    fn triple_end_is_a_structural_error() {
        let text = "lacegraph v1\nvertex 0: e0- e1- e0+ e0-\nedge e0: 0 -> 0\nedge e1: 0 -> 0\n";
        let err = parse(text).unwrap_err();
        assert!(matches!(err, ParseError::Structure { line: 2, col: 23, .. }), "{err}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let text = "lacegraph v1\nvertex 0: e0- e1* e0+ e1+\n";
        assert_eq!(parse(text).unwrap_err().position(), (2, 17));
        assert!(matches!(parse("lace v2\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn missing_end_and_sparse_ids() {
        let text = "lacegraph v1\nvertex 0: e0- e1- e0+\nedge e0: 0 -> 0\nedge e1: 0 -> 0\n";
        assert!(matches!(parse(text), Err(ParseError::Structure { line: 4, .. })));
        let text = "lacegraph v1\nvertex 1: e0- e0+\nedge e0: 1 -> 1\n";
        assert!(matches!(parse(text), Err(ParseError::Structure { .. })));
    }

    #[test]
    fn wrong_degree_is_accepted() {
        let text = "lacegraph v1\nvertex 0: e0- e0+\nedge e0: 0 -> 0\n";
        assert_eq!(parse(text).unwrap().degree(0), 2);
    }
}
