//! Native text format for embeddings.
//!
//! ```text
//! graph theta5
//! vertices 2
//! edge 1 1 2
//! ...
//! rot 1: 1 2 3 4 5
//! rot 2: 1 2 4 5 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A file may hold
//! several documents, each starting with a `graph` line.

use std::fmt::Write as _;

use rotsys_core::{Embedding, EmbeddingError, GraphError, MultiGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: {source}")]
    Embedding { line: usize, source: EmbeddingError },
    #[error("expected exactly one embedding, found {0}")]
    DocumentCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingFile {
    pub name: String,
    pub embedding: Embedding,
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let col = self.column();
        let start = self.pos;
        while self.pos < self.text.len()
            && !self.text.as_bytes()[self.pos].is_ascii_whitespace()
            && self.text.as_bytes()[self.pos] != b':'
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| (col, &self.text[start..self.pos]))
    }

    fn number(&mut self, what: &str) -> Result<usize, FormatError> {
        self.skip_ws();
        let col = self.column();
        match self.word() {
            Some((c, w)) => w
                .parse::<usize>()
                .map_err(|_| self.error(c, format!("expected {what}, found {w:?}"))),
            None => Err(self.error(col, format!("expected {what}"))),
        }
    }

    fn colon(&mut self) -> Result<(), FormatError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(':') {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(self.column(), "expected ':'"))
        }
    }

    fn end(&mut self) -> Result<(), FormatError> {
        self.skip_ws();
        if self.pos < self.text.len() {
            Err(self.error(self.column(), "unexpected trailing text"))
        } else {
            Ok(())
        }
    }
}

#[derive(Default)]
struct Draft {
    name: Option<String>,
    name_line: usize,
    vertices: Option<usize>,
    edges: Vec<(usize, usize, usize)>,
    rotations: Vec<(usize, usize, Vec<usize>)>,
}

impl Draft {
    fn finish(self) -> Result<EmbeddingFile, FormatError> {
        let line = self.name_line;
        let n = self.vertices.ok_or(FormatError::Syntax {
            line,
            column: 1,
            message: "missing 'vertices' line".into(),
        })?;
        let graph = MultiGraph::from_numbered_edges(n, self.edges)
            .map_err(|source| FormatError::Graph { line, source })?;
        let mut rot = vec![None; n];
        for (rline, v, ids) in self.rotations {
            if v == 0 || v > n {
                return Err(FormatError::Syntax {
                    line: rline,
                    column: 5,
                    message: format!("vertex {v} outside 1..={n}"),
                });
            }
            if rot[v - 1].replace(ids).is_some() {
                return Err(FormatError::Syntax {
                    line: rline,
                    column: 5,
                    message: format!("second rotation for vertex {v}"),
                });
            }
        }
        let rotations = rot.into_iter().map(Option::unwrap_or_default).collect();
        let embedding = Embedding::from_edge_rotations(graph, rotations)
            .map_err(|source| FormatError::Embedding { line, source })?;
        Ok(EmbeddingFile {
            name: self.name.unwrap_or_default(),
            embedding,
        })
    }
}

/// Parses every document in `text`.
pub fn parse_embeddings(text: &str) -> Result<Vec<EmbeddingFile>, FormatError> {
    let mut docs = Vec::new();
    let mut draft: Option<Draft> = None;
    for (i, raw) in text.lines().enumerate() {
        let mut c = Cursor {
            line: i + 1,
            text: raw,
            pos: 0,
        };
        c.skip_ws();
        if c.pos == raw.len() || raw[c.pos..].starts_with('#') {
            continue;
        }
        let (col, keyword) = c.word().expect("non-empty line");
        if keyword == "graph" {
            if let Some(d) = draft.take() {
                docs.push(d.finish()?);
            }
            c.skip_ws();
            let name = raw[c.pos..].trim_end().to_string();
            if name.is_empty() {
                return Err(c.error(c.column(), "expected a graph name"));
            }
            draft = Some(Draft {
                name: Some(name),
                name_line: i + 1,
                ..Draft::default()
            });
            continue;
        }
        let Some(d) = draft.as_mut() else {
            return Err(c.error(col, "expected 'graph <name>' first"));
        };
        match keyword {
            "vertices" => {
                if d.vertices.is_some() {
                    return Err(c.error(col, "duplicate 'vertices' line"));
                }
                d.vertices = Some(c.number("a vertex count")?);
                c.end()?;
            }
            "edge" => {
                let id = c.number("an edge id")?;
                let u = c.number("an endpoint")?;
                let v = c.number("an endpoint")?;
                c.end()?;
                d.edges.push((id, u, v));
            }
            "rot" => {
                let v = c.number("a vertex")?;
                c.colon()?;
                let mut ids = Vec::new();
                loop {
                    c.skip_ws();
                    if c.pos == raw.len() {
                        break;
                    }
                    ids.push(c.number("an edge id")?);
                }
                d.rotations.push((i + 1, v, ids));
            }
            other => return Err(c.error(col, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some(d) = draft {
        docs.push(d.finish()?);
    }
    Ok(docs)
}

/// Parses a text holding exactly one embedding.
pub fn parse_embedding(text: &str) -> Result<EmbeddingFile, FormatError> {
    let mut docs = parse_embeddings(text)?;
    if docs.len() != 1 {
        return Err(FormatError::DocumentCount(docs.len()));
    }
    Ok(docs.remove(0))
}

pub fn write_embedding(name: &str, e: &Embedding) -> String {
    let g = e.graph();
    let mut out = String::new();
    writeln!(out, "graph {name}").unwrap();
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for (id, u, v) in g.edges() {
        writeln!(out, "edge {id} {u} {v}").unwrap();
    }
    for v in g.vertices() {
        let ids: Vec<String> = e.edge_rotation(v).iter().map(|x| x.to_string()).collect();
        if ids.is_empty() {
            writeln!(out, "rot {v}:").unwrap();
        } else {
            writeln!(out, "rot {v}: {}", ids.join(" ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "graph theta5-2
vertices 2
edge 1 1 2
edge 2 1 2
edge 3 1 2
edge 4 1 2
edge 5 1 2
rot 1: 1 2 3 4 5
rot 2: 1 2 3 4 5
";

    #[test]
    fn round_trip_is_byte_identical() {
        let f = parse_embedding(THETA).unwrap();
        assert_eq!(f.name, "theta5-2");
        assert_eq!(f.embedding.face_count(), 1);
        assert_eq!(write_embedding(&f.name, &f.embedding), THETA);
    }

    #[test]
    fn syntax_errors_report_line_and_column() {
        let bad = THETA.replace("edge 3 1 2", "edge 3 1 x");
        match parse_embedding(&bad).unwrap_err() {
            FormatError::Syntax { line, column, .. } => assert_eq!((line, column), (5, 10)),
            other => panic!("unexpected {other:?}"),
        }
        let bad = THETA.replace("rot 2: ", "rot 2 ");
        assert!(matches!(
            parse_embedding(&bad),
            Err(FormatError::Syntax { line: 9, .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        let looped = THETA.replace("edge 5 1 2", "edge 5 2 2");
        assert!(matches!(
            parse_embedding(&looped),
            Err(FormatError::Graph {
                source: GraphError::Loop { .. },
                ..
            })
        ));
        let dup = THETA.replace("edge 5 1 2", "edge 4 1 2");
        assert!(matches!(
            parse_embedding(&dup),
            Err(FormatError::Graph {
                source: GraphError::EdgeIds(_),
                ..
            })
        ));
        let missing = THETA.replace("rot 2: 1 2 3 4 5", "rot 2: 1 2 3 4");
        assert!(matches!(
            parse_embedding(&missing),
            Err(FormatError::Embedding { .. })
        ));
    }

    #[test]
    fn multiple_documents() {
        let two = format!("{THETA}\n# second\n{THETA}");
        assert_eq!(parse_embeddings(&two).unwrap().len(), 2);
        assert_eq!(
            parse_embedding(&two).unwrap_err(),
            FormatError::DocumentCount(2)
        );
    }
}
