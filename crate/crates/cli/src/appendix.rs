//! Readers for the published K₅ rotation-system tables.
//!
//! Both tables list blocks headed `K5#<id> (or|non)`, one line per vertex.
//! In the edge-numbered table a line reads `-k n [id c c c c] n [id …] …`:
//! a neighbour, then a bracket whose first number is the edge id and whose
//! remaining numbers (polygon crossings) are ignored. In the neighbour table
//! a line reads `-k n n n n` and edges are numbered by sorted vertex pair.
//! LaTeX residue (`\noindent`, `\#`, trailing `\\`) is tolerated.

use std::collections::BTreeMap;

use rotsys_core::{Chirality, Embedding, MultiGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct AppendixError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, AppendixError> {
    Err(AppendixError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone)]
pub struct AppendixEntry {
    pub name: String,
    /// Chirality printed next to the name.
    pub tag: Chirality,
    pub embedding: Embedding,
}

fn clean(line: &str) -> String {
    line.replace("\\noindent", "")
        .replace("\\#", "#")
        .replace("\\\\", "")
        .trim()
        .to_string()
}

fn parse_header(line: &str, lineno: usize) -> Result<Option<(String, Chirality)>, AppendixError> {
    if !line.starts_with("K5#") {
        return Ok(None);
    }
    let mut parts = line.split_whitespace();
    let name = parts.next().unwrap_or_default().to_string();
    let tag = match parts.next() {
        Some("(or)") => Chirality::Orientable,
        Some("(non)") => Chirality::NonOrientable,
        other => {
            return fail(
                lineno,
                format!("expected (or) or (non) after {name}, found {other:?}"),
            )
        }
    };
    if parts.next().is_some() {
        return fail(lineno, "unexpected text after the chirality tag");
    }
    Ok(Some((name, tag)))
}

fn parse_int(tok: &str, lineno: usize, what: &str) -> Result<i64, AppendixError> {
    tok.parse::<i64>()
        .or_else(|_| fail(lineno, format!("expected {what}, found {tok:?}")))
}

/// Tokenizes with brackets split off as separate tokens.
fn tokens(line: &str) -> Vec<String> {
    line.replace('[', " [ ")
        .replace(']', " ] ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

struct Block {
    name: String,
    tag: Chirality,
    line: usize,
    /// `(line, vertex, rest of line)`
    rows: Vec<(usize, usize, String)>,
}

fn blocks(text: &str) -> Result<Vec<Block>, AppendixError> {
    let mut out: Vec<Block> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = clean(raw);
        if line.is_empty() {
            continue;
        }
        if let Some((name, tag)) = parse_header(&line, lineno)? {
            out.push(Block {
                name,
                tag,
                line: lineno,
                rows: Vec::new(),
            });
            continue;
        }
        let Some(rest) = line.strip_prefix('-') else {
            // prose and LaTeX structure between blocks
            continue;
        };
        let Some(block) = out.last_mut() else {
            return fail(lineno, "rotation line before any K5# header");
        };
        let (v, tail) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let v = parse_int(v, lineno, "a vertex number")?;
        if v < 1 {
            return fail(lineno, format!("vertex {v} must be positive"));
        }
        block.rows.push((lineno, v as usize, tail.to_string()));
    }
    Ok(out)
}

fn build(
    block: &Block,
    vertex_count: usize,
    edges: BTreeMap<usize, (usize, usize)>,
    rotations: Vec<Vec<usize>>,
) -> Result<AppendixEntry, AppendixError> {
    let graph = MultiGraph::from_numbered_edges(
        vertex_count,
        edges.into_iter().map(|(id, (u, v))| (id, u, v)),
    )
    .or_else(|e| fail(block.line, format!("{}: {e}", block.name)))?;
    let embedding = Embedding::from_edge_rotations(graph, rotations)
        .or_else(|e| fail(block.line, format!("{}: {e}", block.name)))?;
    Ok(AppendixEntry {
        name: block.name.clone(),
        tag: block.tag,
        embedding,
    })
}

fn vertex_count(block: &Block) -> Result<usize, AppendixError> {
    let n = block.rows.iter().map(|r| r.1).max().unwrap_or(0);
    let mut seen = vec![false; n + 1];
    for &(line, v, _) in &block.rows {
        if std::mem::replace(&mut seen[v], true) {
            return fail(line, format!("vertex {v} listed twice in {}", block.name));
        }
    }
    if let Some(v) = (1..=n).find(|&v| !seen[v]) {
        return fail(
            block.line,
            format!("{} has no rotation for vertex {v}", block.name),
        );
    }
    Ok(n)
}

/// Reads the edge-numbered table.
pub fn parse_appendix_a(text: &str) -> Result<Vec<AppendixEntry>, AppendixError> {
    blocks(text)?
        .iter()
        .map(|block| {
            let n = vertex_count(block)?;
            let mut rotations = vec![Vec::new(); n];
            // edge id -> declarations (vertex, neighbour, line)
            let mut seen: BTreeMap<usize, Vec<(usize, usize, usize)>> = BTreeMap::new();
            for (line, v, rest) in &block.rows {
                let toks = tokens(rest);
                let mut i = 0;
                while i < toks.len() {
                    let nb = parse_int(&toks[i], *line, "a neighbour")?;
                    if toks.get(i + 1).map(String::as_str) != Some("[") {
                        return fail(*line, format!("expected '[' after neighbour {nb}"));
                    }
                    let close = match toks[i + 2..].iter().position(|t| t == "]") {
                        Some(p) => i + 2 + p,
                        None => return fail(*line, "unclosed '['"),
                    };
                    if toks[i + 2..close].iter().any(|t| t == "[") {
                        return fail(*line, "nested '['");
                    }
                    let Some(id_tok) = toks.get(i + 2).filter(|_| close > i + 2) else {
                        return fail(*line, "empty bracket group");
                    };
                    let id = parse_int(id_tok, *line, "an edge id")?;
                    for t in &toks[i + 3..close] {
                        parse_int(t, *line, "a crossing number")?;
                    }
                    if nb < 1 || id < 1 {
                        return fail(*line, "vertex and edge numbers must be positive");
                    }
                    rotations[v - 1].push(id as usize);
                    seen.entry(id as usize)
                        .or_default()
                        .push((*v, nb as usize, *line));
                    i = close + 1;
                }
            }
            let mut edges = BTreeMap::new();
            for (id, decl) in seen {
                match decl.as_slice() {
                    [(a, na, _), (b, nb, line)] => {
                        if *na != *b || *nb != *a {
                            return fail(
                                *line,
                                format!(
                                    "edge {id} declared as {a}-{na} and as {b}-{nb} in {}",
                                    block.name
                                ),
                            );
                        }
                        edges.insert(id, (*a, *b));
                    }
                    [(a, na, line)] => {
                        return fail(
                            *line,
                            format!(
                                "edge {id} ({a}-{na}) appears at one end only in {}",
                                block.name
                            ),
                        )
                    }
                    more => {
                        return fail(
                            more[2].2,
                            format!("edge {id} declared {} times in {}", more.len(), block.name),
                        )
                    }
                }
            }
            build(block, n, edges, rotations)
        })
        .collect()
}

/// Reads the neighbour-list table of a simple graph.
pub fn parse_appendix_b(text: &str) -> Result<Vec<AppendixEntry>, AppendixError> {
    blocks(text)?
        .iter()
        .map(|block| {
            let n = vertex_count(block)?;
            let mut neighbours = vec![Vec::new(); n];
            for (line, v, rest) in &block.rows {
                for tok in rest.split_whitespace() {
                    let w = parse_int(tok, *line, "a neighbour")?;
                    if w < 1 || w as usize > n {
                        return fail(*line, format!("neighbour {w} outside 1..={n}"));
                    }
                    let w = w as usize;
                    if w == *v {
                        return fail(*line, format!("vertex {v} lists itself"));
                    }
                    if neighbours[v - 1].contains(&w) {
                        return fail(*line, format!("vertex {v} lists {w} twice"));
                    }
                    neighbours[v - 1].push(w);
                }
            }
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (i, list) in neighbours.iter().enumerate() {
                let v = i + 1;
                for &w in list {
                    if !neighbours[w - 1].contains(&v) {
                        return fail(
                            block.line,
                            format!("{}: {v} lists {w} but {w} does not list {v}", block.name),
                        );
                    }
                    if v < w {
                        pairs.push((v, w));
                    }
                }
            }
            pairs.sort_unstable();
            let id_of = |a: usize, b: usize| {
                pairs
                    .binary_search(&(a.min(b), a.max(b)))
                    .expect("pair recorded")
                    + 1
            };
            let rotations = neighbours
                .iter()
                .enumerate()
                .map(|(i, list)| list.iter().map(|&w| id_of(i + 1, w)).collect())
                .collect();
            let edges = pairs.iter().enumerate().map(|(i, &p)| (i + 1, p)).collect();
            build(block, n, edges, rotations)
        })
        .collect()
}

pub const APPENDIX_A: &str = include_str!("../data/appendix_a.txt");
pub const APPENDIX_B: &str = include_str!("../data/appendix_b.txt");
