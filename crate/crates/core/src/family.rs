//! Constructors for the named graph families used throughout the crate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::graph::{GraphError, MultiGraph, VertexId};

/// A graph-constructor descriptor.
///
/// The textual form accepted by [`GraphSpec::from_str`] is either the
/// function syntax printed by `Display` (`complete(5)`, `bipartite(3,3)`,
/// `circulant(8,1,4)`, `complement(cube)`, ...) or one of the short names
/// `K5`, `K3,3`, `theta5`, `T1,2,3`, `K4+`, `W4`, `K5-uv`, `~cube`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Two vertices joined by `m` parallel edges.
    Theta(usize),
    /// Triangle on `1, 2, 3` with multiplicities `i` on `12`, `j` on `13`
    /// and `k` on `23`.
    TriangleMulti(usize, usize, usize),
    /// `K4` with the edge `12` doubled.
    K4Plus,
    /// Rim cycle `1..=k` plus hub `k + 1`.
    Wheel(usize),
    /// `K5` without the edge `45`.
    K5MinusEdge,
    Circulant(usize, Vec<usize>),
    /// `C_n × K_2`: outer cycle `1..=n`, inner cycle `n+1..=2n`.
    Prism(usize),
    Cube,
    Octahedron,
    Petersen,
    Complement(Box<GraphSpec>),
}

/// Builds the graph described by `spec` with vertices `1..=n` and edges
/// sorted by endpoint pair, parallel copies consecutive.
pub fn build_graph(spec: &GraphSpec) -> Result<MultiGraph, GraphError> {
    let bad = |msg: &str| Err(GraphError::Constructor(format!("{spec}: {msg}")));
    let (n, mut pairs): (usize, Vec<(VertexId, VertexId)>) = match spec {
        GraphSpec::Complete(n) => {
            if *n == 0 {
                return bad("needs at least one vertex");
            }
            (*n, all_pairs(1..=*n))
        }
        GraphSpec::CompleteBipartite(a, b) => {
            if *a == 0 || *b == 0 {
                return bad("both sides must be nonempty");
            }
            let mut pairs = Vec::new();
            for u in 1..=*a {
                for v in a + 1..=a + b {
                    pairs.push((u, v));
                }
            }
            (a + b, pairs)
        }
        GraphSpec::Theta(m) => {
            if *m == 0 {
                return bad("needs at least one edge");
            }
            (2, vec![(1, 2); *m])
        }
        GraphSpec::TriangleMulti(i, j, k) => {
            if *i == 0 || *j == 0 || *k == 0 {
                return bad("multiplicities must be positive");
            }
            let mut pairs = vec![(1, 2); *i];
            pairs.extend(std::iter::repeat_n((1, 3), *j));
            pairs.extend(std::iter::repeat_n((2, 3), *k));
            (3, pairs)
        }
        GraphSpec::K4Plus => {
            let mut pairs = all_pairs(1..=4);
            pairs.push((1, 2));
            (4, pairs)
        }
        GraphSpec::Wheel(k) => {
            if *k < 3 {
                return bad("a wheel needs at least three rim vertices");
            }
            let mut pairs = cycle_pairs(1, *k);
            pairs.extend((1..=*k).map(|v| (v, k + 1)));
            (k + 1, pairs)
        }
        GraphSpec::K5MinusEdge => {
            let pairs = all_pairs(1..=5)
                .into_iter()
                .filter(|&p| p != (4, 5))
                .collect();
            (5, pairs)
        }
        GraphSpec::Circulant(n, connections) => {
            if *n < 2 {
                return bad("needs at least two vertices");
            }
            let mut set = BTreeSet::new();
            for &s in connections {
                if s % n == 0 {
                    return bad("connection value 0 would create loops");
                }
                for i in 0..*n {
                    let j = (i + s) % n;
                    set.insert((i.min(j) + 1, i.max(j) + 1));
                }
            }
            (*n, set.into_iter().collect())
        }
        GraphSpec::Prism(n) => {
            if *n < 3 {
                return bad("needs at least three vertices per cycle");
            }
            let mut pairs = cycle_pairs(1, *n);
            pairs.extend(cycle_pairs(n + 1, *n));
            pairs.extend((1..=*n).map(|v| (v, v + n)));
            (2 * n, pairs)
        }
        GraphSpec::Cube => {
            let mut pairs = Vec::new();
            for x in 0..8usize {
                for bit in [1, 2, 4] {
                    let y = x ^ bit;
                    if x < y {
                        pairs.push((x + 1, y + 1));
                    }
                }
            }
            (8, pairs)
        }
        GraphSpec::Octahedron => {
            let pairs = all_pairs(1..=6)
                .into_iter()
                .filter(|&(u, v)| v != u + 3)
                .collect();
            (6, pairs)
        }
        GraphSpec::Petersen => {
            let mut pairs = cycle_pairs(1, 5);
            for i in 0..5 {
                pairs.push((6 + i, 6 + (i + 2) % 5));
                pairs.push((1 + i, 6 + i));
            }
            (10, pairs)
        }
        GraphSpec::Complement(inner) => {
            let base = build_graph(inner)?;
            if !base.is_simple() {
                return bad("complement of a graph with parallel edges");
            }
            let m = base.multiplicity_matrix();
            let pairs = all_pairs(1..=base.vertex_count())
                .into_iter()
                .filter(|&(u, v)| m[u - 1][v - 1] == 0)
                .collect();
            (base.vertex_count(), pairs)
        }
    };
    for p in &mut pairs {
        *p = (p.0.min(p.1), p.0.max(p.1));
    }
    pairs.sort_unstable();
    MultiGraph::new(n, pairs)
}

fn all_pairs(range: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = range.collect();
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

fn cycle_pairs(first: usize, len: usize) -> Vec<(usize, usize)> {
    (0..len)
        .map(|i| (first + i, first + (i + 1) % len))
        .collect()
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "complete({n})"),
            GraphSpec::CompleteBipartite(a, b) => write!(f, "bipartite({a},{b})"),
            GraphSpec::Theta(m) => write!(f, "theta({m})"),
            GraphSpec::TriangleMulti(i, j, k) => write!(f, "triangle({i},{j},{k})"),
            GraphSpec::K4Plus => write!(f, "k4plus"),
            GraphSpec::Wheel(k) => write!(f, "wheel({k})"),
            GraphSpec::K5MinusEdge => write!(f, "k5-uv"),
            GraphSpec::Circulant(n, s) => {
                write!(f, "circulant({n}")?;
                for x in s {
                    write!(f, ",{x}")?;
                }
                write!(f, ")")
            }
            GraphSpec::Prism(n) => write!(f, "prism({n})"),
            GraphSpec::Cube => write!(f, "cube"),
            GraphSpec::Octahedron => write!(f, "octahedron"),
            GraphSpec::Petersen => write!(f, "petersen"),
            GraphSpec::Complement(g) => write!(f, "complement({g})"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<GraphSpec, GraphError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || GraphError::Constructor(format!("cannot parse graph spec {text:?}"));
        if let Some(rest) = s.strip_prefix('~') {
            return Ok(GraphSpec::Complement(Box::new(rest.parse()?)));
        }
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "k4+" | "k4plus" => return Ok(GraphSpec::K4Plus),
            "k5-uv" | "k5-e" | "k5minusedge" => return Ok(GraphSpec::K5MinusEdge),
            "cube" | "q3" => return Ok(GraphSpec::Cube),
            "octahedron" => return Ok(GraphSpec::Octahedron),
            "petersen" => return Ok(GraphSpec::Petersen),
            _ => {}
        }
        if let Some(open) = lower.find('(') {
            if !lower.ends_with(')') {
                return Err(err());
            }
            let name = &lower[..open];
            let inner = &s[open + 1..s.len() - 1];
            if name == "complement" {
                return Ok(GraphSpec::Complement(Box::new(inner.parse()?)));
            }
            let args = parse_numbers(inner).ok_or_else(err)?;
            let spec = match (name, args.as_slice()) {
                ("complete", &[n]) => GraphSpec::Complete(n),
                ("bipartite" | "complete_bipartite", &[a, b]) => GraphSpec::CompleteBipartite(a, b),
                ("theta", &[m]) => GraphSpec::Theta(m),
                ("triangle" | "triangle_multi", &[i, j, k]) => GraphSpec::TriangleMulti(i, j, k),
                ("wheel", &[k]) => GraphSpec::Wheel(k),
                ("circulant", [n, rest @ ..]) if !rest.is_empty() => {
                    GraphSpec::Circulant(*n, rest.to_vec())
                }
                ("prism", &[n]) => GraphSpec::Prism(n),
                _ => return Err(err()),
            };
            return Ok(spec);
        }
        if let Some(rest) = lower.strip_prefix("theta") {
            return rest.parse().map(GraphSpec::Theta).map_err(|_| err());
        }
        if let Some(rest) = lower.strip_prefix('k') {
            let args = parse_numbers(rest).ok_or_else(err)?;
            return match *args.as_slice() {
                [n] => Ok(GraphSpec::Complete(n)),
                [a, b] => Ok(GraphSpec::CompleteBipartite(a, b)),
                _ => Err(err()),
            };
        }
        if let Some(rest) = lower.strip_prefix('t') {
            return match parse_numbers(rest).ok_or_else(err)?.as_slice() {
                &[i, j, k] => Ok(GraphSpec::TriangleMulti(i, j, k)),
                _ => Err(err()),
            };
        }
        if let Some(rest) = lower.strip_prefix('w') {
            return rest.parse().map(GraphSpec::Wheel).map_err(|_| err());
        }
        Err(err())
    }
}

fn parse_numbers(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.parse().ok()).collect()
}
