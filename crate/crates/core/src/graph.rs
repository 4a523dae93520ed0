//! Loopless multigraphs with first-class edge identities, and the darts
//! (half-edges) they induce.

use std::fmt;

use thiserror::Error;

/// Vertices are numbered `1..=n`.
pub type VertexId = usize;
/// Edges are numbered `1..=ε`.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} has endpoint {vertex} outside 1..={vertex_count}")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge ids must be contiguous from 1: {0}")]
    EdgeIds(String),
    #[error("invalid graph constructor: {0}")]
    Constructor(String),
}

/// Which endpoint of an edge a dart sits at. `First` is the smaller vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    First = 0,
    Second = 1,
}

/// A half-edge, packed as `2 * (edge - 1) + end`.
///
/// Darts order by `(edge, end)`, which is the order used to normalize
/// rotations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(u32);

impl Dart {
    pub fn new(edge: EdgeId, end: End) -> Dart {
        debug_assert!(edge >= 1);
        Dart(((edge - 1) * 2 + end as usize) as u32)
    }

    pub fn from_index(index: usize) -> Dart {
        Dart(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn edge(self) -> EdgeId {
        (self.0 as usize >> 1) + 1
    }

    #[inline]
    pub fn end(self) -> End {
        if self.0 & 1 == 0 {
            End::First
        } else {
            End::Second
        }
    }

    /// The other half of the same edge.
    #[inline]
    pub fn partner(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

impl fmt::Debug for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = match self.end() {
            End::First => 'a',
            End::Second => 'b',
        };
        write!(f, "{}{}", self.edge(), end)
    }
}

/// A loopless multigraph. Edge `i` is stored at index `i - 1` with its
/// endpoints ordered `(smaller, larger)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultiGraph {
    /// Builds a graph whose edge `i` is the `i`-th pair of `edges`.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<MultiGraph, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut normalized = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            let edge = i + 1;
            for w in [u, v] {
                if w == 0 || w > vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge, vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        Ok(MultiGraph {
            vertex_count,
            edges: normalized,
        })
    }

    /// Builds a graph from explicitly numbered edges; the ids must be
    /// exactly `1..=ε` in some order.
    pub fn from_numbered_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    ) -> Result<MultiGraph, GraphError> {
        let mut list: Vec<(EdgeId, VertexId, VertexId)> = edges.into_iter().collect();
        list.sort_by_key(|e| e.0);
        for (i, &(id, _, _)) in list.iter().enumerate() {
            if id != i + 1 {
                let msg = if i > 0 && list[i - 1].0 == id {
                    format!("edge id {id} appears more than once")
                } else {
                    format!("missing edge id {}", i + 1)
                };
                return Err(GraphError::EdgeIds(msg));
            }
        }
        MultiGraph::new(vertex_count, list.into_iter().map(|(_, u, v)| (u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.vertex_count
    }

    /// `(id, u, v)` triples in id order, `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i + 1, u, v))
    }

    pub fn endpoints(&self, edge: EdgeId) -> (VertexId, VertexId) {
        self.edges[edge - 1]
    }

    pub fn has_edge(&self, edge: EdgeId) -> bool {
        edge >= 1 && edge <= self.edges.len()
    }

    /// Vertex a dart is attached to.
    #[inline]
    pub fn tail(&self, dart: Dart) -> VertexId {
        let (u, v) = self.edges[dart.edge() - 1];
        match dart.end() {
            End::First => u,
            End::Second => v,
        }
    }

    /// Vertex at the far end of a dart.
    #[inline]
    pub fn head(&self, dart: Dart) -> VertexId {
        self.tail(dart.partner())
    }

    /// The dart of `edge` sitting at `vertex`, if `vertex` is an endpoint.
    pub fn dart_at(&self, edge: EdgeId, vertex: VertexId) -> Option<Dart> {
        if !self.has_edge(edge) {
            return None;
        }
        let (u, v) = self.endpoints(edge);
        if vertex == u {
            Some(Dart::new(edge, End::First))
        } else if vertex == v {
            Some(Dart::new(edge, End::Second))
        } else {
            None
        }
    }

    pub fn degree(&self, vertex: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == vertex || v == vertex)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// Darts at `vertex`, in increasing dart order.
    pub fn darts_at(&self, vertex: VertexId) -> Vec<Dart> {
        self.edges()
            .filter_map(|(id, _, _)| self.dart_at(id, vertex))
            .collect()
    }

    /// Number of parallel edges joining `a` and `b`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        let key = (a.min(b), a.max(b));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Edges parallel to `edge`, excluding itself.
    pub fn parallel_edges(&self, edge: EdgeId) -> Vec<EdgeId> {
        let key = self.endpoints(edge);
        self.edges()
            .filter(|&(id, u, v)| id != edge && (u, v) == key)
            .map(|(id, _, _)| id)
            .collect()
    }

    /// Row-major `n × n` multiplicity matrix.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u32; n]; n];
        for &(u, v) in &self.edges {
            m[u - 1][v - 1] += 1;
            m[v - 1][u - 1] += 1;
        }
        m
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = self.edges.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u - 1), find(&mut parent, v - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<VertexId>> = Vec::new();
        let mut index_of_root = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index_of_root[r]].push(v + 1);
        }
        groups
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Non-adjacent vertex pairs `(a, b)` with `a < b`.
    pub fn non_adjacent_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let m = self.multiplicity_matrix();
        let mut out = Vec::new();
        for a in 1..=self.vertex_count {
            for b in a + 1..=self.vertex_count {
                if m[a - 1][b - 1] == 0 {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn darts_pack_edge_and_end() {
        let d = Dart::new(3, End::Second);
        assert_eq!(d.index(), 5);
        assert_eq!(d.edge(), 3);
        assert_eq!(d.end(), End::Second);
        assert_eq!(d.partner(), Dart::new(3, End::First));
        assert_eq!(d.partner().partner(), d);
    }

    #[test]
    fn loops_are_rejected() {
        assert_eq!(
            MultiGraph::new(2, [(1, 2), (2, 2)]),
            Err(GraphError::Loop { edge: 2, vertex: 2 })
        );
    }

    #[test]
    fn endpoints_are_normalized() {
        let g = MultiGraph::new(3, [(3, 1), (2, 1)]).unwrap();
        assert_eq!(g.endpoints(1), (1, 3));
        assert_eq!(g.tail(Dart::new(1, End::First)), 1);
        assert_eq!(g.head(Dart::new(1, End::First)), 3);
    }

    #[test]
    fn numbered_edges_must_be_contiguous() {
        let err = MultiGraph::from_numbered_edges(2, [(1, 1, 2), (3, 1, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::EdgeIds(_)));
        let err = MultiGraph::from_numbered_edges(2, [(1, 1, 2), (1, 1, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::EdgeIds(ref m) if m.contains("more than once")));
        let g = MultiGraph::from_numbered_edges(3, [(2, 2, 3), (1, 1, 2)]).unwrap();
        assert_eq!(g.endpoints(2), (2, 3));
    }

    #[test]
    fn parallel_edges_and_multiplicity() {
        let g = MultiGraph::new(2, [(1, 2), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g.multiplicity(2, 1), 3);
        assert_eq!(g.parallel_edges(2), vec![1, 3]);
        assert!(!g.is_simple());
        assert_eq!(g.degrees(), vec![3, 3]);
    }

    #[test]
    fn components_group_by_least_vertex() {
        let g = MultiGraph::new(5, [(4, 5), (1, 3)]).unwrap();
        assert_eq!(g.components(), vec![vec![1, 3], vec![2], vec![4, 5]]);
        assert!(!g.is_connected());
    }
}
