//! Rotation systems and face tracing.
//!
//! Faces are the orbits of `d ↦ succ(partner(d))`: cross the edge, then
//! take the next dart in the rotation of the vertex reached. Each dart on a
//! face walk is a traversal from its tail to its head.

use thiserror::Error;

use crate::graph::{Dart, EdgeId, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("expected rotations for {expected} vertices, got {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("edge {edge} listed at vertex {vertex} does not exist")]
    UnknownEdge { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} listed at vertex {vertex}, which is not one of its endpoints")]
    WrongVertex { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} listed twice at vertex {vertex}")]
    DuplicateDart { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} is missing from the rotation of vertex {vertex}")]
    MissingDart { vertex: VertexId, edge: EdgeId },
}

/// Counts for Euler's formula `n − ε + f = 2 − 2g` (summed over components).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

/// Face boundary walks of an embedding. Each face starts at its least dart
/// and faces are sorted by that dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
    pub stats: SurfaceStats,
}

impl FaceSet {
    pub fn face_lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// `(face index, position)` of every dart, indexed by dart.
    pub fn dart_positions(&self) -> Vec<(usize, usize)> {
        let total = self.faces.iter().map(Vec::len).sum();
        let mut out = vec![(0, 0); total];
        for (fi, face) in self.faces.iter().enumerate() {
            for (pos, d) in face.iter().enumerate() {
                out[d.index()] = (fi, pos);
            }
        }
        out
    }
}

/// A multigraph together with a rotation system: a cyclic order of the
/// darts at every vertex.
///
/// Rotations are stored normalized (least dart first), so derived equality
/// is equality of rotation systems.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    graph: MultiGraph,
    rotation: Vec<Vec<Dart>>,
}

impl Embedding {
    /// Validates and normalizes a rotation system given as dart sequences.
    pub fn new(graph: MultiGraph, rotation: Vec<Vec<Dart>>) -> Result<Embedding, EmbeddingError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(EmbeddingError::VertexCount {
                expected: n,
                found: rotation.len(),
            });
        }
        let mut seen = vec![false; graph.dart_count()];
        for (i, rot) in rotation.iter().enumerate() {
            let vertex = i + 1;
            for &d in rot {
                let edge = d.edge();
                if !graph.has_edge(edge) {
                    return Err(EmbeddingError::UnknownEdge { vertex, edge });
                }
                if graph.tail(d) != vertex {
                    return Err(EmbeddingError::WrongVertex { vertex, edge });
                }
                if std::mem::replace(&mut seen[d.index()], true) {
                    return Err(EmbeddingError::DuplicateDart { vertex, edge });
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let d = Dart::from_index(i);
            return Err(EmbeddingError::MissingDart {
                vertex: graph.tail(d),
                edge: d.edge(),
            });
        }
        let rotation = rotation.into_iter().map(normalize_cycle).collect();
        Ok(Embedding { graph, rotation })
    }

    /// Builds an embedding from per-vertex cyclic lists of edge ids. Since the
    /// graph is loopless, an edge id names exactly one dart at each endpoint.
    pub fn from_edge_rotations(
        graph: MultiGraph,
        rotation: Vec<Vec<EdgeId>>,
    ) -> Result<Embedding, EmbeddingError> {
        let mut darts = Vec::with_capacity(rotation.len());
        for (i, rot) in rotation.iter().enumerate() {
            let vertex = i + 1;
            let mut list = Vec::with_capacity(rot.len());
            for &edge in rot {
                if !graph.has_edge(edge) {
                    return Err(EmbeddingError::UnknownEdge { vertex, edge });
                }
                let d = graph
                    .dart_at(edge, vertex)
                    .ok_or(EmbeddingError::WrongVertex { vertex, edge })?;
                list.push(d);
            }
            darts.push(list);
        }
        Embedding::new(graph, darts)
    }

    /// Assembles an embedding from a successor permutation on darts. The
    /// caller guarantees that `succ` permutes the darts of each vertex
    /// cyclically.
    pub(crate) fn from_successors(graph: MultiGraph, succ: &[Dart]) -> Embedding {
        let mut rotation = Vec::with_capacity(graph.vertex_count());
        for v in graph.vertices() {
            let darts = graph.darts_at(v);
            let mut rot = Vec::with_capacity(darts.len());
            if let Some(&first) = darts.first() {
                let mut d = first;
                loop {
                    rot.push(d);
                    d = succ[d.index()];
                    if d == first {
                        break;
                    }
                }
            }
            rotation.push(rot);
        }
        debug_assert!(Embedding::new(graph.clone(), rotation.clone()).is_ok());
        Embedding { graph, rotation }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Normalized rotation of `vertex`.
    pub fn rotation(&self, vertex: VertexId) -> &[Dart] {
        &self.rotation[vertex - 1]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    /// Rotation of `vertex` as edge ids.
    pub fn edge_rotation(&self, vertex: VertexId) -> Vec<EdgeId> {
        self.rotation(vertex).iter().map(|d| d.edge()).collect()
    }

    pub fn edge_rotations(&self) -> Vec<Vec<EdgeId>> {
        self.graph
            .vertices()
            .map(|v| self.edge_rotation(v))
            .collect()
    }

    /// Next dart in the rotation at the dart's tail, indexed by dart.
    pub fn successors(&self) -> Vec<Dart> {
        let mut succ = vec![Dart::from_index(0); self.graph.dart_count()];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                succ[d.index()] = rot[(i + 1) % rot.len()];
            }
        }
        succ
    }

    /// Previous dart in the rotation at the dart's tail, indexed by dart.
    pub fn predecessors(&self) -> Vec<Dart> {
        let mut pred = vec![Dart::from_index(0); self.graph.dart_count()];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                pred[d.index()] = rot[(i + rot.len() - 1) % rot.len()];
            }
        }
        pred
    }

    /// Same graph, every rotation reversed.
    pub fn reverse(&self) -> Embedding {
        let rotation = self
            .rotation
            .iter()
            .map(|rot| {
                let mut r = rot.clone();
                r.reverse();
                normalize_cycle(r)
            })
            .collect();
        Embedding {
            graph: self.graph.clone(),
            rotation,
        }
    }

    pub fn trace_faces(&self) -> FaceSet {
        let succ = self.successors();
        let mut seen = vec![false; succ.len()];
        let mut faces = Vec::new();
        for start in 0..succ.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = Dart::from_index(start);
            while !seen[d.index()] {
                seen[d.index()] = true;
                face.push(d);
                d = succ[d.partner().index()];
            }
            debug_assert_eq!(d.index(), start);
            faces.push(face);
        }
        let stats = self.stats_for_face_count(faces.len());
        FaceSet { faces, stats }
    }

    pub fn surface_stats(&self) -> SurfaceStats {
        self.trace_faces().stats
    }

    pub fn genus(&self) -> usize {
        self.surface_stats().genus
    }

    pub fn face_count(&self) -> usize {
        self.trace_faces().faces.len()
    }

    fn stats_for_face_count(&self, faces: usize) -> SurfaceStats {
        let n = self.graph.vertex_count();
        let e = self.graph.edge_count();
        let components = self.graph.components();
        // An isolated vertex is a sphere with one face and no darts.
        let isolated = components
            .iter()
            .filter(|c| c.len() == 1 && self.graph.degree(c[0]) == 0)
            .count();
        let twice_genus =
            2 * components.len() as isize - n as isize + e as isize - (faces + isolated) as isize;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "Euler characteristic of a rotation system must be even and at most 2 per component"
        );
        SurfaceStats {
            vertices: n,
            edges: e,
            faces,
            genus: (twice_genus / 2) as usize,
        }
    }

    /// Applies a vertex and edge relabeling; `vertex_map[v - 1]` is the image
    /// of `v` and `edge_map[e - 1]` the image of `e`. Both maps must be
    /// bijections and `edge_map` must respect endpoints under `vertex_map`
    /// for the result to be an embedding of the relabeled graph.
    pub fn relabel(
        &self,
        vertex_map: &[VertexId],
        edge_map: &[EdgeId],
    ) -> Result<Embedding, EmbeddingError> {
        let g = &self.graph;
        let mut edges = vec![(0, 0, 0); g.edge_count()];
        for (id, u, v) in g.edges() {
            let new_id = edge_map[id - 1];
            edges[new_id - 1] = (new_id, vertex_map[u - 1], vertex_map[v - 1]);
        }
        let graph = MultiGraph::from_numbered_edges(g.vertex_count(), edges).map_err(|_| {
            EmbeddingError::VertexCount {
                expected: g.vertex_count(),
                found: vertex_map.len(),
            }
        })?;
        let mut rotation = vec![Vec::new(); g.vertex_count()];
        for v in g.vertices() {
            rotation[vertex_map[v - 1] - 1] = self
                .edge_rotation(v)
                .into_iter()
                .map(|e| edge_map[e - 1])
                .collect();
        }
        Embedding::from_edge_rotations(graph, rotation)
    }
}

/// Rotates a cyclic sequence so its least element comes first.
pub(crate) fn normalize_cycle<T: Ord + Copy>(mut cycle: Vec<T>) -> Vec<T> {
    if let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, d)| *d)
        .map(|(i, _)| i)
    {
        cycle.rotate_left(pos);
    }
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_graph, GraphSpec};

    fn theta5(v_rot: [usize; 5]) -> Embedding {
        let g = build_graph(&GraphSpec::Theta(5)).unwrap();
        Embedding::from_edge_rotations(g, vec![vec![1, 2, 3, 4, 5], v_rot.to_vec()]).unwrap()
    }

    fn k2() -> Embedding {
        let g = build_graph(&GraphSpec::Complete(2)).unwrap();
        Embedding::from_edge_rotations(g, vec![vec![1], vec![1]]).unwrap()
    }

    #[test]
    fn theta5_2_has_one_face_of_length_ten() {
        let e = theta5([1, 2, 3, 4, 5]);
        let faces = e.trace_faces();
        assert_eq!(faces.face_lengths(), vec![10]);
        assert_eq!(faces.stats.genus, 2);
        assert_eq!(e.reverse().face_count(), 1);
    }

    #[test]
    fn k2_single_face_on_sphere() {
        let e = k2();
        let faces = e.trace_faces();
        assert_eq!(faces.face_lengths(), vec![2]);
        assert_eq!(
            faces.stats,
            SurfaceStats {
                vertices: 2,
                edges: 1,
                faces: 1,
                genus: 0
            }
        );
        assert_eq!(e.reverse(), e);
    }

    #[test]
    fn rotations_are_normalized_least_dart_first() {
        let g = build_graph(&GraphSpec::Theta(5)).unwrap();
        let a = Embedding::from_edge_rotations(
            g.clone(),
            vec![vec![3, 4, 5, 1, 2], vec![2, 3, 4, 5, 1]],
        )
        .unwrap();
        let b = theta5([1, 2, 3, 4, 5]);
        assert_eq!(a, b);
        assert_eq!(a.edge_rotation(1), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn validation_errors() {
        let g = build_graph(&GraphSpec::Theta(5)).unwrap();
        let missing =
            Embedding::from_edge_rotations(g.clone(), vec![vec![1, 2, 3, 4, 5], vec![1, 2, 3, 4]]);
        assert_eq!(
            missing.unwrap_err(),
            EmbeddingError::MissingDart { vertex: 2, edge: 5 }
        );
        let dup = Embedding::from_edge_rotations(
            g.clone(),
            vec![vec![1, 2, 3, 4, 5], vec![1, 2, 3, 4, 4, 5]],
        );
        assert_eq!(
            dup.unwrap_err(),
            EmbeddingError::DuplicateDart { vertex: 2, edge: 4 }
        );
        let unknown = Embedding::from_edge_rotations(g.clone(), vec![vec![1, 2, 3, 4, 9], vec![]]);
        assert_eq!(
            unknown.unwrap_err(),
            EmbeddingError::UnknownEdge { vertex: 1, edge: 9 }
        );
        let k3 = build_graph(&GraphSpec::Complete(3)).unwrap();
        // edge 3 joins 2 and 3, so it cannot sit at vertex 1
        let wrong = Embedding::from_edge_rotations(k3, vec![vec![1, 3], vec![1, 3], vec![2, 3]]);
        assert_eq!(
            wrong.unwrap_err(),
            EmbeddingError::WrongVertex { vertex: 1, edge: 3 }
        );
        let count = Embedding::from_edge_rotations(g, vec![vec![1, 2, 3, 4, 5]]);
        assert!(matches!(count, Err(EmbeddingError::VertexCount { .. })));
    }

    #[test]
    fn face_walks_are_closed_and_partition_darts() {
        let e = theta5([1, 2, 4, 5, 3]);
        let faces = e.trace_faces();
        let g = e.graph();
        let mut all: Vec<Dart> = faces.faces.concat();
        for face in &faces.faces {
            for i in 0..face.len() {
                let next = face[(i + 1) % face.len()];
                assert_eq!(g.head(face[i]), g.tail(next));
            }
        }
        all.sort();
        assert_eq!(all.len(), g.dart_count());
        all.dedup();
        assert_eq!(all.len(), g.dart_count());
    }

    #[test]
    fn relabel_moves_vertices_and_edges() {
        let e = theta5([1, 2, 4, 5, 3]);
        let r = e.relabel(&[2, 1], &[5, 4, 3, 2, 1]).unwrap();
        assert_eq!(r.edge_rotation(2), vec![1, 5, 4, 3, 2]);
        assert_eq!(r.edge_rotation(1), vec![1, 3, 5, 4, 2]);
        assert_eq!(r.surface_stats(), e.surface_stats());
    }

    #[test]
    fn disconnected_graphs_sum_genus_over_components() {
        let g = MultiGraph::new(5, [(1, 2), (3, 4)]).unwrap();
        let e = Embedding::from_edge_rotations(g, vec![vec![1], vec![1], vec![2], vec![2], vec![]])
            .unwrap();
        assert_eq!(e.surface_stats().genus, 0);
        assert_eq!(e.face_count(), 2);
    }
}
