//! Genus-preserving surgery on embeddings: vertex splitting, edge
//! contraction, edge deletion and insertion, subdivision.
//!
//! Every operation rebuilds and revalidates the result. Edge and vertex ids
//! are shifted so that each operation has a label-exact inverse:
//!
//! * `split_vertex` / `contract_edge` on the new edge,
//! * `delete_edge` / `add_edge_in_face` at the recorded corners,
//! * `subdivide_edge(k)` / `contract_edge` on the appended edge.

use thiserror::Error;

use crate::canon::graphs_isomorphic;
use crate::embedding::{Embedding, EmbeddingError};
use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("new edge id {id} must lie in 1..={max}")]
    NewEdgeId { id: EdgeId, max: EdgeId },
    #[error("split of vertex {vertex} (degree {degree}) needs 1 <= arc_len < degree and arc_start < degree, got start {arc_start} len {arc_len}")]
    BadArc {
        vertex: VertexId,
        degree: usize,
        arc_start: usize,
        arc_len: usize,
    },
    #[error("edge {0} has a parallel copy; contracting it would create a loop")]
    ParallelEdge(EdgeId),
    #[error("both sides of edge {0} lie on the same face; deleting it would change the genus")]
    SameFace(EdgeId),
    #[error("corner ({face}, {position}) does not exist")]
    NoSuchCorner { face: usize, position: usize },
    #[error("corners lie on different faces ({0} and {1})")]
    DifferentFaces(usize, usize),
    #[error("both corners are at vertex {0}; the new edge would be a loop")]
    SameVertex(VertexId),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// Splits `vertex` into two vertices joined by a new edge. The arc of
/// `arc_len` consecutive darts starting at position `arc_start` of the
/// normalized rotation stays at `vertex`; the remaining darts move to a new
/// vertex numbered `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitSpec {
    pub vertex: VertexId,
    pub arc_start: usize,
    pub arc_len: usize,
    pub new_edge_id: EdgeId,
}

/// A corner of a face: the angle at the tail of the dart at `position` of
/// face `face`, between that dart and its rotation predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerRef {
    pub face: usize,
    pub position: usize,
}

/// Result of a genus-preserving deletion, with the corners that reinsert the
/// edge under its old id.
#[derive(Debug, Clone)]
pub struct Deletion {
    pub embedding: Embedding,
    pub edge_id: EdgeId,
    pub corners: (CornerRef, CornerRef),
}

fn rebuild(
    vertex_count: usize,
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    rotations: Vec<Vec<EdgeId>>,
) -> Result<Embedding, SurgeryError> {
    let graph = MultiGraph::from_numbered_edges(vertex_count, edges)
        .expect("surgery produces contiguous loopless edge ids");
    Ok(Embedding::from_edge_rotations(graph, rotations)?)
}

fn check_edge(e: &Embedding, edge: EdgeId) -> Result<(), SurgeryError> {
    if e.graph().has_edge(edge) {
        Ok(())
    } else {
        Err(SurgeryError::UnknownEdge(edge))
    }
}

/// Edge rotation of `v` read cyclically from the dart after `edge`, which is
/// left out.
fn rotation_after(e: &Embedding, v: VertexId, edge: EdgeId) -> Vec<EdgeId> {
    let rot = e.edge_rotation(v);
    let pos = rot.iter().position(|&x| x == edge).expect("edge at vertex");
    (1..rot.len()).map(|i| rot[(pos + i) % rot.len()]).collect()
}

pub fn split_vertex(e: &Embedding, spec: SplitSpec) -> Result<Embedding, SurgeryError> {
    let g = e.graph();
    let n = g.vertex_count();
    let m = g.edge_count();
    let v = spec.vertex;
    if v == 0 || v > n {
        return Err(SurgeryError::UnknownVertex(v));
    }
    if spec.new_edge_id == 0 || spec.new_edge_id > m + 1 {
        return Err(SurgeryError::NewEdgeId {
            id: spec.new_edge_id,
            max: m + 1,
        });
    }
    let rot = e.edge_rotation(v);
    let deg = rot.len();
    if spec.arc_len == 0 || spec.arc_len >= deg || spec.arc_start >= deg {
        return Err(SurgeryError::BadArc {
            vertex: v,
            degree: deg,
            arc_start: spec.arc_start,
            arc_len: spec.arc_len,
        });
    }
    let new_id = spec.new_edge_id;
    let shift = |id: EdgeId| if id >= new_id { id + 1 } else { id };
    let cyc = |i: usize| rot[(spec.arc_start + i) % deg];
    let arc: Vec<EdgeId> = (0..spec.arc_len).map(cyc).collect();
    let rest: Vec<EdgeId> = (spec.arc_len..deg).map(cyc).collect();
    let v2 = n + 1;

    let mut edges: Vec<_> = g
        .edges()
        .map(|(id, a, b)| {
            let moved = |w: VertexId| if w == v && rest.contains(&id) { v2 } else { w };
            (shift(id), moved(a), moved(b))
        })
        .collect();
    edges.push((new_id, v, v2));

    let mut rotations: Vec<Vec<EdgeId>> = g
        .vertices()
        .map(|w| {
            if w == v {
                arc.iter().map(|&x| shift(x)).chain([new_id]).collect()
            } else {
                e.edge_rotation(w).into_iter().map(shift).collect()
            }
        })
        .collect();
    rotations.push(rest.iter().map(|&x| shift(x)).chain([new_id]).collect());
    rebuild(n + 1, edges, rotations)
}

pub fn contract_edge(e: &Embedding, edge: EdgeId) -> Result<Embedding, SurgeryError> {
    check_edge(e, edge)?;
    let g = e.graph();
    let (u, v) = g.endpoints(edge);
    if g.multiplicity(u, v) > 1 {
        return Err(SurgeryError::ParallelEdge(edge));
    }
    let vmap = |w: VertexId| match w.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Greater => w - 1,
        std::cmp::Ordering::Less => w,
    };
    let emap = |id: EdgeId| if id > edge { id - 1 } else { id };
    let edges = g
        .edges()
        .filter(|&(id, _, _)| id != edge)
        .map(|(id, a, b)| (emap(id), vmap(a), vmap(b)))
        .collect();
    let rotations = g
        .vertices()
        .filter(|&w| w != v)
        .map(|w| {
            let rot = if w == u {
                let mut merged = rotation_after(e, u, edge);
                merged.extend(rotation_after(e, v, edge));
                merged
            } else {
                e.edge_rotation(w)
            };
            rot.into_iter().map(emap).collect()
        })
        .collect();
    rebuild(g.vertex_count() - 1, edges, rotations)
}

/// Inserts edge `edge_id` (later ids shift up) between the vertices of two
/// corners of one face, splitting that face in two.
pub fn add_edge_in_face(
    e: &Embedding,
    corner_u: CornerRef,
    corner_v: CornerRef,
    new_edge_id: EdgeId,
) -> Result<Embedding, SurgeryError> {
    let g = e.graph();
    let m = g.edge_count();
    if new_edge_id == 0 || new_edge_id > m + 1 {
        return Err(SurgeryError::NewEdgeId {
            id: new_edge_id,
            max: m + 1,
        });
    }
    let faces = e.trace_faces().faces;
    let dart_of = |c: CornerRef| {
        faces
            .get(c.face)
            .and_then(|f| f.get(c.position))
            .copied()
            .ok_or(SurgeryError::NoSuchCorner {
                face: c.face,
                position: c.position,
            })
    };
    let du = dart_of(corner_u)?;
    let dv = dart_of(corner_v)?;
    if corner_u.face != corner_v.face {
        return Err(SurgeryError::DifferentFaces(corner_u.face, corner_v.face));
    }
    let (a, b) = (g.tail(du), g.tail(dv));
    if a == b {
        return Err(SurgeryError::SameVertex(a));
    }
    let shift = |id: EdgeId| if id >= new_edge_id { id + 1 } else { id };
    let mut edges: Vec<_> = g.edges().map(|(id, x, y)| (shift(id), x, y)).collect();
    edges.push((new_edge_id, a, b));
    let rotations = g
        .vertices()
        .map(|w| {
            let mut rot = Vec::new();
            for d in e.rotation(w) {
                if *d == du || *d == dv {
                    rot.push(new_edge_id);
                }
                rot.push(shift(d.edge()));
            }
            rot
        })
        .collect();
    rebuild(g.vertex_count(), edges, rotations)
}

fn remove_edge(e: &Embedding, edge: EdgeId) -> Result<Embedding, SurgeryError> {
    let g = e.graph();
    let emap = |id: EdgeId| if id > edge { id - 1 } else { id };
    let edges = g
        .edges()
        .filter(|&(id, _, _)| id != edge)
        .map(|(id, a, b)| (emap(id), a, b))
        .collect();
    let rotations = g
        .vertices()
        .map(|w| {
            e.edge_rotation(w)
                .into_iter()
                .filter(|&x| x != edge)
                .map(emap)
                .collect()
        })
        .collect();
    rebuild(g.vertex_count(), edges, rotations)
}

/// Deletes an edge whose two sides lie on different faces; the faces merge
/// and the genus is unchanged.
pub fn delete_edge(e: &Embedding, edge: EdgeId) -> Result<Deletion, SurgeryError> {
    check_edge(e, edge)?;
    let g = e.graph();
    let faces = e.trace_faces();
    let pos = faces.dart_positions();
    let (a, b) = g.endpoints(edge);
    let da = g.dart_at(edge, a).expect("endpoint");
    let db = g.dart_at(edge, b).expect("endpoint");
    if pos[da.index()].0 == pos[db.index()].0 {
        return Err(SurgeryError::SameFace(edge));
    }
    let succ = e.successors();
    // both darts on distinct faces rules out degree-1 endpoints
    let (sa, sb) = (succ[da.index()], succ[db.index()]);
    let result = remove_edge(e, edge)?;
    let emap = |id: EdgeId| if id > edge { id - 1 } else { id };
    let rg = result.graph();
    let new_pos = result.trace_faces().dart_positions();
    let corner = |v: VertexId, old: crate::graph::Dart| {
        let d = rg.dart_at(emap(old.edge()), v).expect("surviving dart");
        let (face, position) = new_pos[d.index()];
        CornerRef { face, position }
    };
    let corners = (corner(a, sa), corner(b, sb));
    Ok(Deletion {
        embedding: result,
        edge_id: edge,
        corners,
    })
}

/// Deletes an edge with no face condition; the genus may drop and the graph
/// may disconnect.
pub fn delete_edge_permissive(e: &Embedding, edge: EdgeId) -> Result<Embedding, SurgeryError> {
    check_edge(e, edge)?;
    remove_edge(e, edge)
}

/// Replaces edge `k = (u, v)` by a path `u – x – v` through a new vertex
/// `x = n + 1`. Edge `k` becomes `(u, x)`; the new edge `ε + 1` is `(x, v)`
/// and takes the place of `k` in the rotation of `v`.
pub fn subdivide_edge(e: &Embedding, edge: EdgeId) -> Result<Embedding, SurgeryError> {
    check_edge(e, edge)?;
    let g = e.graph();
    let n = g.vertex_count();
    let new_id = g.edge_count() + 1;
    let x = n + 1;
    let (_, v) = g.endpoints(edge);
    let mut edges: Vec<_> = g
        .edges()
        .map(|(id, a, b)| if id == edge { (id, a, x) } else { (id, a, b) })
        .collect();
    edges.push((new_id, x, v));
    let mut rotations: Vec<Vec<EdgeId>> = g
        .vertices()
        .map(|w| {
            let rot = e.edge_rotation(w);
            if w == v {
                rot.into_iter()
                    .map(|id| if id == edge { new_id } else { id })
                    .collect()
            } else {
                rot
            }
        })
        .collect();
    rotations.push(vec![edge, new_id]);
    rebuild(n + 1, edges, rotations)
}

/// Every split specification of `vertex`, with each unordered division of
/// the rotation into two arcs listed once.
pub fn split_specs(e: &Embedding, vertex: VertexId) -> Vec<SplitSpec> {
    let deg = e.rotation(vertex).len();
    let new_edge_id = e.edge_count() + 1;
    let mut out = Vec::new();
    for arc_len in 1..deg {
        if 2 * arc_len > deg {
            break;
        }
        let starts = if 2 * arc_len == deg { deg / 2 } else { deg };
        for arc_start in 0..starts {
            out.push(SplitSpec {
                vertex,
                arc_start,
                arc_len,
                new_edge_id,
            });
        }
    }
    out
}

/// All single vertex splits of `e` whose graph is isomorphic to `target`.
pub fn all_splits(e: &Embedding, target: &MultiGraph) -> Vec<Embedding> {
    let g = e.graph();
    if g.vertex_count() + 1 != target.vertex_count() || g.edge_count() + 1 != target.edge_count() {
        return Vec::new();
    }
    g.vertices()
        .flat_map(|v| split_specs(e, v))
        .filter_map(|spec| split_vertex(e, spec).ok())
        .filter(|s| graphs_isomorphic(s.graph(), target))
        .collect()
}

/// Every `(corner, corner)` pair on a common face at the given two vertices.
pub fn corner_pairs(e: &Embedding, a: VertexId, b: VertexId) -> Vec<(CornerRef, CornerRef)> {
    let g = e.graph();
    let faces = e.trace_faces().faces;
    let mut out = Vec::new();
    for (fi, face) in faces.iter().enumerate() {
        for (i, &da) in face.iter().enumerate() {
            if g.tail(da) != a {
                continue;
            }
            for (j, &db) in face.iter().enumerate() {
                if g.tail(db) == b {
                    out.push((
                        CornerRef {
                            face: fi,
                            position: i,
                        },
                        CornerRef {
                            face: fi,
                            position: j,
                        },
                    ));
                }
            }
        }
    }
    out
}
