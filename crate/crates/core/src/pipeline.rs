//! Guided constructions of embeddings by expanding smaller ones.
//!
//! The K₅ chain grows the three one-face theta embeddings through
//! T₁,₂,₃, K₄⁺, W₄ and K₅ − uv up to K₅, deduplicating after every stage.
//! The K₃,₃ construction restores the four edges whose contraction turns
//! K₃,₃ into Θ₅, under every labelling of the theta edges.

use crate::canon::{self, graphs_isomorphic, CanonError, DedupMode, EmbeddingClass};
use crate::embedding::Embedding;
use crate::enumerate::{theta_embeddings, EnumError, ScanConfig};
use crate::family::{build_graph, GraphSpec};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::surgery::{
    add_edge_in_face, all_splits, corner_pairs, split_vertex, subdivide_edge, SplitSpec,
};

/// The three one-face embeddings of Θ₅ in their customary labelling: the
/// first vertex always reads `1 2 3 4 5`.
pub fn labelled_theta5() -> [Embedding; 3] {
    let g = build_graph(&GraphSpec::Theta(5)).expect("theta graph");
    let make = |v: [EdgeId; 5]| {
        Embedding::from_edge_rotations(g.clone(), vec![vec![1, 2, 3, 4, 5], v.to_vec()])
            .expect("valid theta rotation")
    };
    [
        make([1, 2, 4, 5, 3]),
        make([1, 2, 3, 4, 5]),
        make([1, 4, 2, 5, 3]),
    ]
}

/// Candidates produced by one construction step and their classes.
#[derive(Debug, Clone)]
pub struct Stage {
    pub name: &'static str,
    /// Candidate counts per source, e.g. `[("w4", 72), ("k4plus", 120)]`.
    pub sources: Vec<(&'static str, usize)>,
    /// Isomorphism classes met among the candidates themselves.
    pub direct_iso: usize,
    /// Isomorphism classes of the candidates together with their mirrors.
    pub iso: Vec<EmbeddingClass>,
    /// Classes with mirror images identified.
    pub classes: Vec<EmbeddingClass>,
}

impl Stage {
    fn from_candidates(
        name: &'static str,
        sources: Vec<(&'static str, Vec<Embedding>)>,
    ) -> Result<Stage, CanonError> {
        let all: Vec<Embedding> = sources.iter().flat_map(|(_, c)| c.clone()).collect();
        let direct_iso = canon::dedup(&all, DedupMode::Iso)?.len();
        let mirrored: Vec<Embedding> = all
            .iter()
            .cloned()
            .chain(all.iter().map(Embedding::reverse))
            .collect();
        Ok(Stage {
            name,
            sources: sources.iter().map(|(s, c)| (*s, c.len())).collect(),
            direct_iso,
            iso: canon::dedup(&mirrored, DedupMode::Iso)?,
            classes: canon::dedup(&all, DedupMode::Equivalence)?,
        })
    }

    pub fn candidates(&self) -> usize {
        self.sources.iter().map(|(_, n)| n).sum()
    }

    /// `(orientable, non-orientable)` among the equivalence classes.
    pub fn chirality_counts(&self) -> (usize, usize) {
        canon::chirality_counts(&self.classes)
    }

    fn representatives(&self) -> Vec<Embedding> {
        self.classes
            .iter()
            .map(|c| c.representative.clone())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct K5Pipeline {
    pub stages: Vec<Stage>,
}

impl K5Pipeline {
    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }

    /// Final equivalence classes of K₅ embeddings.
    pub fn classes(&self) -> &[EmbeddingClass] {
        &self.stages.last().expect("pipeline has stages").classes
    }
}

fn target(spec: GraphSpec) -> MultiGraph {
    build_graph(&spec).expect("named graph")
}

/// Every way of joining the vertices of each non-adjacent pair inside a
/// common face.
fn join_non_adjacent(e: &Embedding) -> Vec<Embedding> {
    let new_id = e.edge_count() + 1;
    e.graph()
        .non_adjacent_pairs()
        .into_iter()
        .flat_map(|(a, b)| join_all_ways(e, a, b, new_id))
        .collect()
}

fn join_all_ways(e: &Embedding, a: VertexId, b: VertexId, new_id: EdgeId) -> Vec<Embedding> {
    corner_pairs(e, a, b)
        .into_iter()
        .map(|(ca, cb)| add_edge_in_face(e, ca, cb, new_id).expect("corners share a face"))
        .collect()
}

/// Subdivides each copy of a doubled edge and joins the new vertex to each
/// degree-3 vertex in every possible way.
fn subdivide_and_join(e: &Embedding) -> Vec<Embedding> {
    let g = e.graph();
    let mut out = Vec::new();
    for (id, _, _) in g.edges() {
        if g.parallel_edges(id).is_empty() {
            continue;
        }
        let s = subdivide_edge(e, id).expect("edge exists");
        let x = s.vertex_count();
        let new_id = s.edge_count() + 1;
        for w in s.graph().vertices() {
            if w != x && s.graph().degree(w) == 3 {
                out.extend(join_all_ways(&s, x, w, new_id));
            }
        }
    }
    out
}

fn keep_graph(list: Vec<Embedding>, target: &MultiGraph) -> Vec<Embedding> {
    list.into_iter()
        .filter(|e| graphs_isomorphic(e.graph(), target))
        .collect()
}

/// Builds the K₅ embeddings on the double torus from the one-face Θ₅
/// embeddings.
pub fn pipeline_k5(config: &ScanConfig) -> Result<K5Pipeline, EnumError> {
    let thetas: Vec<Embedding> = theta_embeddings(5, 2, DedupMode::Equivalence, config)?
        .into_iter()
        .map(|c| c.representative)
        .collect();
    let mut stages = Vec::new();
    stages.push(Stage::from_candidates(
        "theta5",
        vec![("scan", thetas.clone())],
    )?);

    let t123 = target(GraphSpec::TriangleMulti(1, 2, 3));
    let cands = thetas.iter().flat_map(|e| all_splits(e, &t123)).collect();
    stages.push(Stage::from_candidates("t123", vec![("theta5", cands)])?);

    let k4p = target(GraphSpec::K4Plus);
    let reps = stages.last().unwrap().representatives();
    let cands = reps.iter().flat_map(|e| all_splits(e, &k4p)).collect();
    stages.push(Stage::from_candidates("k4plus", vec![("t123", cands)])?);
    let k4p_reps = stages.last().unwrap().representatives();

    let w4 = target(GraphSpec::Wheel(4));
    // only a degree-4 vertex of K4+ can split into W4; the graph check enforces it
    let cands = k4p_reps.iter().flat_map(|e| all_splits(e, &w4)).collect();
    stages.push(Stage::from_candidates("w4", vec![("k4plus", cands)])?);
    let w4_reps = stages.last().unwrap().representatives();

    let k5e = target(GraphSpec::K5MinusEdge);
    let from_w4 = keep_graph(w4_reps.iter().flat_map(join_non_adjacent).collect(), &k5e);
    let from_k4p = keep_graph(k4p_reps.iter().flat_map(subdivide_and_join).collect(), &k5e);
    stages.push(Stage::from_candidates(
        "k5-uv",
        vec![("w4", from_w4), ("k4plus", from_k4p)],
    )?);

    let k5 = target(GraphSpec::Complete(5));
    let reps = stages.last().unwrap().representatives();
    let cands = keep_graph(reps.iter().flat_map(join_non_adjacent).collect(), &k5);
    stages.push(Stage::from_candidates("k5", vec![("k5-uv", cands)])?);
    Ok(K5Pipeline { stages })
}

/// Names of the five theta edges after contracting `AC`, `AE`, `BD`, `BF`
/// in K₃,₃ with sides `{A, D, F}` and `{B, C, E}`. The first theta vertex
/// is `CAE`, the second `DBF`.
pub const K33_LABELS: [&str; 5] = ["AB", "CD", "CF", "ED", "EF"];

/// One successful expansion of a labelled Θ₅ embedding to K₃,₃.
#[derive(Debug, Clone)]
pub struct LabelledCompletion {
    /// Index into [`labelled_theta5`], 1-based.
    pub theta: usize,
    /// Label of each theta edge, by edge id.
    pub labels: [&'static str; 5],
    pub embedding: Embedding,
}

#[derive(Debug, Clone)]
pub struct K33Pipeline {
    pub completions: Vec<LabelledCompletion>,
    pub iso: Vec<EmbeddingClass>,
    pub classes: Vec<EmbeddingClass>,
}

impl K33Pipeline {
    /// Completions of theta embedding `theta` whose edge `edge` is labelled
    /// `label`.
    pub fn count_with_label(&self, theta: usize, edge: EdgeId, label: &str) -> usize {
        self.completions
            .iter()
            .filter(|c| c.theta == theta && c.labels[edge - 1] == label)
            .count()
    }
}

/// Start position of a cyclic arc of `rot` made of exactly the two given
/// edges, if they are adjacent.
fn adjacent_arc(rot: &[EdgeId], x: EdgeId, y: EdgeId) -> Option<usize> {
    let n = rot.len();
    let px = rot.iter().position(|&e| e == x)?;
    let py = rot.iter().position(|&e| e == y)?;
    if (px + 1) % n == py {
        Some(px)
    } else if (py + 1) % n == px {
        Some(py)
    } else {
        None
    }
}

/// Splits the pair of edges `x`, `y` off `vertex` into a new end of a path.
fn peel(e: &Embedding, vertex: VertexId, x: EdgeId, y: EdgeId) -> Option<Embedding> {
    let arc_start = adjacent_arc(&e.edge_rotation(vertex), x, y)?;
    let spec = SplitSpec {
        vertex,
        arc_start,
        arc_len: 2,
        new_edge_id: e.edge_count() + 1,
    };
    Some(split_vertex(e, spec).expect("valid split"))
}

/// Expands a labelled Θ₅ embedding into K₃,₃ by turning its first vertex
/// into the path `C–A–E` and its second into `D–B–F`. Returns `None` when
/// the rotations do not keep the required edge pairs together.
pub fn expand_to_k33(theta: &Embedding, labels: &[&str; 5]) -> Option<Embedding> {
    let id = |name: &str| labels.iter().position(|&l| l == name).map(|i| i + 1);
    id("AB")?;
    let (cd, cf, ed, ef) = (id("CD")?, id("CF")?, id("ED")?, id("EF")?);
    // C keeps vertex 1; the rest (A and E) becomes vertex 3
    let s = peel(theta, 1, cd, cf)?;
    // E keeps vertex 3; A becomes vertex 4
    let s = peel(&s, 3, ed, ef)?;
    // D keeps vertex 2; B and F become vertex 5
    let s = peel(&s, 2, cd, ed)?;
    // F keeps vertex 5; B becomes vertex 6
    let s = peel(&s, 5, cf, ef)?;
    Some(s)
}

fn label_permutations() -> Vec<[&'static str; 5]> {
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3, 4];
    fn rec(k: usize, idx: &mut [usize; 5], out: &mut Vec<[&'static str; 5]>) {
        if k == 5 {
            out.push(idx.map(|i| K33_LABELS[i]));
            return;
        }
        for i in k..5 {
            idx.swap(k, i);
            rec(k + 1, idx, out);
            idx.swap(k, i);
        }
    }
    rec(0, &mut idx, &mut out);
    out.sort();
    out
}

/// Restores K₃,₃ from the labelled Θ₅ embeddings under all 120 labellings.
pub fn pipeline_k33() -> Result<K33Pipeline, CanonError> {
    let k33 = target(GraphSpec::CompleteBipartite(3, 3));
    let mut completions = Vec::new();
    for (i, theta) in labelled_theta5().iter().enumerate() {
        for labels in label_permutations() {
            if let Some(e) = expand_to_k33(theta, &labels) {
                debug_assert!(graphs_isomorphic(e.graph(), &k33));
                completions.push(LabelledCompletion {
                    theta: i + 1,
                    labels,
                    embedding: e,
                });
            }
        }
    }
    let all: Vec<Embedding> = completions.iter().map(|c| c.embedding.clone()).collect();
    Ok(K33Pipeline {
        iso: canon::dedup(&all, DedupMode::Iso)?,
        classes: canon::dedup(&all, DedupMode::Equivalence)?,
        completions,
    })
}
