//! Canonical keys, isomorphism witnesses, automorphism counts and
//! deduplication of embeddings.
//!
//! Each connected component is encoded by a breadth-first walk rooted at a
//! dart. Vertices are labelled in discovery order, each vertex's rotation is
//! read starting at the dart through which it was discovered, and darts are
//! numbered consecutively in that order. The code lists, per vertex, its
//! degree followed by the numbers of the partners of its darts. The code is a
//! complete invariant for a fixed root, so the minimum over roots is a
//! canonical form, and the roots attaining it are exactly the images of one
//! root under the automorphism group.
//!
//! Roots are restricted to the smallest class of darts sharing an
//! isomorphism-invariant signature, which keeps the search small for
//! irregular embeddings without affecting correctness.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::embedding::Embedding;
use crate::graph::{Dart, EdgeId, MultiGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error(
        "graph with {vertices} vertices and {edges} edges exceeds the size guard \
         ({max_vertices} vertices, {max_edges} edges)"
    )]
    TooLarge {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },
}

/// Upper bounds on inputs accepted by the canonizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_vertices: 16,
            max_edges: 40,
        }
    }
}

impl SizeGuard {
    pub fn check(&self, g: &MultiGraph) -> Result<(), CanonError> {
        if g.vertex_count() > self.max_vertices || g.edge_count() > self.max_edges {
            return Err(CanonError::TooLarge {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                max_vertices: self.max_vertices,
                max_edges: self.max_edges,
            });
        }
        Ok(())
    }
}

/// Byte string that is equal for two embeddings exactly when they are
/// isomorphic. Keys order lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

/// Mirror behaviour of an embedding. `Orientable` means the reversed
/// rotation system is not isomorphic to the original (a chiral pair);
/// `NonOrientable` means it is isomorphic to its own mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    Orientable,
    NonOrientable,
}

impl Chirality {
    pub fn tag(self) -> &'static str {
        match self {
            Chirality::Orientable => "or",
            Chirality::NonOrientable => "non",
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DedupMode {
    /// Classes are isomorphism classes.
    Iso,
    /// An embedding is also identified with its reverse.
    Equivalence,
}

/// Vertex and edge bijections carrying one embedding onto another.
/// `vertex_map[v - 1]` is the image of `v`; `edge_map[e - 1]` the image of `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

impl IsoWitness {
    pub fn apply(&self, e: &Embedding) -> Embedding {
        e.relabel(&self.vertex_map, &self.edge_map)
            .expect("witness maps are bijections respecting endpoints")
    }
}

/// One class of a deduplicated list.
#[derive(Debug, Clone)]
pub struct EmbeddingClass {
    pub canonical_key: CanonicalKey,
    /// First member of the class in input order.
    pub representative: Embedding,
    pub genus: usize,
    /// Sorted face lengths.
    pub face_degrees: Vec<usize>,
    /// Rotation-preserving automorphisms of the representative.
    pub group_order: u64,
    pub chirality: Chirality,
    /// Number of input embeddings merged into this class.
    pub members: usize,
}

/// Precomputed per-embedding data shared by every rooted walk.
struct Walker {
    succ: Vec<u32>,
    tail: Vec<u32>,
    degree: Vec<u32>,
    rot_pos: Vec<u32>,
    label: Vec<u32>,
    start: Vec<u32>,
    order: Vec<u32>,
    offset: Vec<u32>,
}

const UNSET: u32 = u32::MAX;

impl Walker {
    fn new(e: &Embedding) -> Walker {
        let g = e.graph();
        let darts = g.dart_count();
        let mut succ = vec![0u32; darts];
        let mut tail = vec![0u32; darts];
        let mut rot_pos = vec![0u32; darts];
        let mut degree = vec![0u32; g.vertex_count()];
        for v in g.vertices() {
            let rot = e.rotation(v);
            degree[v - 1] = rot.len() as u32;
            for (i, d) in rot.iter().enumerate() {
                succ[d.index()] = rot[(i + 1) % rot.len()].index() as u32;
                tail[d.index()] = (v - 1) as u32;
                rot_pos[d.index()] = i as u32;
            }
        }
        let n = g.vertex_count();
        Walker {
            succ,
            tail,
            degree,
            rot_pos,
            label: vec![UNSET; n],
            start: vec![0; n],
            order: Vec::with_capacity(n),
            offset: Vec::with_capacity(n + 1),
        }
    }

    fn reset(&mut self) {
        for &v in &self.order {
            self.label[v as usize] = UNSET;
        }
        self.order.clear();
        self.offset.clear();
    }

    #[inline]
    fn visit(&mut self, v: u32, start: u32) -> u32 {
        let l = self.order.len() as u32;
        self.label[v as usize] = l;
        self.start[v as usize] = start;
        let prev = self.offset.last().copied().unwrap_or(0);
        let prev_deg = self
            .order
            .last()
            .map(|&w| self.degree[w as usize])
            .unwrap_or(0);
        self.offset.push(prev + prev_deg);
        self.order.push(v);
        l
    }

    #[inline]
    fn number(&self, d: u32) -> u32 {
        let w = self.tail[d as usize] as usize;
        let deg = self.degree[w];
        let pos = (self.rot_pos[d as usize] + deg - self.rot_pos[self.start[w] as usize]) % deg;
        self.offset[self.label[w] as usize] + pos
    }

    /// Streams the code rooted at `root` into `sink`; stops early when the
    /// sink returns `false`. Returns whether the walk ran to completion.
    fn walk(&mut self, root: u32, mut sink: impl FnMut(u32) -> bool) -> bool {
        self.reset();
        self.visit(self.tail[root as usize], root);
        let mut k = 0;
        while k < self.order.len() {
            let v = self.order[k] as usize;
            let deg = self.degree[v];
            if !sink(deg) {
                return false;
            }
            let mut d = self.start[v];
            for _ in 0..deg {
                let p = d ^ 1;
                let w = self.tail[p as usize];
                if self.label[w as usize] == UNSET {
                    self.visit(w, p);
                }
                if !sink(self.number(p)) {
                    return false;
                }
                d = self.succ[d as usize];
            }
            k += 1;
        }
        true
    }

    /// Dart numbering and vertex labels produced by the walk from `root`.
    fn numbering(&mut self, root: u32) -> Vec<(u32, u32)> {
        self.walk(root, |_| true);
        self.order
            .clone()
            .into_iter()
            .flat_map(|v| {
                let deg = self.degree[v as usize];
                let mut d = self.start[v as usize];
                let mut out = Vec::with_capacity(deg as usize);
                for _ in 0..deg {
                    out.push((d, self.number(d)));
                    d = self.succ[d as usize];
                }
                out
            })
            .collect()
    }
}

/// Result of canonizing one connected component.
struct ComponentCode {
    code: Vec<u32>,
    /// A root attaining the minimum code.
    root: u32,
    /// Number of roots attaining it.
    ties: u64,
}

/// Root candidates for every component: the darts of the component whose
/// invariant signature is rarest (ties broken by the signature itself).
fn root_classes(e: &Embedding) -> Vec<(Vec<VertexId>, Vec<u32>)> {
    let g = e.graph();
    let faces = e.trace_faces();
    let mut face_len = vec![0usize; g.dart_count()];
    for face in &faces.faces {
        for d in face {
            face_len[d.index()] = face.len();
        }
    }
    let degrees = g.degrees();
    let mult = g.multiplicity_matrix();
    let signature = |d: Dart| {
        let (t, h) = (g.tail(d), g.head(d));
        (
            degrees[t - 1],
            degrees[h - 1],
            mult[t - 1][h - 1],
            face_len[d.index()],
            face_len[d.partner().index()],
        )
    };
    g.components()
        .into_iter()
        .map(|comp| {
            let mut classes: BTreeMap<_, Vec<u32>> = BTreeMap::new();
            for &v in &comp {
                for d in e.rotation(v) {
                    classes
                        .entry(signature(*d))
                        .or_default()
                        .push(d.index() as u32);
                }
            }
            let roots = classes
                .into_iter()
                .min_by(|a, b| a.1.len().cmp(&b.1.len()).then(a.0.cmp(&b.0)))
                .map(|(_, r)| r)
                .unwrap_or_default();
            (comp, roots)
        })
        .collect()
}

fn canonize_component(walker: &mut Walker, comp: &[VertexId], roots: &[u32]) -> ComponentCode {
    let edges: u32 = comp.iter().map(|&v| walker.degree[v - 1]).sum::<u32>() / 2;
    let header = [comp.len() as u32, edges];
    if roots.is_empty() {
        // isolated vertex
        return ComponentCode {
            code: vec![header[0], header[1], 0],
            root: UNSET,
            ties: 1,
        };
    }
    let mut best: Vec<u32> = Vec::new();
    let mut best_root = roots[0];
    let mut ties = 0u64;
    let mut cand: Vec<u32> = Vec::new();
    for &root in roots {
        cand.clear();
        cand.extend_from_slice(&header);
        let mut state = if best.is_empty() {
            Ordering::Less
        } else {
            Ordering::Equal
        };
        let mut pos = header.len();
        let finished = walker.walk(root, |x| {
            if state == Ordering::Equal {
                match x.cmp(&best[pos]) {
                    Ordering::Less => state = Ordering::Less,
                    Ordering::Greater => return false,
                    Ordering::Equal => {}
                }
            }
            cand.push(x);
            pos += 1;
            true
        });
        if !finished {
            continue;
        }
        match state {
            Ordering::Less => {
                std::mem::swap(&mut best, &mut cand);
                best_root = root;
                ties = 1;
            }
            Ordering::Equal => ties += 1,
            Ordering::Greater => unreachable!(),
        }
    }
    ComponentCode {
        code: best,
        root: best_root,
        ties,
    }
}

struct Canonized {
    key: CanonicalKey,
    group_order: u64,
    /// Components sorted by code, with their vertex sets and chosen roots.
    components: Vec<(Vec<VertexId>, ComponentCode)>,
}

fn canonize(e: &Embedding, guard: &SizeGuard) -> Result<Canonized, CanonError> {
    guard.check(e.graph())?;
    let mut walker = Walker::new(e);
    let mut components: Vec<(Vec<VertexId>, ComponentCode)> = root_classes(e)
        .into_iter()
        .map(|(comp, roots)| {
            let code = canonize_component(&mut walker, &comp, &roots);
            (comp, code)
        })
        .collect();
    components.sort_by(|a, b| a.1.code.cmp(&b.1.code));

    let g = e.graph();
    let mut bytes = Vec::new();
    for x in [g.vertex_count() as u32, g.edge_count() as u32] {
        bytes.extend_from_slice(&x.to_be_bytes());
    }
    let mut group_order = 1u64;
    let mut run = 0u64;
    for (i, (_, c)) in components.iter().enumerate() {
        bytes.extend_from_slice(&(c.code.len() as u32).to_be_bytes());
        for x in &c.code {
            bytes.extend_from_slice(&x.to_be_bytes());
        }
        group_order *= c.ties;
        run = if i > 0 && components[i - 1].1.code == c.code {
            run + 1
        } else {
            1
        };
        // identical components can be permuted among themselves
        group_order *= run;
    }
    Ok(Canonized {
        key: CanonicalKey(bytes),
        group_order,
        components,
    })
}

pub fn canonical_key(e: &Embedding) -> Result<CanonicalKey, CanonError> {
    canonical_key_with(e, &SizeGuard::default())
}

pub fn canonical_key_with(e: &Embedding, guard: &SizeGuard) -> Result<CanonicalKey, CanonError> {
    canonize(e, guard).map(|c| c.key)
}

/// Key identifying an embedding with its mirror image.
pub fn equivalence_key(e: &Embedding) -> Result<CanonicalKey, CanonError> {
    Ok(canonical_key(e)?.min(canonical_key(&e.reverse())?))
}

/// Number of rotation-preserving automorphisms.
pub fn automorphism_group_order(e: &Embedding) -> Result<u64, CanonError> {
    canonize(e, &SizeGuard::default()).map(|c| c.group_order)
}

pub fn chirality(e: &Embedding) -> Result<Chirality, CanonError> {
    let key = canonical_key(e)?;
    chirality_given_key(e, &key)
}

fn chirality_given_key(e: &Embedding, key: &CanonicalKey) -> Result<Chirality, CanonError> {
    Ok(if canonical_key(&e.reverse())? == *key {
        Chirality::NonOrientable
    } else {
        Chirality::Orientable
    })
}

/// Returns a verified witness mapping `a` onto `b`, if they are isomorphic.
pub fn are_isomorphic(a: &Embedding, b: &Embedding) -> Result<Option<IsoWitness>, CanonError> {
    let guard = SizeGuard::default();
    let ca = canonize(a, &guard)?;
    let cb = canonize(b, &guard)?;
    if ca.key != cb.key {
        return Ok(None);
    }
    let mut vertex_map = vec![0; a.vertex_count()];
    let mut edge_map = vec![0; a.edge_count()];
    let mut wa = Walker::new(a);
    let mut wb = Walker::new(b);
    for ((comp_a, code_a), (comp_b, code_b)) in ca.components.iter().zip(&cb.components) {
        if code_a.root == UNSET {
            vertex_map[comp_a[0] - 1] = comp_b[0];
            continue;
        }
        let na = wa.numbering(code_a.root);
        let nb = wb.numbering(code_b.root);
        let mut by_number = vec![0u32; nb.len()];
        let base = nb.iter().map(|&(_, n)| n).min().unwrap_or(0);
        for &(d, n) in &nb {
            by_number[(n - base) as usize] = d;
        }
        let base_a = na.iter().map(|&(_, n)| n).min().unwrap_or(0);
        for &(d, n) in &na {
            let da = Dart::from_index(d as usize);
            let db = Dart::from_index(by_number[(n - base_a) as usize] as usize);
            vertex_map[a.graph().tail(da) - 1] = b.graph().tail(db);
            edge_map[da.edge() - 1] = db.edge();
        }
    }
    let witness = IsoWitness {
        vertex_map,
        edge_map,
    };
    let image = a.relabel(&witness.vertex_map, &witness.edge_map);
    assert!(
        image.as_ref() == Ok(b),
        "canonical codes agree but the induced map is not an isomorphism"
    );
    Ok(Some(witness))
}

/// Number of (vertex map, edge map) automorphisms of a multigraph.
pub fn graph_automorphism_count(g: &MultiGraph) -> Result<u64, CanonError> {
    SizeGuard::default().check(g)?;
    let n = g.vertex_count();
    let mult = g.multiplicity_matrix();
    let deg = g.degrees();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        mult: &[Vec<u32>],
        deg: &[usize],
        image: &mut [usize],
        used: &mut [bool],
    ) -> u64 {
        let n = image.len();
        if k == n {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            if used[c] || deg[c] != deg[k] {
                continue;
            }
            if (0..k).any(|j| mult[k][j] != mult[c][image[j]]) {
                continue;
            }
            image[k] = c;
            used[c] = true;
            total += extend(k + 1, mult, deg, image, used);
            used[c] = false;
        }
        total
    }
    let vertex_maps = extend(0, &mult, &deg, &mut image, &mut used);
    let mut edge_perms = 1u64;
    for (u, row) in mult.iter().enumerate() {
        for &m in &row[u + 1..] {
            edge_perms *= (1..=m as u64).product::<u64>();
        }
    }
    Ok(vertex_maps * edge_perms)
}

/// Whether two multigraphs are isomorphic (ignoring edge ids).
pub fn graphs_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let ma = a.multiplicity_matrix();
    let mb = b.multiplicity_matrix();
    let dega = a.degrees();
    let degb = b.degrees();
    let n = a.vertex_count();
    fn extend(
        k: usize,
        ma: &[Vec<u32>],
        mb: &[Vec<u32>],
        dega: &[usize],
        degb: &[usize],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = image.len();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] || dega[k] != degb[c] {
                continue;
            }
            if (0..k).any(|j| ma[k][j] != mb[c][image[j]]) {
                continue;
            }
            image[k] = c;
            used[c] = true;
            if extend(k + 1, ma, mb, dega, degb, image, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    extend(
        0,
        &ma,
        &mb,
        &dega,
        &degb,
        &mut vec![0; n],
        &mut vec![false; n],
    )
}

/// Builds the class record for one embedding whose key is already known.
pub fn classify_with_key(e: &Embedding, key: CanonicalKey) -> Result<EmbeddingClass, CanonError> {
    let faces = e.trace_faces();
    let mut face_degrees = faces.face_lengths();
    face_degrees.sort_unstable();
    Ok(EmbeddingClass {
        chirality: chirality_given_key(e, &canonical_key(e)?)?,
        group_order: automorphism_group_order(e)?,
        canonical_key: key,
        representative: e.clone(),
        genus: faces.stats.genus,
        face_degrees,
        members: 1,
    })
}

/// Class key of `e` under `mode`.
pub fn mode_key(e: &Embedding, mode: DedupMode) -> Result<CanonicalKey, CanonError> {
    match mode {
        DedupMode::Iso => canonical_key(e),
        DedupMode::Equivalence => equivalence_key(e),
    }
}

/// Groups embeddings into classes, sorted by key. The representative of a
/// class is its first member in input order.
pub fn dedup<'a>(
    embeddings: impl IntoIterator<Item = &'a Embedding>,
    mode: DedupMode,
) -> Result<Vec<EmbeddingClass>, CanonError> {
    let mut classes: BTreeMap<CanonicalKey, (&Embedding, usize)> = BTreeMap::new();
    for e in embeddings {
        let key = mode_key(e, mode)?;
        classes.entry(key).or_insert((e, 0)).1 += 1;
    }
    classes
        .into_iter()
        .map(|(key, (rep, members))| {
            let mut class = classify_with_key(rep, key)?;
            class.members = members;
            Ok(class)
        })
        .collect()
}

/// `(orientable, non-orientable)` class counts.
pub fn chirality_counts(classes: &[EmbeddingClass]) -> (usize, usize) {
    let or = classes
        .iter()
        .filter(|c| c.chirality == Chirality::Orientable)
        .count();
    (or, classes.len() - or)
}

/// Multiset of group orders as `(order, count)` pairs, ascending by order.
pub fn group_order_multiset(classes: &[EmbeddingClass]) -> Vec<(u64, usize)> {
    let mut m: BTreeMap<u64, usize> = BTreeMap::new();
    for c in classes {
        *m.entry(c.group_order).or_default() += 1;
    }
    m.into_iter().collect()
}
