//! Exhaustive enumeration of rotation systems.
//!
//! Every vertex contributes its `(deg − 1)!` cyclic orders, generated with
//! the least dart fixed in front. The product space is indexed in mixed
//! radix with vertex 1 most significant and walked with an odometer that
//! rewrites only the successor entries of vertices whose digit changed.
//! Systems passing the face-count filter are canonized and merged by key;
//! each class keeps the member with the least index, so results do not
//! depend on how the space is split among workers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::canon::{self, CanonError, CanonicalKey, Chirality, DedupMode, EmbeddingClass};
use crate::embedding::Embedding;
use crate::family::{build_graph, GraphSpec};
use crate::graph::{Dart, MultiGraph};

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;
/// Environment variable selecting the number of enumeration workers.
pub const WORKERS_ENV: &str = "ROTSYS_WORKERS";

/// Face tracing works on a bitmask of darts.
const MAX_DARTS: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("rotation space has {required} systems, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("graph has {0} darts; enumeration supports at most {MAX_DARTS}")]
    TooManyDarts(usize),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Largest rotation space that may be enumerated.
    pub budget: u128,
    pub workers: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

impl ScanConfig {
    /// Default budget; worker count from `ROTSYS_WORKERS`, else the number of
    /// available cores.
    pub fn from_env() -> ScanConfig {
        let workers = std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&w| w > 0)
            .unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|n| n.get())
                    .unwrap_or(1)
            });
        ScanConfig {
            budget: DEFAULT_BUDGET,
            workers,
        }
    }

    pub fn with_workers(self, workers: usize) -> ScanConfig {
        ScanConfig {
            workers: workers.max(1),
            ..self
        }
    }

    pub fn with_budget(self, budget: u128) -> ScanConfig {
        ScanConfig { budget, ..self }
    }
}

/// Restricts enumeration to systems of a given genus and/or face count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filter {
    pub genus: Option<usize>,
    pub faces: Option<usize>,
}

impl Filter {
    pub fn genus(g: usize) -> Filter {
        Filter {
            genus: Some(g),
            faces: None,
        }
    }

    pub fn one_face(self) -> Filter {
        Filter {
            faces: Some(1),
            ..self
        }
    }
}

/// `∏ (deg v − 1)!`, the number of rotation systems of `g`.
pub fn rotation_space_size(g: &MultiGraph) -> u128 {
    g.degrees()
        .into_iter()
        .map(|d| (1..d.max(1) as u128).product::<u128>())
        .product()
}

/// Outcome of a scan: the classes that passed the filter plus the raw count
/// of systems of every genus.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub classes: Vec<EmbeddingClass>,
    pub raw_by_genus: BTreeMap<usize, u64>,
    pub systems: u128,
}

struct Space {
    darts: usize,
    /// Per vertex: its darts and, per cyclic order, the successor of each.
    vertices: Vec<(Vec<u8>, Vec<Vec<u8>>)>,
    radix: Vec<u64>,
    size: u128,
    /// `2c − n + ε − isolated`; genus is `(base − f) / 2`.
    euler_base: usize,
}

fn cyclic_orders(darts: &[u8]) -> Vec<Vec<u8>> {
    let Some((&first, rest)) = darts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut perm = rest.to_vec();
    permutations(&mut perm, 0, &mut |p| {
        let mut succ = vec![0u8; darts.len()];
        let mut cycle = Vec::with_capacity(darts.len());
        cycle.push(first);
        cycle.extend_from_slice(p);
        for i in 0..cycle.len() {
            let at = darts.iter().position(|&d| d == cycle[i]).expect("dart");
            succ[at] = cycle[(i + 1) % cycle.len()];
        }
        out.push(succ);
    });
    out
}

/// Lexicographic permutations of `items[k..]` (items must start sorted).
fn permutations(items: &mut [u8], k: usize, visit: &mut impl FnMut(&[u8])) {
    if k + 1 >= items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        let mut next = items.to_vec();
        let x = next.remove(i);
        next.insert(k, x);
        permutations(&mut next, k + 1, visit);
    }
}

impl Space {
    fn new(g: &MultiGraph) -> Result<Space, EnumError> {
        if g.dart_count() > MAX_DARTS {
            return Err(EnumError::TooManyDarts(g.dart_count()));
        }
        let vertices: Vec<_> = g
            .vertices()
            .map(|v| {
                let darts: Vec<u8> = g.darts_at(v).iter().map(|d| d.index() as u8).collect();
                let orders = cyclic_orders(&darts);
                (darts, orders)
            })
            .collect();
        let radix = vertices.iter().map(|(_, o)| o.len() as u64).collect();
        let comps = g.components();
        let isolated = comps
            .iter()
            .filter(|c| c.len() == 1 && g.degree(c[0]) == 0)
            .count();
        Ok(Space {
            darts: g.dart_count(),
            vertices,
            radix,
            size: rotation_space_size(g),
            euler_base: 2 * comps.len() + g.edge_count() - g.vertex_count() - isolated,
        })
    }

    fn genus_of(&self, faces: usize) -> usize {
        (self.euler_base - faces) / 2
    }

    fn faces_for_genus(&self, genus: usize) -> Option<usize> {
        self.euler_base.checked_sub(2 * genus)
    }

    fn write_vertex(&self, v: usize, digit: u64, succ: &mut [u8; MAX_DARTS]) {
        let (darts, orders) = &self.vertices[v];
        for (d, s) in darts.iter().zip(&orders[digit as usize]) {
            succ[*d as usize] = *s;
        }
    }
}

#[inline]
fn count_faces(succ: &[u8; MAX_DARTS], darts: usize) -> usize {
    let mut faces = 0;
    if darts <= 64 {
        let mut open: u64 = if darts == 64 { !0 } else { (1u64 << darts) - 1 };
        while open != 0 {
            let s = open.trailing_zeros() as u8;
            let mut d = s;
            loop {
                open &= !(1u64 << d);
                d = succ[(d ^ 1) as usize];
                if d == s {
                    break;
                }
            }
            faces += 1;
        }
    } else {
        let mut open: u128 = if darts == 128 {
            !0
        } else {
            (1u128 << darts) - 1
        };
        while open != 0 {
            let s = open.trailing_zeros() as u8;
            let mut d = s;
            loop {
                open &= !(1u128 << d);
                d = succ[(d ^ 1) as usize];
                if d == s {
                    break;
                }
            }
            faces += 1;
        }
    }
    faces
}

struct Found {
    index: u128,
    embedding: Embedding,
    count: u64,
}

struct ChunkResult {
    classes: BTreeMap<CanonicalKey, Found>,
    raw_by_faces: Vec<u64>,
}

fn scan_chunk(
    g: &MultiGraph,
    space: &Space,
    lo: u128,
    hi: u128,
    faces_wanted: Option<usize>,
    mode: DedupMode,
) -> Result<ChunkResult, CanonError> {
    let mut raw_by_faces = vec![0u64; space.darts + 2];
    let mut classes: BTreeMap<CanonicalKey, Found> = BTreeMap::new();
    if lo >= hi {
        return Ok(ChunkResult {
            classes,
            raw_by_faces,
        });
    }
    let n = space.vertices.len();
    let mut digits = vec![0u64; n];
    let mut rest = lo;
    for v in (0..n).rev() {
        digits[v] = (rest % space.radix[v] as u128) as u64;
        rest /= space.radix[v] as u128;
    }
    let mut succ = [0u8; MAX_DARTS];
    for (v, &digit) in digits.iter().enumerate() {
        space.write_vertex(v, digit, &mut succ);
    }
    let mut index = lo;
    loop {
        let faces = count_faces(&succ, space.darts);
        raw_by_faces[faces] += 1;
        if faces_wanted.is_none_or(|f| f == faces) {
            let darts: Vec<Dart> = succ[..space.darts]
                .iter()
                .map(|&d| Dart::from_index(d as usize))
                .collect();
            let e = Embedding::from_successors(g.clone(), &darts);
            let key = canon::mode_key(&e, mode)?;
            classes
                .entry(key)
                .and_modify(|f| f.count += 1)
                .or_insert(Found {
                    index,
                    embedding: e,
                    count: 1,
                });
        }
        index += 1;
        if index >= hi {
            break;
        }
        let mut v = n;
        loop {
            v -= 1;
            digits[v] += 1;
            if digits[v] == space.radix[v] {
                digits[v] = 0;
                space.write_vertex(v, 0, &mut succ);
            } else {
                space.write_vertex(v, digits[v], &mut succ);
                break;
            }
        }
    }
    Ok(ChunkResult {
        classes,
        raw_by_faces,
    })
}

/// Enumerates every rotation system of `g`, keeping those that pass
/// `filter`, and returns their classes under `mode` sorted by key.
pub fn scan(
    g: &MultiGraph,
    filter: Filter,
    mode: DedupMode,
    config: &ScanConfig,
) -> Result<ScanOutcome, EnumError> {
    let space = Space::new(g)?;
    if space.size > config.budget {
        return Err(EnumError::BudgetExceeded {
            required: space.size,
            budget: config.budget,
        });
    }
    canon::SizeGuard::default().check(g)?;
    let faces_wanted = match (filter.genus, filter.faces) {
        (Some(genus), Some(f)) => match space.faces_for_genus(genus) {
            Some(x) if x == f => Some(f),
            _ => {
                return Ok(ScanOutcome {
                    classes: Vec::new(),
                    raw_by_genus: raw_genus_counts(&space, &[]),
                    systems: 0,
                })
            }
        },
        (Some(genus), None) => match space.faces_for_genus(genus) {
            Some(f) => Some(f),
            None => Some(usize::MAX),
        },
        (None, f) => f,
    };

    let workers = config.workers.max(1);
    let chunks = if space.size < 4096 {
        1
    } else {
        workers as u128
    };
    let bounds: Vec<(u128, u128)> = (0..chunks)
        .map(|i| (space.size * i / chunks, space.size * (i + 1) / chunks))
        .collect();
    let results: Vec<Result<ChunkResult, CanonError>> = if bounds.len() == 1 {
        vec![scan_chunk(g, &space, 0, space.size, faces_wanted, mode)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(lo, hi)| {
                    let space = &space;
                    s.spawn(move || scan_chunk(g, space, lo, hi, faces_wanted, mode))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };

    let mut merged: BTreeMap<CanonicalKey, Found> = BTreeMap::new();
    let mut raw_by_faces = vec![0u64; space.darts + 2];
    for r in results {
        let r = r?;
        for (f, c) in r.raw_by_faces.iter().enumerate() {
            raw_by_faces[f] += c;
        }
        for (key, found) in r.classes {
            match merged.get_mut(&key) {
                Some(existing) => {
                    existing.count += found.count;
                    if found.index < existing.index {
                        existing.index = found.index;
                        existing.embedding = found.embedding;
                    }
                }
                None => {
                    merged.insert(key, found);
                }
            }
        }
    }
    let classes = merged
        .into_iter()
        .map(|(key, found)| {
            let mut class = canon::classify_with_key(&found.embedding, key)?;
            class.members = found.count as usize;
            Ok(class)
        })
        .collect::<Result<Vec<_>, CanonError>>()?;
    Ok(ScanOutcome {
        classes,
        raw_by_genus: raw_genus_counts(&space, &raw_by_faces),
        systems: space.size,
    })
}

fn raw_genus_counts(space: &Space, raw_by_faces: &[u64]) -> BTreeMap<usize, u64> {
    raw_by_faces
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(f, &c)| (space.genus_of(f), c))
        .collect()
}

pub fn exhaustive_classes(
    g: &MultiGraph,
    filter: Filter,
    mode: DedupMode,
    config: &ScanConfig,
) -> Result<Vec<EmbeddingClass>, EnumError> {
    scan(g, filter, mode, config).map(|o| o.classes)
}

/// Class statistics for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusRecord {
    pub iso_classes: usize,
    pub equivalence_classes: usize,
    pub orientable: usize,
    pub non_orientable: usize,
    /// `(group order, number of equivalence classes)`, ascending.
    pub group_orders: Vec<(u64, usize)>,
    /// Labelled rotation systems of this genus.
    pub raw_systems: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusDistribution {
    pub records: BTreeMap<usize, GenusRecord>,
    pub total_systems: u128,
}

impl GenusDistribution {
    /// Equivalence-class counts per genus.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        self.records
            .iter()
            .map(|(&g, r)| (g, r.equivalence_classes))
            .collect()
    }

    pub fn spectrum(&self) -> Vec<usize> {
        self.records.keys().copied().collect()
    }

    pub fn total_classes(&self) -> usize {
        self.records.values().map(|r| r.equivalence_classes).sum()
    }

    pub fn report(&self) -> String {
        let mut out = String::new();
        writeln!(out, "systems\t{}", self.total_systems).unwrap();
        for (g, r) in &self.records {
            let groups: Vec<String> = r
                .group_orders
                .iter()
                .map(|(o, c)| format!("{o}^{c}"))
                .collect();
            writeln!(
                out,
                "genus {g}\tclasses {}\tor {}\tnon {}\tiso {}\traw {}\tgroups {}",
                r.equivalence_classes,
                r.orientable,
                r.non_orientable,
                r.iso_classes,
                r.raw_systems,
                groups.join(",")
            )
            .unwrap();
        }
        out
    }
}

/// Equivalence classes of every genus across the whole rotation space.
pub fn genus_distribution(
    g: &MultiGraph,
    config: &ScanConfig,
) -> Result<GenusDistribution, EnumError> {
    let outcome = scan(g, Filter::default(), DedupMode::Equivalence, config)?;
    let mut by_genus: BTreeMap<usize, Vec<EmbeddingClass>> = BTreeMap::new();
    for c in outcome.classes {
        by_genus.entry(c.genus).or_default().push(c);
    }
    let records = by_genus
        .into_iter()
        .map(|(genus, classes)| {
            let (or, non) = canon::chirality_counts(&classes);
            let record = GenusRecord {
                iso_classes: 2 * or + non,
                equivalence_classes: classes.len(),
                orientable: or,
                non_orientable: non,
                group_orders: canon::group_order_multiset(&classes),
                raw_systems: outcome.raw_by_genus.get(&genus).copied().unwrap_or(0),
            };
            (genus, record)
        })
        .collect();
    Ok(GenusDistribution {
        records,
        total_systems: outcome.systems,
    })
}

/// Classes of one-face embeddings of the theta graph with `m` parallel
/// edges on the surface of the given genus.
pub fn theta_embeddings(
    m: usize,
    genus: usize,
    mode: DedupMode,
    config: &ScanConfig,
) -> Result<Vec<EmbeddingClass>, EnumError> {
    let g = build_graph(&GraphSpec::Theta(m)).expect("theta graphs need m >= 1");
    exhaustive_classes(&g, Filter::genus(genus).one_face(), mode, config)
}

/// Stable text rendering of a class list, one line per class.
pub fn describe_classes(classes: &[EmbeddingClass]) -> String {
    let mut out = String::new();
    for c in classes {
        let rot: Vec<String> = c
            .representative
            .edge_rotations()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        writeln!(
            out,
            "{}\tgenus {}\tfaces {:?}\taut {}\t{}\tmembers {}\trot [{}]",
            c.canonical_key.to_hex(),
            c.genus,
            c.face_degrees,
            c.group_order,
            c.chirality,
            c.members,
            rot.join(" | ")
        )
        .unwrap();
    }
    out
}

/// Labelled systems an equivalence class accounts for: `|Aut G| / |Aut e|`
/// per isomorphism class, doubled for chiral pairs.
pub fn labelled_count(class: &EmbeddingClass, graph_group: u64) -> u64 {
    let per_iso = graph_group / class.group_order;
    match class.chirality {
        Chirality::Orientable => 2 * per_iso,
        Chirality::NonOrientable => per_iso,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(spec: GraphSpec) -> MultiGraph {
        build_graph(&spec).unwrap()
    }

    #[test]
    fn cyclic_orders_are_distinct_and_complete() {
        let orders = cyclic_orders(&[0, 3, 5, 7]);
        assert_eq!(orders.len(), 6);
        let mut sorted = orders.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert_eq!(cyclic_orders(&[4]), vec![vec![4]]);
    }

    #[test]
    fn space_sizes() {
        assert_eq!(rotation_space_size(&graph(GraphSpec::Complete(5))), 7776);
        assert_eq!(
            rotation_space_size(&graph(GraphSpec::CompleteBipartite(3, 3))),
            64
        );
        assert_eq!(rotation_space_size(&graph(GraphSpec::Theta(7))), 518_400);
    }

    #[test]
    fn theta_counts() {
        let cfg = ScanConfig::default();
        assert_eq!(
            theta_embeddings(3, 1, DedupMode::Equivalence, &cfg)
                .unwrap()
                .len(),
            1
        );
        let t5 = theta_embeddings(5, 2, DedupMode::Iso, &cfg).unwrap();
        assert_eq!(t5.len(), 3);
        let mut orders: Vec<u64> = t5.iter().map(|c| c.group_order).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 5, 10]);
    }

    #[test]
    fn k2_distribution() {
        let d = genus_distribution(&graph(GraphSpec::Complete(2)), &ScanConfig::default()).unwrap();
        assert_eq!(d.counts(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn k33_distribution_and_raw_counts() {
        let g = graph(GraphSpec::CompleteBipartite(3, 3));
        let d = genus_distribution(&g, &ScanConfig::default()).unwrap();
        assert_eq!(d.counts(), BTreeMap::from([(1, 2), (2, 1)]));
        let raw: u64 = d.records.values().map(|r| r.raw_systems).sum();
        assert_eq!(raw as u128, d.total_systems);
    }

    #[test]
    fn budget_is_enforced() {
        let g = graph(GraphSpec::Complete(5));
        let cfg = ScanConfig::default().with_budget(1000);
        assert_eq!(
            exhaustive_classes(&g, Filter::default(), DedupMode::Iso, &cfg).unwrap_err(),
            EnumError::BudgetExceeded {
                required: 7776,
                budget: 1000
            }
        );
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = graph(GraphSpec::Complete(5));
        let one = ScanConfig::default();
        let four = ScanConfig::default().with_workers(4);
        let a = exhaustive_classes(&g, Filter::genus(2), DedupMode::Equivalence, &one).unwrap();
        let b = exhaustive_classes(&g, Filter::genus(2), DedupMode::Equivalence, &four).unwrap();
        assert_eq!(describe_classes(&a), describe_classes(&b));
    }
}
