//! Named verification suites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rotsys_core::canon::{self, chirality_counts, equivalence_key, mode_key};
use rotsys_core::chord::theta5_chord_analysis;
use rotsys_core::enumerate::rotation_space_size;
use rotsys_core::pipeline::{labelled_theta5, pipeline_k33, pipeline_k5};
use rotsys_core::polygon::WordError;
use rotsys_core::{
    boundary_word, build_graph, exhaustive_classes, genus_distribution, graph_automorphism_count,
    surface_from_word, theta_embeddings, words_equivalent, CanonError, CanonicalKey, Chirality,
    DedupMode, EmbeddingClass, EnumError, Filter, GraphSpec, PolygonWord, ScanConfig, SurfaceType,
};
use thiserror::Error;

use crate::appendix::{parse_appendix_a, parse_appendix_b, AppendixError, APPENDIX_A, APPENDIX_B};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; expected one of core, appendixA, appendixB, k33, torus-table, theta-question, all")]
    UnknownSuite(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("vendored table: {0}")]
    Appendix(#[from] AppendixError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Core,
    AppendixA,
    AppendixB,
    K33,
    TorusTable,
    ThetaQuestion,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Core,
        Suite::AppendixA,
        Suite::AppendixB,
        Suite::K33,
        Suite::TorusTable,
        Suite::ThetaQuestion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::K33 => "k33",
            Suite::TorusTable => "torus-table",
            Suite::ThetaQuestion => "theta-question",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Suite, SuiteError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub include_slow: bool,
    pub config: ScanConfig,
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> Result<VerificationReport, SuiteError> {
    let mut report = VerificationReport::new(suite.name());
    match suite {
        Suite::Core => core_suite(&mut report, options)?,
        Suite::AppendixA => appendix_a_suite(&mut report, options)?,
        Suite::AppendixB => appendix_b_suite(&mut report, options)?,
        Suite::K33 => k33_suite(&mut report, options)?,
        Suite::TorusTable => torus_suite(&mut report, options)?,
        Suite::ThetaQuestion => theta_suite(&mut report, options)?,
    }
    Ok(report)
}

/// `20^1,4^1,2^3,1^1`: group orders, descending, with multiplicities.
pub fn group_string(classes: &[EmbeddingClass]) -> String {
    group_string_of(classes.iter().map(|c| c.group_order))
}

fn group_string_of(orders: impl IntoIterator<Item = u64>) -> String {
    let mut m: BTreeMap<u64, usize> = BTreeMap::new();
    for o in orders {
        *m.entry(o).or_default() += 1;
    }
    let parts: Vec<String> = m.iter().rev().map(|(o, c)| format!("{o}^{c}")).collect();
    parts.join(",")
}

/// `14+17`: orientable plus non-orientable class counts.
pub fn split_string(classes: &[EmbeddingClass]) -> String {
    let (or, non) = chirality_counts(classes);
    format!("{or}+{non}")
}

fn key_set(classes: &[EmbeddingClass]) -> BTreeSet<CanonicalKey> {
    classes.iter().map(|c| c.canonical_key.clone()).collect()
}

fn same_set(a: &BTreeSet<CanonicalKey>, b: &BTreeSet<CanonicalKey>) -> &'static str {
    if a == b {
        "identical"
    } else {
        "different"
    }
}

fn graph(spec: &str) -> rotsys_core::MultiGraph {
    let spec: GraphSpec = spec.parse().expect("built-in graph spec");
    build_graph(&spec).expect("built-in graph")
}

fn surface_string(s: SurfaceType) -> String {
    match s {
        SurfaceType::Orientable { genus } => format!("orientable genus {genus}"),
        SurfaceType::NonOrientable {
            euler_characteristic,
        } => format!("non-orientable chi {euler_characteristic}"),
    }
}

/// Published polygon word of the one-face K₃,₃ embedding.
pub const K33_WORD: &str = "a+b+c+d+e+f+b-g+h+c-f-i+g-a-d-h-i-e-";

fn core_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    let cfg = &o.config;
    let theta = theta_embeddings(5, 2, DedupMode::Equivalence, cfg)?;
    r.check("theta5 genus 2 classes", 3, theta.len());
    r.check("theta5 genus 2 or+non", "0+3", split_string(&theta));
    r.check(
        "theta5 genus 2 group orders",
        "10^1,5^1,2^1",
        group_string(&theta),
    );
    let labelled: BTreeSet<CanonicalKey> = labelled_theta5()
        .iter()
        .map(equivalence_key)
        .collect::<Result<_, _>>()?;
    r.check(
        "theta5 labelled embeddings cover the classes",
        "identical",
        same_set(&labelled, &key_set(&theta)),
    );

    let k5 = genus_distribution(&graph("K5"), cfg)?;
    r.check(
        "K5 genus distribution",
        "1:6 2:31 3:13",
        dist_string(&k5.counts()),
    );
    r.check("K5 total classes", 50, k5.total_classes());
    let k33 = genus_distribution(&graph("K3,3"), cfg)?;
    r.check(
        "K3,3 genus distribution",
        "1:2 2:1",
        dist_string(&k33.counts()),
    );
    r.check("K3,3 genus spectrum", "1,2", join(k33.spectrum()));

    let torus: PolygonWord = "a+b+a-b-".parse().expect("literal word");
    r.check(
        "word a+b+a-b-",
        "orientable genus 1",
        surface_string(surface_from_word(&torus)),
    );
    let double: PolygonWord = "a+b+a-b-c+d+c-d-".parse().expect("literal word");
    r.check(
        "word a+b+a-b-c+d+c-d-",
        "orientable genus 2",
        surface_string(surface_from_word(&double)),
    );
    r.check("word a+b+a-b-c+d+c-d- corners", 1, double.corner_classes());
    let words: Vec<PolygonWord> = labelled_theta5()
        .iter()
        .map(|e| boundary_word(e).expect("one face"))
        .collect();
    for (i, w) in words.iter().enumerate() {
        r.check(
            &format!("theta5#{} word {w}", i + 1),
            "orientable genus 2, 2 corners",
            format!(
                "{}, {} corners",
                surface_string(surface_from_word(w)),
                w.corner_classes()
            ),
        );
    }
    r.check(
        "theta5#2 and theta5#3 words equivalent",
        false,
        words_equivalent(&words[1], &words[2]),
    );

    let chords = theta5_chord_analysis(cfg)?;
    r.check(
        "theta5 normalized chord sequences",
        5,
        chords.labelled_sequences.len(),
    );
    r.check(
        "theta5 chord diagrams up to symmetry",
        4,
        chords.canonical.len(),
    );
    r.check("theta5 chord diagrams realized", 3, chords.realized.len());
    let unrealized: Vec<String> = chords
        .unrealized()
        .iter()
        .map(|d| join(d.chord_lengths()))
        .collect();
    r.check(
        "theta5 unrealized chord lengths",
        "3,3,5,5,5",
        unrealized.join(" "),
    );

    let k2 = graph("K2");
    r.check("K2 graph automorphisms", 2, graph_automorphism_count(&k2)?);
    r.check(
        "K5 graph automorphisms",
        120,
        graph_automorphism_count(&graph("K5"))?,
    );
    r.check(
        "K3,3 graph automorphisms",
        72,
        graph_automorphism_count(&graph("K3,3"))?,
    );
    Ok(())
}

fn dist_string(counts: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = counts.iter().map(|(g, c)| format!("{g}:{c}")).collect();
    parts.join(" ")
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn tag_rows(
    r: &mut VerificationReport,
    item: &str,
    tagged: impl Iterator<Item = (String, Chirality, Chirality)>,
) {
    let mut total = 0;
    let mut mismatches = Vec::new();
    for (name, tag, computed) in tagged {
        total += 1;
        if tag != computed {
            mismatches.push(format!("{name} tagged {tag} computed {computed}"));
        }
    }
    // recomputation is trusted over the printed tag
    if mismatches.is_empty() {
        r.check(
            item,
            format!("{total} of {total}"),
            format!("{total} of {total}"),
        );
    } else {
        r.info(
            item,
            format!("{total} of {total}"),
            format!(
                "{} of {total}; {}",
                total - mismatches.len(),
                mismatches.join("; ")
            ),
        );
    }
}

fn appendix_a_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    let cfg = &o.config;
    let entries = parse_appendix_a(APPENDIX_A)?;
    r.check("appendix A systems parsed", 31, entries.len());
    let good = entries
        .iter()
        .filter(|e| {
            let s = e.embedding.surface_stats();
            s.genus == 2 && s.faces == 3
        })
        .count();
    r.check("appendix A systems of genus 2 with 3 faces", 31, good);
    let listed = canon::dedup(entries.iter().map(|e| &e.embedding), DedupMode::Equivalence)?;
    r.check("appendix A pairwise non-equivalent", 31, listed.len());
    let computed: Vec<Chirality> = entries
        .iter()
        .map(|e| canon::chirality(&e.embedding))
        .collect::<Result<_, _>>()?;
    tag_rows(
        r,
        "appendix A chirality tags match",
        entries
            .iter()
            .zip(&computed)
            .map(|(e, &c)| (e.name.clone(), e.tag, c)),
    );
    r.check("appendix A or+non", "14+17", split_string(&listed));
    r.check(
        "appendix A group orders",
        "5^1,4^2,2^1,1^27",
        group_string(&listed),
    );

    let pipe = pipeline_k5(cfg)?;
    let stage = |name: &str| pipe.stage(name).expect("pipeline stage");
    let theta = stage("theta5");
    r.check("pipeline theta5 classes", 3, theta.classes.len());
    let t = stage("t123");
    r.check("pipeline T1,2,3 iso classes", 8, t.iso.len());
    r.check("pipeline T1,2,3 classes", 6, t.classes.len());
    r.check("pipeline T1,2,3 or+non", "2+4", split_string(&t.classes));
    let k4 = stage("k4plus");
    r.check("pipeline K4+ classes", 5, k4.classes.len());
    r.check("pipeline K4+ or+non", "2+3", split_string(&k4.classes));
    let w4 = stage("w4");
    r.check("pipeline W4 classes", 4, w4.classes.len());
    r.check("pipeline W4 or+non", "1+3", split_string(&w4.classes));
    let uv = stage("k5-uv");
    let sources: Vec<String> = uv.sources.iter().map(|(_, n)| n.to_string()).collect();
    r.check("pipeline K5-uv candidates", "72+120", sources.join("+"));
    r.check("pipeline K5-uv iso classes", 60, uv.iso.len());
    r.info(
        "pipeline K5-uv iso classes among candidates only",
        "",
        uv.direct_iso,
    );
    r.check("pipeline K5-uv classes", 39, uv.classes.len());
    r.check("pipeline K5-uv or+non", "21+18", split_string(&uv.classes));
    let k5 = stage("k5");
    r.check("pipeline K5 iso classes", 45, k5.iso.len());
    r.info(
        "pipeline K5 iso classes among candidates only",
        "",
        k5.direct_iso,
    );
    r.check("pipeline K5 classes", 31, k5.classes.len());
    r.check("pipeline K5 or+non", "14+17", split_string(&k5.classes));
    r.check(
        "pipeline K5 group orders",
        "5^1,4^2,2^1,1^27",
        group_string(&k5.classes),
    );
    let order5: Vec<String> = k5
        .classes
        .iter()
        .filter(|c| c.group_order == 5)
        .map(|c| c.chirality.to_string())
        .collect();
    r.check(
        "pipeline K5 order-5 class chirality",
        "non",
        order5.join(","),
    );

    let k5g = graph("K5");
    let exhaustive = exhaustive_classes(&k5g, Filter::genus(2), DedupMode::Equivalence, cfg)?;
    let exhaustive_iso = exhaustive_classes(&k5g, Filter::genus(2), DedupMode::Iso, cfg)?;
    r.check(
        "K5 genus 2 pipeline classes vs exhaustive",
        "identical",
        same_set(&key_set(k5.classes.as_slice()), &key_set(&exhaustive)),
    );
    r.check(
        "K5 genus 2 pipeline iso classes vs exhaustive",
        "identical",
        same_set(&key_set(&k5.iso), &key_set(&exhaustive_iso)),
    );
    r.check(
        "appendix A classes vs exhaustive",
        "identical",
        same_set(&key_set(&listed), &key_set(&exhaustive)),
    );
    Ok(())
}

fn appendix_b_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    let entries = parse_appendix_b(APPENDIX_B)?;
    r.check("appendix B systems parsed", 13, entries.len());
    let one_face = entries
        .iter()
        .filter(|e| e.embedding.face_count() == 1)
        .count();
    r.check("appendix B systems with one face", 13, one_face);
    let genus3 = entries.iter().filter(|e| e.embedding.genus() == 3).count();
    r.check("appendix B systems of genus 3", 13, genus3);
    let exhaustive = exhaustive_classes(
        &graph("K5"),
        Filter::genus(3),
        DedupMode::Equivalence,
        &o.config,
    )?;
    r.check("K5 genus 3 classes", 13, exhaustive.len());
    r.check("K5 genus 3 or+non", "11+2", split_string(&exhaustive));
    let one = exhaustive
        .iter()
        .filter(|c| c.face_degrees.len() == 1)
        .count();
    r.check("K5 genus 3 classes with one face", 13, one);
    let listed = canon::dedup(entries.iter().map(|e| &e.embedding), DedupMode::Equivalence)?;
    r.check(
        "appendix B classes vs exhaustive",
        "identical",
        same_set(&key_set(&listed), &key_set(&exhaustive)),
    );
    let by_key: BTreeMap<&CanonicalKey, Chirality> = exhaustive
        .iter()
        .map(|c| (&c.canonical_key, c.chirality))
        .collect();
    let mut tagged = Vec::new();
    for e in &entries {
        let key = mode_key(&e.embedding, DedupMode::Equivalence)?;
        let computed = match by_key.get(&key) {
            Some(&c) => c,
            None => canon::chirality(&e.embedding)?,
        };
        tagged.push((e.name.clone(), e.tag, computed));
    }
    tag_rows(r, "appendix B chirality tags match", tagged.into_iter());
    Ok(())
}

fn k33_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    let g = graph("K3,3");
    let dist = genus_distribution(&g, &o.config)?;
    r.check(
        "K3,3 genus distribution",
        "1:2 2:1",
        dist_string(&dist.counts()),
    );
    let exhaustive = exhaustive_classes(&g, Filter::genus(2), DedupMode::Equivalence, &o.config)?;
    r.check("K3,3 genus 2 classes", 1, exhaustive.len());
    r.check(
        "K3,3 genus 2 chirality",
        "non",
        exhaustive
            .first()
            .map_or("none".into(), |c| c.chirality.to_string()),
    );
    let pipe = pipeline_k33()?;
    r.info(
        "K3,3 labelled completions of theta5",
        "",
        pipe.completions.len(),
    );
    r.check("K3,3 pipeline iso classes", 1, pipe.iso.len());
    r.check("K3,3 pipeline classes", 1, pipe.classes.len());
    r.check(
        "K3,3 pipeline key vs exhaustive",
        "identical",
        same_set(&key_set(&pipe.classes), &key_set(&exhaustive)),
    );
    r.check(
        "theta5#1 completions with CD on edge 3",
        4,
        pipe.count_with_label(1, 3, "CD"),
    );
    // published as an upper bound; the count found is reported as is
    r.info(
        "theta5#3 completions with CD on edge 3",
        "at most 3",
        pipe.count_with_label(3, 3, "CD"),
    );
    r.info(
        "theta5#2 completions with CD on edge 3",
        "",
        pipe.count_with_label(2, 3, "CD"),
    );
    let rep = &exhaustive[0].representative;
    let word = boundary_word(rep)?;
    let published: PolygonWord = K33_WORD.parse().expect("literal word");
    r.check(
        "K3,3 word equivalent to the published 18-gon",
        true,
        words_equivalent(&word, &published),
    );
    r.check(
        "K3,3 word surface",
        "orientable genus 2, 6 corners",
        format!(
            "{}, {} corners",
            surface_string(surface_from_word(&word)),
            word.corner_classes()
        ),
    );
    Ok(())
}

/// One torus row: graph, `#emb`, `or`, `non`, graph group order, group
/// orders as published.
struct TorusRow {
    name: &'static str,
    spec: &'static str,
    classes: usize,
    orientable: usize,
    non_orientable: usize,
    graph_group: u64,
    groups: &'static str,
    slow: bool,
}

const fn row(
    name: &'static str,
    spec: &'static str,
    counts: (usize, usize, usize),
    graph_group: u64,
    groups: &'static str,
) -> TorusRow {
    TorusRow {
        name,
        spec,
        classes: counts.0,
        orientable: counts.1,
        non_orientable: counts.2,
        graph_group,
        groups,
        slow: false,
    }
}

const fn slow(r: TorusRow) -> TorusRow {
    TorusRow { slow: true, ..r }
}

pub const TORUS_ROW_COUNT: usize = TORUS_ROWS.len();

const TORUS_ROWS: [TorusRow; 27] = [
    row("K4", "complete(4)", (2, 0, 2), 24, "4^1,3^1"),
    row("K5", "complete(5)", (6, 3, 3), 120, "20^1,4^1,2^3,1^1"),
    row("K3,3", "bipartite(3,3)", (2, 0, 2), 72, "18^1,2^1"),
    row("3-prism", "prism(3)", (5, 0, 5), 12, "6^1,2^2,1^2"),
    row(
        "octahedron",
        "octahedron",
        (17, 4, 13),
        48,
        "12^1,6^1,4^3,3^1,2^6,1^5",
    ),
    slow(row("K6", "complete(6)", (4, 2, 2), 720, "6^2,2^1,1^1")),
    row("K3,4", "bipartite(3,4)", (3, 0, 3), 144, "4^1,3^1,2^1"),
    row(
        "C7(2)",
        "circulant(7,1,2)",
        (28, 23, 5),
        14,
        "14^1,2^14,1^13",
    ),
    row("K3,5", "bipartite(3,5)", (1, 0, 1), 720, "3^1"),
    row("cube", "cube", (5, 0, 5), 48, "24^1,8^2,3^1,2^1"),
    row("C8+", "circulant(8,1,4)", (5, 1, 4), 16, "2^4,1^1"),
    row("K4,4", "bipartite(4,4)", (2, 0, 2), 1152, "32^1,16^1"),
    row(
        "C8(2)",
        "circulant(8,1,2)",
        (37, 20, 17),
        16,
        "16^1,4^4,2^13,1^19",
    ),
    row("~cube", "complement(cube)", (8, 4, 4), 48, "4^2,2^5,1^1"),
    slow(row("K3,6", "bipartite(3,6)", (1, 0, 1), 4320, "18^1")),
    row(
        "C9(2)",
        "circulant(9,1,2)",
        (37, 34, 3),
        18,
        "18^1,6^1,2^19,1^16",
    ),
    row(
        "C9(3)",
        "circulant(9,1,3)",
        (6, 4, 2),
        18,
        "18^1,3^1,2^3,1^1",
    ),
    row("Petersen", "petersen", (1, 0, 1), 120, "3^1"),
    row("C10+", "circulant(10,1,5)", (6, 1, 5), 20, "10^1,2^4,1^1"),
    row("5-prism", "prism(5)", (5, 0, 5), 20, "2^3,1^2"),
    row(
        "C10(2)",
        "circulant(10,1,2)",
        (60, 42, 18),
        20,
        "20^1,4^3,2^23,1^33",
    ),
    row("C10(4)", "circulant(10,1,4)", (1, 1, 0), 320, "20^1"),
    slow(row(
        "C11(2)",
        "circulant(11,1,2)",
        (77, 74, 3),
        22,
        "22^1,2^36,1^40",
    )),
    slow(row("C11(3)", "circulant(11,1,3)", (1, 1, 0), 22, "22^1")),
    row("6-prism", "prism(6)", (9, 0, 9), 24, "12^1,4^2,2^4,1^2"),
    row("C12+", "circulant(12,1,6)", (7, 1, 6), 24, "6^1,2^4,1^2"),
    row(
        "C12(2)",
        "circulant(12,1,2)",
        (138, 110, 28),
        24,
        "24^1,8^1,6^2,4^4,2^45,1^85",
    ),
];

/// Published rows with no constructor here, listed so they show as skipped.
const UNBUILT_ROWS: [(&str, usize, &str); 3] = [
    ("icosahedron", 12, "24^12 systems over budget"),
    ("K3xK3", 7, "no constructor"),
    ("trunc(K4)", 9, "no constructor"),
];

/// Published rows whose rotation space is far over any desk budget.
const HUGE_ROWS: [(&str, &str, usize); 4] = [
    ("K7", "complete(7)", 1),
    ("~C8", "complement(circulant(8,1))", 10),
    ("~(2C4)", "complement(circulant(8,2))", 6),
    ("~(4K2)", "complement(circulant(8,4))", 1),
];

fn torus_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    for t in &TORUS_ROWS {
        let g = graph(t.spec);
        let size = rotation_space_size(&g);
        let expected = format!("{} ({}+{})", t.classes, t.orientable, t.non_orientable);
        if t.slow && !o.include_slow {
            r.skip(
                &format!("{} torus classes", t.name),
                expected,
                format!("slow row ({size} systems); use --include-slow"),
            );
            continue;
        }
        if size > o.config.budget {
            r.skip(
                &format!("{} torus classes", t.name),
                expected,
                format!("{size} systems over budget {}", o.config.budget),
            );
            continue;
        }
        let classes = exhaustive_classes(&g, Filter::genus(1), DedupMode::Equivalence, &o.config)?;
        let (or, non) = chirality_counts(&classes);
        r.check(
            &format!("{} torus classes", t.name),
            expected,
            format!("{} ({or}+{non})", classes.len()),
        );
        r.check(
            &format!("{} graph group", t.name),
            t.graph_group,
            graph_automorphism_count(&g)?,
        );
        r.check(
            &format!("{} groups", t.name),
            t.groups,
            group_string(&classes),
        );
        // the other reading of the columns, logged for comparison
        r.info(&format!("{} iso classes", t.name), t.classes, 2 * or + non);
        let doubled = group_string_of(classes.iter().map(|c| match c.chirality {
            Chirality::Orientable => c.group_order,
            Chirality::NonOrientable => 2 * c.group_order,
        }));
        r.info(
            &format!("{} groups with reflections", t.name),
            t.groups,
            doubled,
        );
    }
    for (name, spec, classes) in HUGE_ROWS {
        let size = rotation_space_size(&graph(spec));
        r.skip(
            &format!("{name} torus classes"),
            classes,
            format!("{size} systems over budget"),
        );
    }
    for (name, classes, reason) in UNBUILT_ROWS {
        r.skip(&format!("{name} torus classes"), classes, reason);
    }
    Ok(())
}

fn theta_suite(r: &mut VerificationReport, o: &SuiteOptions) -> Result<(), SuiteError> {
    let mut log = |m: usize, genus: usize, check: Option<usize>| -> Result<(), SuiteError> {
        let item = format!("theta{m} one-face genus {genus} classes");
        match theta_embeddings(m, genus, DedupMode::Equivalence, &o.config) {
            Ok(classes) => {
                let computed = format!(
                    "{} ({}) groups {}",
                    classes.len(),
                    split_string(&classes),
                    group_string(&classes)
                );
                match check {
                    Some(n) => {
                        r.check(&item, n, classes.len());
                        r.info(
                            &format!("theta{m} one-face genus {genus} detail"),
                            "",
                            computed,
                        );
                    }
                    None => r.info(&item, "open", computed),
                }
                Ok(())
            }
            Err(EnumError::BudgetExceeded { required, budget }) if check.is_none() => {
                r.skip(
                    &item,
                    "open",
                    format!("{required} systems over budget {budget}"),
                );
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    };
    log(3, 1, None)?;
    log(5, 2, Some(3))?;
    log(7, 3, None)?;
    log(9, 4, None)?;
    Ok(())
}
