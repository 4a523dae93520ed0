use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotsys_core::canon::{are_isomorphic, equivalence_key, graph_automorphism_count};
use rotsys_core::chord::face_pattern;
use rotsys_core::enumerate::{describe_classes, scan};
use rotsys_core::polygon::Sign;
use rotsys_core::surgery::{
    add_edge_in_face, contract_edge, delete_edge, split_specs, split_vertex, subdivide_edge,
};
use rotsys_core::{
    automorphism_group_order, boundary_word, canonical_key, chirality, surface_from_word,
    words_equivalent, DedupMode, Embedding, Filter, MultiGraph, PolygonWord, ScanConfig,
    SurfaceType,
};

/// Connected loopless multigraph: a random tree plus extra edges, with
/// rotations shuffled by `seed`.
fn embedding_strategy() -> impl Strategy<Value = Embedding> {
    (2usize..=6)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec((0..n, 1..n), 0..=6),
                any::<u64>(),
            )
        })
        .prop_map(|(n, parents, extra, seed)| {
            let mut pairs: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1) + 1, i + 2))
                .collect();
            // offset in 1..n guarantees a different endpoint
            pairs.extend(extra.iter().map(|&(u, off)| (u + 1, (u + off) % n + 1)));
            let edges = pairs.iter().enumerate().map(|(i, &(u, v))| (i + 1, u, v));
            let g = MultiGraph::from_numbered_edges(n, edges).unwrap();
            let mut rot = vec![Vec::new(); n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                rot[u - 1].push(i + 1);
                rot[v - 1].push(i + 1);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for r in &mut rot {
                r.shuffle(&mut rng);
            }
            Embedding::from_edge_rotations(g, rot).unwrap()
        })
}

fn relabelled(e: &Embedding, seed: u64) -> Embedding {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vmap: Vec<usize> = (1..=e.vertex_count()).collect();
    let mut emap: Vec<usize> = (1..=e.edge_count()).collect();
    vmap.shuffle(&mut rng);
    emap.shuffle(&mut rng);
    e.relabel(&vmap, &emap).unwrap()
}

/// Deletes edges between distinct faces until one face is left. The genus
/// is unchanged and the graph stays connected.
fn one_face(mut e: Embedding) -> Embedding {
    loop {
        let next = (1..=e.edge_count()).find_map(|x| delete_edge(&e, x).ok());
        match next {
            Some(d) => e = d.embedding,
            None => return e,
        }
    }
}

/// Random word in which every letter occurs twice.
fn word_strategy() -> impl Strategy<Value = PolygonWord> {
    (1u32..=6)
        .prop_flat_map(|k| {
            (
                Just(k),
                any::<u64>(),
                proptest::collection::vec(any::<bool>(), 2 * k as usize),
            )
        })
        .prop_map(|(k, seed, signs)| {
            let mut letters: Vec<u32> = (1..=k).flat_map(|l| [l, l]).collect();
            letters.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let sides = letters
                .into_iter()
                .zip(signs)
                .map(|(l, s)| (l, if s { Sign::Plus } else { Sign::Minus }))
                .collect();
            PolygonWord::new(sides).unwrap()
        })
}

/// Rotation, reflection and renaming with sign flips, driven by `seed`.
fn disguise(w: &PolygonWord, seed: u64) -> PolygonWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sides = w.sides().to_vec();
    let n = sides.len();
    sides.rotate_left(seed as usize % n.max(1));
    if seed & 1 == 1 {
        sides = sides
            .into_iter()
            .rev()
            .map(|(l, s)| (l, s.flip()))
            .collect();
    }
    let mut letters: Vec<u32> = sides.iter().map(|&(l, _)| l).collect();
    letters.sort_unstable();
    letters.dedup();
    let k = letters.len() as u32;
    let mut names: Vec<u32> = (1..=k).map(|l| l + 10 * (seed % 3 + 1) as u32).collect();
    names.shuffle(&mut rng);
    let flips: Vec<bool> = (0..k).map(|i| (seed >> (i + 1)) & 1 == 1).collect();
    let sides = sides
        .into_iter()
        .map(|(l, s)| {
            let i = letters.binary_search(&l).unwrap();
            (names[i], if flips[i] { s.flip() } else { s })
        })
        .collect();
    PolygonWord::new(sides).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn faces_partition_the_darts(e in embedding_strategy()) {
        let faces = e.trace_faces();
        let total: usize = faces.face_lengths().iter().sum();
        prop_assert_eq!(total, 2 * e.edge_count());
        let chi = e.vertex_count() as i64 - e.edge_count() as i64 + faces.faces.len() as i64;
        prop_assert_eq!(2 - chi, 2 * e.genus() as i64);
        let mut a = faces.face_lengths();
        let mut b = e.reverse().trace_faces().face_lengths();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn keys_ignore_labels(e in embedding_strategy(), seed in any::<u64>()) {
        let r = relabelled(&e, seed);
        prop_assert_eq!(canonical_key(&e).unwrap(), canonical_key(&r).unwrap());
        prop_assert_eq!(equivalence_key(&e).unwrap(), equivalence_key(&r.reverse()).unwrap());
        prop_assert_eq!(
            automorphism_group_order(&e).unwrap(),
            automorphism_group_order(&r).unwrap()
        );
        let witness = are_isomorphic(&e, &r).unwrap().expect("relabelled copy is isomorphic");
        prop_assert_eq!(witness.apply(&e), r);
    }

    #[test]
    fn chirality_and_group_order_are_consistent(e in embedding_strategy()) {
        prop_assert_eq!(chirality(&e).unwrap(), chirality(&e.reverse()).unwrap());
        let group = automorphism_group_order(&e).unwrap();
        let graph_group = graph_automorphism_count(e.graph()).unwrap();
        prop_assert_eq!(graph_group % group, 0);
    }

    #[test]
    fn split_then_contract_is_identity(e in embedding_strategy(), pick in any::<prop::sample::Index>(), id in any::<prop::sample::Index>()) {
        let specs: Vec<_> = e.graph().vertices().flat_map(|v| split_specs(&e, v)).collect();
        prop_assume!(!specs.is_empty());
        let mut spec = *pick.get(&specs);
        spec.new_edge_id = id.index(e.edge_count() + 1) + 1;
        let split = split_vertex(&e, spec).unwrap();
        prop_assert_eq!(split.genus(), e.genus());
        prop_assert_eq!(contract_edge(&split, spec.new_edge_id).unwrap(), e);
    }

    #[test]
    fn delete_then_insert_is_identity(e in embedding_strategy(), pick in any::<prop::sample::Index>()) {
        let edge = pick.index(e.edge_count()) + 1;
        if let Ok(d) = delete_edge(&e, edge) {
            prop_assert_eq!(d.embedding.genus(), e.genus());
            prop_assert_eq!(d.embedding.face_count() + 1, e.face_count());
            let back = add_edge_in_face(&d.embedding, d.corners.0, d.corners.1, d.edge_id).unwrap();
            prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn subdivision_keeps_the_surface(e in embedding_strategy(), pick in any::<prop::sample::Index>()) {
        let edge = pick.index(e.edge_count()) + 1;
        let s = subdivide_edge(&e, edge).unwrap();
        prop_assert_eq!(s.genus(), e.genus());
        prop_assert_eq!(s.face_count(), e.face_count());
        prop_assert_eq!(contract_edge(&s, s.edge_count()).unwrap(), e);
    }

    #[test]
    fn one_face_words_classify_by_genus(e in embedding_strategy(), seed in any::<u64>()) {
        let e = one_face(e);
        prop_assert_eq!(e.face_count(), 1);
        let w = boundary_word(&e).unwrap();
        prop_assert_eq!(surface_from_word(&w), SurfaceType::Orientable { genus: e.genus() });
        let r = relabelled(&e, seed);
        prop_assert!(words_equivalent(&w, &boundary_word(&r).unwrap()));
    }

    #[test]
    fn word_equivalence_is_an_equivalence(a in word_strategy(), b in word_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        prop_assert!(words_equivalent(&a, &a));
        let a1 = disguise(&a, s1);
        let a2 = disguise(&a1, s2);
        prop_assert!(words_equivalent(&a, &a1));
        prop_assert!(words_equivalent(&a1, &a2));
        prop_assert!(words_equivalent(&a, &a2));
        prop_assert_eq!(words_equivalent(&a, &b), words_equivalent(&b, &a));
        prop_assert_eq!(surface_from_word(&a), surface_from_word(&a1));
    }

    #[test]
    fn theta_face_pattern_is_an_invariant(seed in any::<u64>(), relabel in any::<u64>()) {
        let g = rotsys_core::build_graph(&rotsys_core::GraphSpec::Theta(5)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut second: Vec<usize> = (1..=5).collect();
        second.shuffle(&mut rng);
        let e = Embedding::from_edge_rotations(g, vec![vec![1, 2, 3, 4, 5], second]).unwrap();
        prop_assume!(e.face_count() == 1);
        let r = relabelled(&e, relabel);
        prop_assert_eq!(face_pattern(&e).unwrap(), face_pattern(&r).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scans_do_not_depend_on_worker_count(e in embedding_strategy(), workers in 2usize..=5) {
        let g = e.graph();
        let one = scan(g, Filter::default(), DedupMode::Iso, &ScanConfig::default()).unwrap();
        let many = scan(g, Filter::default(), DedupMode::Iso, &ScanConfig::default().with_workers(workers)).unwrap();
        prop_assert_eq!(describe_classes(&one.classes), describe_classes(&many.classes));
        prop_assert_eq!(one.raw_by_genus, many.raw_by_genus);
    }
}
