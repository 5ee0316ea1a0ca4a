use hadlab::constructors::{construct_semismall_model_faf, construct_small_model_ccg};
use hadlab::corpus::{generate_family, Family};
use hadlab::graph::{canonical_key, graph6_decode};
use hadlab::invariants::{chromatic_number, clique_number, had2, had2_plus, had_m, hadwiger_number};
use hadlab::patterns::in_class;
use hadlab::recognition::structure_outcomes;
use hadlab::{verify_model, ClassName, Graph, ModelClass, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph(max_n)
        .prop_filter("needs a vertex", |g| g.n() > 0)
        .prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 0..n)
        })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Graphs known to lie in the {co-claw, co-gem}-free class: complements of
/// line graphs of triangle-free multigraphs.
fn ccg_graph() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 3usize..=6).prop_map(|(seed, root_n)| {
        let f = Family::ComplementOf(Box::new(Family::LineOfTriangleFree { seed, root_n, count: 1, multigraph: true }));
        generate_family(&f).unwrap().remove(0)
    })
}

/// Cographs and line graphs of simple triangle-free graphs, both
/// {fork, antifork}-free.
fn faf_graph() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (any::<u64>(), 0usize..=9).prop_map(|(seed, ops)| {
            generate_family(&Family::Cograph { seed, ops, count: 1 }).unwrap().remove(0)
        }),
        (any::<u64>(), 3usize..=6).prop_map(|(seed, root_n)| {
            let f = Family::LineOfTriangleFree { seed, root_n, count: 1, multigraph: false };
            generate_family(&f).unwrap().remove(0)
        }),
    ]
    .prop_filter("constructor size limit", |g| g.n() <= 10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(32)) {
        let text = g.to_graph6();
        prop_assert_eq!(graph6_decode(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(32)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn canonical_key_ignores_labelling((g, perm) in graph_with_perm(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn canonical_key_separates_edge_counts(a in graph(6), b in graph(6)) {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            prop_assert_ne!(canonical_key(&a).unwrap(), canonical_key(&b).unwrap());
        }
    }

    #[test]
    fn invariant_chain_with_witnesses(g in graph(8)) {
        let omega = clique_number(&g);
        let chi = chromatic_number(&g).unwrap();
        let h2 = had2(&g).unwrap();
        let h2p = had2_plus(&g).unwrap();
        let h = hadwiger_number(&g).unwrap();
        for r in [&omega, &chi, &h2, &h2p, &h] {
            prop_assert!(r.verify(&g), "{:?}", r);
        }
        prop_assert!(omega.value <= chi.value);
        prop_assert!(omega.value <= h2.value);
        prop_assert!(h2.value <= h2p.value);
        prop_assert!(h2p.value <= h.value);
        prop_assert_eq!(had_m(&g, 1).unwrap().value, omega.value);
        prop_assert_eq!(had_m(&g, 2).unwrap().value, h2.value);
    }

    #[test]
    fn hadwiger_monotone_under_deletion((g, v) in graph_with_vertex(8)) {
        let (h, _) = g.remove(VertexSet::singleton(v));
        prop_assert!(hadwiger_number(&h).unwrap().value <= hadwiger_number(&g).unwrap().value);
        prop_assert!(chromatic_number(&h).unwrap().value <= chromatic_number(&g).unwrap().value);
    }

    #[test]
    fn class_membership_is_hereditary((g, v) in graph_with_vertex(8)) {
        let (h, _) = g.remove(VertexSet::singleton(v));
        for class in ClassName::ALL {
            let m = in_class(&g, class);
            if m.member {
                prop_assert!(in_class(&h, class).member, "{} not hereditary", class.as_str());
            } else {
                prop_assert!(m.witness.unwrap().verify(&g));
            }
        }
    }

    #[test]
    fn perfect_graphs_have_chi_equal_omega(g in graph(8)) {
        if in_class(&g, ClassName::Perfect).member {
            prop_assert_eq!(chromatic_number(&g).unwrap().value, clique_number(&g).value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ccg_constructor_is_sound_and_deterministic(g in ccg_graph()) {
        prop_assert!(in_class(&g, ClassName::CoclawCogemFree).member);
        let (model, trace) = construct_small_model_ccg(&g).unwrap();
        let report = verify_model(&g, &model);
        prop_assert!(report.valid);
        prop_assert_eq!(report.classification, ModelClass::Small);
        prop_assert!(model.len() >= chromatic_number(&g).unwrap().value);
        prop_assert!(trace.len() <= g.n().max(1));
        let (again, trace_again) = construct_small_model_ccg(&g).unwrap();
        prop_assert_eq!(again, model);
        prop_assert_eq!(trace_again, trace);
    }

    #[test]
    fn faf_constructor_is_sound_and_deterministic(g in faf_graph()) {
        prop_assert!(in_class(&g, ClassName::ForkAntiforkFree).member);
        let (model, trace) = construct_semismall_model_faf(&g).unwrap();
        let report = verify_model(&g, &model);
        prop_assert!(report.valid);
        prop_assert!(report.classification.at_most(ModelClass::SemiSmall));
        let chi = chromatic_number(&g).unwrap().value;
        prop_assert!(model.len() >= chi);
        prop_assert!(chi <= 2 * clique_number(&g).value);
        prop_assert!(trace.len() < 2 * g.n().max(1));
        prop_assert_eq!(construct_semismall_model_faf(&g).unwrap(), (model, trace));
    }

    #[test]
    fn structure_outcomes_cover_faf_graphs(g in faf_graph()) {
        let set = structure_outcomes(&g).unwrap();
        prop_assert!(set.any());
        prop_assert!(set.verify(&g));
    }

    #[test]
    fn constructors_refuse_or_succeed_soundly(g in graph(9)) {
        match construct_small_model_ccg(&g) {
            Ok((m, _)) => prop_assert!(verify_model(&g, &m).valid),
            Err(hadlab::Error::ClassViolation(e)) => {
                prop_assert!(e.verify(&g));
                prop_assert!(!in_class(&g, ClassName::CoclawCogemFree).member);
            }
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
        match construct_semismall_model_faf(&g) {
            Ok((m, _)) => prop_assert!(verify_model(&g, &m).valid),
            Err(hadlab::Error::ClassViolation(e)) => prop_assert!(e.verify(&g)),
            Err(hadlab::Error::StructureFallthrough(_)) => {
                prop_assert!(!in_class(&g, ClassName::ForkAntiforkFree).member);
            }
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
    }
}

#[test]
fn families_are_sound_over_many_seeds() {
    for seed in 0..100u64 {
        for spec in [
            format!("complement:line-tf:{seed}:6:1:multi"),
            format!("line-tf:{seed}:5:1"),
            format!("cograph:{seed}:8:1"),
        ] {
            let family: Family = spec.parse().unwrap();
            let graphs = generate_family(&family).unwrap();
            assert_eq!(graphs.len(), 1, "{spec}");
            assert_eq!(family.to_string(), spec);
        }
    }
}
