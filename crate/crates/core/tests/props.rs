//! Property tests over random graphs.

use proptest::prelude::*;

use spectrajoin::graph::{build_matrix, Graph, MatrixKind};
use spectrajoin::join::{nns_join, ns_join};

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut t = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[t] {
                        edges.push((i, j));
                    }
                    t += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("valid edges")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arbitrary_graph(20)) {
        let text = spectrajoin::graph6::encode(&g).unwrap();
        prop_assert_eq!(spectrajoin::graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arbitrary_graph(16)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let full = g.n() * (g.n() - 1) / 2;
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), full);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn splitting_join_edge_counts(g1 in arbitrary_graph(6), g2 in arbitrary_graph(6)) {
        let (n1, e1) = (g1.n(), g1.edge_count());
        let (n2, e2) = (g2.n(), g2.edge_count());
        let ns = ns_join(&g1, &g2);
        prop_assert_eq!(ns.n(), 2 * n1 + n2);
        prop_assert_eq!(ns.edge_count(), 3 * e1 + e2 + n1 * n2);
        let nns = nns_join(&g1, &g2);
        prop_assert_eq!(nns.edge_count(), n1 * (n1 - 1) - e1 + e2 + n1 * n2);
    }

    #[test]
    fn isomorphic_relabelings_are_detected(g in arbitrary_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        let witness = spectrajoin::iso::are_isomorphic(&g, &h);
        prop_assert!(witness.is_some());
        prop_assert_eq!(spectrajoin::iso::apply_witness(&g, &witness.unwrap()), h.clone());
        prop_assert_eq!(spectrajoin::iso::canonical_form(&g), spectrajoin::iso::canonical_form(&h));
    }

    #[test]
    fn charpoly_is_label_invariant(g in arbitrary_graph(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        for kind in [MatrixKind::Adjacency, MatrixKind::NormalizedLaplacian] {
            let pg = build_matrix(&g, kind).charpoly().unwrap();
            let ph = build_matrix(&h, kind).charpoly().unwrap();
            prop_assert_eq!(pg, ph);
        }
    }
}
