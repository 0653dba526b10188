//! The closed-form join spectra are compared as sorted multisets against
//! the Jacobi eigendecomposition of the assembled join matrices.

use spectrajoin::algebra::{rat, rat_int};
use spectrajoin::graph::{make_family, Family, Graph, MatrixKind};
use spectrajoin::join::{join, JoinKind};
use spectrajoin::spectra::{
    closed_form_spectrum, nns_adjacency_spectrum, ns_normalized_spectrum, numeric_spectrum,
    regular_transfer, solve_cubic_real, EigenValue,
};

const TOL: f64 = 1e-8;

fn k(n: usize) -> Graph {
    make_family(&Family::Complete(n)).unwrap()
}
fn c(n: usize) -> Graph {
    make_family(&Family::Cycle(n)).unwrap()
}
fn e(n: usize) -> Graph {
    Graph::empty(n)
}

fn regular_corpus() -> Vec<Graph> {
    vec![
        k(2),
        k(3),
        k(4),
        c(4),
        c(5),
        c(6),
        make_family(&Family::CompleteBipartite(2, 2)).unwrap(),
    ]
}

#[test]
fn oracle_equivalence_over_regular_corpus() {
    let corpus = regular_corpus();
    let cases: [(JoinKind, MatrixKind); 5] = [
        (JoinKind::Ns, MatrixKind::NormalizedLaplacian),
        (JoinKind::Nns, MatrixKind::Adjacency),
        (JoinKind::Nns, MatrixKind::Laplacian),
        (JoinKind::Nns, MatrixKind::SignlessLaplacian),
        (JoinKind::Nns, MatrixKind::NormalizedLaplacian),
    ];
    for g1 in &corpus {
        for g2 in &corpus {
            for (jk, mk) in cases {
                let closed = closed_form_spectrum(jk, mk, g1, g2)
                    .unwrap_or_else(|e| panic!("closed form failed on {g1:?}, {g2:?}: {e}"));
                let direct = numeric_spectrum(&join(jk, g1, g2), mk);
                assert!(
                    closed.approx_eq(&direct, TOL),
                    "mismatch for {jk} {mk} on {g1:?}, {g2:?}:\n{:?}\nvs\n{:?}",
                    closed.expand_f64(),
                    direct.expand_f64()
                );
                assert_eq!(closed.total_multiplicity(), 2 * g1.n() + g2.n());
            }
        }
    }
}

#[test]
fn petersen_sized_case() {
    let pet = make_family(&Family::Petersen).unwrap();
    let g2 = c(4);
    for (jk, mk) in [
        (JoinKind::Ns, MatrixKind::NormalizedLaplacian),
        (JoinKind::Nns, MatrixKind::Adjacency),
        (JoinKind::Nns, MatrixKind::NormalizedLaplacian),
    ] {
        let closed = closed_form_spectrum(jk, mk, &pet, &g2).unwrap();
        let direct = numeric_spectrum(&join(jk, &pet, &g2), mk);
        assert!(closed.approx_eq(&direct, TOL));
    }
}

#[test]
fn ns_normalized_example_with_empty_side() {
    // K2 with a single extra vertex: cubic 6x^3 - 16x^2 + 10x = 0 has
    // roots 0, 1, 5/3, all rational
    let roots = solve_cubic_real(&rat_int(6), &rat_int(-16), &rat_int(10), &rat_int(0)).unwrap();
    let mut vals: Vec<_> = roots
        .iter()
        .map(|r| match r {
            EigenValue::Exact(x) => x.clone(),
            EigenValue::Approx(_) => panic!("expected exact roots"),
        })
        .collect();
    vals.sort();
    assert_eq!(vals, vec![rat_int(0), rat_int(1), rat(5, 3)]);

    let closed = ns_normalized_spectrum(&k(2), &k(1)).unwrap();
    let direct = numeric_spectrum(&join(JoinKind::Ns, &k(2), &k(1)), MatrixKind::NormalizedLaplacian);
    assert!(closed.approx_eq(&direct, TOL));
    assert_eq!(closed.total_multiplicity(), 5);
}

#[test]
fn nns_adjacency_tiny_case_is_triangle_plus_isolated() {
    // K2 nns K1 is K3 with two isolated vertices: spectrum {2, -1, -1, 0, 0}
    let s = nns_adjacency_spectrum(&k(2), &k(1)).unwrap();
    let got = s.expand_f64();
    for (a, b) in got.iter().zip([-1.0, -1.0, 0.0, 0.0, 2.0]) {
        assert!((a - b).abs() < TOL);
    }
    assert!(s.sum_f64().abs() < TOL);
}

#[test]
fn nns_laplacian_and_signless_tiny_cases() {
    for mk in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
        let closed = closed_form_spectrum(JoinKind::Nns, mk, &k(2), &k(1)).unwrap();
        let direct = numeric_spectrum(&join(JoinKind::Nns, &k(2), &k(1)), mk);
        assert!(closed.approx_eq(&direct, TOL));
    }
    // trace identities: L and Q spectra sum to twice the edge count
    let g = join(JoinKind::Nns, &c(4), &k(3));
    let l = closed_form_spectrum(JoinKind::Nns, MatrixKind::Laplacian, &c(4), &k(3)).unwrap();
    let q = closed_form_spectrum(JoinKind::Nns, MatrixKind::SignlessLaplacian, &c(4), &k(3)).unwrap();
    assert!((l.sum_f64() - 2.0 * g.edge_count() as f64).abs() < 1e-7);
    assert!((q.sum_f64() - 2.0 * g.edge_count() as f64).abs() < 1e-7);
    assert!(l.min_f64().abs() < TOL);
}

#[test]
fn nns_normalized_case_split() {
    // complete G1: the split vertices are isolated and 0 has multiplicity n1+1
    let s = closed_form_spectrum(JoinKind::Nns, MatrixKind::NormalizedLaplacian, &k(3), &k(2))
        .unwrap();
    let zeros = s
        .entries()
        .iter()
        .find(|(v, _)| v.to_f64().abs() < TOL)
        .map(|(_, m)| *m)
        .unwrap_or(0);
    assert_eq!(zeros, 4);
    let direct = numeric_spectrum(&join(JoinKind::Nns, &k(3), &k(2)), MatrixKind::NormalizedLaplacian);
    assert!(s.approx_eq(&direct, TOL));

    // C4 has no adjacency eigenvalue -1; C6 has it twice
    assert_eq!(spectrajoin::spectra::split_eig_multiplicity(&c(4)).unwrap(), 0);
    assert_eq!(spectrajoin::spectra::split_eig_multiplicity(&c(6)).unwrap(), 2);
    for g1 in [c(4), c(6)] {
        let s = closed_form_spectrum(JoinKind::Nns, MatrixKind::NormalizedLaplacian, &g1, &k(2))
            .unwrap();
        let direct =
            numeric_spectrum(&join(JoinKind::Nns, &g1, &k(2)), MatrixKind::NormalizedLaplacian);
        assert!(s.approx_eq(&direct, TOL));
    }
}

#[test]
fn closed_form_rejections() {
    let star = make_family(&Family::CompleteBipartite(1, 4)).unwrap();
    assert!(closed_form_spectrum(JoinKind::Nns, MatrixKind::Adjacency, &star, &k(2)).is_err());
    assert!(closed_form_spectrum(JoinKind::Ns, MatrixKind::Adjacency, &c(4), &k(2)).is_err());
    // r1 = 0 has no normalized form
    assert!(ns_normalized_spectrum(&e(3), &k(2)).is_err());
    assert!(closed_form_spectrum(JoinKind::Nns, MatrixKind::NormalizedLaplacian, &e(3), &k(2))
        .is_err());
    // empty G2 is fine for the non-normalized NNS forms
    let s = nns_adjacency_spectrum(&c(4), &e(2)).unwrap();
    let direct = numeric_spectrum(&join(JoinKind::Nns, &c(4), &e(2)), MatrixKind::Adjacency);
    assert!(s.approx_eq(&direct, TOL));
}

#[test]
fn regular_transfer_against_direct() {
    for (g, r) in [(c(4), 2usize), (k(4), 3), (c(6), 2), (make_family(&Family::Petersen).unwrap(), 3)] {
        let a = numeric_spectrum(&g, MatrixKind::Adjacency);
        for target in [
            MatrixKind::Laplacian,
            MatrixKind::SignlessLaplacian,
            MatrixKind::NormalizedLaplacian,
        ] {
            let transferred = regular_transfer(&a, r, target).unwrap();
            let direct = numeric_spectrum(&g, target);
            assert!(transferred.approx_eq(&direct, TOL), "{target} transfer failed");
        }
    }
    // C4 examples: L {0, 2, 2, 4}, NL {0, 1, 1, 2}, Q {0, 2, 2, 4}
    let a = numeric_spectrum(&c(4), MatrixKind::Adjacency);
    let l = regular_transfer(&a, 2, MatrixKind::Laplacian).unwrap().expand_f64();
    assert!(l.iter().zip([0.0, 2.0, 2.0, 4.0]).all(|(x, y)| (x - y).abs() < TOL));
    let nl = regular_transfer(&a, 2, MatrixKind::NormalizedLaplacian).unwrap().expand_f64();
    assert!(nl.iter().zip([0.0, 1.0, 1.0, 2.0]).all(|(x, y)| (x - y).abs() < TOL));
    let q = regular_transfer(&a, 2, MatrixKind::SignlessLaplacian).unwrap().expand_f64();
    assert!(q.iter().zip([0.0, 2.0, 2.0, 4.0]).all(|(x, y)| (x - y).abs() < TOL));
    // r = 0 cannot be normalized
    assert!(regular_transfer(&numeric_spectrum(&e(2), MatrixKind::Adjacency), 0,
        MatrixKind::NormalizedLaplacian).is_err());
}

#[test]
fn numeric_spectrum_examples_and_invariants() {
    let s = numeric_spectrum(&k(4), MatrixKind::Adjacency);
    let got = s.expand_f64();
    for (a, b) in got.iter().zip([-1.0, -1.0, -1.0, 3.0]) {
        assert!((a - b).abs() < TOL);
    }
    let f = c(4).disjoint_union(&k(1));
    let sf = numeric_spectrum(&f, MatrixKind::Adjacency).expand_f64();
    for (a, b) in sf.iter().zip([-2.0, 0.0, 0.0, 0.0, 2.0]) {
        assert!((a - b).abs() < TOL);
    }
    let l = numeric_spectrum(&k(2), MatrixKind::Laplacian).expand_f64();
    assert!((l[0] - 0.0).abs() < TOL && (l[1] - 2.0).abs() < TOL);
    // bipartite with an edge: max normalized eigenvalue exactly 2
    for g in [c(4), c(6), make_family(&Family::CompleteBipartite(2, 3)).unwrap(), f] {
        let nl = numeric_spectrum(&g, MatrixKind::NormalizedLaplacian);
        assert!((nl.max_f64() - 2.0).abs() < TOL);
        assert!(nl.min_f64().abs() < TOL);
    }
    for g in [c(5), k(4), make_family(&Family::Petersen).unwrap()] {
        let nl = numeric_spectrum(&g, MatrixKind::NormalizedLaplacian);
        assert!(nl.max_f64() < 2.0 - 1e-3);
    }
}

#[test]
fn cubic_solver_examples() {
    // x^3 - x^2 - 2x factors as x(x-2)(x+1)
    let r = solve_cubic_real(&rat_int(1), &rat_int(-1), &rat_int(-2), &rat_int(0)).unwrap();
    let mut vals: Vec<f64> = r.iter().map(|v| v.to_f64()).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(vals, vec![-1.0, 0.0, 2.0]);
    // (x-1)(x-2)(x-3)
    let r = solve_cubic_real(&rat_int(1), &rat_int(-6), &rat_int(11), &rat_int(-6)).unwrap();
    let mut vals: Vec<f64> = r.iter().map(|v| v.to_f64()).collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(vals, vec![1.0, 2.0, 3.0]);
    // irrational triple: x^3 - 3x + 1 has three real irrational roots
    let r = solve_cubic_real(&rat_int(1), &rat_int(0), &rat_int(-3), &rat_int(1)).unwrap();
    for root in &r {
        let x = root.to_f64();
        assert!((x * x * x - 3.0 * x + 1.0).abs() < 1e-10);
        assert!(!root.is_exact());
    }
    // complex pair must be flagged
    assert!(solve_cubic_real(&rat_int(1), &rat_int(0), &rat_int(0), &rat_int(-0)).is_ok());
    assert!(solve_cubic_real(&rat_int(1), &rat_int(-1), &rat_int(1), &rat_int(-1)).is_err());
}
