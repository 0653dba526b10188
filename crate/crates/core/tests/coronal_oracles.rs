//! The coronal is checked against a route that never touches the
//! determinant identity: solving (x0 I - M) y = 1 exactly and summing y.

use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectrajoin::algebra::{rat, rat_int, ExactMatrix, Poly, Rat};
use spectrajoin::graph::{build_matrix, make_family, Family, MatrixKind};

/// Entry sum of (x0 I - M)^{-1} 1 by exact elimination.
fn coronal_by_linear_solve(m: &ExactMatrix, x0: &Rat) -> Option<Rat> {
    let n = m.rows();
    let shifted = m.scale(&-Rat::one()).add_scalar_diag(x0);
    let ones = ExactMatrix::ones(n, 1);
    let y = shifted.solve(&ones).expect("square")?;
    Some((0..n).map(|i| y[(i, 0)].clone()).sum())
}

#[test]
fn coronal_matches_linear_solve_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..25 {
        let n = rng.gen_range(1..=5);
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
        let m = ExactMatrix::from_i64(n, n, &entries);
        let gamma = m.coronal().unwrap();
        // integer points beyond the spectral radius are never poles
        for k in 0..3 {
            let x0 = rat_int((3 * n) as i64 + 1 + k);
            assert_eq!(gamma.eval_at(&x0), coronal_by_linear_solve(&m, &x0));
        }
    }
}

#[test]
fn path_coronal_sample_point() {
    let a = build_matrix(&make_family(&Family::Path(3)).unwrap(), MatrixKind::Adjacency);
    let gamma = a.coronal().unwrap();
    let direct = coronal_by_linear_solve(&a, &rat_int(3)).unwrap();
    assert_eq!(gamma.eval_at(&rat_int(3)), Some(direct));
}

#[test]
fn constant_row_sum_coronal_is_exact() {
    // adjacency of regular graphs: n/(x-r); Laplacians of any graph: n/x
    for (g, r) in [
        (make_family(&Family::Cycle(5)).unwrap(), 2),
        (make_family(&Family::Complete(4)).unwrap(), 3),
        (make_family(&Family::CompleteBipartite(3, 3)).unwrap(), 3),
    ] {
        let gamma = build_matrix(&g, MatrixKind::Adjacency).coronal().unwrap();
        assert_eq!(gamma.num(), &Poly::from_ints(&[g.n() as i64]));
        assert_eq!(gamma.den(), &Poly::from_ints(&[-r, 1]));
    }
    for g in [
        make_family(&Family::Path(4)).unwrap(),
        make_family(&Family::CompleteBipartite(1, 4)).unwrap(),
    ] {
        let gamma = build_matrix(&g, MatrixKind::Laplacian).coronal().unwrap();
        assert_eq!(gamma.num(), &Poly::from_ints(&[g.n() as i64]));
        assert_eq!(gamma.den(), &Poly::x());
    }
}

#[test]
fn triangle_coronal_values() {
    // 3/(x-2) at sample points
    let gamma = build_matrix(&make_family(&Family::Complete(3)).unwrap(), MatrixKind::Adjacency)
        .coronal()
        .unwrap();
    assert_eq!(gamma.eval_at(&rat_int(6)), Some(rat(3, 4)));
    assert_eq!(gamma.eval_at(&rat_int(5)), Some(rat_int(1)));
    assert_eq!(gamma.eval_at(&rat_int(2)), None);
}

#[test]
fn denominator_divides_charpoly() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let n = rng.gen_range(1..=5);
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-2..=2)).collect();
        let m = ExactMatrix::from_i64(n, n, &entries);
        let gamma = m.coronal().unwrap();
        let f = m.charpoly().unwrap();
        let (_, rem) = f.divrem(gamma.den()).unwrap();
        assert!(rem.is_zero());
    }
}
