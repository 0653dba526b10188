//! Independent oracles for the characteristic-polynomial kernel: the
//! trace-recursion method and naive cofactor expansion over polynomial
//! entries, neither of which shares code with the evaluation-interpolation
//! path under test.

use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spectrajoin::algebra::{rat_int, ExactMatrix, Poly, Rat};
use spectrajoin::graph::{build_matrix, make_family, Family, MatrixKind};

/// Trace-recursion characteristic polynomial (Faddeev-LeVerrier).
fn faddeev_leverrier(m: &ExactMatrix) -> Poly {
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut mk = m.clone();
    for k in 1..=n {
        let c = -mk.trace() / rat_int(k as i64);
        coeffs[n - k] = c.clone();
        if k < n {
            mk = m * &mk.add_scalar_diag(&c);
        }
    }
    Poly::new(coeffs)
}

/// Cofactor expansion of det(xI - M) over polynomial entries.
fn cofactor_charpoly(m: &ExactMatrix) -> Poly {
    let n = m.rows();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -m[(i, j)].clone();
                    if i == j {
                        &Poly::x() + &Poly::constant(c)
                    } else {
                        Poly::constant(c)
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries)
}

fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = (1..n)
            .map(|i| (0..n).filter(|&j| j != col).map(|j| m[i][j].clone()).collect())
            .collect();
        let term = &m[0][col] * &poly_det(&minor);
        det = if col % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> ExactMatrix {
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(lo..=hi)).collect();
    ExactMatrix::from_i64(n, n, &entries)
}

#[test]
fn matches_faddeev_leverrier_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..40 {
        let m = random_int_matrix(&mut rng, 5, -4, 4);
        assert_eq!(m.charpoly().unwrap(), faddeev_leverrier(&m));
    }
    for n in 0..=3 {
        let m = random_int_matrix(&mut rng, n, -9, 9);
        assert_eq!(m.charpoly().unwrap(), faddeev_leverrier(&m));
    }
}

#[test]
fn cofactor_oracle_for_quadrilateral_plus_vertex() {
    let f = make_family(&Family::Cycle(4))
        .unwrap()
        .disjoint_union(&make_family(&Family::Complete(1)).unwrap());
    let a = build_matrix(&f, MatrixKind::Adjacency);
    let by_cofactor = cofactor_charpoly(&a);
    assert_eq!(by_cofactor, Poly::from_ints(&[0, 0, 0, -4, 0, 1])); // x^5 - 4x^3
    assert_eq!(a.charpoly().unwrap(), by_cofactor);
}

#[test]
fn complete_graph_spectrum_roots() {
    // A-charpoly of K_n factors as (x - (n-1)) (x + 1)^(n-1)
    for n in 2..=6 {
        let a = build_matrix(&make_family(&Family::Complete(n)).unwrap(), MatrixKind::Adjacency);
        let p = a.charpoly().unwrap();
        let (roots, rest) = p.deflate_integer_roots(n as i64);
        assert!(rest.is_monic() && rest.degree() == 0);
        let mut roots = roots;
        roots.sort_unstable();
        let mut want = vec![-1i64; n - 1];
        want.push(n as i64 - 1);
        assert_eq!(roots, want);
    }
}

#[test]
fn permutation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(2..=6);
        let m = random_int_matrix(&mut rng, n, -3, 3);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        assert_eq!(m.charpoly().unwrap(), m.permute_symmetric(&perm).charpoly().unwrap());
    }
}

#[test]
fn rational_entries_stay_exact() {
    use spectrajoin::algebra::rat;
    // normalized Laplacian of a path has rational non-symmetric form
    let p3 = make_family(&Family::Path(3)).unwrap();
    let nl = build_matrix(&p3, MatrixKind::NormalizedLaplacian);
    assert_eq!(nl[(1, 0)], -rat(1, 2));
    let p = nl.charpoly().unwrap();
    assert_eq!(p, faddeev_leverrier(&nl));
    // eigenvalues of the path's normalized Laplacian: 0, 1, 2
    assert_eq!(p, Poly::from_ints(&[0, 2, -3, 1]));
}

#[test]
fn interpolation_node_samples_reproduce_charpoly() {
    // building the polynomial from its own det samples at fresh nodes
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = random_int_matrix(&mut rng, 4, -5, 5);
    let p = m.charpoly().unwrap();
    let pts: Vec<(Rat, Rat)> = (30..35)
        .map(|k| {
            let x = rat_int(k);
            let d = m.scale(&rat_int(-1)).add_scalar_diag(&x).det().unwrap();
            (x, d)
        })
        .collect();
    assert_eq!(spectrajoin::algebra::interpolate(&pts).unwrap(), p);
}
