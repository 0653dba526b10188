//! Cyclic Jacobi eigensolver for dense symmetric matrices.

/// Eigenvalues of a symmetric matrix, ascending. Rotations are applied in
/// cyclic sweeps until the off-diagonal Frobenius norm drops below 1e-12.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return vec![];
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    const TOL: f64 = 1e-12;
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if (2.0 * off).sqrt() < TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < TOL * 1e-4 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let apq = a[p][q];
                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_known_spectra() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let e = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((e[0] - 1.0).abs() < 1e-10 && (e[1] - 3.0).abs() < 1e-10);
        // diagonal matrix is already done
        let d = symmetric_eigenvalues(vec![vec![5.0, 0.0], vec![0.0, -3.0]]);
        assert!((d[0] + 3.0).abs() < 1e-12 && (d[1] - 5.0).abs() < 1e-12);
        assert!(symmetric_eigenvalues(vec![]).is_empty());
    }

    #[test]
    fn matches_charpoly_roots_for_path() {
        // adjacency of P3: eigenvalues -sqrt(2), 0, sqrt(2)
        let a = vec![
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 1.0],
            vec![0.0, 1.0, 0.0],
        ];
        let e = symmetric_eigenvalues(a);
        let s = 2.0_f64.sqrt();
        for (got, want) in e.iter().zip([-s, 0.0, s]) {
            assert!((got - want).abs() < 1e-10);
        }
    }
}
