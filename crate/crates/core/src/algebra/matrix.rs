//! Dense matrices of exact rationals and the determinant-based kernels:
//! fraction-free determinants, characteristic polynomials, coronals and the
//! Schur determinant identity.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::bigint::BigInt;
use num::traits::{One, Zero};

use super::poly::{interpolate, Poly};
use super::rat::{rat_to_string, Rat};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Row-major dense matrix over exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        ExactMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// All-ones matrix J.
    pub fn ones(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![Rat::one(); rows * cols])
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        ExactMatrix::new(
            rows,
            cols,
            entries.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect(),
        )
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let n = diag.len();
        let mut m = ExactMatrix::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn row_sum(&self, i: usize) -> Rat {
        (0..self.cols).map(|j| self[(i, j)].clone()).sum()
    }

    pub fn scale(&self, s: &Rat) -> ExactMatrix {
        ExactMatrix::new(self.rows, self.cols, self.entries.iter().map(|e| e * s).collect())
    }

    /// self + s * I
    pub fn add_scalar_diag(&self, s: &Rat) -> ExactMatrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] += s;
        }
        m
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        m
    }

    /// Applies a simultaneous row/column permutation: out[i][j] = self[p[i]][p[j]].
    pub fn permute_symmetric(&self, p: &[usize]) -> ExactMatrix {
        assert!(self.is_square() && p.len() == self.rows);
        let mut m = ExactMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(p[i], p[j])].clone();
            }
        }
        m
    }

    /// Exact determinant. Rows are lifted to integers by their denominator
    /// lcm and the integer matrix is reduced by fraction-free Bareiss
    /// elimination; the result is divided back by the product of the lifts.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let mut lift = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row_lcm = BigInt::one();
            for j in 0..n {
                row_lcm = num::integer::lcm(row_lcm, self[(i, j)].denom().clone());
            }
            let row = (0..n)
                .map(|j| {
                    let e = &self[(i, j)];
                    e.numer() * (&row_lcm / e.denom())
                })
                .collect();
            lift *= row_lcm;
            m.push(row);
        }
        let d = bareiss_det(m);
        Ok(Rat::new(d, lift))
    }

    /// Characteristic polynomial det(xI - M), monic of degree n.
    ///
    /// det(kI - M) is evaluated exactly at the n+1 integers k = n+1..=2n+1
    /// and the samples are interpolated.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut pts = Vec::with_capacity(n + 1);
        for k in (n + 1)..=(2 * n + 1) {
            let kr = Rat::from_integer(BigInt::from(k));
            let shifted = self.scale(&-Rat::one()).add_scalar_diag(&kr);
            pts.push((kr, shifted.det()?));
        }
        let p = interpolate(&pts)?;
        assert!(
            p.degree() == n && p.is_monic(),
            "characteristic polynomial must be monic of degree {n}"
        );
        Ok(p)
    }

    /// Coronal: the sum of the entries of (xI - M)^{-1} as a rational
    /// function of x, computed through the adjugate identity
    /// 1^T adj(xI - M) 1 = det(xI - M + J) - det(xI - M).
    pub fn coronal(&self) -> Result<RatFunc> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        assert!(self.rows >= 1, "coronal needs at least a 1x1 matrix");
        let f = self.charpoly()?;
        let shifted = (self - &ExactMatrix::ones(self.rows, self.cols)).charpoly()?;
        RatFunc::new(&shifted - &f, f)
    }

    /// Solves self * X = rhs by exact Gaussian elimination.
    pub fn solve(&self, rhs: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if rhs.rows != self.rows {
            return Err(Error::Dimension(format!(
                "rhs has {} rows, expected {}",
                rhs.rows, self.rows
            )));
        }
        let n = self.rows;
        let w = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Ok(None);
            };
            if piv != col {
                for j in 0..n {
                    let t = a[(piv, j)].clone();
                    a[(piv, j)] = a[(col, j)].clone();
                    a[(col, j)] = t;
                }
                for j in 0..w {
                    let t = b[(piv, j)].clone();
                    b[(piv, j)] = b[(col, j)].clone();
                    b[(col, j)] = t;
                }
            }
            let inv = Rat::one() / a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] *= &inv;
            }
            for j in 0..w {
                b[(col, j)] *= &inv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                }
                for j in 0..w {
                    let t = &f * &b[(col, j)];
                    b[(r, j)] -= t;
                }
            }
        }
        Ok(Some(b))
    }

    pub fn inverse(&self) -> Result<Option<ExactMatrix>> {
        self.solve(&ExactMatrix::identity(self.rows))
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        ExactMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        ExactMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = ExactMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| rat_to_string(&self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Fraction-free Bareiss elimination; consumes the integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Which block of a 2x2 partition is designated for the Schur complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurBlock {
    TopLeft,
    BottomRight,
}

/// Checks det(M) = det(M / B) * det(B) exactly for the designated invertible
/// block B of the partition (top-left k x k, bottom-right rest).
///
/// Intended as a self-test of the elimination kernel: the complement is
/// formed by exact inversion and the two determinant routes are compared.
pub fn schur_det_check(m: &ExactMatrix, k: usize, designated: SchurBlock) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if k == 0 || k >= n {
        return Err(Error::Dimension(format!("split {k} outside 1..{n}")));
    }
    let a = m.block(0, 0, k, k);
    let b = m.block(0, k, k, n - k);
    let c = m.block(k, 0, n - k, k);
    let d = m.block(k, k, n - k, n - k);
    let whole = m.det()?;
    let (complement, block_det) = match designated {
        SchurBlock::BottomRight => {
            let inv = d.inverse()?.ok_or(Error::SingularBlock)?;
            (&a - &(&(&b * &inv) * &c), d.det()?)
        }
        SchurBlock::TopLeft => {
            let inv = a.inverse()?.ok_or(Error::SingularBlock)?;
            (&d - &(&(&c * &inv) * &b), a.det()?)
        }
    };
    Ok(whole == complement.det()? * block_det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_int};

    #[test]
    fn determinant_basics() {
        let m = ExactMatrix::from_i64(2, 2, &[1, 2, 3, 4]);
        assert_eq!(m.det().unwrap(), rat_int(-2));
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), rat_int(1));
        assert_eq!(ExactMatrix::zero(3, 3).det().unwrap(), rat_int(0));
        // zero leading pivot exercises the row swap
        let s = ExactMatrix::from_i64(3, 3, &[0, 1, 2, 1, 0, 1, 2, 1, 3]);
        assert_eq!(s.det().unwrap(), rat_int(1));
        let singular = ExactMatrix::from_i64(3, 3, &[0, 1, 2, 1, 0, 1, 2, 1, 4]);
        assert_eq!(singular.det().unwrap(), rat_int(0));
        // rational entries
        let r = ExactMatrix::new(2, 2, vec![rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 5)]);
        assert_eq!(r.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn charpoly_small() {
        // A(K2) -> x^2 - 1
        let k2 = ExactMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(k2.charpoly().unwrap(), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(ExactMatrix::zero(0, 0).charpoly().unwrap(), Poly::one());
        let m = ExactMatrix::from_i64(1, 1, &[5]);
        assert_eq!(m.charpoly().unwrap(), Poly::from_ints(&[-5, 1]));
    }

    #[test]
    fn charpoly_coefficient_identities() {
        let m = ExactMatrix::from_i64(3, 3, &[2, -1, 0, 3, 1, 5, 0, 2, -2]);
        let p = m.charpoly().unwrap();
        assert_eq!(p.coeff(2), -m.trace());
        // constant term is (-1)^n det for n = 3
        assert_eq!(p.coeff(0), -m.det().unwrap());
    }

    #[test]
    fn coronal_row_sum_matrix() {
        // constant row sums 2 on a 3x3 matrix: coronal is 3/(x-2)
        let m = ExactMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0]);
        let c = m.coronal().unwrap();
        assert_eq!(c.num(), &Poly::from_ints(&[3]));
        assert_eq!(c.den(), &Poly::from_ints(&[-2, 1]));
        assert_eq!(c.eval_at(&rat_int(6)), Some(rat(3, 4)));
        assert_eq!(c.eval_at(&rat_int(5)), Some(rat_int(1)));
        assert_eq!(c.eval_at(&rat_int(2)), None);
        // 1x1 zero matrix: 1/x
        let z = ExactMatrix::zero(1, 1);
        let cz = z.coronal().unwrap();
        assert_eq!(cz.num(), &Poly::one());
        assert_eq!(cz.den(), &Poly::x());
    }

    #[test]
    fn solve_and_inverse() {
        let m = ExactMatrix::from_i64(3, 3, &[2, 0, 1, 1, 1, 0, 0, 3, 1]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(3));
        let singular = ExactMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(singular.inverse().unwrap().is_none());
    }

    #[test]
    fn schur_identity() {
        let i4 = ExactMatrix::identity(4);
        assert!(schur_det_check(&i4, 2, SchurBlock::BottomRight).unwrap());
        assert!(schur_det_check(&i4, 2, SchurBlock::TopLeft).unwrap());
        let m = ExactMatrix::from_i64(4, 4, &[3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3]);
        assert!(schur_det_check(&m, 2, SchurBlock::BottomRight).unwrap());
        assert!(schur_det_check(&m, 1, SchurBlock::TopLeft).unwrap());
        // block diagonal: det(M/D) = det(A)
        let bd = ExactMatrix::from_i64(4, 4, &[1, 2, 0, 0, 3, 4, 0, 0, 0, 0, 5, 6, 0, 0, 7, 8]);
        assert!(schur_det_check(&bd, 2, SchurBlock::BottomRight).unwrap());
        let sing = ExactMatrix::from_i64(2, 2, &[1, 0, 0, 0]);
        assert!(matches!(
            schur_det_check(&sing, 1, SchurBlock::BottomRight),
            Err(Error::SingularBlock)
        ));
    }
}
