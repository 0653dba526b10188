//! Exact verification of the characteristic-polynomial product formulas for
//! NS and NNS joins of arbitrary graphs.
//!
//! Each formula is a product of determinant and coronal factors in x. Both
//! sides are reconstructed independently: the left side is the
//! characteristic polynomial of the assembled join matrix; the right side
//! is evaluated factor-by-factor at enough integer sample points (every
//! factor becomes a concrete rational determinant there) and interpolated.
//! The product is a polynomial of degree 2*n1 + n2, so degree + 1 valid
//! sample points determine it exactly.

use std::fmt;

use num::traits::{One, Zero};

use crate::algebra::{interpolate, rat_int, ExactMatrix, Poly, Rat};
use crate::error::{Error, Result};
use crate::graph::{build_matrix, degree_matrix, Graph, MatrixKind};
use crate::join::{join, JoinKind};

/// The six product formulas: one per join kind and matrix kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharpolyTheorem {
    NnsAdjacency,
    NsAdjacency,
    NnsLaplacian,
    NsLaplacian,
    NnsSignless,
    NsSignless,
}

impl CharpolyTheorem {
    pub const ALL: [CharpolyTheorem; 6] = [
        CharpolyTheorem::NnsAdjacency,
        CharpolyTheorem::NsAdjacency,
        CharpolyTheorem::NnsLaplacian,
        CharpolyTheorem::NsLaplacian,
        CharpolyTheorem::NnsSignless,
        CharpolyTheorem::NsSignless,
    ];

    /// CLI token, e.g. "4.1a".
    pub fn token(self) -> &'static str {
        match self {
            CharpolyTheorem::NnsAdjacency => "4.1a",
            CharpolyTheorem::NsAdjacency => "4.1b",
            CharpolyTheorem::NnsLaplacian => "4.2a",
            CharpolyTheorem::NsLaplacian => "4.2b",
            CharpolyTheorem::NnsSignless => "4.3a",
            CharpolyTheorem::NsSignless => "4.3b",
        }
    }

    pub fn parse(s: &str) -> Option<CharpolyTheorem> {
        CharpolyTheorem::ALL.iter().copied().find(|t| t.token() == s)
    }

    pub fn join_kind(self) -> JoinKind {
        match self {
            CharpolyTheorem::NnsAdjacency
            | CharpolyTheorem::NnsLaplacian
            | CharpolyTheorem::NnsSignless => JoinKind::Nns,
            _ => JoinKind::Ns,
        }
    }

    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            CharpolyTheorem::NnsAdjacency | CharpolyTheorem::NsAdjacency => MatrixKind::Adjacency,
            CharpolyTheorem::NnsLaplacian | CharpolyTheorem::NsLaplacian => MatrixKind::Laplacian,
            CharpolyTheorem::NnsSignless | CharpolyTheorem::NsSignless => {
                MatrixKind::SignlessLaplacian
            }
        }
    }
}

impl fmt::Display for CharpolyTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Both sides of one identity check, with exact coefficient equality.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub theorem: CharpolyTheorem,
    pub lhs: Poly,
    pub rhs: Poly,
    pub equal: bool,
}

impl IdentityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "theorem": self.theorem.token(),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
        })
    }
}

/// Coronal of M evaluated at x0: the entry sum of (x0 I - M)^{-1}, through
/// the determinant identity. None when x0 I - M is singular.
fn gamma_at(m: &ExactMatrix, x0: &Rat) -> Result<Option<Rat>> {
    let shifted = m.scale(&-Rat::one()).add_scalar_diag(x0);
    let d = shifted.det()?;
    if d.is_zero() {
        return Ok(None);
    }
    let with_j = (&shifted + &ExactMatrix::ones(m.rows(), m.cols())).det()?;
    Ok(Some((with_j - &d) / d))
}

/// det(x0 I - M), as a factor.
fn charmat_det(m: &ExactMatrix, x0: &Rat) -> Result<Rat> {
    m.scale(&-Rat::one()).add_scalar_diag(x0).det()
}

/// Right-hand side of the formula at one sample point; None when a factor
/// is singular there.
fn rhs_at(t: CharpolyTheorem, g1: &Graph, g2: &Graph, x0: &Rat) -> Result<Option<Rat>> {
    let (n1, n2) = (g1.n() as i64, g2.n() as i64);
    let a1 = build_matrix(g1, MatrixKind::Adjacency);
    match t {
        CharpolyTheorem::NnsAdjacency | CharpolyTheorem::NsAdjacency => {
            if x0.is_zero() {
                return Ok(None);
            }
            let a2 = build_matrix(g2, MatrixKind::Adjacency);
            let split = if t == CharpolyTheorem::NnsAdjacency {
                build_matrix(&g1.complement(), MatrixKind::Adjacency)
            } else {
                a1.clone()
            };
            let core = &a1 + &(&split * &split).scale(&(Rat::one() / x0));
            let f2 = charmat_det(&a2, x0)?;
            if f2.is_zero() {
                return Ok(None);
            }
            let d_core = charmat_det(&core, x0)?;
            if d_core.is_zero() {
                return Ok(None);
            }
            let (Some(gamma2), Some(gamma_core)) = (gamma_at(&a2, x0)?, gamma_at(&core, x0)?)
            else {
                return Ok(None);
            };
            let mut xn = Rat::one();
            for _ in 0..n1 {
                xn *= x0;
            }
            Ok(Some(xn * f2 * d_core * (Rat::one() - gamma2 * gamma_core)))
        }
        CharpolyTheorem::NnsLaplacian
        | CharpolyTheorem::NnsSignless
        | CharpolyTheorem::NsLaplacian
        | CharpolyTheorem::NsSignless => {
            let kind = t.matrix_kind();
            let m1 = build_matrix(g1, kind);
            let m2 = build_matrix(g2, kind);
            let d1 = degree_matrix(g1);
            let f2 = charmat_det(&m2, &(x0 - rat_int(n1)))?;
            if f2.is_zero() {
                return Ok(None);
            }
            let Some(gamma2) = gamma_at(&m2, &(x0 - rat_int(n1)))? else {
                return Ok(None);
            };
            let nns = t.join_kind() == JoinKind::Nns;
            // NNS: P = (x - n1 + 1)I + D1, split block is the complement
            // adjacency; NS: P = xI - D1, split block is A1 itself.
            let (p, split, core, eval_shift) = if nns {
                let p = d1.add_scalar_diag(&(x0 - rat_int(n1 - 1)));
                let split = build_matrix(&g1.complement(), MatrixKind::Adjacency);
                let y = x0 - rat_int(n1 + n2 - 1);
                (p, split, (&m1 - &d1), y)
            } else {
                let p = d1.scale(&-Rat::one()).add_scalar_diag(x0);
                let split = a1;
                let y = x0 - rat_int(n2);
                (p, split, (&m1 + &d1), y)
            };
            let dp = p.det()?;
            if dp.is_zero() {
                return Ok(None);
            }
            let pinv = p.inverse()?.expect("nonzero determinant");
            let inner = &core + &(&(&split * &pinv) * &split);
            let b = inner.scale(&-Rat::one()).add_scalar_diag(&eval_shift);
            let db = b.det()?;
            if db.is_zero() {
                return Ok(None);
            }
            let Some(gamma_inner) = gamma_at(&inner, &eval_shift)? else {
                return Ok(None);
            };
            Ok(Some(f2 * dp * db * (Rat::one() - gamma2 * gamma_inner)))
        }
    }
}

/// Verifies one product formula on a concrete pair of graphs, exactly.
pub fn verify_charpoly_theorem(
    t: CharpolyTheorem,
    g1: &Graph,
    g2: &Graph,
) -> Result<IdentityReport> {
    if g1.n() == 0 {
        return Err(Error::Precondition("identity checks need n1 >= 1".into()));
    }
    let joined = join(t.join_kind(), g1, g2);
    let lhs = build_matrix(&joined, t.matrix_kind()).charpoly()?;
    let degree = 2 * g1.n() + g2.n();
    let dmax1 = g1.degrees().into_iter().max().unwrap_or(0);
    let dmax2 = g2.degrees().into_iter().max().unwrap_or(0);
    let start = (g1.n() + g2.n() + dmax1 + dmax2).max(degree) as i64 + 2;
    let mut points = Vec::with_capacity(degree + 1);
    let mut k = start;
    while points.len() < degree + 1 {
        let x0 = rat_int(k);
        if let Some(v) = rhs_at(t, g1, g2, &x0)? {
            points.push((x0, v));
        }
        k += 1;
        assert!(
            k - start < 4 * degree as i64 + 64,
            "sample schedule failed to find enough regular points"
        );
    }
    let rhs = interpolate(&points)?;
    let equal = lhs == rhs;
    Ok(IdentityReport { theorem: t, lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn k(n: usize) -> Graph {
        make_family(&Family::Complete(n)).unwrap()
    }
    fn p(n: usize) -> Graph {
        make_family(&Family::Path(n)).unwrap()
    }
    fn c(n: usize) -> Graph {
        make_family(&Family::Cycle(n)).unwrap()
    }

    #[test]
    fn adjacency_identity_small() {
        let rep = verify_charpoly_theorem(CharpolyTheorem::NnsAdjacency, &p(3), &k(2)).unwrap();
        assert!(rep.equal, "lhs {:?} rhs {:?}", rep.lhs, rep.rhs);
        let rep = verify_charpoly_theorem(CharpolyTheorem::NsAdjacency, &p(3), &k(2)).unwrap();
        assert!(rep.equal);
    }

    #[test]
    fn laplacian_identity_with_disconnected_g1() {
        let f = c(4).disjoint_union(&k(1));
        let rep = verify_charpoly_theorem(CharpolyTheorem::NsLaplacian, &f, &k(2)).unwrap();
        assert!(rep.equal);
        let rep = verify_charpoly_theorem(CharpolyTheorem::NnsLaplacian, &f, &k(2)).unwrap();
        assert!(rep.equal);
    }

    #[test]
    fn signless_identity_degenerate() {
        let rep = verify_charpoly_theorem(CharpolyTheorem::NnsSignless, &k(1), &k(1)).unwrap();
        assert!(rep.equal);
        let rep = verify_charpoly_theorem(CharpolyTheorem::NsSignless, &k(1), &k(1)).unwrap();
        assert!(rep.equal);
    }

    #[test]
    fn all_six_on_an_irregular_pair() {
        let g1 = p(4);
        let g2 = c(4).disjoint_union(&k(1));
        for t in CharpolyTheorem::ALL {
            let rep = verify_charpoly_theorem(t, &g1, &g2).unwrap();
            assert!(rep.equal, "{t} failed");
            assert!(rep.lhs.is_monic());
            assert_eq!(rep.lhs.degree(), 2 * g1.n() + g2.n());
        }
    }
}
