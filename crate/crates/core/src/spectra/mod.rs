//! Spectra: numeric eigensolving of the four graph matrices and the
//! closed-form spectra of NS/NNS joins of regular graphs.

pub mod jacobi;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{rat_int, rat_sqrt_exact, rat_to_f64, rat_to_string, Poly, Rat};
use crate::error::{Error, Result};
use crate::graph::{build_matrix, Graph, MatrixKind};
use crate::join::JoinKind;

/// A single eigenvalue, exact when a closed form produced a rational value.
#[derive(Clone, Debug, PartialEq)]
pub enum EigenValue {
    Exact(Rat),
    Approx(f64),
}

impl EigenValue {
    pub fn exact_int(v: i64) -> Self {
        EigenValue::Exact(rat_int(v))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            EigenValue::Exact(r) => rat_to_f64(r),
            EigenValue::Approx(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, EigenValue::Exact(_))
    }
}

/// Multiset of real eigenvalues with multiplicities, tagged by matrix kind.
/// Entries are kept sorted in descending value order.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub kind: MatrixKind,
    entries: Vec<(EigenValue, usize)>,
}

/// Values closer than this merge into one entry.
const MERGE_TOL: f64 = 1e-8;

impl Spectrum {
    pub fn from_values(kind: MatrixKind, mut values: Vec<EigenValue>) -> Spectrum {
        values.sort_by(|a, b| b.to_f64().partial_cmp(&a.to_f64()).expect("finite"));
        let mut entries: Vec<(EigenValue, usize)> = Vec::new();
        for v in values {
            match entries.last_mut() {
                Some((rep, mult)) if (rep.to_f64() - v.to_f64()).abs() <= MERGE_TOL => {
                    if !rep.is_exact() && v.is_exact() {
                        *rep = v;
                    }
                    *mult += 1;
                }
                _ => entries.push((v, 1)),
            }
        }
        Spectrum { kind, entries }
    }

    pub fn entries(&self) -> &[(EigenValue, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// All eigenvalues expanded by multiplicity, ascending.
    pub fn expand_f64(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for (v, m) in &self.entries {
            out.extend(std::iter::repeat(v.to_f64()).take(*m));
        }
        out.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        out
    }

    pub fn sum_f64(&self) -> f64 {
        self.entries.iter().map(|(v, m)| v.to_f64() * *m as f64).sum()
    }

    pub fn min_f64(&self) -> f64 {
        self.entries.last().map(|(v, _)| v.to_f64()).unwrap_or(0.0)
    }

    pub fn max_f64(&self) -> f64 {
        self.entries.first().map(|(v, _)| v.to_f64()).unwrap_or(0.0)
    }

    /// Sorted multiset comparison with per-entry tolerance tol * (1 + |a|).
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let a = self.expand_f64();
        let b = other.expand_f64();
        a.len() == b.len()
            && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + x.abs()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.letter(),
            "entries": self.entries.iter().map(|(v, m)| {
                let value = match v {
                    EigenValue::Exact(r) => serde_json::Value::String(rat_to_string(r)),
                    EigenValue::Approx(x) => serde_json::json!(x),
                };
                serde_json::json!({"value": value, "mult": m})
            }).collect::<Vec<_>>(),
        })
    }
}

/// Symmetric floating-point matrix of the requested kind. The normalized
/// Laplacian uses the symmetric form with zero rows at isolated vertices.
fn f64_matrix(g: &Graph, kind: MatrixKind) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    match kind {
        MatrixKind::Adjacency => {
            for (i, j) in g.edges() {
                m[i][j] = 1.0;
                m[j][i] = 1.0;
            }
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let s = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
            for i in 0..n {
                m[i][i] = g.degree(i) as f64;
            }
            for (i, j) in g.edges() {
                m[i][j] = s;
                m[j][i] = s;
            }
        }
        MatrixKind::NormalizedLaplacian => {
            for i in 0..n {
                if g.degree(i) > 0 {
                    m[i][i] = 1.0;
                }
            }
            for (i, j) in g.edges() {
                let v = -1.0 / ((g.degree(i) as f64) * (g.degree(j) as f64)).sqrt();
                m[i][j] = v;
                m[j][i] = v;
            }
        }
    }
    m
}

/// Eigenvalues of the requested matrix by cyclic Jacobi rotations.
pub fn numeric_spectrum(g: &Graph, kind: MatrixKind) -> Spectrum {
    let eig = jacobi::symmetric_eigenvalues(f64_matrix(g, kind));
    Spectrum::from_values(kind, eig.into_iter().map(EigenValue::Approx).collect())
}

/// Transfers an adjacency spectrum of an r-regular graph to the L, Q or NL
/// spectrum: mu = r - lambda, nu = r + lambda, delta = 1 - lambda/r.
pub fn regular_transfer(spec: &Spectrum, r: usize, target: MatrixKind) -> Result<Spectrum> {
    if spec.kind != MatrixKind::Adjacency {
        return Err(Error::Precondition(format!(
            "transfer starts from an adjacency spectrum, got {}",
            spec.kind
        )));
    }
    if target == MatrixKind::NormalizedLaplacian && r == 0 {
        return Err(Error::ZeroDegree("normalized Laplacian transfer needs r >= 1".into()));
    }
    let rr = rat_int(r as i64);
    let mut values = Vec::with_capacity(spec.total_multiplicity());
    for (v, m) in spec.entries() {
        let mapped = match (target, v) {
            (MatrixKind::Adjacency, v) => v.clone(),
            (MatrixKind::Laplacian, EigenValue::Exact(l)) => EigenValue::Exact(&rr - l),
            (MatrixKind::Laplacian, EigenValue::Approx(l)) => EigenValue::Approx(r as f64 - l),
            (MatrixKind::SignlessLaplacian, EigenValue::Exact(l)) => EigenValue::Exact(&rr + l),
            (MatrixKind::SignlessLaplacian, EigenValue::Approx(l)) => {
                EigenValue::Approx(r as f64 + l)
            }
            (MatrixKind::NormalizedLaplacian, EigenValue::Exact(l)) => {
                EigenValue::Exact(Rat::one() - l / &rr)
            }
            (MatrixKind::NormalizedLaplacian, EigenValue::Approx(l)) => {
                EigenValue::Approx(1.0 - l / r as f64)
            }
        };
        for _ in 0..*m {
            values.push(mapped.clone());
        }
    }
    Ok(Spectrum::from_values(target, values))
}

/// All adjacency eigenvalues: integer roots of the exact characteristic
/// polynomial are returned exactly, the rest come from the Jacobi solver.
pub fn adjacency_eigenvalues_hybrid(g: &Graph) -> Result<Vec<EigenValue>> {
    let p = build_matrix(g, MatrixKind::Adjacency).charpoly()?;
    let (int_roots, _rest) = p.deflate_integer_roots(g.n() as i64);
    let mut numeric = jacobi::symmetric_eigenvalues(f64_matrix(g, MatrixKind::Adjacency));
    let mut out = Vec::with_capacity(g.n());
    for k in &int_roots {
        let target = *k as f64;
        let (idx, dev) = numeric
            .iter()
            .enumerate()
            .map(|(i, v)| (i, (v - target).abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).expect("finite"))
            .expect("numeric spectrum has an entry per exact root");
        assert!(dev < 1e-6, "exact root {k} missing from numeric spectrum");
        numeric.remove(idx);
        out.push(EigenValue::exact_int(*k));
    }
    out.extend(numeric.into_iter().map(EigenValue::Approx));
    Ok(out)
}

/// Adjacency eigenvalues of an r-regular graph with one copy of the Perron
/// value r removed: the inputs indexed 2..n in the closed-form families.
fn non_perron_eigenvalues(g: &Graph, r: usize) -> Result<Vec<EigenValue>> {
    let mut vals = adjacency_eigenvalues_hybrid(g)?;
    let perron = rat_int(r as i64);
    let pos = vals
        .iter()
        .position(|v| matches!(v, EigenValue::Exact(e) if *e == perron))
        .expect("a regular graph has its degree as an exact eigenvalue");
    vals.remove(pos);
    Ok(vals)
}

fn require_regular(g: &Graph, which: &str) -> Result<usize> {
    g.regular_degree()
        .ok_or_else(|| Error::NotRegular(format!("{which} must be regular")))
}

/// Monic quadratic x^2 + bx + c with exact coefficients; exact roots when
/// the discriminant is a rational square.
fn quad_roots_exact(b: &Rat, c: &Rat) -> (EigenValue, EigenValue) {
    let disc = b * b - rat_int(4) * c;
    if let Some(s) = rat_sqrt_exact(&disc) {
        let half = crate::algebra::rat(1, 2);
        (
            EigenValue::Exact((&s - b) * &half),
            EigenValue::Exact((-&s - b) * &half),
        )
    } else {
        let bd = rat_to_f64(b);
        let s = rat_to_f64(&disc).max(0.0).sqrt();
        (EigenValue::Approx((-bd + s) / 2.0), EigenValue::Approx((-bd - s) / 2.0))
    }
}

fn quad_roots_f64(b: f64, c: f64) -> (EigenValue, EigenValue) {
    let disc = (b * b - 4.0 * c).max(0.0);
    let s = disc.sqrt();
    (EigenValue::Approx((-b + s) / 2.0), EigenValue::Approx((-b - s) / 2.0))
}

/// The three real roots of c3 x^3 + c2 x^2 + c1 x + c0 with exact rational
/// coefficients. Rational roots are factored out exactly; any remaining
/// quadratic or full cubic is solved by radicals or the trigonometric form.
pub fn solve_cubic_real(c3: &Rat, c2: &Rat, c1: &Rat, c0: &Rat) -> Result<[EigenValue; 3]> {
    if c3.is_zero() {
        return Err(Error::Precondition("cubic needs a nonzero leading coefficient".into()));
    }
    let poly = Poly::new(vec![c0.clone(), c1.clone(), c2.clone(), c3.clone()]);
    let mut p = poly.clone();
    let mut roots: Vec<EigenValue> = Vec::new();
    for r in rational_roots(&p) {
        let (q, rem) = p.divrem(&Poly::x_minus(&r)).expect("nonzero divisor");
        debug_assert!(rem.is_zero());
        p = q;
        roots.push(EigenValue::Exact(r));
        if p.degree() == 0 {
            break;
        }
    }
    match p.degree() {
        0 => {}
        1 => {
            // linear remainder from a double rational root path
            let r = -p.coeff(0) / p.coeff(1);
            roots.push(EigenValue::Exact(r));
        }
        2 => {
            let lead = p.leading();
            let b = p.coeff(1) / &lead;
            let c = p.coeff(0) / &lead;
            let disc = &b * &b - rat_int(4) * &c;
            if disc.is_negative() {
                let residual = rat_to_f64(&disc).abs();
                return Err(Error::ComplexRoots { residual });
            }
            let (x, y) = quad_roots_exact(&b, &c);
            roots.push(x);
            roots.push(y);
        }
        3 => {
            // no rational roots: casus irreducibilis
            let a3 = rat_to_f64(c3);
            let b = rat_to_f64(c2) / a3;
            let c = rat_to_f64(c1) / a3;
            let d = rat_to_f64(c0) / a3;
            let disc = cubic_discriminant(c3, c2, c1, c0);
            if disc.is_negative() {
                return Err(Error::ComplexRoots { residual: rat_to_f64(&disc).abs() });
            }
            let p3 = c - b * b / 3.0;
            let q3 = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
            let shift = -b / 3.0;
            if p3 >= -1e-30 {
                // three real roots with p >= 0 force a triple root
                for _ in 0..3 {
                    roots.push(EigenValue::Approx(shift));
                }
            } else {
                let m = 2.0 * (-p3 / 3.0).sqrt();
                let arg = (3.0 * q3 / (p3 * m)).clamp(-1.0, 1.0);
                let phi = arg.acos();
                for k in 0..3 {
                    let t = m * ((phi - 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos();
                    let mut x = t + shift;
                    for _ in 0..3 {
                        // Newton polish against the exact coefficients
                        let f = poly.eval_f64(x);
                        let df = 3.0 * rat_to_f64(c3) * x * x
                            + 2.0 * rat_to_f64(c2) * x
                            + rat_to_f64(c1);
                        if df.abs() > 1e-12 {
                            x -= f / df;
                        }
                    }
                    roots.push(EigenValue::Approx(x));
                }
            }
        }
        _ => unreachable!("cubic deflation"),
    }
    debug_assert_eq!(roots.len(), 3);
    let scale: f64 = (0..4).map(|k| rat_to_f64(&poly.coeff(k)).abs()).sum::<f64>().max(1.0);
    for r in &roots {
        let x = r.to_f64();
        let residual = poly.eval_f64(x).abs();
        let bound = 1e-10 * scale * x.abs().max(1.0).powi(3);
        if residual > bound {
            return Err(Error::ComplexRoots { residual });
        }
    }
    Ok([roots[0].clone(), roots[1].clone(), roots[2].clone()])
}

fn cubic_discriminant(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    rat_int(18) * a * b * c * d - rat_int(4) * b * b * b * d + b * b * c * c
        - rat_int(4) * a * c * c * c
        - rat_int(27) * a * a * d * d
}

/// Rational roots of a rational-coefficient polynomial, with multiplicity
/// not expanded (each distinct root listed once per extraction round by the
/// caller). Uses the rational root theorem on the integer lift.
fn rational_roots(p: &Poly) -> Vec<Rat> {
    if p.is_zero() || p.degree() == 0 {
        return vec![];
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(Rat::zero());
        return out; // caller deflates and calls again
    }
    let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints.last().unwrap().abs().to_u64())
    else {
        return out; // coefficients too large for the candidate scan
    };
    let mut seen = std::collections::BTreeSet::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Rat::new(BigInt::from(sign) * BigInt::from(num), BigInt::from(den));
                if seen.insert(cand.clone()) && p.eval(&cand).is_zero() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn divisors(v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= v {
        if v % i == 0 {
            out.push(i);
            if i != v / i {
                out.push(v / i);
            }
        }
        i += 1;
    }
    out
}

fn check_counts(n1: usize, n2: usize) -> Result<()> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::Precondition("closed forms need n1 >= 1 and n2 >= 1".into()));
    }
    Ok(())
}

/// Normalized Laplacian spectrum of the NS join of regular graphs.
pub fn ns_normalized_spectrum(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let (n1, n2) = (g1.n(), g2.n());
    check_counts(n1, n2)?;
    let r1 = require_regular(g1, "G1")?;
    let r2 = require_regular(g2, "G2")?;
    if r1 == 0 {
        return Err(Error::ZeroDegree("NS normalized spectrum needs r1 >= 1".into()));
    }
    let (n1i, n2i, r1i, r2i) = (n1 as i64, n2 as i64, r1 as i64, r2 as i64);
    let mut vals = Vec::with_capacity(2 * n1 + n2);
    // family over G2: 1 - lambda/(n1 + r2)
    for lam in non_perron_eigenvalues(g2, r2)? {
        vals.push(match lam {
            EigenValue::Exact(l) => EigenValue::Exact(Rat::one() - l / rat_int(n1i + r2i)),
            EigenValue::Approx(l) => EigenValue::Approx(1.0 - l / (n1i + r2i) as f64),
        });
    }
    // two families over G1 driven by sqrt(9 r1^2 + 4 r1 n2)
    let s2 = rat_int(9 * r1i * r1i + 4 * r1i * n2i);
    let s_exact = rat_sqrt_exact(&s2);
    let denom = rat_int(2 * r1i * (2 * r1i + n2i));
    for lam in non_perron_eigenvalues(g1, r1)? {
        match (&lam, &s_exact) {
            (EigenValue::Exact(l), Some(s)) => {
                vals.push(EigenValue::Exact(
                    Rat::one() - l * (s + rat_int(r1i)) / &denom,
                ));
                vals.push(EigenValue::Exact(
                    Rat::one() + l * (s - rat_int(r1i)) / &denom,
                ));
            }
            _ => {
                let l = lam.to_f64();
                let s = rat_to_f64(&s2).sqrt();
                let d = rat_to_f64(&denom);
                vals.push(EigenValue::Approx(1.0 - l * (s + r1i as f64) / d));
                vals.push(EigenValue::Approx(1.0 + l * (s - r1i as f64) / d));
            }
        }
    }
    let c3 = rat_int(2 * r1i * r2i + 2 * r1i * n1i + n2i * r2i + n1i * n2i);
    let c2 = rat_int(-(3 * r1i * r2i + 5 * r1i * n1i + 2 * r2i * n2i + 3 * n1i * n2i));
    let c1 = rat_int(3 * r1i * n1i + n2i * r2i + 2 * n1i * n2i);
    vals.extend(solve_cubic_real(&c3, &c2, &c1, &Rat::zero())?);
    debug_assert_eq!(vals.len(), 2 * n1 + n2);
    Ok(Spectrum::from_values(MatrixKind::NormalizedLaplacian, vals))
}

/// Adjacency spectrum of the NNS join of regular graphs.
pub fn nns_adjacency_spectrum(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let (n1, n2) = (g1.n(), g2.n());
    check_counts(n1, n2)?;
    let r1 = require_regular(g1, "G1")?;
    let r2 = require_regular(g2, "G2")?;
    let (n1i, n2i, r1i, r2i) = (n1 as i64, n2 as i64, r1 as i64, r2 as i64);
    let m = n1i - r1i - 1;
    let mut vals = non_perron_eigenvalues(g2, r2)?;
    for lam in non_perron_eigenvalues(g1, r1)? {
        let (x, y) = match lam {
            EigenValue::Exact(l) => {
                let b = -l.clone();
                let c = -(&l * &l + rat_int(2) * &l + Rat::one());
                quad_roots_exact(&b, &c)
            }
            EigenValue::Approx(l) => quad_roots_f64(-l, -(l * l + 2.0 * l + 1.0)),
        };
        vals.push(x);
        vals.push(y);
    }
    let c2 = rat_int(-(r1i + r2i));
    let c1 = rat_int(r1i * r2i - m * m - n1i * n2i);
    let c0 = rat_int(r2i * m * m);
    vals.extend(solve_cubic_real(&Rat::one(), &c2, &c1, &c0)?);
    debug_assert_eq!(vals.len(), 2 * n1 + n2);
    Ok(Spectrum::from_values(MatrixKind::Adjacency, vals))
}

/// Laplacian spectrum of the NNS join of regular graphs.
pub fn nns_laplacian_spectrum(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let (n1, n2) = (g1.n(), g2.n());
    check_counts(n1, n2)?;
    let r1 = require_regular(g1, "G1")?;
    let r2 = require_regular(g2, "G2")?;
    let (n1i, n2i, r1i, r2i) = (n1 as i64, n2 as i64, r1 as i64, r2 as i64);
    let mut vals = Vec::with_capacity(2 * n1 + n2);
    for lam in non_perron_eigenvalues(g2, r2)? {
        // n1 + mu with mu = r2 - lambda
        vals.push(match lam {
            EigenValue::Exact(l) => EigenValue::Exact(rat_int(n1i + r2i) - l),
            EigenValue::Approx(l) => EigenValue::Approx((n1i + r2i) as f64 - l),
        });
    }
    let const_part = n1i * n1i - 2 * r1i * n1i - 2 * n1i + n1i * n2i - r1i * n2i - n2i;
    for lam in non_perron_eigenvalues(g1, r1)? {
        let (x, y) = match lam {
            EigenValue::Exact(l) => {
                let mu = rat_int(r1i) - &l;
                let b = rat_int(2 * r1i - 2 * n1i - n2i + 2) - &mu;
                let c = rat_int(const_part) + &mu * (rat_int(n1i + r1i + 1) - &mu);
                quad_roots_exact(&b, &c)
            }
            EigenValue::Approx(l) => {
                let mu = r1i as f64 - l;
                let b = (2 * r1i - 2 * n1i - n2i + 2) as f64 - mu;
                let c = const_part as f64 + mu * ((n1i + r1i + 1) as f64 - mu);
                quad_roots_f64(b, c)
            }
        };
        vals.push(x);
        vals.push(y);
    }
    let c2 = rat_int(2 * r1i - 3 * n1i - n2i + 2);
    let c1 = rat_int(n1i * n2i - n2i * r1i - n2i + 2 * n1i * n1i - 2 * r1i * n1i - 2 * n1i);
    vals.extend(solve_cubic_real(&Rat::one(), &c2, &c1, &Rat::zero())?);
    debug_assert_eq!(vals.len(), 2 * n1 + n2);
    Ok(Spectrum::from_values(MatrixKind::Laplacian, vals))
}

/// Signless Laplacian spectrum of the NNS join of regular graphs.
pub fn nns_signless_spectrum(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let (n1, n2) = (g1.n(), g2.n());
    check_counts(n1, n2)?;
    let r1 = require_regular(g1, "G1")?;
    let r2 = require_regular(g2, "G2")?;
    let (n1i, n2i, r1i, r2i) = (n1 as i64, n2 as i64, r1 as i64, r2 as i64);
    let mut vals = Vec::with_capacity(2 * n1 + n2);
    for lam in non_perron_eigenvalues(g2, r2)? {
        // n1 + nu with nu = r2 + lambda
        vals.push(match lam {
            EigenValue::Exact(l) => EigenValue::Exact(rat_int(n1i + r2i) + l),
            EigenValue::Approx(l) => EigenValue::Approx((n1i + r2i) as f64 + l),
        });
    }
    let const_part =
        n1i * n1i - 2 * r1i * n1i - 2 * n1i + n1i * n2i - r1i * n2i - n2i + 4 * r1i;
    for lam in non_perron_eigenvalues(g1, r1)? {
        let (x, y) = match lam {
            EigenValue::Exact(l) => {
                let nu = rat_int(r1i) + &l;
                let b = rat_int(2 * r1i - 2 * n1i - n2i + 2) - &nu;
                let c = rat_int(const_part) + &nu * (rat_int(n1i + r1i - 3) - &nu);
                quad_roots_exact(&b, &c)
            }
            EigenValue::Approx(l) => {
                let nu = r1i as f64 + l;
                let b = (2 * r1i - 2 * n1i - n2i + 2) as f64 - nu;
                let c = const_part as f64 + nu * ((n1i + r1i - 3) as f64 - nu);
                quad_roots_f64(b, c)
            }
        };
        vals.push(x);
        vals.push(y);
    }
    let c2 = rat_int(2 - 3 * n1i - n2i - 2 * r2i);
    let c1 = rat_int(
        n1i * n2i - n2i * r1i - n2i + 2 * n1i * n1i + 2 * r1i * n1i - 2 * n1i - 2 * r1i
            - 2 * r1i * r1i
            + 4 * r2i * n1i
            - 4 * r2i
            + 2 * r2i * n2i,
    );
    let c0 = rat_int(
        2 * n1i * r1i * r1i + 2 * r1i * n1i - 2 * r1i * n1i * n1i - 2 * r2i * n1i * n2i
            + 2 * r1i * r2i * n2i
            + 2 * r2i * n2i
            + 4 * r2i * r1i * r1i
            + 4 * r1i * r2i
            - 4 * r1i * r2i * n1i,
    );
    vals.extend(solve_cubic_real(&Rat::one(), &c2, &c1, &c0)?);
    debug_assert_eq!(vals.len(), 2 * n1 + n2);
    Ok(Spectrum::from_values(MatrixKind::SignlessLaplacian, vals))
}

/// Index set S of the NNS normalized-Laplacian case split: adjacency
/// eigenvalue -1 of G1, counted with its exact multiplicity.
pub fn split_eig_multiplicity(g1: &Graph) -> Result<usize> {
    let p = build_matrix(g1, MatrixKind::Adjacency).charpoly()?;
    let (roots, _) = p.deflate_integer_roots(g1.n() as i64);
    Ok(roots.iter().filter(|&&k| k == -1).count())
}

/// Normalized Laplacian spectrum of the NNS join of regular graphs,
/// dispatching on whether S is empty, everything, or mixed.
pub fn nns_normalized_spectrum(g1: &Graph, g2: &Graph) -> Result<Spectrum> {
    let (n1, n2) = (g1.n(), g2.n());
    check_counts(n1, n2)?;
    let r1 = require_regular(g1, "G1")?;
    let r2 = require_regular(g2, "G2")?;
    if r1 == 0 {
        return Err(Error::ZeroDegree("NNS normalized spectrum needs r1 >= 1".into()));
    }
    let (n1i, n2i, r1i, r2i) = (n1 as i64, n2 as i64, r1 as i64, r2 as i64);
    let n_s = split_eig_multiplicity(g1)?;
    let mut vals = Vec::with_capacity(2 * n1 + n2);
    // family over G2, common to all cases: 1 - lambda/(n1 + r2)
    for lam in non_perron_eigenvalues(g2, r2)? {
        vals.push(match lam {
            EigenValue::Exact(l) => EigenValue::Exact(Rat::one() - l / rat_int(n1i + r2i)),
            EigenValue::Approx(l) => EigenValue::Approx(1.0 - l / (n1i + r2i) as f64),
        });
    }
    if n_s == n1 - 1 {
        // G1 is complete: the split vertices are isolated
        let bump = Rat::one() + rat_int(1) / rat_int(n1i + n2i - 1);
        for _ in 0..n1 - 1 {
            vals.push(EigenValue::Exact(bump.clone()));
        }
        for _ in 0..n1 + 1 {
            vals.push(EigenValue::exact_int(0));
        }
        vals.push(EigenValue::Exact(Rat::new(
            BigInt::from(n1i * n1i + 2 * n1i * n2i + r2i * n2i - n1i),
            BigInt::from((r2i + n1i) * (n1i + n2i - 1)),
        )));
        debug_assert_eq!(vals.len(), 2 * n1 + n2);
        return Ok(Spectrum::from_values(MatrixKind::NormalizedLaplacian, vals));
    }
    let m = n1i - r1i - 1;
    for lam in non_perron_eigenvalues(g1, r1)? {
        if matches!(&lam, EigenValue::Exact(l) if *l == rat_int(-1)) {
            // split eigenvalue: contributes 1 and 1 + 1/(n1+n2-1)
            vals.push(EigenValue::exact_int(1));
            vals.push(EigenValue::Exact(Rat::one() + rat_int(1) / rat_int(n1i + n2i - 1)));
            continue;
        }
        match &lam {
            EigenValue::Exact(l) => {
                let one_plus = Rat::one() + l;
                let disc = rat_int(m)
                    * (l * l * rat_int(m)
                        + rat_int(4) * &one_plus * &one_plus * rat_int(n1i + n2i - 1));
                let num = rat_int(2) * &one_plus * &one_plus;
                match rat_sqrt_exact(&disc) {
                    Some(s) => {
                        vals.push(EigenValue::Exact(
                            Rat::one() + &num / (l * rat_int(m) - &s),
                        ));
                        vals.push(EigenValue::Exact(
                            Rat::one() + &num / (l * rat_int(m) + &s),
                        ));
                    }
                    None => {
                        let lf = rat_to_f64(l);
                        let sf = rat_to_f64(&disc).sqrt();
                        let numf = rat_to_f64(&num);
                        vals.push(EigenValue::Approx(1.0 + numf / (lf * m as f64 - sf)));
                        vals.push(EigenValue::Approx(1.0 + numf / (lf * m as f64 + sf)));
                    }
                }
            }
            EigenValue::Approx(l) => {
                let one_plus = 1.0 + l;
                let disc = m as f64
                    * (l * l * m as f64 + 4.0 * one_plus * one_plus * (n1i + n2i - 1) as f64);
                let s = disc.max(0.0).sqrt();
                let num = 2.0 * one_plus * one_plus;
                vals.push(EigenValue::Approx(1.0 + num / (l * m as f64 - s)));
                vals.push(EigenValue::Approx(1.0 + num / (l * m as f64 + s)));
            }
        }
    }
    let c3 = rat_int(n1i * n1i + n1i * n2i - n1i + r2i * n1i + r2i * n2i - r2i);
    let c2 = rat_int(
        -(3 * n1i * n1i + 3 * n1i * n2i - 3 * n1i - r1i * n1i + 2 * r2i * n1i + 2 * r2i * n2i
            - 2 * r2i
            - r1i * r2i),
    );
    let c1 = rat_int(2 * n1i * n1i + 2 * n1i * n2i - 2 * n1i - r1i * n1i + r2i * n2i);
    vals.extend(solve_cubic_real(&c3, &c2, &c1, &Rat::zero())?);
    debug_assert_eq!(vals.len(), 2 * n1 + n2);
    Ok(Spectrum::from_values(MatrixKind::NormalizedLaplacian, vals))
}

/// Closed-form spectrum dispatch for the join theorems. NS joins have a
/// closed form here for the normalized Laplacian only; NNS joins cover all
/// four kinds.
pub fn closed_form_spectrum(
    join: JoinKind,
    kind: MatrixKind,
    g1: &Graph,
    g2: &Graph,
) -> Result<Spectrum> {
    match (join, kind) {
        (JoinKind::Ns, MatrixKind::NormalizedLaplacian) => ns_normalized_spectrum(g1, g2),
        (JoinKind::Nns, MatrixKind::Adjacency) => nns_adjacency_spectrum(g1, g2),
        (JoinKind::Nns, MatrixKind::Laplacian) => nns_laplacian_spectrum(g1, g2),
        (JoinKind::Nns, MatrixKind::SignlessLaplacian) => nns_signless_spectrum(g1, g2),
        (JoinKind::Nns, MatrixKind::NormalizedLaplacian) => nns_normalized_spectrum(g1, g2),
        (j, k) => Err(Error::Precondition(format!(
            "no closed form implemented for the {j} join with matrix {k}"
        ))),
    }
}
