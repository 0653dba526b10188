//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use super::rat::{parse_rat, rat_to_f64, rat_to_string, Rat};
use crate::error::{Error, Result};

/// Polynomial in one variable; `coeffs[k]` is the coefficient of `x^k`.
/// No trailing zeros except for the zero polynomial (empty coefficient list).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// x - c
    pub fn x_minus(c: &Rat) -> Self {
        Poly::new(vec![-c.clone(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Quotient and remainder with respect to a nonzero divisor.
    pub fn divrem(&self, den: &Poly) -> Result<(Poly, Poly)> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let d = den.degree();
        if self.is_zero() || self.degree() < d {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let lead = den.leading();
        let mut quot = vec![Rat::zero(); rem.len() - d];
        while rem.len() >= d + 1 {
            let k = rem.len() - 1 - d;
            let q = rem.last().unwrap() / &lead;
            for (i, c) in den.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = q;
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor via the subresultant scheme over an
    /// integer lift, which keeps intermediate coefficients from exploding.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_primitive(self);
        let mut b = int_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.len() - b.len();
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return Poly::one();
            }
            a = b;
            let mut div = &g * pow_big(&h, delta as u32);
            if div.is_zero() {
                div = BigInt::one();
            }
            b = r.into_iter().map(|c| &c / &div).collect();
            g = a.last().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                // h^{1-delta} g^delta, kept integral by the subresultant theory
                let num = pow_big(&g, delta as u32);
                let den = pow_big(&h, (delta - 1) as u32);
                &num / &den
            };
        }
        let prim = primitive_part(&b);
        Poly::new(prim.into_iter().map(Rat::from_integer).collect()).monic()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    /// Removes every factor (x - k) with integer k, returning the roots
    /// (with multiplicity) and the deflated quotient.
    ///
    /// For monic integer-coefficient polynomials this extracts all rational
    /// roots. `bound` limits the root search to |k| <= bound.
    pub fn deflate_integer_roots(&self, bound: i64) -> (Vec<i64>, Poly) {
        let mut roots = Vec::new();
        let mut p = self.clone();
        let mut k = -bound;
        while k <= bound && p.degree() >= 1 {
            let kr = Rat::from_integer(BigInt::from(k));
            if p.eval(&kr).is_zero() {
                let (q, r) = p.divrem(&Poly::x_minus(&kr)).expect("nonzero divisor");
                debug_assert!(r.is_zero());
                p = q;
                roots.push(k);
                // stay on the same k: it may be a repeated root
            } else {
                k += 1;
            }
        }
        (roots, p)
    }

    /// Serializes as {"coeffs": ["p/q", ...]} lowest degree first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Poly> {
        let arr = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Dimension("polynomial JSON must have a coeffs array".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            let s = c
                .as_str()
                .ok_or_else(|| Error::Dimension("polynomial coefficients must be strings".into()))?;
            coeffs.push(
                parse_rat(s).ok_or_else(|| Error::Dimension(format!("bad rational `{s}`")))?,
            );
        }
        Ok(Poly::new(coeffs))
    }
}

fn pow_big(b: &BigInt, e: u32) -> BigInt {
    b.pow(e)
}

/// Clears denominators and divides by the content.
fn int_primitive(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    primitive_part(&ints)
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in v {
        g = num::integer::gcd(g, c.abs());
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder lb^(da-db+1) * a mod b of integer polynomials
/// (coefficients ascending). The full multiplier is applied even when the
/// degree drops by more than one per step, so the subresultant divisions
/// downstream stay exact.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let e = (a.len() - 1) - db + 1;
    let mut r: Vec<BigInt> = a.to_vec();
    let mut count = 0usize;
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let k = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &lr * bc;
        }
        count += 1;
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    for _ in count..e {
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = rat_to_string(c);
            terms.push(match k {
                0 => cs,
                1 if c.is_one() => "x".into(),
                1 => format!("{cs}*x"),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("{cs}*x^{k}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Unique polynomial of degree < points.len() through the given nodes.
pub fn interpolate(points: &[(Rat, Rat)]) -> Result<Poly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::DuplicateNode(rat_to_string(xi)));
            }
        }
    }
    // Newton's divided differences.
    let n = points.len();
    let mut coef: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            coef[i] = num / den;
        }
    }
    let mut p = Poly::zero();
    let mut basis = Poly::one();
    for i in 0..n {
        p = &p + &basis.scale(&coef[i]);
        basis = &basis * &Poly::x_minus(&points[i].0);
    }
    Ok(p)
}
