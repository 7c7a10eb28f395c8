//! Dense univariate polynomials as ascending coefficient vectors over any [`Ring`].

use std::fmt;

use crate::error::{Error, Result};

use super::{Algebra, BaseRing, Elem, Ring};

pub fn trim<R: Ring>(ring: &R, p: &mut Vec<R::Elem>) {
    while p.last().is_some_and(|c| ring.is_zero(c)) {
        p.pop();
    }
}

pub fn trimmed<R: Ring>(ring: &R, mut p: Vec<R::Elem>) -> Vec<R::Elem> {
    trim(ring, &mut p);
    p
}

pub fn degree<R: Ring>(ring: &R, p: &[R::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !ring.is_zero(c))
}

pub fn add<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let z = ring.zero();
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).unwrap_or(&z);
            let y = b.get(i).unwrap_or(&z);
            ring.add(x, y)
        })
        .collect();
    trimmed(ring, out)
}

pub fn neg<R: Ring>(ring: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|c| ring.neg(c)).collect()
}

pub fn sub<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    add(ring, a, &neg(ring, b))
}

pub fn scale<R: Ring>(ring: &R, c: &R::Elem, a: &[R::Elem]) -> Vec<R::Elem> {
    trimmed(ring, a.iter().map(|x| ring.mul(c, x)).collect())
}

pub fn mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if ring.is_zero(y) {
                continue;
            }
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    trimmed(ring, out)
}

pub fn pow<R: Ring>(ring: &R, a: &[R::Elem], e: u64) -> Vec<R::Elem> {
    let mut acc = vec![ring.one()];
    for _ in 0..e {
        acc = mul(ring, &acc, a);
    }
    acc
}

/// Remainder of `a` modulo a polynomial whose leading coefficient is one, padded to `deg m`.
pub fn reduce_monic<R: Ring>(ring: &R, a: &[R::Elem], m: &[R::Elem]) -> Vec<R::Elem> {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() > d {
        for top in (d..r.len()).rev() {
            let c = r[top].clone();
            if ring.is_zero(&c) {
                continue;
            }
            for (k, mk) in m.iter().enumerate().take(d) {
                if ring.is_zero(mk) {
                    continue;
                }
                let idx = top - d + k;
                r[idx] = ring.sub(&r[idx], &ring.mul(&c, mk));
            }
            r[top] = ring.zero();
        }
        r.truncate(d);
    }
    r.resize(d, ring.zero());
    r
}

/// `a = q·b + r` with `deg r < deg b`; the leading coefficient of `b` must be a unit.
pub fn divmod<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<(Vec<R::Elem>, Vec<R::Elem>)> {
    let b = trimmed(ring, b.to_vec());
    let Some(db) = b.len().checked_sub(1) else {
        return Err(Error::NonUnitLeadingCoefficient);
    };
    let inv = ring.inverse(&b[db]).ok_or(Error::NonUnitLeadingCoefficient)?;
    let mut r = trimmed(ring, a.to_vec());
    if r.len() <= db {
        return Ok((vec![], r));
    }
    let mut q = vec![ring.zero(); r.len() - db];
    for top in (db..r.len()).rev() {
        let c = ring.mul(&r[top], &inv);
        if ring.is_zero(&c) {
            continue;
        }
        q[top - db] = c.clone();
        for (k, bk) in b.iter().enumerate() {
            let idx = top - db + k;
            r[idx] = ring.sub(&r[idx], &ring.mul(&c, bk));
        }
    }
    r.truncate(db);
    Ok((trimmed(ring, q), trimmed(ring, r)))
}

/// Exact quotient, or `None` when the remainder is nonzero.
pub fn div_exact<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
    let (q, r) = divmod(ring, a, b)?;
    Ok(r.is_empty().then_some(q))
}

pub fn eval<R: Ring>(ring: &R, p: &[R::Elem], x: &R::Elem) -> R::Elem {
    p.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

/// Evaluates a polynomial with menu-ring coefficients at an element of an algebra.
pub fn eval_in<T: Algebra>(target: &T, p: &[Elem], x: &T::Elem) -> T::Elem {
    let mut acc = target.zero();
    let mut first = true;
    for c in p.iter().rev() {
        if first {
            acc = target.embed(c);
            first = false;
        } else {
            acc = target.add(&target.mul(&acc, x), &target.embed(c));
        }
    }
    acc
}

/// `p(q(x))`.
pub fn compose<R: Ring>(ring: &R, p: &[R::Elem], q: &[R::Elem]) -> Vec<R::Elem> {
    let mut acc: Vec<R::Elem> = vec![];
    for c in p.iter().rev() {
        acc = add(ring, &mul(ring, &acc, q), &[c.clone()]);
    }
    acc
}

pub fn derivative<R: Ring>(ring: &R, p: &[R::Elem]) -> Vec<R::Elem> {
    trimmed(ring, p.iter().enumerate().skip(1).map(|(i, c)| ring.mul(&ring.int(i as i64), c)).collect())
}

pub fn render<R: Ring>(ring: &R, p: &[R::Elem], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        let s = ring.render(c);
        let compound = s[1..].contains(['+', '-']);
        let coeff = if compound { format!("({s})") } else { s };
        terms.push(match i {
            0 => coeff,
            _ => {
                let mono = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                match coeff.as_str() {
                    "1" => mono,
                    "-1" => format!("-{mono}"),
                    _ => format!("{coeff}*{mono}"),
                }
            }
        });
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

/// A polynomial over a menu ring, ascending coefficients without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: BaseRing,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(ring: &BaseRing, coeffs: Vec<Elem>) -> Self {
        Poly { ring: ring.clone(), coeffs: trimmed(ring, coeffs) }
    }

    pub fn from_ints(ring: &BaseRing, coeffs: &[i64]) -> Self {
        Self::new(ring, coeffs.iter().map(|&c| ring.int(c)).collect())
    }

    pub fn zero(ring: &BaseRing) -> Self {
        Self::new(ring, vec![])
    }

    pub fn x(ring: &BaseRing) -> Self {
        Self::new(ring, vec![ring.zero(), ring.one()])
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == self.ring.one())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: add(&self.ring, &self.coeffs, &other.coeffs) }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: sub(&self.ring, &self.coeffs, &other.coeffs) }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: mul(&self.ring, &self.coeffs, &other.coeffs) }
    }

    pub fn neg(&self) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: neg(&self.ring, &self.coeffs) }
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: scale(&self.ring, c, &self.coeffs) }
    }

    pub fn pow(&self, e: u64) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: trimmed(&self.ring, pow(&self.ring, &self.coeffs, e)) }
    }

    pub fn derivative(&self) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: derivative(&self.ring, &self.coeffs) }
    }

    pub fn compose(&self, inner: &Poly) -> Poly {
        Poly { ring: self.ring.clone(), coeffs: compose(&self.ring, &self.coeffs, &inner.coeffs) }
    }

    pub fn eval(&self, x: &Elem) -> Elem {
        eval(&self.ring, &self.coeffs, x)
    }

    pub fn divmod(&self, den: &Poly) -> Result<(Poly, Poly)> {
        let (q, r) = divmod(&self.ring, &self.coeffs, &den.coeffs)?;
        Ok((Poly { ring: self.ring.clone(), coeffs: q }, Poly { ring: self.ring.clone(), coeffs: r }))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.ring, &self.coeffs, "x"))
    }
}

pub fn poly_divmod(num: &Poly, den: &Poly) -> Result<(Poly, Poly)> {
    num.divmod(den)
}
