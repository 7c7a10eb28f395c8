use std::sync::Arc;

use num_bigint::BigInt;

use super::matrix::{adjugate_apply, charpoly, Matrix};
use super::poly;
use super::{Algebra, BaseRing, Elem, Ring};
use crate::error::{Error, Result};

#[derive(Debug)]
struct QInner<R: Ring> {
    base: R,
    modulus: Vec<R::Elem>,
    var: String,
}

/// `R[var]/(m)` for a polynomial `m` with leading coefficient one; elements are coefficient
/// vectors of length `deg m`.
#[derive(Debug)]
pub struct QuotientRing<R: Ring> {
    inner: Arc<QInner<R>>,
}

impl<R: Ring> Clone for QuotientRing<R> {
    fn clone(&self) -> Self {
        QuotientRing { inner: self.inner.clone() }
    }
}

impl<R: Ring> QuotientRing<R> {
    pub fn new(base: &R, modulus: Vec<R::Elem>, var: &str) -> Result<Self> {
        let modulus = poly::trimmed(base, modulus);
        if modulus.len() < 2 || modulus.last() != Some(&base.one()) {
            return Err(Error::InvalidRing("modulus must be monic of degree at least one".into()));
        }
        Ok(QuotientRing { inner: Arc::new(QInner { base: base.clone(), modulus, var: var.to_string() }) })
    }

    pub fn base(&self) -> &R {
        &self.inner.base
    }

    pub fn modulus(&self) -> &[R::Elem] {
        &self.inner.modulus
    }

    pub fn degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn variable(&self) -> &str {
        &self.inner.var
    }

    pub fn reduce(&self, p: &[R::Elem]) -> Vec<R::Elem> {
        poly::reduce_monic(&self.inner.base, p, &self.inner.modulus)
    }

    /// Class of the variable.
    pub fn generator(&self) -> Vec<R::Elem> {
        let b = self.base();
        self.reduce(&[b.zero(), b.one()])
    }

    pub fn constant(&self, c: &R::Elem) -> Vec<R::Elem> {
        let mut v = vec![self.base().zero(); self.degree()];
        v[0] = c.clone();
        v
    }

    /// Matrix of multiplication by `a` on the basis `1, var, …, var^{d−1}`.
    pub fn mul_matrix(&self, a: &[R::Elem]) -> Matrix<R::Elem> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut cur = a.to_vec();
        let g = self.generator();
        for j in 0..d {
            if j > 0 {
                cur = self.mul(&cur, &g);
            }
            cols.push(cur.clone());
        }
        Matrix::from_fn(d, d, |i, j| cols[j][i].clone())
    }

    pub fn charpoly_of(&self, a: &[R::Elem]) -> Vec<R::Elem> {
        charpoly(self.base(), &self.mul_matrix(a)).expect("square")
    }

    pub fn norm(&self, a: &[R::Elem]) -> R::Elem {
        let c = self.charpoly_of(a);
        if self.degree() % 2 == 0 {
            c[0].clone()
        } else {
            self.base().neg(&c[0])
        }
    }

    pub fn trace(&self, a: &[R::Elem]) -> R::Elem {
        let m = self.mul_matrix(a);
        self.base().sum((0..m.rows()).map(|i| m.get(i, i)))
    }

    /// Coefficientwise image under a ring map of the base.
    pub fn map_coeffs<S: Ring>(&self, target: &QuotientRing<S>, a: &[R::Elem], f: impl Fn(&R::Elem) -> S::Elem) -> Vec<S::Elem> {
        let mapped: Vec<S::Elem> = a.iter().map(f).collect();
        target.reduce(&mapped)
    }
}

impl<R: Ring> Ring for QuotientRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base().zero(); self.degree()]
    }

    fn one(&self) -> Self::Elem {
        self.constant(&self.base().one())
    }

    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.constant(&self.base().from_int(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = self.base();
        a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        let r = self.base();
        a.iter().map(|x| r.neg(x)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = self.base();
        a.iter().zip(b).map(|(x, y)| r.sub(x, y)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = self.base();
        let d = self.degree();
        let mut prod = vec![r.zero(); 2 * d];
        let mut any = false;
        for (i, x) in a.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if r.is_zero(y) {
                    continue;
                }
                prod[i + j] = r.add(&prod[i + j], &r.mul(x, y));
                any = true;
            }
        }
        if !any {
            return self.zero();
        }
        self.reduce(&prod)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        let r = self.base();
        a.iter().all(|x| r.is_zero(x))
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let base = self.base();
        let m = self.mul_matrix(a);
        let c = charpoly(base, &m).expect("square");
        let n = m.rows();
        let det = if n % 2 == 0 { c[0].clone() } else { base.neg(&c[0]) };
        let dinv = base.inverse(&det)?;
        let mut e0 = vec![base.zero(); n];
        e0[0] = base.one();
        let adj = adjugate_apply(base, &m, &c, &e0);
        Some(adj.iter().map(|x| base.mul(x, &dinv)).collect())
    }

    fn render(&self, a: &Self::Elem) -> String {
        poly::render(self.base(), a, self.variable())
    }
}

impl<R: Algebra> Algebra for QuotientRing<R> {
    fn scalars(&self) -> &BaseRing {
        self.base().scalars()
    }

    fn embed(&self, c: &Elem) -> Self::Elem {
        self.constant(&self.base().embed(c))
    }

    fn scale(&self, c: &Elem, a: &Self::Elem) -> Self::Elem {
        let b = self.base();
        a.iter().map(|x| if b.is_zero(x) { x.clone() } else { b.scale(c, x) }).collect()
    }
}

impl Algebra for BaseRing {
    fn scalars(&self) -> &BaseRing {
        self
    }

    fn embed(&self, c: &Elem) -> Elem {
        c.clone()
    }

    fn scale(&self, c: &Elem, a: &Elem) -> Elem {
        self.mul(c, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_series_inverse() {
        let q = BaseRing::rationals();
        let r = QuotientRing::new(&q, vec![q.zero(), q.zero(), q.zero(), q.one()], "t").unwrap();
        let one_minus_t = r.sub(&r.one(), &r.generator());
        let inv = r.inverse(&one_minus_t).unwrap();
        assert_eq!(inv, vec![q.one(), q.one(), q.one()]);
        assert!(r.inverse(&r.generator()).is_none());
        assert_eq!(r.norm(&one_minus_t), q.one());
    }
}
