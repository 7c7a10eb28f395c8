//! Unit, regularity and ideal-membership decisions by flattening to Z, Q or Z/m.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lattice;
use super::{BaseRing, Elem, QuotientRing, Ring, RingValue};
use crate::error::{Error, Result};

/// A ring that is finite free over one of Z, Q, Z/m (its ground).
pub trait Finite: Ring {
    fn ground(&self) -> Result<BaseRing>;
    fn ground_rank(&self) -> Result<usize>;
    fn ground_coords(&self, a: &Self::Elem) -> Result<Vec<Elem>>;
    fn from_ground_coords(&self, c: &[Elem]) -> Result<Self::Elem>;
    fn ground_basis(&self) -> Result<Vec<Self::Elem>>;
    /// Determinant of multiplication by `a` over the ground.
    fn ground_norm(&self, a: &Self::Elem) -> Result<Elem>;
}

impl Finite for BaseRing {
    fn ground(&self) -> Result<BaseRing> {
        if self.is_square_zero() {
            return Err(Error::UnsupportedRing("the square-zero extension".into()));
        }
        match self.base() {
            Some(b) => b.ground(),
            None => Ok(self.clone()),
        }
    }

    fn ground_rank(&self) -> Result<usize> {
        self.ground()?;
        match self.base() {
            Some(b) => Ok(self.relative_rank() * b.ground_rank()?),
            None => Ok(1),
        }
    }

    fn ground_coords(&self, a: &Elem) -> Result<Vec<Elem>> {
        self.ground()?;
        match self.base() {
            Some(b) => {
                let mut out = Vec::new();
                for c in a.as_vec() {
                    out.extend(b.ground_coords(c)?);
                }
                Ok(out)
            }
            None => Ok(vec![a.clone()]),
        }
    }

    fn from_ground_coords(&self, c: &[Elem]) -> Result<Elem> {
        self.ground()?;
        match self.base() {
            Some(b) => {
                let r = b.ground_rank()?;
                let parts = c.chunks(r).map(|ch| b.from_ground_coords(ch)).collect::<Result<Vec<_>>>()?;
                Ok(Elem::Vec(parts))
            }
            None => Ok(c[0].clone()),
        }
    }

    fn ground_basis(&self) -> Result<Vec<Elem>> {
        self.ground()?;
        match self.base() {
            Some(b) => {
                let inner = b.ground_basis()?;
                let n = self.relative_rank();
                let mut out = Vec::new();
                for i in 0..n {
                    for x in &inner {
                        let mut v = vec![b.zero(); n];
                        v[i] = x.clone();
                        out.push(Elem::Vec(v));
                    }
                }
                Ok(out)
            }
            None => Ok(vec![self.one()]),
        }
    }

    fn ground_norm(&self, a: &Elem) -> Result<Elem> {
        self.ground()?;
        match self.base() {
            Some(b) => b.ground_norm(&self.relative_norm(a)),
            None => Ok(a.clone()),
        }
    }
}

impl<R: Finite> Finite for QuotientRing<R> {
    fn ground(&self) -> Result<BaseRing> {
        self.base().ground()
    }

    fn ground_rank(&self) -> Result<usize> {
        Ok(self.degree() * self.base().ground_rank()?)
    }

    fn ground_coords(&self, a: &Self::Elem) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for c in a {
            out.extend(self.base().ground_coords(c)?);
        }
        Ok(out)
    }

    fn from_ground_coords(&self, c: &[Elem]) -> Result<Self::Elem> {
        let r = self.base().ground_rank()?;
        c.chunks(r).map(|ch| self.base().from_ground_coords(ch)).collect()
    }

    fn ground_basis(&self) -> Result<Vec<Self::Elem>> {
        let inner = self.base().ground_basis()?;
        let d = self.degree();
        let mut out = Vec::new();
        for i in 0..d {
            for x in &inner {
                let mut v = self.zero();
                v[i] = x.clone();
                out.push(v);
            }
        }
        Ok(out)
    }

    fn ground_norm(&self, a: &Self::Elem) -> Result<Elem> {
        self.base().ground_norm(&self.norm(a))
    }
}

fn ground_is_unit(ground: &BaseRing, x: &Elem) -> bool {
    match x {
        Elem::Int(n) => n.abs().is_one(),
        Elem::Rat(q) => !q.is_zero(),
        Elem::Mod(_) => ground.inverse(x).is_some(),
        _ => false,
    }
}

fn ground_is_regular(ground: &BaseRing, x: &Elem) -> bool {
    match ground.residue_modulus() {
        Some(_) if !ground.is_field() => ground_is_unit(ground, x),
        _ => !ground.is_zero(x),
    }
}

pub fn is_unit_in<R: Finite>(ring: &R, a: &R::Elem) -> Result<bool> {
    let g = ring.ground()?;
    Ok(ground_is_unit(&g, &ring.ground_norm(a)?))
}

/// Multiplication by `a` is injective iff its determinant over the ground is regular there.
pub fn is_regular_in<R: Finite>(ring: &R, a: &R::Elem) -> Result<bool> {
    let g = ring.ground()?;
    Ok(ground_is_regular(&g, &ring.ground_norm(a)?))
}

fn to_int(x: &Elem) -> BigInt {
    match x {
        Elem::Int(n) => n.clone(),
        Elem::Mod(r) => BigInt::from(*r),
        _ => panic!("not an integral ground value"),
    }
}

fn to_rat(x: &Elem) -> BigRational {
    match x {
        Elem::Rat(q) => q.clone(),
        Elem::Int(n) => BigRational::from_integer(n.clone()),
        _ => panic!("not a rational ground value"),
    }
}

enum SpanData {
    Int { rows: Vec<Vec<BigInt>>, pivots: Vec<usize> },
    Rat { rows: Vec<Vec<BigRational>>, pivots: Vec<usize> },
}

/// Precomputed additive span of an ideal `{g·b}` over the ground, for repeated membership tests.
pub struct IdealSpan<R: Finite> {
    ring: R,
    data: SpanData,
}

fn span_of(ground: &BaseRing, dim: usize, vectors: &[Vec<Elem>]) -> SpanData {
    match (ground.residue_modulus(), ground.descriptor()) {
        (_, super::RingDescriptor::Rationals) => {
            let rows: Vec<Vec<BigRational>> = vectors.iter().map(|v| v.iter().map(to_rat).collect()).collect();
            let (rows, pivots) = lattice::rref(&rows, dim);
            SpanData::Rat { rows, pivots }
        }
        (m, _) => {
            let mut rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.iter().map(to_int).collect()).collect();
            if let Some(m) = m {
                for i in 0..dim {
                    let mut r = vec![BigInt::zero(); dim];
                    r[i] = BigInt::from(m);
                    rows.push(r);
                }
            }
            let rows = lattice::hnf(&rows, dim);
            let pivots = lattice::pivot_columns(&rows);
            SpanData::Int { rows, pivots }
        }
    }
}

impl<R: Finite> IdealSpan<R> {
    pub fn new(ring: &R, gens: &[R::Elem]) -> Result<Self> {
        let ground = ring.ground()?;
        let dim = ring.ground_rank()?;
        let basis = ring.ground_basis()?;
        let mut vectors = Vec::new();
        for g in gens {
            if ring.is_zero(g) {
                continue;
            }
            for b in &basis {
                vectors.push(ring.ground_coords(&ring.mul(g, b))?);
            }
        }
        Ok(IdealSpan { ring: ring.clone(), data: span_of(&ground, dim, &vectors) })
    }

    pub fn contains(&self, target: &R::Elem) -> Result<bool> {
        let v = self.ring.ground_coords(target)?;
        Ok(match &self.data {
            SpanData::Int { rows, pivots } => {
                let v: Vec<BigInt> = v.iter().map(to_int).collect();
                lattice::echelon_solve(rows, pivots, &v).is_some()
            }
            SpanData::Rat { rows, pivots } => {
                let v: Vec<BigRational> = v.iter().map(to_rat).collect();
                lattice::rref_contains(rows, pivots, &v)
            }
        })
    }
}

pub fn ideal_membership_in<R: Finite>(ring: &R, target: &R::Elem, gens: &[R::Elem]) -> Result<bool> {
    IdealSpan::new(ring, gens)?.contains(target)
}

/// Ground-spanning set of `ann(a) = {y : a·y = 0}`.
pub fn annihilator_basis<R: Finite>(ring: &R, a: &R::Elem) -> Result<Vec<R::Elem>> {
    let ground = ring.ground()?;
    let dim = ring.ground_rank()?;
    let basis = ring.ground_basis()?;
    let images: Vec<Vec<Elem>> = basis.iter().map(|b| ring.ground_coords(&ring.mul(a, b))).collect::<Result<_>>()?;
    let n = basis.len();
    let kernel: Vec<Vec<Elem>> = if matches!(ground.descriptor(), super::RingDescriptor::Rationals) {
        let rows: Vec<Vec<BigRational>> = images.iter().map(|v| v.iter().map(to_rat).collect()).collect();
        lattice::left_kernel_q(&rows, dim)
            .into_iter()
            .map(|y| y.into_iter().map(Elem::Rat).collect())
            .collect()
    } else {
        let mut rows: Vec<Vec<BigInt>> = images.iter().map(|v| v.iter().map(to_int).collect()).collect();
        if let Some(m) = ground.residue_modulus() {
            for i in 0..dim {
                let mut r = vec![BigInt::zero(); dim];
                r[i] = BigInt::from(m);
                rows.push(r);
            }
        }
        let h = lattice::hermite(&rows, dim);
        h.kernel()
            .iter()
            .map(|y| y[..n].iter().map(|c| ground.from_int(c)).collect())
            .collect()
    };
    kernel
        .iter()
        .map(|y| {
            let mut acc = ring.zero();
            for (c, b) in y.iter().zip(&basis) {
                let coords: Vec<Elem> = ring.ground_coords(b)?.iter().map(|x| ground.mul(x, c)).collect();
                acc = ring.add(&acc, &ring.from_ground_coords(&coords)?);
            }
            Ok(acc)
        })
        .collect()
}

pub fn is_unit(r: &RingValue) -> Result<bool> {
    is_unit_in(r.ring(), r.elem())
}

pub fn is_regular(r: &RingValue) -> Result<bool> {
    is_regular_in(r.ring(), r.elem())
}

pub fn ideal_membership(target: &RingValue, gens: &[RingValue]) -> Result<bool> {
    let ring = target.ring();
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::BaseMismatch);
    }
    let g: Vec<Elem> = gens.iter().map(|g| g.elem().clone()).collect();
    ideal_membership_in(ring, target.elem(), &g)
}

/// `idem` is idempotent and generates the same ideal as `r`.
pub fn verify_split(r: &RingValue, idem: &RingValue) -> Result<bool> {
    let ring = r.ring();
    if idem.ring() != ring {
        return Err(Error::BaseMismatch);
    }
    ring.ground()?;
    let e = idem.elem();
    if ring.mul(e, e) != *e {
        return Ok(false);
    }
    Ok(ideal_membership_in(ring, r.elem(), std::slice::from_ref(e))?
        && ideal_membership_in(ring, e, std::slice::from_ref(r.elem()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FinAbGroup;

    fn zv() -> BaseRing {
        BaseRing::group_ring(&BaseRing::integers(), &FinAbGroup::new(vec![2]).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let k = zv();
        let v = k.value(k.group_element(1).unwrap());
        let one = RingValue::from_int(&k, 1);
        let two = RingValue::from_int(&k, 2);
        assert!(is_unit(&one).unwrap());
        assert!(!is_unit(&(&one + &v)).unwrap());
        assert!(is_unit(&v).unwrap());
        assert!(!is_regular(&(&one + &v)).unwrap());
        assert!(is_regular(&two).unwrap());
        assert!(ideal_membership(&two, &[&one - &v, &one + &v]).unwrap());
        assert!(!ideal_membership(&(&one + &v), &[&one - &v]).unwrap());
        let z6 = BaseRing::integers_mod(6).unwrap();
        let four = RingValue::from_int(&z6, 4);
        assert!(verify_split(&four, &four).unwrap());
        let sq = BaseRing::square_zero_f2();
        assert!(is_unit(&RingValue::from_int(&sq, 1)).is_err());
    }

    #[test]
    fn annihilator_of_one_plus_v() {
        let k = zv();
        let v = k.group_element(1).unwrap();
        let a = k.add(&k.one(), &v);
        let ann = annihilator_basis(&k, &a).unwrap();
        assert_eq!(ann.len(), 1);
        assert_eq!(k.mul(&ann[0], &a), k.zero());
        let target = k.sub(&k.one(), &v);
        assert!(ideal_membership_in(&k, &target, &ann).unwrap());
    }
}
