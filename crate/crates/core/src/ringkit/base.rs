use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{adjugate_apply, charpoly, Matrix};
use super::poly;
use super::sqzero::SqZero;
use super::Ring;
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};

/// Element payload for every menu ring; canonical so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Vec(Vec<Elem>),
    Sq(SqZero),
}

impl Elem {
    pub fn as_vec(&self) -> &[Elem] {
        match self {
            Elem::Vec(v) => v,
            _ => panic!("expected a coefficient vector"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    IntegersMod(u64),
    PrimeField(u64),
    GroupRing { base: Box<RingDescriptor>, group: FinAbGroup },
    PolyQuotient { base: Box<RingDescriptor>, modulus: Vec<Elem> },
    SquareZeroF2,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::IntegersMod(m) => write!(f, "Z/{m}"),
            RingDescriptor::PrimeField(p) => write!(f, "F{p}"),
            RingDescriptor::GroupRing { base, group } => {
                let fs: Vec<String> = group.factors().iter().map(|d| d.to_string()).collect();
                write!(f, "{base}[{}]", fs.join(","))
            }
            RingDescriptor::PolyQuotient { base, modulus } => write!(f, "{base}[t]/({} terms)", modulus.len()),
            RingDescriptor::SquareZeroF2 => write!(f, "F2[e]+M"),
        }
    }
}

pub const UNIT_SYMBOLS: [&str; 7] = ["v", "w", "z", "s", "r", "q", "p"];

#[derive(Debug)]
enum Kind {
    Int,
    Rat,
    Mod(u64),
    Group { base: BaseRing, group: FinAbGroup, table: Vec<Vec<usize>> },
    PolyQuot { base: BaseRing, modulus: Vec<Elem>, var: String },
    Sq,
}

#[derive(Debug)]
struct Inner {
    desc: RingDescriptor,
    kind: Kind,
}

/// A ring from the fixed menu. Cheap to clone.
#[derive(Clone, Debug)]
pub struct BaseRing(Arc<Inner>);

impl PartialEq for BaseRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for BaseRing {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    if !e.gcd.is_one() {
        return None;
    }
    let mb = BigInt::from(m);
    Some(((e.x % &mb + &mb) % &mb).to_u64().expect("reduced"))
}

impl BaseRing {
    fn make(desc: RingDescriptor, kind: Kind) -> Self {
        BaseRing(Arc::new(Inner { desc, kind }))
    }

    pub fn integers() -> Self {
        Self::make(RingDescriptor::Integers, Kind::Int)
    }

    pub fn rationals() -> Self {
        Self::make(RingDescriptor::Rationals, Kind::Rat)
    }

    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidRing(format!("modulus {m} is below 2")));
        }
        Ok(Self::make(RingDescriptor::IntegersMod(m), Kind::Mod(m)))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Self::make(RingDescriptor::PrimeField(p), Kind::Mod(p)))
    }

    pub fn square_zero_f2() -> Self {
        Self::make(RingDescriptor::SquareZeroF2, Kind::Sq)
    }

    /// `base[G]`, with `base` one of Z, Q, F_p.
    pub fn group_ring(base: &BaseRing, group: &FinAbGroup) -> Result<Self> {
        match base.0.kind {
            Kind::Int | Kind::Rat => {}
            Kind::Mod(_) if matches!(base.0.desc, RingDescriptor::PrimeField(_)) => {}
            _ => return Err(Error::InvalidRing("group rings need Z, Q or a prime field".into())),
        }
        if group.rank() > UNIT_SYMBOLS.len() {
            return Err(Error::InvalidRing("too many group factors".into()));
        }
        let elems: Vec<_> = group.elements().collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| group.index(&group.add(a, b)) as usize).collect())
            .collect();
        let desc = RingDescriptor::GroupRing { base: Box::new(base.0.desc.clone()), group: group.clone() };
        Ok(Self::make(desc, Kind::Group { base: base.clone(), group: group.clone(), table }))
    }

    /// `base[var]/(modulus)` for a monic modulus of degree at least one.
    pub fn poly_quotient(base: &BaseRing, modulus: Vec<Elem>, var: &str) -> Result<Self> {
        if matches!(base.0.kind, Kind::Sq) {
            return Err(Error::UnsupportedRing("square-zero extension".into()));
        }
        let modulus = poly::trimmed(base, modulus);
        if modulus.len() < 2 || modulus.last() != Some(&base.one()) {
            return Err(Error::InvalidRing("modulus must be monic of degree at least one".into()));
        }
        let desc = RingDescriptor::PolyQuotient { base: Box::new(base.0.desc.clone()), modulus: modulus.clone() };
        Ok(Self::make(desc, Kind::PolyQuot { base: base.clone(), modulus, var: var.to_string() }))
    }

    pub fn new(desc: &RingDescriptor) -> Result<Self> {
        match desc {
            RingDescriptor::Integers => Ok(Self::integers()),
            RingDescriptor::Rationals => Ok(Self::rationals()),
            RingDescriptor::IntegersMod(m) => Self::integers_mod(*m),
            RingDescriptor::PrimeField(p) => Self::prime_field(*p),
            RingDescriptor::SquareZeroF2 => Ok(Self::square_zero_f2()),
            RingDescriptor::GroupRing { base, group } => Self::group_ring(&Self::new(base)?, group),
            RingDescriptor::PolyQuotient { base, modulus } => {
                let b = Self::new(base)?;
                let var = if b.depth() == 0 { "t".to_string() } else { format!("t{}", b.depth()) };
                Self::poly_quotient(&b, modulus.clone(), &var)
            }
        }
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.desc
    }

    fn depth(&self) -> usize {
        match &self.0.kind {
            Kind::PolyQuot { base, .. } | Kind::Group { base, .. } => 1 + base.depth(),
            _ => 0,
        }
    }

    /// The ring directly below an extension kind.
    pub fn base(&self) -> Option<&BaseRing> {
        match &self.0.kind {
            Kind::Group { base, .. } | Kind::PolyQuot { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn group(&self) -> Option<&FinAbGroup> {
        match &self.0.kind {
            Kind::Group { group, .. } => Some(group),
            _ => None,
        }
    }

    pub fn modulus(&self) -> Option<&[Elem]> {
        match &self.0.kind {
            Kind::PolyQuot { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    pub fn variable(&self) -> Option<&str> {
        match &self.0.kind {
            Kind::PolyQuot { var, .. } => Some(var),
            _ => None,
        }
    }

    pub fn is_square_zero(&self) -> bool {
        matches!(self.0.kind, Kind::Sq)
    }

    pub fn is_field(&self) -> bool {
        matches!(self.0.desc, RingDescriptor::Rationals | RingDescriptor::PrimeField(_))
    }

    /// Modulus of a residue ring, if any.
    pub fn residue_modulus(&self) -> Option<u64> {
        match self.0.kind {
            Kind::Mod(m) => Some(m),
            _ => None,
        }
    }

    /// Rank over the ring directly below (1 for the ground kinds).
    pub fn relative_rank(&self) -> usize {
        match &self.0.kind {
            Kind::Group { group, .. } => group.order() as usize,
            Kind::PolyQuot { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// `[g]` in a group ring, by canonical element index.
    pub fn group_element(&self, index: usize) -> Option<Elem> {
        match &self.0.kind {
            Kind::Group { base, group, .. } => {
                let mut v = vec![base.zero(); group.order() as usize];
                *v.get_mut(index)? = base.one();
                Some(Elem::Vec(v))
            }
            _ => None,
        }
    }

    /// Class of the adjoined variable of a polynomial quotient.
    pub fn generator(&self) -> Option<Elem> {
        match &self.0.kind {
            Kind::PolyQuot { base, modulus, .. } => {
                Some(Elem::Vec(poly::reduce_monic(base, &[base.zero(), base.one()], modulus)))
            }
            _ => None,
        }
    }

    /// Builds an element of an extension from coordinates over the ring below.
    pub fn from_coords(&self, coords: Vec<Elem>) -> Result<Elem> {
        match &self.0.kind {
            Kind::Group { group, .. } if coords.len() == group.order() as usize => Ok(Elem::Vec(coords)),
            Kind::PolyQuot { base, modulus, .. } => Ok(Elem::Vec(poly::reduce_monic(base, &coords, modulus))),
            _ => Err(Error::DimensionMismatch("coordinates do not fit the ring".into())),
        }
    }

    /// Maps `e ∈ src` into `self` when `self` is reached from `src` by extensions.
    pub fn lift_from(&self, src: &BaseRing, e: &Elem) -> Option<Elem> {
        if self == src {
            return Some(e.clone());
        }
        match &self.0.kind {
            Kind::Group { base, .. } | Kind::PolyQuot { base, .. } => {
                let inner = base.lift_from(src, e)?;
                let mut v = vec![base.zero(); self.relative_rank()];
                v[0] = inner;
                Some(Elem::Vec(v))
            }
            _ => None,
        }
    }

    /// Whether `src` is this ring or lies below it in an extension chain.
    pub fn extends(&self, src: &BaseRing) -> bool {
        self == src || self.base().is_some_and(|b| b.extends(src))
    }

    /// Checks that `e` is a canonical element of this ring.
    pub fn contains(&self, e: &Elem) -> bool {
        match (&self.0.kind, e) {
            (Kind::Int, Elem::Int(_)) | (Kind::Rat, Elem::Rat(_)) => true,
            (Kind::Mod(m), Elem::Mod(r)) => r < m,
            (Kind::Group { base, group, .. }, Elem::Vec(v)) => {
                v.len() == group.order() as usize && v.iter().all(|c| base.contains(c))
            }
            (Kind::PolyQuot { base, modulus, .. }, Elem::Vec(v)) => {
                v.len() == modulus.len() - 1 && v.iter().all(|c| base.contains(c))
            }
            (Kind::Sq, Elem::Sq(s)) => !s.module.contains(&0),
            _ => false,
        }
    }

    pub fn value(&self, e: Elem) -> RingValue {
        RingValue { ring: self.clone(), elem: e }
    }

    fn mul_matrix(&self, a: &Elem) -> Matrix<Elem> {
        let base = self.base().expect("extension kind");
        let n = self.relative_rank();
        let cols: Vec<Vec<Elem>> = (0..n)
            .map(|j| {
                let mut b = vec![base.zero(); n];
                b[j] = base.one();
                self.mul(a, &Elem::Vec(b)).as_vec().to_vec()
            })
            .collect();
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    /// Norm down to the ring directly below.
    pub fn relative_norm(&self, a: &Elem) -> Elem {
        match self.base() {
            Some(base) => {
                let m = self.mul_matrix(a);
                let c = charpoly(base, &m).expect("square");
                if m.rows() % 2 == 0 {
                    c[0].clone()
                } else {
                    base.neg(&c[0])
                }
            }
            None => a.clone(),
        }
    }

    /// Trace down to the ring directly below.
    pub fn relative_trace(&self, a: &Elem) -> Elem {
        match self.base() {
            Some(base) => {
                let m = self.mul_matrix(a);
                base.sum((0..m.rows()).map(|i| m.get(i, i)))
            }
            None => a.clone(),
        }
    }
}

impl Ring for BaseRing {
    type Elem = Elem;

    fn zero(&self) -> Elem {
        match &self.0.kind {
            Kind::Int => Elem::Int(BigInt::zero()),
            Kind::Rat => Elem::Rat(BigRational::zero()),
            Kind::Mod(_) => Elem::Mod(0),
            Kind::Group { .. } | Kind::PolyQuot { .. } => {
                let b = self.base().expect("extension");
                Elem::Vec(vec![b.zero(); self.relative_rank()])
            }
            Kind::Sq => Elem::Sq(SqZero::zero()),
        }
    }

    fn one(&self) -> Elem {
        self.from_int(&BigInt::one())
    }

    fn from_int(&self, n: &BigInt) -> Elem {
        match &self.0.kind {
            Kind::Int => Elem::Int(n.clone()),
            Kind::Rat => Elem::Rat(BigRational::from_integer(n.clone())),
            Kind::Mod(m) => Elem::Mod(n.mod_floor(&BigInt::from(*m)).to_u64().expect("reduced")),
            Kind::Group { .. } | Kind::PolyQuot { .. } => {
                let b = self.base().expect("extension");
                let mut v = vec![b.zero(); self.relative_rank()];
                v[0] = b.from_int(n);
                Elem::Vec(v)
            }
            Kind::Sq => Elem::Sq(if n.is_odd() { SqZero::one() } else { SqZero::zero() }),
        }
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Int, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Kind::Rat, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Kind::Mod(m), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod(((*x as u128 + *y as u128) % *m as u128) as u64),
            (Kind::Group { base, .. } | Kind::PolyQuot { base, .. }, Elem::Vec(x), Elem::Vec(y)) => {
                Elem::Vec(x.iter().zip(y).map(|(p, q)| base.add(p, q)).collect())
            }
            (Kind::Sq, Elem::Sq(x), Elem::Sq(y)) => Elem::Sq(x.add(y)),
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    fn neg(&self, a: &Elem) -> Elem {
        match (&self.0.kind, a) {
            (Kind::Int, Elem::Int(x)) => Elem::Int(-x),
            (Kind::Rat, Elem::Rat(x)) => Elem::Rat(-x),
            (Kind::Mod(m), Elem::Mod(x)) => Elem::Mod((m - x) % m),
            (Kind::Group { base, .. } | Kind::PolyQuot { base, .. }, Elem::Vec(x)) => {
                Elem::Vec(x.iter().map(|p| base.neg(p)).collect())
            }
            (Kind::Sq, Elem::Sq(_)) => a.clone(),
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Int, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Kind::Rat, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Kind::Mod(m), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod(((*x as u128 * *y as u128) % *m as u128) as u64),
            (Kind::Group { base, table, .. }, Elem::Vec(x), Elem::Vec(y)) => {
                let mut out = vec![base.zero(); x.len()];
                for (i, p) in x.iter().enumerate() {
                    if base.is_zero(p) {
                        continue;
                    }
                    for (j, q) in y.iter().enumerate() {
                        if base.is_zero(q) {
                            continue;
                        }
                        let k = table[i][j];
                        out[k] = base.add(&out[k], &base.mul(p, q));
                    }
                }
                Elem::Vec(out)
            }
            (Kind::PolyQuot { base, modulus, .. }, Elem::Vec(x), Elem::Vec(y)) => {
                let prod = poly::mul(base, x, y);
                Elem::Vec(poly::reduce_monic(base, &prod, modulus))
            }
            (Kind::Sq, Elem::Sq(x), Elem::Sq(y)) => Elem::Sq(x.mul(y)),
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Rat(x) => x.is_zero(),
            Elem::Mod(x) => *x == 0,
            Elem::Vec(v) => {
                let base = self.base().expect("extension");
                v.iter().all(|c| base.is_zero(c))
            }
            Elem::Sq(s) => s.is_zero(),
        }
    }

    fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (&self.0.kind, a) {
            (Kind::Int, Elem::Int(x)) => (x.abs().is_one()).then(|| a.clone()),
            (Kind::Rat, Elem::Rat(x)) => (!x.is_zero()).then(|| Elem::Rat(x.recip())),
            (Kind::Mod(m), Elem::Mod(x)) => mod_inverse(*x, *m).map(Elem::Mod),
            (Kind::Sq, Elem::Sq(x)) => x.inverse().map(Elem::Sq),
            (Kind::Group { base, .. } | Kind::PolyQuot { base, .. }, Elem::Vec(_)) => {
                let m = self.mul_matrix(a);
                let c = charpoly(base, &m).expect("square");
                let n = m.rows();
                let det = if n % 2 == 0 { c[0].clone() } else { base.neg(&c[0]) };
                let dinv = base.inverse(&det)?;
                let mut e0 = vec![base.zero(); n];
                e0[0] = base.one();
                let adj = adjugate_apply(base, &m, &c, &e0);
                Some(Elem::Vec(adj.iter().map(|x| base.mul(x, &dinv)).collect()))
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    fn render(&self, a: &Elem) -> String {
        match (&self.0.kind, a) {
            (Kind::Int, Elem::Int(x)) => x.to_string(),
            (Kind::Rat, Elem::Rat(x)) => x.to_string(),
            (Kind::Mod(_), Elem::Mod(x)) => x.to_string(),
            (Kind::Sq, Elem::Sq(x)) => x.render(),
            (Kind::PolyQuot { base, var, .. }, Elem::Vec(v)) => {
                poly::render(base, v, var).replace(' ', "")
            }
            (Kind::Group { base, group, .. }, Elem::Vec(v)) => {
                let mut out = String::new();
                for (i, c) in v.iter().enumerate() {
                    if base.is_zero(c) {
                        continue;
                    }
                    let g = group.element(i as u64);
                    let mono: Vec<String> = g
                        .coords()
                        .iter()
                        .enumerate()
                        .filter(|(_, &k)| k > 0)
                        .map(|(j, &k)| if k == 1 { UNIT_SYMBOLS[j].to_string() } else { format!("{}^{k}", UNIT_SYMBOLS[j]) })
                        .collect();
                    let mono = mono.join("*");
                    let s = base.render(c);
                    let term = if mono.is_empty() {
                        s
                    } else if s == "1" {
                        mono
                    } else if s == "-1" {
                        format!("-{mono}")
                    } else {
                        format!("{s}*{mono}")
                    };
                    if !out.is_empty() && !term.starts_with('-') {
                        out.push('+');
                    }
                    out.push_str(&term);
                }
                if out.is_empty() {
                    "0".into()
                } else {
                    out
                }
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }
}

/// An element together with its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingValue {
    ring: BaseRing,
    elem: Elem,
}

impl RingValue {
    pub fn new(ring: &BaseRing, elem: Elem) -> Result<Self> {
        if !ring.contains(&elem) {
            return Err(Error::InvalidRing("element is not canonical for the ring".into()));
        }
        Ok(RingValue { ring: ring.clone(), elem })
    }

    pub fn from_int(ring: &BaseRing, n: i64) -> Self {
        RingValue { ring: ring.clone(), elem: ring.int(n) }
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.elem)
    }

    pub fn inverse(&self) -> Option<RingValue> {
        self.ring.inverse(&self.elem).map(|e| self.ring.value(e))
    }

    pub fn pow(&self, e: u64) -> RingValue {
        self.ring.value(self.ring.pow(&self.elem, e))
    }

    fn same_ring(&self, other: &RingValue) {
        assert!(self.ring == other.ring, "ring mismatch: {} vs {}", self.ring.descriptor(), other.ring.descriptor());
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.render(&self.elem))
    }
}

impl Add for &RingValue {
    type Output = RingValue;
    fn add(self, rhs: &RingValue) -> RingValue {
        self.same_ring(rhs);
        self.ring.value(self.ring.add(&self.elem, &rhs.elem))
    }
}

impl Sub for &RingValue {
    type Output = RingValue;
    fn sub(self, rhs: &RingValue) -> RingValue {
        self.same_ring(rhs);
        self.ring.value(self.ring.sub(&self.elem, &rhs.elem))
    }
}

impl Mul for &RingValue {
    type Output = RingValue;
    fn mul(self, rhs: &RingValue) -> RingValue {
        self.same_ring(rhs);
        self.ring.value(self.ring.mul(&self.elem, &rhs.elem))
    }
}

impl Neg for &RingValue {
    type Output = RingValue;
    fn neg(self) -> RingValue {
        self.ring.value(self.ring.neg(&self.elem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv() -> BaseRing {
        BaseRing::group_ring(&BaseRing::integers(), &FinAbGroup::new(vec![2]).unwrap()).unwrap()
    }

    #[test]
    fn group_ring_units_and_render() {
        let k = zv();
        let v = k.group_element(1).unwrap();
        assert_eq!(k.mul(&v, &v), k.one());
        assert_eq!(k.inverse(&v), Some(v.clone()));
        let one_plus_v = k.add(&k.one(), &v);
        assert_eq!(k.inverse(&one_plus_v), None);
        assert_eq!(k.render(&one_plus_v), "1+v");
        let c = k.sub(&k.one(), &v);
        assert_eq!(k.render(&k.mul(&c, &c)), "2-2*v");
    }

    #[test]
    fn modular_and_quotient_inverse() {
        let z6 = BaseRing::integers_mod(6).unwrap();
        assert_eq!(z6.inverse(&Elem::Mod(5)), Some(Elem::Mod(5)));
        assert_eq!(z6.inverse(&Elem::Mod(4)), None);
        let q = BaseRing::rationals();
        let qe = BaseRing::poly_quotient(&q, vec![q.zero(), q.zero(), q.one()], "e").unwrap();
        let g = qe.generator().unwrap();
        let u = qe.add(&qe.one(), &g);
        let inv = qe.inverse(&u).unwrap();
        assert_eq!(qe.mul(&u, &inv), qe.one());
        assert_eq!(qe.inverse(&g), None);
        assert!(BaseRing::prime_field(9).is_err());
    }
}
