use crate::abelian::GroupElement;
use crate::error::{Error, Result};
use crate::multicurve::{CurveElem, Efg, ModelKind, TensorElem};
use crate::multicurve::curve::{eval1, eval2};
use crate::ringkit::poly;
use crate::ringkit::{BaseRing, Elem, Ring};

use super::report::SuiteReport;

/// `F` with `σ = x0 + x1 + x0 x1 F`.
#[derive(Clone, Debug)]
pub struct Cocycle {
    pub f: TensorElem,
}

impl Cocycle {
    pub fn at(&self, k: &BaseRing, a: &Elem, b: &Elem) -> Elem {
        eval2(k, &self.f, a, b)
    }
}

/// Divides a tensor representative vanishing on both axes by `x0 x1`.
fn divide_x0x1(t: &TensorElem, k: &BaseRing) -> Result<TensorElem> {
    let fail = || Error::ExactDivisionFailed("not divisible by x0·x1".into());
    if t.is_empty() {
        return Ok(vec![]);
    }
    if t[0].iter().any(|c| !k.is_zero(c)) || t.iter().any(|row| row.first().is_some_and(|c| !k.is_zero(c))) {
        return Err(fail());
    }
    Ok(t[1..].iter().map(|row| row[1..].to_vec()).collect())
}

pub fn cocycle(e: &Efg) -> Result<Cocycle> {
    let c = e.curve();
    let t = c.tensor();
    let rest = t.sub(&t.sub(e.sigma(), &c.tensor_x0()), &c.tensor_x1());
    Ok(Cocycle { f: divide_x0x1(&rest, e.base())? })
}

/// `v_{k+1} = 1 + (1 + c′·F_k)·v_k` from `v_1 = 1`, with `F_k = F(a, k·a)`.
fn recurse(k: &BaseRing, n: u64, c: &Elem, mut f_at: impl FnMut(&Elem) -> Result<Elem>, mut step: impl FnMut(&Elem) -> Elem, p1: &Elem) -> Result<Elem> {
    if n == 0 {
        return Ok(k.zero());
    }
    let mut v = k.one();
    let mut p = p1.clone();
    for _ in 1..n {
        let f = f_at(&p)?;
        v = k.add(&k.one(), &k.mul(&k.add(&k.one(), &k.mul(c, &f)), &v));
        p = step(&p);
    }
    Ok(v)
}

/// `ι/x` in `R`.
pub fn v_minus_one(e: &Efg) -> Result<CurveElem> {
    let k = e.base();
    let iota = e.iota();
    if iota.first().is_some_and(|c| !k.is_zero(c)) {
        return Err(Error::ExactDivisionFailed("ι is not divisible by x".into()));
    }
    let mut q: CurveElem = iota.iter().skip(1).cloned().collect();
    q.push(k.zero());
    Ok(q)
}

/// `v_n(c)` for a point `c` of the base and any integer `n`.
pub fn vn_at_value(e: &Efg, n: i64, c: &Elem) -> Result<Elem> {
    let k = e.base();
    if n < 0 {
        let vm1 = k_eval(e, &v_minus_one(e)?, c);
        let ic = e.iota_at(c);
        return Ok(k.mul(&vm1, &vn_at_value(e, -n, &ic)?));
    }
    let f = cocycle(e)?;
    recurse(k, n as u64, c, |p| Ok(f.at(k, c, p)), |p| e.sigma_at(c, p), c)
}

fn k_eval(e: &Efg, r: &[Elem], c: &Elem) -> Elem {
    eval1(e.base(), r, c)
}

pub fn vn_at_point(e: &Efg, n: i64, alpha: &GroupElement) -> Result<Elem> {
    vn_at_value(e, n, e.phi(alpha))
}

/// Polynomial data `x_n = x v_n = n x + x² w_n` in `k[x]`.
#[derive(Clone, Debug, PartialEq)]
pub struct VnSeries {
    pub n: u64,
    pub x_n: Vec<Elem>,
    pub v_n: Vec<Elem>,
    pub w_n: Vec<Elem>,
}

fn shift_down(k: &BaseRing, p: &[Elem]) -> Result<Vec<Elem>> {
    match p.first() {
        Some(c) if !k.is_zero(c) => Err(Error::ExactDivisionFailed("constant term is nonzero".into())),
        Some(_) => Ok(poly::trimmed(k, p[1..].to_vec())),
        None => Ok(vec![]),
    }
}

impl VnSeries {
    /// The image in the truncated curve ring of the model.
    pub fn v_in_curve(&self, e: &Efg) -> CurveElem {
        e.curve().from_poly(&self.v_n)
    }
}

pub fn vn_series(e: &Efg, n: u64) -> Result<VnSeries> {
    let k = e.base();
    let x_n = match e.kind() {
        ModelKind::Multiplicative => {
            let u = [k.one(), k.int(-1)];
            poly::sub(k, &[k.one()], &poly::pow(k, &u, n))
        }
        ModelKind::Additive | ModelKind::Counterexample => poly::trimmed(k, vec![k.zero(), k.int(n as i64)]),
        ModelKind::Explicit => {
            return Err(Error::UnsupportedModel("x_n is not a certified polynomial for explicit data".into()))
        }
    };
    let v_n = shift_down(k, &x_n)?;
    let w_n = shift_down(k, &poly::sub(k, &v_n, &[k.int(n as i64)]))?;
    Ok(VnSeries { n, x_n, v_n, w_n })
}

/// `b | a` in `k[x]` when `b` has a unit leading coefficient, or `a = 0`.
fn divides(k: &BaseRing, b: &[Elem], a: &[Elem]) -> Result<bool> {
    let a = poly::trimmed(k, a.to_vec());
    if a.is_empty() {
        return Ok(true);
    }
    Ok(poly::div_exact(k, &a, b)?.is_some())
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Exact polynomial identities among the `v_n, w_n` for `n, m ≤ max`.
pub fn series_identities(e: &Efg, max: u64) -> Result<SuiteReport> {
    let k = e.base();
    let mut rep = SuiteReport::default();
    let s: Vec<VnSeries> = (0..=max * max).map(|n| vn_series(e, n)).collect::<Result<_>>()?;
    let comp = |p: &[Elem], q: &[Elem]| poly::compose(k, p, q);
    let mul = |p: &[Elem], q: &[Elem]| poly::mul(k, p, q);
    let sub = |p: &[Elem], q: &[Elem]| poly::sub(k, p, q);
    for n in 1..=max {
        let sn = &s[n as usize];
        let sq = sub(&mul(&sn.v_n, &sn.v_n), &poly::scale(k, &k.int(n as i64), &sn.v_n));
        rep.push("vn_square", format!("n={n}"), divides(k, &sn.x_n, &sq)?);
        for m in 1..=max {
            let sm = &s[m as usize];
            let snm = &s[(n * m) as usize];
            let chain = format!("n={n},m={m}");
            let nm = sub(&snm.v_n, &mul(&sn.v_n, &comp(&sm.v_n, &sn.x_n)));
            rep.push("lem_nm", chain.clone(), poly::trimmed(k, nm).is_empty());
            let lhs = sub(
                &mul(&mul(&sn.v_n, &sn.v_n), &comp(&sm.w_n, &sn.x_n)),
                &mul(&mul(&sm.v_n, &sm.v_n), &comp(&sn.w_n, &sm.x_n)),
            );
            let mid = sub(&poly::scale(k, &k.int(n as i64), &sm.w_n), &poly::scale(k, &k.int(m as i64), &sn.w_n));
            let rhs = sub(&mul(&sn.v_n, &sm.w_n), &mul(&sm.v_n, &sn.w_n));
            let ok = poly::trimmed(k, sub(&lhs, &mid)).is_empty() && poly::trimmed(k, sub(&mid, &rhs)).is_empty();
            rep.push("lem_asym", chain.clone(), ok);
            if gcd(n, m) == 1 {
                let d = sub(&sn.v_n, &comp(&sn.v_n, &sm.x_n));
                rep.push("lem_coprime", chain.clone(), divides(k, &sn.x_n, &d)?);
                let b = sub(&snm.v_n, &mul(&comp(&sn.v_n, &sm.x_n), &comp(&sm.v_n, &sn.x_n)));
                rep.push("cor_bicyclic", chain, divides(k, &snm.x_n, &b)?);
            }
        }
    }
    Ok(rep)
}

/// A new coordinate `x′ = x·u` with `u` a unit of `R`.
#[derive(Clone, Debug)]
pub struct CoordinateChange {
    pub u: CurveElem,
    pub g: CurveElem,
    m: TensorElem,
}

impl CoordinateChange {
    pub fn new(e: &Efg, u: CurveElem) -> Result<Self> {
        let c = e.curve();
        let r = c.ring();
        if r.inverse(&u).is_none() {
            return Err(Error::ValidationFailed("coordinate change is not a unit".into()));
        }
        let g = r.mul(&c.x(), &u);
        let t = c.tensor();
        let gs = eval1(t, &g, e.sigma());
        let g0 = c.in_slot0(&g);
        let g1 = c.in_slot1(&g);
        let m = divide_x0x1(&t.sub(&t.sub(&gs, &g0), &g1), e.base())?;
        Ok(CoordinateChange { u, g, m })
    }

    /// `x′(c)`.
    pub fn coordinate_at(&self, e: &Efg, c: &Elem) -> Elem {
        eval1(e.base(), &self.g, c)
    }

    /// `v′_n` at the point with old coordinate `c`, via the cocycle of the transported law.
    pub fn vn_at_value(&self, e: &Efg, n: u64, c: &Elem) -> Result<Elem> {
        let k = e.base();
        let unit_at = |p: &Elem| {
            k.inverse(&eval1(k, &self.u, p)).ok_or_else(|| Error::ValidationFailed("coordinate is not a unit at a point".into()))
        };
        let uc = unit_at(c)?;
        let cp = self.coordinate_at(e, c);
        recurse(
            k,
            n,
            &cp,
            |p| Ok(k.mul(&eval2(k, &self.m, c, p), &k.mul(&uc, &unit_at(p)?))),
            |p| e.sigma_at(c, p),
            c,
        )
    }
}

/// `v′_n(a) = v_n(a)` at every point with `n·a = 0`, for `n` up to `max`.
pub fn coordinate_invariance(e: &Efg, change: &CoordinateChange, max: u64) -> Result<SuiteReport> {
    let g = e.group();
    let mut rep = SuiteReport::default();
    for a in g.elements() {
        let ord = g.order_of(&a);
        for n in (ord..=max).step_by(ord as usize) {
            let c = e.phi(&a);
            let ok = change.vn_at_value(e, n, c)? == vn_at_value(e, n as i64, c)?;
            rep.push("vn_invariant", format!("a={a},n={n}"), ok);
        }
    }
    Ok(rep)
}

/// `v_{−n}(c) = −v_n(ι(c))` at `n`-torsion points.
pub fn negation_rule(e: &Efg, max: u64) -> Result<SuiteReport> {
    let g = e.group();
    let k = e.base();
    let mut rep = SuiteReport::default();
    for a in g.elements() {
        let ord = g.order_of(&a);
        for n in (ord..=max).step_by(ord as usize) {
            let c = e.phi(&a);
            let lhs = vn_at_value(e, -(n as i64), c)?;
            let rhs = k.neg(&vn_at_value(e, n as i64, &e.iota_at(c))?);
            rep.push("vn_negation", format!("a={a},n={n}"), lhs == rhs);
        }
    }
    Ok(rep)
}
