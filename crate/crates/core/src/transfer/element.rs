use crate::abelian::{
    presentations_enumerate, quotient, smith_presentation, subgroups_all, BurnsideElement, FinAbGroup, GroupElement,
    Presentation, Subgroup,
};
use crate::error::{Error, Result};
use crate::multicurve::Efg;
use crate::ringkit::{is_unit_in, BaseRing, Elem, IdealSpan, Ring};

use super::report::SuiteReport;
use super::series::vn_at_value;

/// `t(P) = Π_{α∈P} v_{ord α}(c_α)`, with `P` defaulting to the Smith presentation of `U`.
pub fn transfer_element(e: &Efg, u: &Subgroup, p: Option<&Presentation>) -> Result<Elem> {
    let g = e.group();
    if u.group() != g {
        return Err(Error::GroupMismatch);
    }
    let owned;
    let p = match p {
        Some(p) => p,
        None => {
            owned = smith_presentation(u);
            &owned
        }
    };
    let k = e.base();
    let mut t = k.one();
    for a in p.elements() {
        t = k.mul(&t, &vn_at_value(e, g.order_of(a) as i64, e.phi(a))?);
    }
    Ok(t)
}

/// Generators `c_u` of `I(U)`.
pub fn transfer_ideal(e: &Efg, u: &Subgroup) -> Vec<Elem> {
    u.elements().map(|a| e.phi(&a).clone()).collect()
}

/// `t(U/V, φ̄)` lifted to `k` through the deterministic section; well defined mod `I(V)`.
pub fn transfer_quotient(e: &Efg, u: &Subgroup, v: &Subgroup) -> Result<Elem> {
    let q = quotient(u, v)?;
    let k = e.base();
    let mut t = k.one();
    for (lift, &d) in q.generators().iter().zip(q.group().factors()) {
        t = k.mul(&t, &vn_at_value(e, d as i64, e.phi(lift))?);
    }
    Ok(t)
}

/// `η(Σ n_B [A/B]) = Σ n_B t(ann B)`.
pub fn eta_burnside(e: &Efg, z: &BurnsideElement) -> Result<Elem> {
    if z.group() != e.group() {
        return Err(Error::GroupMismatch);
    }
    let k = e.base();
    let mut acc = k.zero();
    for (b, &n) in z.coeffs() {
        let t = transfer_element(e, &b.annihilator(), None)?;
        acc = k.add(&acc, &k.mul(&k.int(n), &t));
    }
    Ok(acc)
}

/// `c_α = 0` or a unit for every `α`.
pub fn product_type_check(e: &Efg) -> Result<bool> {
    let k = e.base();
    for c in e.phi_values() {
        if !k.is_zero(c) && !is_unit_in(k, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ε_α = 1 − v_n(c_α)/n` with `n = |A|`.
pub fn split_idempotents(e: &Efg) -> Result<Vec<(GroupElement, Elem)>> {
    let k = e.base();
    let g = e.group();
    let n = g.order();
    let inv = k.inverse(&k.int(n as i64)).ok_or(Error::NotInvertibleOrder)?;
    g.elements()
        .map(|a| {
            let v = vn_at_value(e, n as i64, e.phi(&a))?;
            Ok((a, k.sub(&k.one(), &k.mul(&v, &inv))))
        })
        .collect()
}

/// Automorphisms of `A`, as images of the basis generators, up to `limit`.
pub(crate) fn automorphisms(g: &FinAbGroup, limit: usize) -> Vec<Vec<GroupElement>> {
    let mut out = Vec::new();
    let elems: Vec<GroupElement> = g.elements().collect();
    let r = g.rank();
    let mut idx = vec![0usize; r];
    loop {
        let imgs: Vec<GroupElement> = idx.iter().map(|&i| elems[i].clone()).collect();
        let hom = imgs.iter().zip(g.factors()).all(|(x, &d)| g.scale(x, d as i64).is_zero());
        if hom && Subgroup::generated_by(g, &imgs).order() == g.order() {
            out.push(imgs);
            if out.len() >= limit {
                return out;
            }
        }
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            idx[i] += 1;
            if idx[i] < elems.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn apply_auto(g: &FinAbGroup, imgs: &[GroupElement], a: &GroupElement) -> GroupElement {
    let mut acc = g.zero();
    for (&c, x) in a.coords().iter().zip(imgs) {
        acc = g.add(&acc, &g.scale(x, c as i64));
    }
    acc
}

/// The model with `φ′(θα) = φ(α)`.
pub(crate) fn transport(e: &Efg, imgs: &[GroupElement]) -> Result<Efg> {
    let g = e.group();
    let mut phi = e.phi_values().to_vec();
    for a in g.elements() {
        phi[g.index(&apply_auto(g, imgs, &a)) as usize] = e.phi(&a).clone();
    }
    Efg::from_parts(e.curve().clone(), g.clone(), e.kind(), e.sigma().clone(), e.iota().clone(), phi, e.norm_unit().clone())
}

fn span(k: &BaseRing, gens: &[Elem]) -> Result<IdealSpan<BaseRing>> {
    IdealSpan::new(k, gens)
}

/// Properties (a), (b), (d)–(g), presentation independence and multiplicativity of `η`.
pub fn transfer_theorem_suite(e: &Efg, presentation_limit: usize, auto_limit: usize) -> Result<SuiteReport> {
    let k = e.base();
    let g = e.group();
    let subs = subgroups_all(g)?;
    let mut rep = SuiteReport::default();
    let t: Vec<Elem> = subs.iter().map(|u| transfer_element(e, u, None)).collect::<Result<_>>()?;
    let pos = |s: &Subgroup| subs.iter().position(|x| x == s).expect("listed subgroup");

    let ones = vec![k.one(); g.rank()];
    let trivial = Efg::multiplicative(k, g, &ones, e.curve().truncation())?;
    for u in &subs {
        let tz = transfer_element(&trivial, u, None)?;
        rep.push("a_trivial_phi", u.to_string(), tz == k.int(u.order() as i64));
    }

    for (i, u) in subs.iter().enumerate() {
        for p in presentations_enumerate(u, presentation_limit)? {
            rep.push("presentation", format!("{u} via {p:?}"), transfer_element(e, u, Some(&p))? == t[i]);
        }
        let ok = u.elements().all(|a| k.is_zero(&k.mul(&t[i], e.phi(&a))));
        rep.push("e_annihilates", u.to_string(), ok);
    }

    for (i, u0) in subs.iter().enumerate() {
        for (j, u1) in subs.iter().enumerate() {
            let cap = u0.intersection(u1)?;
            let sum = u0.sum(u1)?;
            let ts = &t[pos(&sum)];
            if cap.is_trivial() {
                rep.push("b_direct_sum", format!("{u0} + {u1}"), k.mul(&t[i], &t[j]) == *ts);
            }
            let rhs = k.mul(&k.int(cap.order() as i64), ts);
            rep.push("g_product", format!("{u0}, {u1}"), k.mul(&t[i], &t[j]) == rhs);
        }
    }

    for (i, u) in subs.iter().enumerate() {
        for v in subs.iter().filter(|v| v.is_subgroup_of(u)) {
            let iv = span(k, &transfer_ideal(e, v))?;
            let rhs = k.mul(&t[pos(v)], &transfer_quotient(e, u, v)?);
            rep.push("f_quotient", format!("{v} ≤ {u}"), iv.contains(&k.sub(&t[i], &rhs))?);
        }
    }

    for imgs in automorphisms(g, auto_limit) {
        let e2 = transport(e, &imgs)?;
        for (i, u) in subs.iter().enumerate() {
            let gens: Vec<GroupElement> = u.generators().iter().map(|a| apply_auto(g, &imgs, a)).collect();
            let u2 = Subgroup::generated_by(g, &gens);
            let label = format!("{u} under {}", imgs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            rep.push("d_isomorphism", label, transfer_element(&e2, &u2, None)? == t[i]);
        }
    }

    for b0 in &subs {
        for b1 in &subs {
            let z0 = BurnsideElement::basis(b0);
            let z1 = BurnsideElement::basis(b1);
            let lhs = eta_burnside(e, &z0.mul(&z1)?)?;
            let rhs = k.mul(&eta_burnside(e, &z0)?, &eta_burnside(e, &z1)?);
            rep.push("eta_ring", format!("[A/{b0}]·[A/{b1}]"), lhs == rhs);
        }
    }
    Ok(rep)
}
