mod common;

use common::*;
use efgc::abelian::{BurnsideElement, FinAbGroup, Subgroup};
use efgc::multicurve::Efg;
use efgc::ringkit::{verify_split, BaseRing, Ring, RingValue};
use efgc::transfer::*;

#[test]
fn cocycles_of_builtins() {
    let e = zv(2);
    let k = e.base();
    let f = cocycle(&e).unwrap();
    assert_eq!(f.at(k, &k.int(3), &k.int(5)), k.int(-1));
    let a = additive_fp(3, 2);
    let fa = cocycle(&a).unwrap();
    assert_eq!(fa.at(a.base(), &a.base().int(1), &a.base().int(2)), a.base().zero());
}

#[test]
fn vn_at_points() {
    let e = zv(2);
    let k = e.base();
    let g = e.group();
    for n in 1..6 {
        assert_eq!(vn_at_point(&e, n, &g.zero()).unwrap(), k.int(n));
    }
    assert_eq!(vn_at_point(&e, 2, &g.element(1)).unwrap(), val(k, "1+v"));
    let a = additive_fp(5, 2);
    for alpha in a.group().elements() {
        assert_eq!(vn_at_point(&a, 4, &alpha).unwrap(), a.base().int(4));
    }
}

#[test]
fn vn_series_examples() {
    let e = zv(2);
    let k = e.base();
    assert_eq!(vn_series(&e, 2).unwrap().v_n, poly(k, "2-x"));
    assert_eq!(vn_series(&e, 3).unwrap().v_n, poly(k, "3-3*x+x^2"));
    assert_eq!(vn_series(&e, 3).unwrap().w_n, poly(k, "-3+x"));
    let a = additive_fp(3, 2);
    let s = vn_series(&a, 4).unwrap();
    assert_eq!(s.v_n, poly(a.base(), "4"));
    assert!(s.w_n.is_empty());
    let explicit = e.with_sigma(e.sigma().clone());
    assert!(vn_series(&explicit, 2).is_err());
}

#[test]
fn series_agrees_with_points() {
    // the scalar recursion against the polynomial v_n evaluated at each point
    let e = universal(&[4], 2);
    let k = e.base();
    for n in 1..9u64 {
        let s = vn_series(&e, n).unwrap();
        for a in e.group().elements() {
            let c = e.phi(&a);
            let direct = s.v_n.iter().rev().fold(k.zero(), |acc, x| k.add(&k.mul(&acc, c), x));
            assert_eq!(vn_at_point(&e, n as i64, &a).unwrap(), direct);
        }
    }
}

#[test]
fn negative_n() {
    for e in [zv(2), universal(&[3], 2), universal(&[2, 2], 2), f5_mult(2)] {
        let rep = negation_rule(&e, 8).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    // v_{-1}(0) = -1
    let e = zv(2);
    assert_eq!(vn_at_point(&e, -1, &e.group().zero()).unwrap(), e.base().int(-1));
}

#[test]
fn series_identity_suite() {
    for e in [zv(2), additive_fp(3, 2), q_mult(2)] {
        let rep = series_identities(&e, 6).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.count("lem_nm") == 36 && rep.count("cor_bicyclic") > 0);
    }
}

#[test]
fn coordinate_changes() {
    let e = universal(&[2, 2], 2);
    let k = e.base();
    let c = e.curve();
    let r = c.ring();
    let f = c.from_poly(c.f());
    for (unit, h) in [("-1", "3+x"), ("v", "x^2-2"), ("-v*w", "1")] {
        let u0 = c.constant(&val(k, unit));
        let u = r.add(&u0, &r.mul(&f, &c.from_poly(&poly(k, h))));
        let u = r.add(&u, &r.mul(&c.x(), &r.mul(&f, &c.x())));
        let ch = CoordinateChange::new(&e, u).unwrap();
        let rep = coordinate_invariance(&e, &ch, 6).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn transfer_examples() {
    let e = zv(2);
    let k = e.base();
    let g = e.group();
    assert_eq!(transfer_element(&e, &Subgroup::trivial(g), None).unwrap(), k.one());
    assert_eq!(transfer_element(&e, &Subgroup::whole(g), None).unwrap(), val(k, "1+v"));
    assert_eq!(transfer_ideal(&e, &Subgroup::whole(g)), vec![k.zero(), val(k, "1-v")]);
    let z = additive_zero(&BaseRing::integers(), &[2, 4], 2);
    let zk = z.base();
    for u in efgc::abelian::subgroups_all(z.group()).unwrap() {
        assert_eq!(transfer_element(&z, &u, None).unwrap(), zk.int(u.order() as i64));
        assert!(transfer_ideal(&z, &u).iter().all(|c| zk.is_zero(c)));
    }
}

#[test]
fn eta_values() {
    let e = zv(2);
    let k = e.base();
    let g = e.group();
    let one = BurnsideElement::one(g);
    assert_eq!(eta_burnside(&e, &one).unwrap(), k.one());
    let free = BurnsideElement::basis(&Subgroup::trivial(g));
    let eta = eta_burnside(&e, &free).unwrap();
    assert_eq!(eta, val(k, "1+v"));
    assert_eq!(k.mul(&eta, &eta), k.mul(&k.int(2), &eta));
    let e2 = universal(&[2, 2], 2);
    let g2 = e2.group();
    let eta2 = eta_burnside(&e2, &BurnsideElement::basis(&Subgroup::trivial(g2))).unwrap();
    assert_eq!(eta2, val(e2.base(), "(1+v)*(1+w)"));
}

#[test]
fn theorem_suite_small_groups() {
    for factors in [&[2u64][..], &[3], &[2, 2]] {
        let e = universal(factors, 2);
        let rep = transfer_theorem_suite(&e, 64, 8).unwrap();
        assert!(rep.passed(), "{rep}");
        for ax in ["a_trivial_phi", "b_direct_sum", "d_isomorphism", "e_annihilates", "f_quotient", "g_product", "presentation", "eta_ring"] {
            assert!(rep.count(ax) > 0, "{ax} not exercised");
        }
    }
}

#[test]
fn mackey_examples() {
    let e = zv(2);
    let k = e.base();
    let g = e.group();
    let m = mackey_build(&e).unwrap();
    let (one, whole) = (Subgroup::trivial(g), Subgroup::whole(g));
    let t = m.trf(&one, &whole, &k.one()).unwrap();
    assert_eq!(t, val(k, "1+v"));
    let r = m.res(&whole, &one, &t).unwrap();
    assert!(m.congruent(&one, &r, &k.int(2)).unwrap());
    assert!(!m.congruent(&whole, &r, &k.int(2)).unwrap());
    assert!(mackey_verify(&m).unwrap().passed());

    let z = additive_zero(&BaseRing::integers(), &[2, 2], 2);
    let mz = mackey_build(&z).unwrap();
    let g = z.group();
    let t = mz.trf(&Subgroup::trivial(g), &Subgroup::whole(g), &z.base().one()).unwrap();
    assert_eq!(t, z.base().int(4));
    assert!(mackey_verify(&mz).unwrap().passed());
    assert!(mackey_verify(&mackey_build(&universal(&[2, 2], 2)).unwrap()).unwrap().passed());
}

#[test]
fn product_type() {
    assert!(!product_type_check(&zv(2)).unwrap());
    assert!(product_type_check(&f5_mult(2)).unwrap());
    assert!(product_type_check(&additive_zero(&BaseRing::integers(), &[3], 2)).unwrap());
}

#[test]
fn idempotents() {
    let q = BaseRing::rationals();
    let e = Efg::multiplicative_universal(&q, &FinAbGroup::cyclic(2), 2).unwrap();
    let k = e.base();
    for (a, eps) in split_idempotents(&e).unwrap() {
        assert_eq!(k.mul(&eps, &eps), eps);
        let r = RingValue::new(k, e.iota_at(e.phi(&a))).unwrap();
        assert!(verify_split(&r, &RingValue::new(k, eps).unwrap()).unwrap());
    }
    let z = additive_zero(&q, &[3], 2);
    assert!(split_idempotents(&z).unwrap().iter().all(|(_, eps)| q.is_zero(eps)));
    let f = Efg::product_over_field(&BaseRing::prime_field(7).unwrap(), &FinAbGroup::cyclic(3), &[val(&BaseRing::prime_field(7).unwrap(), "2")], 2).unwrap();
    for (a, eps) in split_idempotents(&f).unwrap() {
        let want = if a.is_zero() { 0 } else { 1 };
        assert_eq!(eps, f.base().int(want));
    }
    assert!(split_idempotents(&zv(2)).is_err());
}
