mod common;

use common::*;
use efgc::divisor::*;
use efgc::ringkit::{BaseRing, Ring};

#[test]
fn point_and_sum_examples() {
    let e = zv(2);
    let k = e.base().clone();
    let zero = point_divisor(&e, &k.zero()).unwrap();
    assert_eq!(zero.generator(), &poly(&k, "x")[..]);
    let c = val(&k, "1-v");
    let pc = point_divisor(&e, &c).unwrap();
    assert_eq!(pc.generator(), &poly(&k, "x - (1-v)")[..]);
    let full = full_divisor(&e).unwrap();
    assert_eq!(full.generator(), e.curve().f());
    assert_eq!(divisor_sum(&zero, &zero).unwrap().generator(), &poly(&k, "x^2")[..]);
    assert_eq!(divisor_sum(&pc, &Divisor::empty(e.curve())).unwrap(), pc);
    assert!(point_divisor(&e, &k.one()).is_err());
}

#[test]
fn norm_examples() {
    let q = BaseRing::rationals();
    let e = line(&q, 3);
    let d = Divisor::new(e.curve(), poly(&q, "x^2")).unwrap();
    assert_eq!(fd_norm(&d, &e).unwrap(), e.curve().from_poly(&poly(&q, "x^2")));

    let e = zv(2);
    let k = e.base().clone();
    let pc = point_divisor(&e, &val(&k, "1-v")).unwrap();
    let fd = fd_norm(&pc, &e).unwrap();
    assert_eq!(fd, e.curve().from_poly(&poly(&k, "v*x + 1 - v")));
    assert_eq!(euler_class(&pc, &e).unwrap(), val(&k, "1-v"));
    let zero = point_divisor(&e, &k.zero()).unwrap();
    assert!(k.is_zero(&euler_class(&zero, &e).unwrap()));

    let e = additive_fp(7, 1);
    let f7 = e.base().clone();
    let (a, b) = (f7.int(2), f7.int(5));
    let d = full_set_divisor(&e, &[a.clone(), b.clone()]).unwrap();
    assert_eq!(fd_norm(&d, &e).unwrap(), e.curve().from_poly(&poly(&f7, "(x-2)*(x-5)")));
    assert_eq!(fd_norm(&d, &e).unwrap(), full_set_norm(&e, &[a, b]).unwrap());
}

#[test]
fn convolution_and_translation() {
    let e = additive_fp(7, 1);
    let k = e.base().clone();
    let d = full_set_divisor(&e, &[k.int(1), k.int(3)]).unwrap();
    let c = point_divisor(&e, &k.int(2)).unwrap();
    assert_eq!(convolution(&d, &c, &e).unwrap().generator(), &poly(&k, "(x-3)*(x-5)")[..]);
    let zero = point_divisor(&e, &k.zero()).unwrap();
    assert_eq!(convolution(&d, &zero, &e).unwrap(), d);

    let e = zv(1);
    let k = e.base().clone();
    let a = e.group().element(1);
    let pa = point_divisor(&e, e.phi(&a)).unwrap();
    assert_eq!(convolution(&pa, &pa, &e).unwrap().generator(), &poly(&k, "x")[..]);
    let zero = point_divisor(&e, &k.zero()).unwrap();
    let t = translate_divisor(&zero, &a, &e).unwrap();
    assert_eq!(t.generator(), &poly(&k, "x - (1-v)")[..]);
    assert_eq!(translate_divisor(&t, &a, &e).unwrap(), zero);
    assert_eq!(translate_divisor(&pa, &e.group().zero(), &e).unwrap(), pa);
}

#[test]
fn containment_and_subtraction() {
    let q = BaseRing::rationals();
    let e = q_mult(1);
    let x2 = Divisor::new(e.curve(), poly(&q, "x^2")).unwrap_err();
    assert_eq!(x2, efgc::Error::OpennessFailed(1));
    let e = q_mult(2);
    let vx2 = Divisor::new(e.curve(), poly(&q, "x^2")).unwrap();
    let vx = Divisor::new(e.curve(), poly(&q, "x")).unwrap();
    assert!(contains(&vx2, &vx).unwrap().contained);
    assert!(contains(&vx2, &vx2).unwrap().contained);
    assert_eq!(subtract(&vx2, &vx).unwrap(), vx);
    let big = Divisor::new(e.curve(), poly(&q, "x*(x-2)")).unwrap();
    let p2 = Divisor::new(e.curve(), poly(&q, "x-2")).unwrap();
    assert_eq!(subtract(&big, &p2).unwrap(), vx);
    assert!(subtract(&vx, &p2).is_err());

    let e = additive_fp(7, 1);
    let k = e.base().clone();
    let d = Divisor::new(e.curve(), poly(&k, "x*(x-1)")).unwrap();
    let p = Divisor::new(e.curve(), poly(&k, "x-2")).unwrap();
    let c = contains(&d, &p).unwrap();
    assert!(!c.contained);
    assert_eq!(c.obstruction, vec![k.int(2)]);
}

#[test]
fn points_scheme_examples() {
    let q = BaseRing::rationals();
    let e = line(&q, 2);
    let d = Divisor::new(e.curve(), poly(&q, "x^2")).unwrap();
    let ps = points_scheme(&d, 0).unwrap();
    assert_eq!(ps.rank(), 1);
    assert_eq!(ps.remaining, d);
    let ps = points_scheme(&d, 1).unwrap();
    assert_eq!(ps.rank(), 2);
    assert_eq!(ps.remaining.degree(), 1);
    let k1 = ps.top().clone();
    let u = &ps.points[0];
    assert_eq!(ps.remaining.generator(), &[u.clone(), k1.one()][..]);
    assert_eq!(points_scheme(&d, 2).unwrap().rank(), 2);

    let e = additive_fp(7, 1);
    let k = e.base().clone();
    let d = full_set_divisor(&e, &[k.int(1), k.int(2), k.int(4)]).unwrap();
    assert_eq!(points_scheme(&d, 2).unwrap().rank(), 6);
}

#[test]
fn moment_examples() {
    let k = BaseRing::new(&efgc::ringkit::RingDescriptor::PolyQuotient {
        base: Box::new(efgc::ringkit::RingDescriptor::Rationals),
        modulus: poly(&BaseRing::rationals(), "x^3"),
    })
    .unwrap();
    let e = line(&k, 3);
    let c = val(&k, "t");
    let d = point_divisor(&e, &c).unwrap();
    let m = moments(&d, &e, 3).unwrap();
    for i in 0..3 {
        let mut beta = vec![0u32; 3];
        beta[i] = 1;
        assert_eq!(m.get(&beta), Some(&k.pow(&c, i as u64)));
    }
    assert!(matches!(moments(&d, &e, 2), Err(efgc::Error::CutoffTooSmall { .. })));
}

#[test]
fn perturbation_round_trip() {
    let k = efgc::ringkit::text::parse_ring("Q[s]/(s^2)").unwrap();
    let e = line(&k, 4);
    let d = Divisor::new(e.curve(), poly(&k, "x^2")).unwrap();
    let eps = val(&k, "s");
    let d2 = perturb(&d, &[eps.clone()]).unwrap();
    assert_eq!(d2.generator(), &poly(&k, "x^2 + s")[..]);
    assert_eq!(restrict_generator(&d, &d2).unwrap(), vec![eps, k.zero()]);
    assert_eq!(perturb(&d, &[]).unwrap(), d);
    assert!(restrict_generator(&d, &d).unwrap().iter().all(|c| k.is_zero(c)));
    assert_eq!(perturb(&d, &[k.one()]).unwrap_err(), efgc::Error::NotNilpotent);
    let e3 = line(&k, 3);
    let d3 = Divisor::new(e3.curve(), poly(&k, "x^2")).unwrap();
    assert!(matches!(perturb(&d3, &[val(&k, "s")]), Err(efgc::Error::OpennessFailed(_))));
}

#[test]
fn expression_language() {
    let e = zv(1);
    let k = e.base().clone();
    assert_eq!(parse_divisor(&e, "full").unwrap().generator(), e.curve().f());
    assert_eq!(parse_divisor(&e, "point(1)*point(1)").unwrap().generator(), &poly(&k, "x")[..]);
    assert_eq!(parse_divisor(&e, "tr(1, zero)").unwrap().generator(), &poly(&k, "x-(1-v)")[..]);
    assert_eq!(parse_divisor(&e, "full - point(0)").unwrap().generator(), &poly(&k, "x-(1-v)")[..]);
    assert_eq!(parse_divisor(&e, "point(1-v)").unwrap(), parse_divisor(&e, "point(1)").unwrap());
    assert!(parse_divisor(&e, "point(0)+").is_err());
}
