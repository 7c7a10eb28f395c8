mod common;

use common::*;
use efgc::abelian::FinAbGroup;
use efgc::multicurve::*;
use efgc::ringkit::poly::{pow, reduce_monic, trimmed};
use efgc::ringkit::{Algebra, BaseRing, Ring};
use efgc::Error;

fn builtin_models() -> Vec<(String, Efg)> {
    let mut out = Vec::new();
    for f in [vec![2], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![8], vec![2, 4], vec![2, 2, 2]] {
        let n = if f.iter().product::<u64>() <= 4 { 2 } else { 1 };
        out.push((format!("universal {f:?}"), universal(&f, n)));
    }
    let q = BaseRing::rationals();
    out.push(("q multiplicative".into(), q_mult(3)));
    out.push(("f5 multiplicative".into(), f5_mult(2)));
    let f7 = BaseRing::prime_field(7).unwrap();
    out.push((
        "f7 product Z/6".into(),
        Efg::product_over_field(&f7, &FinAbGroup::cyclic(6), &[f7.int(3)], 1).unwrap(),
    ));
    out.push((
        "f7 product Z/3".into(),
        Efg::product_over_field(&f7, &FinAbGroup::cyclic(3), &[f7.int(2)], 2).unwrap(),
    ));
    for p in [2, 3, 5, 7] {
        out.push((format!("additive F{p}"), additive_fp(p, 2)));
    }
    out.push(("additive zero Q Z/2xZ/2".into(), additive_zero(&q, &[2, 2], 2)));
    out.push(("additive zero F5 Z/8".into(), additive_zero(&BaseRing::prime_field(5).unwrap(), &[8], 1)));
    out.push(("line Q".into(), line(&q, 4)));
    out.push(("counterexample".into(), Efg::counterexample(5).unwrap()));
    out
}

#[test]
fn universal_z2_example() {
    let e = zv(1);
    let k = e.base().clone();
    assert_eq!(e.curve().f(), &poly(&k, "x^2 + (v-1)*x")[..]);
    let sigma = e.curve().tensor_from_fn(|i, j| match (i, j) {
        (1, 0) | (0, 1) => k.one(),
        (1, 1) => k.int(-1),
        _ => k.zero(),
    });
    assert_eq!(e.sigma(), &sigma);
    assert_eq!(e.iota(), &e.curve().from_poly(&poly(&k, "-v*x")));
    let a = e.group().element(1);
    assert_eq!(e.phi(&a), &val(&k, "1-v"));
    assert!(k.is_zero(e.phi(&e.group().zero())));
}

#[test]
fn line_and_counterexample_examples() {
    let q = BaseRing::rationals();
    let e = line(&q, 3);
    assert_eq!(e.curve().f(), &poly(&q, "x")[..]);
    assert_eq!(e.curve().rank(), 3);

    let e = Efg::counterexample(17).unwrap();
    let k = e.base().clone();
    assert!(k.is_square_zero());
    let f = vec![k.zero(), val(&k, "e"), k.one()];
    assert_eq!(e.curve().f(), &f[..]);
}

#[test]
fn every_builtin_validates() {
    for (name, e) in builtin_models() {
        let rep = validate_efg(&e);
        assert!(rep.passed(), "{name}: {:?}", rep.failures());
        assert!(rep.checks.iter().filter(|c| c.status == CheckStatus::Pass).count() >= 10, "{name}");
    }
}

#[test]
fn tampered_sigma_fails() {
    let e = zv(1);
    let t = e.curve().tensor();
    let x0 = e.curve().tensor_x0();
    let x1 = e.curve().tensor_x1();
    let bad = t.add(&t.add(&x0, &x1), &t.mul(&x0, &x1));
    let rep = validate_efg(&e.with_sigma(bad));
    assert_eq!(rep.get("phi_homomorphism").unwrap().status, CheckStatus::Fail);
    assert!(!rep.passed());
}

#[test]
fn additive_associativity_passes() {
    let e = additive_fp(3, 2);
    assert_eq!(validate_efg(&e).get("sigma_associative").unwrap().status, CheckStatus::Pass);
}

#[test]
fn evaluation_examples() {
    let e = zv(1);
    let k = e.base().clone();
    let c = val(&k, "1-v");
    assert!(k.is_zero(&e.eval_at_point(e.curve().f(), &c).unwrap()));
    let x2 = e.curve().from_poly(&poly(&k, "x^2"));
    assert_eq!(e.eval_at_point(&x2, &c).unwrap(), val(&k, "2-2*v"));
    let seven = e.curve().constant(&k.int(7));
    assert_eq!(e.eval_at_point(&seven, &c).unwrap(), k.int(7));
    assert!(matches!(e.eval_at_point(&x2, &k.one()), Err(Error::NotAPoint)));
}

#[test]
fn substitution_examples() {
    let e = zv(1);
    let r = e.curve().ring();
    let x = e.curve().x();
    let s = e.curve().substitute2(r, e.sigma(), &x, &r.zero()).unwrap();
    assert_eq!(s, x);
    let inv = e.curve().substitute2(r, e.sigma(), &x, e.iota()).unwrap();
    assert!(r.is_zero(&inv));
    let one = r.one();
    assert!(matches!(e.curve().substitute(r, &x, &one), Err(Error::IllegalSubstitution { .. })));

    let q = BaseRing::rationals();
    let e = additive_zero(&q, &[2], 2);
    let d = e.difference_function().unwrap();
    let t = e.curve().tensor();
    assert_eq!(d, t.sub(&e.curve().tensor_x1(), &e.curve().tensor_x0()));
    assert!(e.curve().ring().is_zero(&e.curve().diagonal(&d)));
}

#[test]
fn difference_function_vanishes_on_diagonal() {
    for (name, e) in builtin_models() {
        let d = e.difference_function().unwrap();
        assert!(e.curve().ring().is_zero(&e.curve().diagonal(&d)), "{name}");
    }
}

#[test]
fn multiplicative_difference_function() {
    // d·(1 − x0) = x1 − x0
    let e = q_mult(2);
    let t = e.curve().tensor();
    let d = e.difference_function().unwrap();
    let (x0, x1) = (e.curve().tensor_x0(), e.curve().tensor_x1());
    assert_eq!(t.mul(&d, &t.sub(&t.one(), &x0)), t.sub(&x1, &x0));
}

#[test]
fn x_alpha_and_translation() {
    let e = zv(1);
    let k = e.base().clone();
    let a0 = e.group().zero();
    let a1 = e.group().element(1);
    assert_eq!(e.x_alpha(&a0), e.curve().x());
    assert_eq!(e.x_alpha(&a1), e.curve().from_poly(&poly(&k, "v*x + 1 - v")));
    assert_eq!(e.translation(&a0), e.curve().x());
    assert_eq!(e.translation(&a1), e.curve().from_poly(&poly(&k, "v*x + 1 - v")));
    let twice = e.translate(&e.translation(&a1), &a1).unwrap();
    assert_eq!(twice, e.curve().x());

    for (name, e) in builtin_models() {
        let g = e.group().clone();
        for al in g.elements() {
            assert!(e.base().is_zero(&e.eval_at_point(&e.x_alpha(&al), e.phi(&al)).unwrap()), "{name}");
        }
        if g.order() > 4 || e.base().is_square_zero() {
            continue;
        }
        for al in g.elements() {
            for be in g.elements() {
                let lhs = e.translate(&e.translation(&be), &al).unwrap();
                assert_eq!(lhs, e.translation(&g.add(&al, &be)), "{name}: τ_{al}∘τ_{be}");
            }
        }
    }
}

#[test]
fn topological_basis_examples() {
    let e = zv(2);
    let k = e.base().clone();
    let (b, _) = e.topological_basis(3).unwrap();
    assert_eq!(b[0], e.curve().ring().one());
    assert_eq!(b[1], e.curve().x());
    assert_eq!(b[2], e.curve().from_poly(&poly(&k, "v*x^2 + (1-v)*x")));
    assert_eq!(b[2], e.curve().ring().scale(&val(&k, "v"), &e.curve().y()));
    assert!(e.topological_basis(5).is_err());

    let q = BaseRing::rationals();
    let e = line(&q, 4);
    let (b, _) = e.topological_basis(4).unwrap();
    for (i, bi) in b.iter().enumerate() {
        assert_eq!(bi, &e.curve().from_poly(&pow(&q, &poly(&q, "x"), i as u64)));
    }
}

#[test]
fn topological_basis_periodicity() {
    for (name, e) in builtin_models() {
        let k = e.base().clone();
        let r = e.curve().ring();
        let n = e.curve().degree();
        let m = e.curve().rank();
        let (b, _) = e.topological_basis(m).unwrap();
        let uinv = k.inverse(e.norm_unit()).unwrap();
        let step = r.scale(&uinv, &e.curve().y());
        for i in n..m {
            assert_eq!(b[i], r.mul(&step, &b[i - n]), "{name}: e_{i}");
        }
    }
}

#[test]
fn point_kernel_is_linear_ideal() {
    for (name, e) in builtin_models() {
        let k = e.base().clone();
        let m = e.curve().rank();
        for al in e.group().elements() {
            let c = e.phi(&al).clone();
            let lin = vec![k.neg(&c), k.one()];
            assert!(k.is_zero(&e.eval_at_point(&lin, &c).unwrap()), "{name}");
            for i in 0..m {
                let mut xi = vec![k.zero(); i + 1];
                xi[i] = k.one();
                let rem = reduce_monic(&k, &xi, &lin);
                let want = e.eval_at_point(&xi, &c).unwrap();
                assert_eq!(trimmed(&k, rem), trimmed(&k, vec![want]), "{name}");
            }
        }
    }
}

#[test]
fn counterexample_expansions() {
    let e = Efg::counterexample(4).unwrap();
    let k = e.base().clone();
    let ee = val(&k, "e");
    let a0 = e.group().zero();
    let a1 = e.group().element(1);
    let l0 = e.formal_expansion_at(&a0, 3).unwrap();
    assert_eq!(l0.image_of_x(), &[k.zero(), k.one(), k.zero()]);
    assert_eq!(l0.apply(&e.curve().y()).unwrap(), vec![k.zero(), ee.clone(), k.one()]);
    let la = e.formal_expansion_at(&a1, 3).unwrap();
    assert_eq!(la.apply(&e.curve().x()).unwrap(), vec![ee, k.one(), k.zero()]);
    assert!(matches!(e.formal_expansion_at(&a0, 5), Err(Error::PrecisionExceeded { .. })));

    let q = BaseRing::rationals();
    let e = line(&q, 3);
    let l = e.formal_expansion_at(&FinAbGroup::trivial().zero(), 3).unwrap();
    assert_eq!(l.apply(&poly(&q, "1 + 2*x + 3*x^2")).unwrap(), poly(&q, "1 + 2*x + 3*x^2"));
}

#[test]
fn counterexample_kernel_element() {
    for big_k in 1..=4u32 {
        let n = (1usize << big_k) + 1;
        let e = Efg::counterexample(n).unwrap();
        let fk = counterexample_element(&e, big_k).unwrap();
        assert!(!e.curve().ring().is_zero(&fk), "K = {big_k}");
        for al in e.group().elements() {
            let lam = e.expand_representative(&al, 1 << (big_k + 1)).unwrap();
            let img = lam.apply(&fk).unwrap();
            assert!(img.iter().all(|c| e.base().is_zero(c)), "K = {big_k}, α = {al}");
        }
    }
    assert!(counterexample_element(&zv(1), 1).is_err());
}

#[test]
fn models_reject_bad_data() {
    let q = BaseRing::rationals();
    let z2 = FinAbGroup::cyclic(2);
    assert!(Efg::multiplicative(&q, &z2, &[q.int(2)], 1).is_err());
    assert!(Efg::additive(&q, &z2, &[q.one()], 1).is_err());
    let f7 = BaseRing::prime_field(7).unwrap();
    assert!(Efg::product_over_field(&f7, &FinAbGroup::cyclic(3), &[f7.one()], 1).is_err());
    assert!(Efg::product_over_field(&BaseRing::integers(), &z2, &[BaseRing::integers().int(-1)], 1).is_err());
}
