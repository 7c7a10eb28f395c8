#![allow(dead_code)]

use efgc::abelian::FinAbGroup;
use efgc::multicurve::Efg;
use efgc::ringkit::text::{parse_poly, parse_value};
use efgc::ringkit::{BaseRing, Elem, Poly, Ring, RingDescriptor};

pub fn zv(n: usize) -> Efg {
    Efg::multiplicative_universal(&BaseRing::integers(), &FinAbGroup::cyclic(2), n).unwrap()
}

pub fn universal(factors: &[u64], n: usize) -> Efg {
    Efg::multiplicative_universal(&BaseRing::integers(), &FinAbGroup::new(factors.to_vec()).unwrap(), n).unwrap()
}

/// Additive model on the trivial group: `R = k[x]/(x^N)`.
pub fn line(k: &BaseRing, n: usize) -> Efg {
    Efg::additive(k, &FinAbGroup::trivial(), &[], n).unwrap()
}

/// Additive `Z/p` over `F_p` with `φ = id`, so `f = x^p − x`.
pub fn additive_fp(p: u64, n: usize) -> Efg {
    let k = BaseRing::prime_field(p).unwrap();
    Efg::additive(&k, &FinAbGroup::cyclic(p), &[k.one()], n).unwrap()
}

/// Additive model with zero characters.
pub fn additive_zero(k: &BaseRing, factors: &[u64], n: usize) -> Efg {
    let g = FinAbGroup::new(factors.to_vec()).unwrap();
    let gens = vec![k.zero(); g.rank()];
    Efg::additive(k, &g, &gens, n).unwrap()
}

/// Multiplicative `Z/2` over `Q` with `φ(1) = −1`, points `{0, 2}`.
pub fn q_mult(n: usize) -> Efg {
    let k = BaseRing::rationals();
    Efg::multiplicative(&k, &FinAbGroup::cyclic(2), &[k.int(-1)], n).unwrap()
}

/// Multiplicative `Z/4` over `F_5` with generator value 2.
pub fn f5_mult(n: usize) -> Efg {
    let k = BaseRing::prime_field(5).unwrap();
    Efg::multiplicative(&k, &FinAbGroup::cyclic(4), &[k.int(2)], n).unwrap()
}

pub fn val(k: &BaseRing, s: &str) -> Elem {
    parse_value(k, s).unwrap()
}

pub fn poly(k: &BaseRing, s: &str) -> Vec<Elem> {
    parse_poly(k, "x", s).unwrap()
}

/// `Z, Q, F5, Z/6, Z[v]/(v²−1)`.
pub fn ring_menu() -> Vec<BaseRing> {
    vec![
        BaseRing::integers(),
        BaseRing::rationals(),
        BaseRing::prime_field(5).unwrap(),
        BaseRing::integers_mod(6).unwrap(),
        BaseRing::group_ring(&BaseRing::integers(), &FinAbGroup::cyclic(2)).unwrap(),
    ]
}

pub fn random_elem<G: rand::Rng>(k: &BaseRing, rng: &mut G) -> Elem {
    match k.descriptor() {
        RingDescriptor::GroupRing { .. } | RingDescriptor::PolyQuotient { .. } => {
            let b = k.base().unwrap();
            let coords = (0..k.relative_rank()).map(|_| random_elem(b, rng)).collect();
            k.from_coords(coords).unwrap()
        }
        RingDescriptor::Rationals => {
            let (a, b) = (rng.gen_range(-9..=9), rng.gen_range(1..=5));
            val(k, &format!("{a}/{b}"))
        }
        _ => k.int(rng.gen_range(-9..=9)),
    }
}

pub fn random_poly<G: rand::Rng>(k: &BaseRing, deg: usize, rng: &mut G) -> Poly {
    Poly::new(k, (0..=deg).map(|_| random_elem(k, rng)).collect())
}

pub fn random_monic<G: rand::Rng>(k: &BaseRing, deg: usize, rng: &mut G) -> Poly {
    let mut c: Vec<Elem> = (0..deg).map(|_| random_elem(k, rng)).collect();
    c.push(k.one());
    Poly::new(k, c)
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
