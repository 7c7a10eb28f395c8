use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::abelian::{FinAbGroup, Subgroup};
use crate::divisor::{
    convolution, divisor_sum, fd_norm, full_set_divisor, full_set_norm, generates_same_ideal, point_divisor,
    points_scheme, regular_before_truncation, vanishes_on, Divisor,
};
use crate::error::Result;
use crate::multicurve::{counterexample_element, Efg};
use crate::resdual::{
    epsilon, epsilon_unit_identity, residue, residue_inclusion_check, residue_of_derivative, residue_pairing_check,
    theta0, theta0_inverse, theta0_matrix, trace_element, trace_of_multiplication, DualityAlgebra, Functional,
    MeromorphicForm,
};
use crate::ringkit::{det_berkowitz, BaseRing, Elem, IdealSpan, Poly, Ring, RingDescriptor};
use crate::transfer::{
    coordinate_invariance, eta_burnside, mackey_build, mackey_verify, negation_rule, series_identities,
    transfer_element, transfer_theorem_suite, CoordinateChange, SuiteReport,
};

pub const SUITES: [&str; 7] = ["residue", "duality", "divisor", "vn", "transfer", "mackey", "counterexample"];

/// Sizes of the randomized and enumerated parts of each suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub residue_instances: usize,
    pub duality_instances: usize,
    pub max_degree: usize,
    pub divisor_instances: usize,
    pub divisor_degree: usize,
    pub coordinate_changes: usize,
    pub max_n: u64,
    pub transfer_groups: Vec<Vec<u64>>,
    pub mackey_groups: Vec<Vec<u64>>,
    pub presentation_limit: usize,
    pub automorphism_limit: usize,
    pub counterexample_truncation: usize,
    pub counterexample_k: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0x5eed,
            residue_instances: 100,
            duality_instances: 30,
            max_degree: 8,
            divisor_instances: 6,
            divisor_degree: 4,
            coordinate_changes: 10,
            max_n: 6,
            transfer_groups: vec![vec![2], vec![3], vec![4], vec![2, 2]],
            mackey_groups: vec![vec![2], vec![4], vec![2, 2]],
            presentation_limit: 32,
            automorphism_limit: 8,
            counterexample_truncation: 17,
            counterexample_k: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Property {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub first_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: String,
    pub properties: Vec<Property>,
}

impl SuiteResult {
    fn new(suite: &str) -> Self {
        SuiteResult { suite: suite.to_string(), properties: Vec::new() }
    }

    fn entry(&mut self, name: &str) -> &mut Property {
        if let Some(i) = self.properties.iter().position(|p| p.name == name) {
            return &mut self.properties[i];
        }
        self.properties.push(Property { name: name.to_string(), passed: 0, failed: 0, first_error: None });
        self.properties.last_mut().expect("just pushed")
    }

    /// Records one instance; an error counts as a failure.
    pub fn record(&mut self, name: &str, outcome: Result<bool>) {
        let p = self.entry(name);
        match outcome {
            Ok(true) => p.passed += 1,
            Ok(false) => p.failed += 1,
            Err(e) => {
                p.failed += 1;
                p.first_error.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn absorb(&mut self, rep: Result<SuiteReport>, fallback: &str) {
        match rep {
            Ok(r) => r.checks.iter().for_each(|c| self.record(&c.axiom, Ok(c.pass))),
            Err(e) => self.record(fallback, Err(e)),
        }
    }

    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0 && p.passed > 0)
    }

    pub fn get(&self, name: &str) -> Option<&Property> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn to_json(&self) -> Value {
        let props: Vec<Value> = self
            .properties
            .iter()
            .map(|p| {
                json!({
                    "name": p.name,
                    "passed": p.passed,
                    "failed": p.failed,
                    "error": p.first_error,
                })
            })
            .collect();
        json!({
            "suite": self.suite,
            "status": if self.passed() { "pass" } else { "fail" },
            "properties": props,
        })
    }
}

/// `Z, Q, F5, Z/6, Z[v]/(v²−1)`.
pub fn ring_menu() -> Vec<BaseRing> {
    vec![
        BaseRing::integers(),
        BaseRing::rationals(),
        BaseRing::prime_field(5).expect("prime"),
        BaseRing::integers_mod(6).expect("modulus"),
        BaseRing::group_ring(&BaseRing::integers(), &FinAbGroup::cyclic(2)).expect("group ring"),
    ]
}

pub fn random_elem(k: &BaseRing, rng: &mut ChaCha8Rng) -> Elem {
    match k.descriptor() {
        RingDescriptor::GroupRing { .. } | RingDescriptor::PolyQuotient { .. } => {
            let b = k.base().expect("extension");
            let coords = (0..k.relative_rank()).map(|_| random_elem(b, rng)).collect();
            k.from_coords(coords).expect("coordinates fit")
        }
        RingDescriptor::Rationals => {
            let num = k.int(rng.gen_range(-9..=9));
            let den = k.inverse(&k.int(rng.gen_range(1..=5))).expect("nonzero");
            k.mul(&num, &den)
        }
        _ => k.int(rng.gen_range(-9..=9)),
    }
}

fn random_unit(k: &BaseRing, rng: &mut ChaCha8Rng) -> Elem {
    let sign = if rng.gen_bool(0.5) { k.one() } else { k.int(-1) };
    match k.descriptor() {
        RingDescriptor::GroupRing { group, .. } => {
            let i = rng.gen_range(0..group.order() as usize);
            k.mul(&sign, &k.group_element(i).expect("group ring"))
        }
        _ if k.is_field() => loop {
            let c = random_elem(k, rng);
            if let Some(_inv) = k.inverse(&c) {
                break c;
            }
        },
        _ => sign,
    }
}

pub fn random_poly(k: &BaseRing, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    Poly::new(k, (0..=deg).map(|_| random_elem(k, rng)).collect())
}

pub fn random_monic(k: &BaseRing, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let mut c: Vec<Elem> = (0..deg).map(|_| random_elem(k, rng)).collect();
    c.push(k.one());
    Poly::new(k, c)
}

pub fn residue_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("residue");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in ring_menu() {
        for _ in 0..cfg.residue_instances {
            let n = rng.gen_range(0..=cfg.max_degree);
            let q = random_monic(&k, n, &mut rng);
            let g = random_poly(&k, cfg.max_degree, &mut rng);
            s.record("res_polynomial", Ok(k.is_zero(&residue(&MeromorphicForm::polynomial(g.clone())))));
            s.record("res_derivative", residue_of_derivative(&g, &q).map(|r| k.is_zero(&r)));
            let log = MeromorphicForm::new(q.derivative(), q.clone()).map(|w| residue(&w) == k.int(n as i64));
            s.record("res_log_derivative", log);
            if n > 0 {
                let tr = MeromorphicForm::new(g.mul(&q.derivative()), q.clone())
                    .and_then(|w| Ok(residue(&w) == trace_of_multiplication(&g, &q)?));
                s.record("trace_formula", tr);
            }
        }
    }
    s
}

fn duality_instance(k: &BaseRing, f: &Poly, rng: &mut ChaCha8Rng, s: &mut SuiteResult) -> Result<()> {
    let alg = DualityAlgebra::new(f)?;
    let r = alg.rank();
    let d = det_berkowitz(k, &theta0_matrix(&alg))?;
    s.record("theta0_det_unit", Ok(d == k.one() || d == k.int(-1)));
    let phi = Functional { values: (0..r).map(|_| random_elem(k, rng)).collect() };
    let a = theta0(&alg, &phi);
    s.record("theta0_inverse", Ok(theta0_inverse(&alg, &a) == phi));
    s.record("epsilon_theta0", Ok(epsilon(&alg, &a) == phi.values[0]));
    s.record("epsilon_psi_unit", Ok(epsilon_unit_identity(&alg) == alg.algebra().one()));
    let fp = alg.algebra().reduce(f.derivative().coeffs());
    s.record("trace_element", Ok(trace_element(&alg) == fp));
    let (l, rr) = residue_pairing_check(&alg, &phi);
    s.record("residue_pairing", Ok(l == rr));
    let g = random_monic(k, rng.gen_range(0..=2), rng);
    let inc = residue_inclusion_check(f, &f.mul(&g), &phi).map(|(l, r)| l == r);
    s.record("residue_inclusion", inc);
    Ok(())
}

pub fn duality_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("duality");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd0a1);
    for k in ring_menu() {
        for _ in 0..cfg.duality_instances {
            let r = rng.gen_range(1..=cfg.max_degree);
            let f = random_monic(&k, r, &mut rng);
            if let Err(e) = duality_instance(&k, &f, &mut rng, &mut s) {
                s.record("duality_setup", Err(e));
            }
        }
    }
    s
}

/// Models for the divisor suite over `Q, F5, F7, Z[v]/(v²−1)`.
pub fn divisor_models(truncation: usize) -> Result<Vec<Efg>> {
    let q = BaseRing::rationals();
    let f5 = BaseRing::prime_field(5)?;
    let f7 = BaseRing::prime_field(7)?;
    Ok(vec![
        Efg::multiplicative(&q, &FinAbGroup::cyclic(2), &[q.int(-1)], truncation)?,
        Efg::multiplicative(&f5, &FinAbGroup::cyclic(4), &[f5.int(2)], truncation)?,
        Efg::multiplicative(&f7, &FinAbGroup::cyclic(3), &[f7.int(2)], truncation)?,
        Efg::multiplicative_universal(&BaseRing::integers(), &FinAbGroup::cyclic(2), truncation)?,
    ])
}

fn random_points(e: &Efg, count: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    let pts = e.phi_values();
    (0..count).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect()
}

fn sum_of_points(e: &Efg, pts: &[Elem]) -> Result<Divisor> {
    let mut d = Divisor::empty(e.curve());
    for c in pts {
        d = divisor_sum(&d, &point_divisor(e, c)?)?;
    }
    Ok(d)
}

/// `a = u·b` for a unit `u` of `R`, decided as mutual ideal membership.
fn associates(e: &Efg, a: &[Elem], b: &[Elem]) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let r = e.curve().ring();
    Ok(IdealSpan::new(r, &[b.to_vec()])?.contains(&a.to_vec())? && IdealSpan::new(r, &[a.to_vec()])?.contains(&b.to_vec())?)
}

pub fn divisor_norm_properties(e: &Efg, cfg: &SuiteConfig, rng: &mut ChaCha8Rng, s: &mut SuiteResult) {
    let r = e.curve().ring().clone();
    for _ in 0..cfg.divisor_instances {
        let deg = rng.gen_range(1..=cfg.divisor_degree);
        let pts = random_points(e, deg, rng);
        let d = match sum_of_points(e, &pts) {
            Ok(d) => d,
            Err(err) => {
                s.record("divisor_setup", Err(err));
                continue;
            }
        };
        let fd = fd_norm(&d, e);
        s.record("fd_regular", fd.clone().and_then(|f| regular_before_truncation(&d, &f)));
        s.record("fd_vanishes", fd.clone().map(|f| vanishes_on(&d, &f)));
        s.record("fd_generates", fd.clone().and_then(|f| generates_same_ideal(&d, &f)));
        s.record("full_set_norm", fd.clone().and_then(|f| associates(e, &f, &full_set_norm(e, &pts)?)));

        let split = rng.gen_range(0..=deg);
        let prod = (|| {
            let d0 = sum_of_points(e, &pts[..split])?;
            let d1 = sum_of_points(e, &pts[split..])?;
            Ok(fd_norm(&d, e)? == r.mul(&fd_norm(&d0, e)?, &fd_norm(&d1, e)?))
        })();
        s.record("fd_product", prod);

        let (na, nb) = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (1, 4), (4, 1)][rng.gen_range(0..8)];
        let a = random_points(e, na, rng);
        let b = random_points(e, nb, rng);
        let conv = (|| {
            let sums: Vec<Elem> = a.iter().flat_map(|x| b.iter().map(move |y| e.sigma_at(x, y))).collect();
            let lhs = convolution(&full_set_divisor(e, &a)?, &full_set_divisor(e, &b)?, e)?;
            Ok(lhs == full_set_divisor(e, &sums)?)
        })();
        s.record("convolution_bruteforce", conv);
    }
}

/// `rank O_{P_r(D)} = s!/(s−r)!` for `D` a sum of `s ≤ 4` distinct points.
pub fn points_rank_properties(s: &mut SuiteResult) -> Result<()> {
    let f7 = BaseRing::prime_field(7)?;
    let e = Efg::additive(&f7, &FinAbGroup::cyclic(7), &[f7.one()], 1)?;
    for size in 0..=4usize {
        let pts: Vec<Elem> = (0..size).map(|i| f7.int(i as i64 + 1)).collect();
        let d = full_set_divisor(&e, &pts)?;
        for r in 0..=size {
            let want: usize = (size - r + 1..=size).product();
            s.record("points_rank", points_scheme(&d, r).map(|p| p.rank() == want));
        }
    }
    Ok(())
}

pub fn divisor_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("divisor");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd1f);
    match divisor_models(cfg.divisor_degree) {
        Ok(models) => models.iter().for_each(|e| divisor_norm_properties(e, cfg, &mut rng, &mut s)),
        Err(e) => s.record("divisor_setup", Err(e)),
    }
    if let Err(e) = points_rank_properties(&mut s) {
        s.record("points_rank", Err(e));
    }
    s
}

/// Models for the `v_n` identities: multiplicative and additive, over several bases.
pub fn vn_models() -> Result<Vec<Efg>> {
    let z = BaseRing::integers();
    let q = BaseRing::rationals();
    let f5 = BaseRing::prime_field(5)?;
    let f3 = BaseRing::prime_field(3)?;
    Ok(vec![
        Efg::multiplicative_universal(&z, &FinAbGroup::cyclic(2), 2)?,
        Efg::multiplicative_universal(&z, &FinAbGroup::cyclic(3), 2)?,
        Efg::multiplicative_universal(&z, &FinAbGroup::new(vec![2, 2])?, 2)?,
        Efg::multiplicative(&q, &FinAbGroup::cyclic(2), &[q.int(-1)], 2)?,
        Efg::multiplicative(&f5, &FinAbGroup::cyclic(4), &[f5.int(2)], 2)?,
        Efg::additive(&f3, &FinAbGroup::cyclic(3), &[f3.one()], 2)?,
        Efg::additive(&z, &FinAbGroup::new(vec![2, 2])?, &[z.zero(), z.zero()], 2)?,
    ])
}

/// A coordinate `x′ = x·(u₀ + f·h + x²f·h′)` with `u₀` a unit of `k`.
pub fn random_coordinate_change(e: &Efg, rng: &mut ChaCha8Rng) -> Result<CoordinateChange> {
    let c = e.curve();
    let r = c.ring();
    let k = e.base();
    let f = c.from_poly(c.f());
    let h = c.from_poly(random_poly(k, 2, rng).coeffs());
    let h2 = c.from_poly(random_poly(k, 1, rng).coeffs());
    let x2 = r.mul(&c.x(), &c.x());
    let u = r.add(&c.constant(&random_unit(k, rng)), &r.mul(&f, &r.add(&h, &r.mul(&x2, &h2))));
    CoordinateChange::new(e, u)
}

pub fn vn_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("vn");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7a);
    let models = match vn_models() {
        Ok(m) => m,
        Err(e) => {
            s.record("vn_setup", Err(e));
            return s;
        }
    };
    for e in &models {
        s.absorb(series_identities(e, cfg.max_n), "series_identities");
        s.absorb(negation_rule(e, cfg.max_n), "vn_negation");
    }
    let mult: Vec<&Efg> = models.iter().filter(|e| e.kind() == crate::multicurve::ModelKind::Multiplicative).collect();
    for i in 0..cfg.coordinate_changes {
        let e = mult[i % mult.len()];
        let rep = random_coordinate_change(e, &mut rng).and_then(|ch| coordinate_invariance(e, &ch, cfg.max_n));
        s.absorb(rep, "vn_invariant");
    }
    s
}

pub fn transfer_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("transfer");
    let z = BaseRing::integers();
    let kv = (|| {
        let e = Efg::multiplicative_universal(&z, &FinAbGroup::cyclic(2), 2)?;
        let k = e.base();
        let g = e.group();
        let t = transfer_element(&e, &Subgroup::whole(g), None)?;
        let v = k.group_element(1).expect("group ring");
        let eta = eta_burnside(&e, &crate::abelian::BurnsideElement::basis(&Subgroup::trivial(g)))?;
        Ok(t == k.add(&k.one(), &v) && k.mul(&eta, &eta) == k.mul(&k.int(2), &eta))
    })();
    s.record("k_theory_value", kv);
    for factors in &cfg.transfer_groups {
        let rep = FinAbGroup::new(factors.clone())
            .and_then(|g| Efg::multiplicative_universal(&z, &g, 2))
            .and_then(|e| transfer_theorem_suite(&e, cfg.presentation_limit, cfg.automorphism_limit));
        s.absorb(rep, "transfer_setup");
    }
    s
}

pub fn mackey_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("mackey");
    let z = BaseRing::integers();
    for factors in &cfg.mackey_groups {
        for universal in [true, false] {
            let rep = FinAbGroup::new(factors.clone())
                .and_then(|g| {
                    if universal {
                        Efg::multiplicative_universal(&z, &g, 2)
                    } else {
                        Efg::additive(&z, &g, &vec![z.zero(); g.rank()], 2)
                    }
                })
                .and_then(|e| mackey_verify(&mackey_build(&e)?));
            s.absorb(rep, "mackey_setup");
        }
    }
    s
}

/// `f_K ≠ 0` in `R` while both expansions kill it modulo `t^{2^{K+1}}`.
pub fn counterexample_checks(truncation: usize, big_k: u32) -> Result<Vec<(u32, bool, bool)>> {
    let e = Efg::counterexample(truncation)?;
    let r = e.curve().ring();
    let mut out = Vec::new();
    for kk in 0..=big_k {
        let fk = counterexample_element(&e, kk)?;
        let nonzero = !r.is_zero(&fk);
        let mut killed = true;
        for a in e.group().elements() {
            let ex = e.expand_representative(&a, 1 << (kk + 1))?;
            killed &= ex.ring().is_zero(&ex.apply(&fk)?);
        }
        out.push((kk, nonzero, killed));
    }
    Ok(out)
}

pub fn counterexample_suite(cfg: &SuiteConfig) -> SuiteResult {
    let mut s = SuiteResult::new("counterexample");
    match counterexample_checks(cfg.counterexample_truncation, cfg.counterexample_k) {
        Ok(rows) => {
            for (_, nonzero, killed) in rows {
                s.record("f_k_nonzero", Ok(nonzero));
                s.record("expansions_vanish", Ok(killed));
            }
        }
        Err(e) => s.record("counterexample_setup", Err(e)),
    }
    s
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteResult> {
    Some(match name {
        "residue" => residue_suite(cfg),
        "duality" => duality_suite(cfg),
        "divisor" => divisor_suite(cfg),
        "vn" => vn_suite(cfg),
        "transfer" => transfer_suite(cfg),
        "mackey" => mackey_suite(cfg),
        "counterexample" => counterexample_suite(cfg),
        _ => return None,
    })
}
