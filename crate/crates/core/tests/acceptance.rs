//! Acceptance criteria, one pass/fail line each.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use efgc::abelian::{BurnsideElement, FinAbGroup, Subgroup};
use efgc::cli::suites::{
    counterexample_checks, divisor_models, divisor_norm_properties, duality_suite, points_rank_properties,
    residue_suite, transfer_suite, vn_suite, SuiteConfig, SuiteResult,
};
use efgc::divisor::{full_set_divisor, moments, Divisor};
use efgc::multicurve::Efg;
use efgc::ringkit::{verify_split, BaseRing, Elem, Ring};
use efgc::transfer::{eta_burnside, mackey_build, mackey_verify, split_idempotents, transfer_element};
type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn suite_outcome(s: &SuiteResult, required: &[&str]) -> Outcome {
    let missing: Vec<&&str> = required.iter().filter(|n| s.get(n).map_or(true, |p| p.passed == 0)).collect();
    let counts: Vec<String> = s.properties.iter().map(|p| format!("{}={}/{}", p.name, p.passed, p.passed + p.failed)).collect();
    let mut detail = counts.join(" ");
    if !missing.is_empty() {
        detail.push_str(&format!(" missing={missing:?}"));
    }
    for p in s.properties.iter().filter(|p| p.failed > 0) {
        if let Some(e) = &p.first_error {
            detail.push_str(&format!(" [{}: {e}]", p.name));
        }
    }
    Outcome::new(s.passed() && missing.is_empty(), detail)
}

fn group(f: &[u64]) -> FinAbGroup {
    FinAbGroup::new(f.to_vec()).unwrap()
}

fn universal(coeffs: &BaseRing, f: &[u64], n: usize) -> Result<Efg> {
    Ok(Efg::multiplicative_universal(coeffs, &group(f), n)?)
}

fn criterion_1() -> Result<Outcome> {
    let e = universal(&BaseRing::integers(), &[2], 2)?;
    let k = e.base();
    let g = e.group();
    let v = k.group_element(1).expect("group ring");
    let t = transfer_element(&e, &Subgroup::whole(g), None)?;
    let free = BurnsideElement::basis(&Subgroup::trivial(g));
    let eta = eta_burnside(&e, &free)?;
    let eta_sq = eta_burnside(&e, &free.mul(&free)?)?;
    let ok = t == k.add(&k.one(), &v) && k.mul(&eta, &eta) == k.mul(&k.int(2), &eta) && eta_sq == k.mul(&eta, &eta);
    Ok(Outcome::new(ok, format!("t(A*) = {}, η([A/1]) = {}", k.render(&t), k.render(&eta))))
}

fn criterion_2() -> Result<Outcome> {
    let cfg = SuiteConfig {
        transfer_groups: vec![vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4], vec![2, 2, 2]],
        ..SuiteConfig::default()
    };
    let s = transfer_suite(&cfg);
    let required = [
        "k_theory_value",
        "a_trivial_phi",
        "b_direct_sum",
        "d_isomorphism",
        "e_annihilates",
        "f_quotient",
        "g_product",
        "presentation",
        "eta_ring",
    ];
    Ok(suite_outcome(&s, &required))
}

fn criterion_3() -> Result<Outcome> {
    let cfg = SuiteConfig { max_n: 6, coordinate_changes: 50, ..SuiteConfig::default() };
    let s = vn_suite(&cfg);
    let required = ["vn_square", "lem_nm", "lem_asym", "lem_coprime", "cor_bicyclic", "vn_negation", "vn_invariant"];
    let mut out = suite_outcome(&s, &required);
    let changes = s.get("vn_invariant").map_or(0, |p| p.passed + p.failed);
    out.detail.push_str(&format!(" coordinate_changes={}", cfg.coordinate_changes));
    out.pass &= changes >= cfg.coordinate_changes;
    Ok(out)
}

fn criterion_4() -> Result<Outcome> {
    let cfg = SuiteConfig { residue_instances: 1000, max_degree: 8, ..SuiteConfig::default() };
    let s = residue_suite(&cfg);
    let mut out = suite_outcome(&s, &["res_polynomial", "res_derivative", "res_log_derivative", "trace_formula"]);
    let per_ring = s.get("res_polynomial").map_or(0, |p| p.passed) / 5;
    out.pass &= per_ring >= 1000;
    Ok(out)
}

fn criterion_5() -> Result<Outcome> {
    let cfg = SuiteConfig { duality_instances: 200, max_degree: 8, ..SuiteConfig::default() };
    let s = duality_suite(&cfg);
    let required = [
        "theta0_det_unit",
        "theta0_inverse",
        "epsilon_theta0",
        "epsilon_psi_unit",
        "trace_element",
        "residue_pairing",
        "residue_inclusion",
    ];
    Ok(suite_outcome(&s, &required))
}

fn criterion_6() -> Result<Outcome> {
    let cfg = SuiteConfig { divisor_instances: 25, divisor_degree: 4, ..SuiteConfig::default() };
    let mut s = SuiteResult { suite: "divisor".into(), properties: vec![] };
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for e in divisor_models(cfg.divisor_degree)? {
        divisor_norm_properties(&e, &cfg, &mut rng, &mut s);
    }
    let required = ["fd_regular", "fd_vanishes", "fd_generates", "full_set_norm", "fd_product", "convolution_bruteforce"];
    Ok(suite_outcome(&s, &required))
}

fn criterion_7() -> Result<Outcome> {
    let mut s = SuiteResult { suite: "points".into(), properties: vec![] };
    points_rank_properties(&mut s)?;
    Ok(suite_outcome(&s, &["points_rank"]))
}

/// `e_i(u) = Π_{l<i} σ(u, ι(c_{α_l}))`, with the characters cycled in enumeration order.
fn basis_value(e: &Efg, i: usize, u: &Elem) -> Elem {
    let k = e.base();
    let cs: Vec<Elem> = e.group().elements().map(|a| e.iota_at(e.phi(&a))).collect();
    (0..i).fold(k.one(), |acc, l| k.mul(&acc, &e.sigma_at(u, &cs[l % cs.len()])))
}

/// Coefficients of `Π_j (Σ_i t_i e_i(u_j))`, expanded directly.
fn brute_moments(e: &Efg, pts: &[Elem], cutoff: usize) -> BTreeMap<Vec<u32>, Elem> {
    let k = e.base();
    let mut acc: BTreeMap<Vec<u32>, Elem> = BTreeMap::from([(vec![0; cutoff], k.one())]);
    for u in pts {
        let vals: Vec<Elem> = (0..cutoff).map(|i| basis_value(e, i, u)).collect();
        let mut next: BTreeMap<Vec<u32>, Elem> = BTreeMap::new();
        for (beta, c) in &acc {
            for (i, v) in vals.iter().enumerate() {
                let mut b = beta.clone();
                b[i] += 1;
                let slot = next.entry(b).or_insert_with(|| k.zero());
                *slot = k.add(slot, &k.mul(c, v));
            }
        }
        acc = next;
    }
    acc.into_iter().filter(|(_, v)| !k.is_zero(v)).collect()
}

fn nonzero(k: &BaseRing, m: &BTreeMap<Vec<u32>, Elem>) -> BTreeMap<Vec<u32>, Elem> {
    m.iter().filter(|(_, v)| !k.is_zero(v)).map(|(b, v)| (b.clone(), v.clone())).collect()
}

fn criterion_8() -> Result<Outcome> {
    let q = BaseRing::rationals();
    let f5 = BaseRing::prime_field(5)?;
    let f7 = BaseRing::prime_field(7)?;
    // (model, whether points may repeat)
    let models = vec![
        (Efg::multiplicative(&q, &group(&[2]), &[q.int(-1)], 3)?, true),
        (Efg::multiplicative(&f5, &group(&[4]), &[f5.int(2)], 3)?, true),
        (universal(&BaseRing::integers(), &[2], 3)?, true),
        (Efg::additive(&f7, &group(&[7]), &[f7.one()], 1)?, false),
    ];
    let cutoff = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(0x3e47);
    let (mut agree, mut total) = (0, 0);
    for (e, repeat) in &models {
        let pts = e.phi_values();
        for _ in 0..12 {
            let deg = rng.gen_range(1..=3);
            let mut chosen: Vec<Elem> = Vec::new();
            while chosen.len() < deg {
                let c = pts[rng.gen_range(0..pts.len())].clone();
                if *repeat || !chosen.contains(&c) {
                    chosen.push(c);
                }
            }
            let d = full_set_divisor(e, &chosen)?;
            let m = moments(&d, e, cutoff)?;
            total += 1;
            if nonzero(e.base(), &m.entries) == brute_moments(e, &chosen, cutoff) {
                agree += 1;
            }
        }
    }

    let e = Efg::additive(&f7, &group(&[7]), &[f7.one()], 1)?;
    let mut seen: BTreeMap<Vec<(Vec<u32>, String)>, Vec<Elem>> = BTreeMap::new();
    let mut divisors = 0;
    let mut collisions = 0;
    for b in 0..7 {
        for c in 0..7 {
            let gen = vec![f7.int(c), f7.int(b), f7.one()];
            let Ok(d) = Divisor::new(e.curve(), gen.clone()) else {
                continue;
            };
            divisors += 1;
            let m = moments(&d, &e, cutoff)?;
            let key: Vec<(Vec<u32>, String)> =
                nonzero(&f7, &m.entries).into_iter().map(|(b, v)| (b, f7.render(&v))).collect();
            if seen.insert(key, gen).is_some() {
                collisions += 1;
            }
        }
    }
    let ok = agree == total && divisors == 21 && collisions == 0;
    Ok(Outcome::new(
        ok,
        format!("brute-force agreement {agree}/{total}; F7 degree-2 divisors {divisors}, moment collisions {collisions}"),
    ))
}

fn criterion_9() -> Result<Outcome> {
    let rows = counterexample_checks(17, 4)?;
    let last = rows.last().copied();
    let ok = rows.iter().all(|&(_, nz, killed)| nz && killed) && last.map(|r| r.0) == Some(4);
    let detail: Vec<String> = rows.iter().map(|(k, nz, kl)| format!("K={k}: nonzero={nz} killed={kl}")).collect();
    Ok(Outcome::new(ok, format!("N=17, t^32 at K=4; {}", detail.join(", "))))
}

fn criterion_10() -> Result<Outcome> {
    let z = BaseRing::integers();
    let groups: Vec<Vec<u64>> =
        vec![vec![], vec![2], vec![3], vec![4], vec![2, 2], vec![5], vec![6], vec![7], vec![8], vec![2, 4], vec![2, 2, 2]];
    let mut s = SuiteResult { suite: "mackey".into(), properties: vec![] };
    for f in &groups {
        let g = group(f);
        for e in [universal(&z, f, 1)?, Efg::additive(&z, &g, &vec![z.zero(); g.rank()], 1)?] {
            match mackey_build(&e).and_then(|m| mackey_verify(&m)) {
                Ok(rep) => rep.checks.iter().for_each(|c| s.record(&c.axiom, Ok(c.pass))),
                Err(err) => s.record("mackey_setup", Err(err)),
            }
        }
    }
    Ok(suite_outcome(&s, &["identity", "res_transitive", "trf_transitive", "double_coset", "frobenius"]))
}

fn criterion_11() -> Result<Outcome> {
    let q = BaseRing::rationals();
    let mut models = Vec::new();
    for f in [vec![2], vec![3], vec![4], vec![2, 2]] {
        models.push(universal(&q, &f, 2)?);
        let g = group(&f);
        models.push(Efg::additive(&q, &g, &vec![q.zero(); g.rank()], 2)?);
    }
    models.push(Efg::multiplicative(&q, &group(&[2]), &[q.int(-1)], 2)?);
    let (mut ok, mut count) = (true, 0);
    for e in &models {
        let k = e.base();
        for (a, eps) in split_idempotents(e)? {
            count += 1;
            ok &= k.mul(&eps, &eps) == eps;
            ok &= verify_split(&k.value(e.phi(&a).clone()), &k.value(eps))?;
        }
    }
    Ok(Outcome::new(ok, format!("{count} idempotents over {} models", models.len())))
}

fn criterion_12() -> Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_efgc");
    let run = |args: &[&str]| Command::new(bin).args(args).env_remove("EFGC_WORK_PRECISION").output();
    let a = run(&["selftest", "--suite", "all"])?;
    let b = run(&["selftest", "--suite", "all"])?;
    let mut ok = a.status.code() == Some(0) && a.stdout == b.stdout;
    let specs = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&specs)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
    paths.sort();
    let (mut runs, mut documents) = (0, 0);
    for p in &paths {
        let p = p.to_str().expect("utf-8 path");
        for cmd in [vec!["validate", p], vec!["vn", p], vec!["transfer", p], vec!["mackey", p], vec!["divisor", p]] {
            let x = run(&cmd)?;
            let y = run(&cmd)?;
            runs += 1;
            ok &= x.stdout == y.stdout && x.stderr == y.stderr && x.status.code() == y.status.code();
            if x.status.code() == Some(0) || cmd[0] == "validate" {
                ok &= serde_json::from_slice::<serde_json::Value>(&x.stdout).is_ok();
                documents += 1;
            }
        }
    }
    Ok(Outcome::new(ok, format!("selftest exit {:?}; {runs} spec runs repeated byte-identically, {documents} JSON documents", a.status.code())))
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<Outcome>);

fn main() {
    let s = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        (1, "K-theory transfer value", s(1), criterion_1),
        (2, "transfer theorem suite", s(60), criterion_2),
        (3, "v_n identity suite", s(30), criterion_3),
        (4, "residue suite", s(30), criterion_4),
        (5, "duality suite", s(60), criterion_5),
        (6, "divisor norm suite", s(60), criterion_6),
        (7, "points-scheme rank", s(10), criterion_7),
        (8, "moments", s(60), criterion_8),
        (9, "counterexample at truncation", s(5), criterion_9),
        (10, "Mackey axioms", s(60), criterion_10),
        (11, "splitting idempotents", s(10), criterion_11),
        (12, "CLI determinism", s(300), criterion_12),
    ];
    let mut failed = 0;
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let out = f().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let took = start.elapsed();
        let pass = out.pass && took <= limit;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {}: {name} ({:.2}s, limit {}s) {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs(),
            out.detail
        );
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
