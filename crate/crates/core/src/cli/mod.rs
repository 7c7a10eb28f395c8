//! The `efgc` command-line tool: model specs in TOML, deterministic output documents and the self-test harness.

mod output;
mod spec;
pub mod suites;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::abelian::{subgroups_all, BurnsideElement};
use crate::divisor::{euler_class, fd_norm, moments, parse_divisor};
use crate::error::{Error, Result};
use crate::multicurve::{validate_efg, Efg};
use crate::resdual::{
    duality_e, epsilon_unit_identity, psi, residue, residue_of_derivative, theta0_matrix, trace_element,
    DualityAlgebra, MeromorphicForm,
};
use crate::ringkit::text::{parse_poly, parse_ring};
use crate::ringkit::{det_berkowitz, poly, BaseRing, Elem, Poly, Ring};
use crate::transfer::{eta_burnside, mackey_build, mackey_verify, transfer_element, vn_at_point};

pub use output::{Document, OutFormat, SCHEMA};
pub use spec::{digest_bytes, load_spec, parse_spec, work_precision, LoadedSpec, ModelSpec, DEFAULT_WORK_PRECISION};
pub use suites::{SuiteConfig, SuiteResult, SUITES};

#[derive(Parser, Debug)]
#[command(name = "efgc", version, about = "Exact computations with equivariant formal groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub out: OutFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every model invariant.
    Validate { spec: PathBuf },
    /// Table of v_n at the points c_α.
    Vn {
        spec: PathBuf,
        #[arg(long)]
        max_n: Option<i64>,
        /// Include −max-n ≤ n ≤ −1.
        #[arg(long)]
        negative: bool,
    },
    /// Transfer elements of all subgroups of A* and the map η.
    Transfer { spec: PathBuf },
    /// Mackey axioms for the system k_B.
    Mackey { spec: PathBuf },
    /// Evaluate a divisor expression.
    Divisor {
        spec: PathBuf,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Residue of num(x)/den(x) dx.
    Residue {
        spec: Option<PathBuf>,
        #[arg(long)]
        num: String,
        #[arg(long)]
        den: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Duality data for k[x]/f with f given by --den.
    Duality {
        spec: Option<PathBuf>,
        #[arg(long)]
        den: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Moment vector of a divisor expression.
    Moments {
        spec: PathBuf,
        #[arg(long)]
        expr: Option<String>,
        #[arg(long)]
        cutoff: Option<usize>,
    },
    /// Run the property suites.
    Selftest {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// A finished command: its document and whether every check passed.
pub struct Outcome {
    pub doc: Document,
    pub ok: bool,
}

/// Exit status for an error: 2 for input that does not parse, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Expr(_) => 2,
        _ => 1,
    }
}

fn inputs(spec: Option<&LoadedSpec>, path: Option<&Path>, flags: Value) -> Value {
    json!({
        "spec": path.map(|p| p.display().to_string()),
        "digest": spec.map(|s| s.digest.clone()),
        "flags": flags,
    })
}

fn render_poly(k: &BaseRing, p: &[Elem]) -> Vec<String> {
    p.iter().map(|c| k.render(c)).collect()
}

fn model(path: &Path) -> Result<(LoadedSpec, Efg)> {
    let s = load_spec(path)?;
    let e = s.spec.build(true)?;
    Ok((s, e))
}

fn cmd_validate(path: &Path) -> Result<Outcome> {
    let s = load_spec(path)?;
    let e = s.spec.build(false)?;
    let rep = validate_efg(&e);
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "status": c.status.to_string(), "detail": c.detail}))
        .collect();
    let ok = rep.passed();
    let results = json!({
        "passed": ok,
        "checks": checks,
        "ring": e.base().descriptor().to_string(),
        "f": render_poly(e.base(), e.curve().f()),
        "truncation": e.curve().truncation(),
    });
    Ok(Outcome { doc: Document { command: "validate".into(), inputs: inputs(Some(&s), Some(path), json!({})), results }, ok })
}

fn cmd_vn(path: &Path, max_n: Option<i64>, negative: bool) -> Result<Outcome> {
    let (s, e) = model(path)?;
    let max_n = max_n.or(s.spec.options.max_n).unwrap_or(4);
    if max_n < 1 {
        return Err(Error::Parse("--max-n must be positive".into()));
    }
    let k = e.base();
    let ns: Vec<i64> = if negative { (-max_n..=-1).chain(1..=max_n).collect() } else { (1..=max_n).collect() };
    let mut rows = Vec::new();
    for n in ns {
        for a in e.group().elements() {
            rows.push(json!({"n": n, "alpha": a.to_string(), "value": k.render(&vn_at_point(&e, n, &a)?)}));
        }
    }
    let flags = json!({"max_n": max_n, "negative": negative});
    let results = json!({"rows": rows});
    Ok(Outcome { doc: Document { command: "vn".into(), inputs: inputs(Some(&s), Some(path), flags), results }, ok: true })
}

fn cmd_transfer(path: &Path) -> Result<Outcome> {
    let (s, e) = model(path)?;
    let k = e.base();
    let g = e.group();
    let subs = subgroups_all(g)?;
    let mut transfers = Vec::new();
    for u in &subs {
        transfers.push(json!({"subgroup": u.to_string(), "order": u.order(), "value": k.render(&transfer_element(&e, u, None)?)}));
    }
    let mut eta = Vec::new();
    let mut values = Vec::new();
    for b in &subs {
        let v = eta_burnside(&e, &BurnsideElement::basis(b))?;
        eta.push(json!({"basis": format!("[A/{b}]"), "value": k.render(&v)}));
        values.push(v);
    }
    let mut ring_map = true;
    for (i, b0) in subs.iter().enumerate() {
        for (j, b1) in subs.iter().enumerate() {
            let prod = BurnsideElement::basis(b0).mul(&BurnsideElement::basis(b1))?;
            ring_map &= eta_burnside(&e, &prod)? == k.mul(&values[i], &values[j]);
        }
    }
    let results = json!({"transfers": transfers, "eta": eta, "ring_map": ring_map});
    let doc = Document { command: "transfer".into(), inputs: inputs(Some(&s), Some(path), json!({})), results };
    Ok(Outcome { doc, ok: ring_map })
}

fn cmd_mackey(path: &Path) -> Result<Outcome> {
    let (s, e) = model(path)?;
    let rep = mackey_verify(&mackey_build(&e)?)?;
    let checks: Vec<Value> = rep.checks.iter().map(|c| json!({"axiom": c.axiom, "chain": c.chain, "pass": c.pass})).collect();
    let ok = rep.passed();
    let results = json!({"passed": ok, "checks": checks});
    Ok(Outcome { doc: Document { command: "mackey".into(), inputs: inputs(Some(&s), Some(path), json!({})), results }, ok })
}

fn expr_of(s: &LoadedSpec, expr: Option<String>) -> Result<String> {
    expr.or_else(|| s.spec.options.expr.clone()).ok_or_else(|| Error::Parse("--expr is required".into()))
}

fn cmd_divisor(path: &Path, expr: Option<String>) -> Result<Outcome> {
    let (s, e) = model(path)?;
    let expr = expr_of(&s, expr)?;
    let d = parse_divisor(&e, &expr)?;
    let k = e.base();
    let results = json!({
        "generator": render_poly(k, d.generator()),
        "degree": d.degree(),
        "openness": d.openness_exponent(),
        "f_d": render_poly(k, &poly::trimmed(k, fd_norm(&d, &e)?)),
        "euler_class": k.render(&euler_class(&d, &e)?),
    });
    let doc = Document { command: "divisor".into(), inputs: inputs(Some(&s), Some(path), json!({"expr": expr})), results };
    Ok(Outcome { doc, ok: true })
}

fn cmd_moments(path: &Path, expr: Option<String>, cutoff: Option<usize>) -> Result<Outcome> {
    let (s, e) = model(path)?;
    let expr = expr_of(&s, expr)?;
    let d = parse_divisor(&e, &expr)?;
    let cutoff = cutoff.or(s.spec.options.cutoff).unwrap_or(e.curve().rank());
    let m = moments(&d, &e, cutoff)?;
    let k = e.base();
    let entries: Vec<Value> = m
        .entries
        .iter()
        .filter(|(_, v)| !k.is_zero(v))
        .map(|(b, v)| {
            let beta: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            json!({"beta": beta.join(","), "value": k.render(v)})
        })
        .collect();
    let results = json!({"degree": m.degree, "cutoff": m.cutoff, "entries": entries});
    let flags = json!({"expr": expr, "cutoff": cutoff});
    Ok(Outcome { doc: Document { command: "moments".into(), inputs: inputs(Some(&s), Some(path), flags), results }, ok: true })
}

fn ring_for(spec: Option<&Path>, ring: Option<&str>) -> Result<(Option<LoadedSpec>, BaseRing)> {
    match (spec, ring) {
        (_, Some(r)) => Ok((spec.map(load_spec).transpose()?, parse_ring(r)?)),
        (Some(p), None) => {
            let (s, e) = model(p)?;
            Ok((Some(s), e.base().clone()))
        }
        (None, None) => Ok((None, BaseRing::rationals())),
    }
}

fn cmd_residue(spec: Option<&Path>, num: &str, den: &str, ring: Option<&str>) -> Result<Outcome> {
    let (s, k) = ring_for(spec, ring)?;
    let p = Poly::new(&k, parse_poly(&k, "x", num)?);
    let q = Poly::new(&k, parse_poly(&k, "x", den)?);
    let w = MeromorphicForm::new(p.clone(), q.clone())?;
    let res = residue(&w);
    let exact = residue_of_derivative(&p, &q)?;
    let ok = k.is_zero(&exact);
    let results = json!({
        "residue": k.render(&res),
        "derivative_residue": k.render(&exact),
        "ring": k.descriptor().to_string(),
    });
    let flags = json!({"num": num, "den": den, "ring": ring});
    Ok(Outcome { doc: Document { command: "residue".into(), inputs: inputs(s.as_ref(), spec, flags), results }, ok })
}

fn cmd_duality(spec: Option<&Path>, den: &str, ring: Option<&str>) -> Result<Outcome> {
    let (s, k) = ring_for(spec, ring)?;
    let f = Poly::new(&k, parse_poly(&k, "x", den)?);
    let alg = DualityAlgebra::new(&f)?;
    let m = theta0_matrix(&alg);
    let det = det_berkowitz(&k, &m)?;
    let r = alg.rank();
    let e: Vec<Value> = duality_e(&alg)
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            let k = &k;
            row.iter().enumerate().filter(|(_, c)| !k.is_zero(c)).map(move |(j, c)| json!({"i": i, "j": j, "coeff": k.render(c)}))
        })
        .collect();
    let matrix: Vec<Vec<String>> = (0..r).map(|i| (0..r).map(|j| k.render(m.get(i, j))).collect()).collect();
    let fp = alg.algebra().reduce(f.derivative().coeffs());
    let unit_ok = epsilon_unit_identity(&alg) == alg.algebra().one();
    let trace_ok = trace_element(&alg) == fp;
    let det_ok = det == k.one() || det == k.int(-1);
    let results = json!({
        "e": e,
        "theta0_matrix": matrix,
        "det": k.render(&det),
        "psi": render_poly(&k, &psi(&alg).values),
        "trace_element": render_poly(&k, &trace_element(&alg)),
        "checks": {"det_unit": det_ok, "epsilon_psi_unit": unit_ok, "trace_element": trace_ok},
    });
    let flags = json!({"den": den, "ring": ring});
    let doc = Document { command: "duality".into(), inputs: inputs(s.as_ref(), spec, flags), results };
    Ok(Outcome { doc, ok: det_ok && unit_ok && trace_ok })
}

/// Runs one named suite, or all of them, with the default sizes.
pub fn cmd_selftest(suite: &str) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let cfg = SuiteConfig::default();
    let mut out = Vec::new();
    let mut ok = true;
    for n in names {
        let r = suites::run_suite(n, &cfg).ok_or_else(|| Error::Parse(format!("unknown suite {n:?}")))?;
        ok &= r.passed();
        out.push(r.to_json());
    }
    let flags = json!({"suite": suite, "work_precision": work_precision()});
    let results = json!({"passed": ok, "suites": out});
    Ok(Outcome { doc: Document { command: "selftest".into(), inputs: inputs(None, None, flags), results }, ok })
}

pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate { spec } => cmd_validate(spec),
        Command::Vn { spec, max_n, negative } => cmd_vn(spec, *max_n, *negative),
        Command::Transfer { spec } => cmd_transfer(spec),
        Command::Mackey { spec } => cmd_mackey(spec),
        Command::Divisor { spec, expr } => cmd_divisor(spec, expr.clone()),
        Command::Residue { spec, num, den, ring } => cmd_residue(spec.as_deref(), num, den, ring.as_deref()),
        Command::Duality { spec, den, ring } => cmd_duality(spec.as_deref(), den, ring.as_deref()),
        Command::Moments { spec, expr, cutoff } => cmd_moments(spec, expr.clone(), *cutoff),
        Command::Selftest { suite } => cmd_selftest(suite),
    }
}

/// Parses arguments, runs the command and prints the document; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            print!("{}", o.doc.render(cli.out));
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("efgc: {e}");
            exit_code(&e)
        }
    }
}
