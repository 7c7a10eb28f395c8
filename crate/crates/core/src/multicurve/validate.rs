use std::fmt;

use crate::ringkit::poly;
use crate::ringkit::{annihilator_basis, det_division_free, Algebra, IdealSpan, Ring};

use super::curve::eval2;
use super::model::Efg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.checks.push(Check { name, status, detail: detail.into() });
    }

    fn skip(&mut self, name: &'static str, detail: impl Into<String>) {
        self.checks.push(Check { name, status: CheckStatus::Skipped, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every model check at truncation `N`; the order of checks is fixed.
pub fn validate_efg(e: &Efg) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let curve = e.curve();
    let k = e.base();
    let r = curve.ring();
    let a = e.group();
    let elems: Vec<_> = a.elements().collect();

    rep.push(
        "degree",
        curve.degree() == elems.len(),
        format!("deg f = {}, |A*| = {}", curve.degree(), elems.len()),
    );
    rep.push("phi_zero", k.is_zero(e.phi(&a.zero())), "c_0 = 0");

    let bad_root = elems.iter().find(|al| !k.is_zero(&poly::eval(k, curve.f(), e.phi(al))));
    rep.push(
        "phi_roots",
        bad_root.is_none(),
        bad_root.map_or("f(c_α) = 0 for all α".into(), |al| format!("f(c_{al}) != 0")),
    );

    let mut hom_fail = None;
    'outer: for al in &elems {
        for be in &elems {
            if e.sigma_at(e.phi(al), e.phi(be)) != *e.phi(&a.add(al, be)) {
                hom_fail = Some(format!("σ(c_{al}, c_{be}) != c_{}", a.add(al, be)));
                break 'outer;
            }
        }
    }
    rep.push("phi_homomorphism", hom_fail.is_none(), hom_fail.unwrap_or_else(|| "σ(c_α, c_β) = c_{α+β}".into()));

    let x = curve.x();
    rep.push("sigma_unit", eval2(r, e.sigma(), &x, &r.zero()) == x, "σ(x, 0) = x");
    rep.push("sigma_symmetric", curve.swap(e.sigma()) == *e.sigma(), "σ(x0, x1) = σ(x1, x0)");

    let t2 = curve.tensor();
    let t3 = curve.triple();
    let x0 = t3.constant(&t2.constant(&x));
    let x1 = t3.constant(&t2.generator());
    let x2 = t3.generator();
    let s = e.sigma();
    let lhs = eval2(t3, s, &eval2(t3, s, &x0, &x1), &x2);
    let rhs = eval2(t3, s, &x0, &eval2(t3, s, &x1, &x2));
    rep.push("sigma_associative", lhs == rhs, "σ(σ(x0,x1),x2) = σ(x0,σ(x1,x2)) on representatives in R⊗R⊗R");

    let iota_ok = curve.check_image(r, e.iota());
    rep.push(
        "iota_defined",
        iota_ok.is_ok(),
        iota_ok.as_ref().err().map_or("f(ι)^N = 0 in R".into(), |err| err.to_string()),
    );
    rep.push("sigma_inverse", r.is_zero(&eval2(r, e.sigma(), &x, e.iota())), "σ(x, ι(x)) = 0");

    if k.is_square_zero() {
        rep.skip("x_regular", "ideal arithmetic is not decidable over F2[e]+M");
    } else {
        let fpow = r.modulus();
        let cofactor: Vec<_> = fpow[1..].to_vec();
        let ok = annihilator_basis(r, &x).and_then(|ann| {
            let span = IdealSpan::new(r, &[r.reduce(&cofactor)])?;
            for y in &ann {
                if !span.contains(y)? {
                    return Ok(false);
                }
            }
            Ok(true)
        });
        rep.push("x_regular", ok == Ok(true), "ann(x) = (f^N/x), so x is regular before truncation");
    }

    let xs: Vec<_> = elems.iter().map(|al| e.x_alpha(al)).collect();
    let y_raw = r.product(xs.iter());
    let nu_ok = k.inverse(e.norm_unit()).is_some() && r.scale(e.norm_unit(), &y_raw) == curve.y();
    rep.push("norm_unit", nu_ok, format!("u0 = {} and u0·Π x_α = f", k.render(e.norm_unit())));

    match e.topological_basis(curve.rank()) {
        Ok((_, m)) => match det_division_free(k, &m) {
            Ok(d) => rep.push("topological_basis", k.inverse(&d).is_some(), format!("det = {}", k.render(&d))),
            Err(err) => rep.push("topological_basis", false, err.to_string()),
        },
        Err(err) => rep.push("topological_basis", false, err.to_string()),
    }

    rep
}
