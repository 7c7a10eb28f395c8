use std::collections::BTreeMap;

use crate::abelian::{subgroups_all, Subgroup};
use crate::error::{Error, Result};
use crate::multicurve::Efg;
use crate::ringkit::{BaseRing, Elem, Finite, IdealSpan, Ring};

use super::element::{transfer_ideal, transfer_quotient};
use super::report::SuiteReport;

/// The system `k_B = k/I(ann B)` for `B ≤ A`, with elements kept as representatives in `k`.
pub struct MackeyData {
    efg: Efg,
    subgroups: Vec<Subgroup>,
    ideals: Vec<Vec<Elem>>,
    spans: Vec<IdealSpan<BaseRing>>,
    /// `τ^B_C` keyed by the indices `(C, B)`.
    tau: BTreeMap<(usize, usize), Elem>,
}

pub fn mackey_build(e: &Efg) -> Result<MackeyData> {
    let k = e.base();
    k.ground()?;
    let subgroups = subgroups_all(e.group())?;
    let anns: Vec<Subgroup> = subgroups.iter().map(|b| b.annihilator()).collect();
    let ideals: Vec<Vec<Elem>> = anns.iter().map(|u| transfer_ideal(e, u)).collect();
    let spans = ideals.iter().map(|g| IdealSpan::new(k, g)).collect::<Result<Vec<_>>>()?;
    let mut tau = BTreeMap::new();
    for (bi, b) in subgroups.iter().enumerate() {
        for (ci, c) in subgroups.iter().enumerate() {
            if c.is_subgroup_of(b) {
                tau.insert((ci, bi), transfer_quotient(e, &anns[ci], &anns[bi])?);
            }
        }
    }
    Ok(MackeyData { efg: e.clone(), subgroups, ideals, spans, tau })
}

impl MackeyData {
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn base(&self) -> &BaseRing {
        self.efg.base()
    }

    fn index(&self, b: &Subgroup) -> Result<usize> {
        self.subgroups.iter().position(|s| s == b).ok_or_else(|| Error::NotASubgroup(b.to_string()))
    }

    /// Generators of `I(ann B)`.
    pub fn ideal(&self, b: &Subgroup) -> Result<&[Elem]> {
        Ok(&self.ideals[self.index(b)?])
    }

    /// `τ^B_C = t(ann C / ann B, φ̄)`.
    pub fn tau(&self, c: &Subgroup, b: &Subgroup) -> Result<&Elem> {
        let key = (self.index(c)?, self.index(b)?);
        self.tau.get(&key).ok_or_else(|| Error::NotASubgroup(format!("{c} is not contained in {b}")))
    }

    /// `x ≡ y` in `k_B`.
    pub fn congruent(&self, b: &Subgroup, x: &Elem, y: &Elem) -> Result<bool> {
        let k = self.base();
        self.spans[self.index(b)?].contains(&k.sub(x, y))
    }

    /// `res^B_C: k_B → k_C`, the quotient map on representatives.
    pub fn res(&self, b: &Subgroup, c: &Subgroup, r: &Elem) -> Result<Elem> {
        if !c.is_subgroup_of(b) {
            return Err(Error::NotASubgroup(format!("{c} is not contained in {b}")));
        }
        Ok(r.clone())
    }

    /// `trf^C_B: k_C → k_B`, multiplication of a lift by `τ^B_C`.
    pub fn trf(&self, c: &Subgroup, b: &Subgroup, r: &Elem) -> Result<Elem> {
        Ok(self.base().mul(self.tau(c, b)?, r))
    }
}

/// Identity, transitivity, the double coset rule and Frobenius reciprocity on a spanning set.
pub fn mackey_verify(m: &MackeyData) -> Result<SuiteReport> {
    let k = m.base();
    let g = m.efg.group();
    if g.order() > 16 {
        return Err(Error::GroupTooLarge { order: g.order(), bound: 16 });
    }
    let basis = k.ground_basis()?;
    let subs = m.subgroups.clone();
    let mut rep = SuiteReport::default();

    for b in &subs {
        let ok = basis.iter().try_fold(true, |acc, r| -> Result<bool> {
            Ok(acc && m.congruent(b, &m.res(b, b, r)?, r)? && m.congruent(b, &m.trf(b, b, r)?, r)?)
        })?;
        rep.push("identity", b.to_string(), ok);
    }

    for b in &subs {
        for c in subs.iter().filter(|c| c.is_subgroup_of(b)) {
            for d in subs.iter().filter(|d| d.is_subgroup_of(c)) {
                let chain = format!("{d} ≤ {c} ≤ {b}");
                let mut res_ok = true;
                let mut trf_ok = true;
                for r in &basis {
                    let two = m.res(c, d, &m.res(b, c, r)?)?;
                    res_ok &= m.congruent(d, &two, &m.res(b, d, r)?)?;
                    let two = m.trf(c, b, &m.trf(d, c, r)?)?;
                    trf_ok &= m.congruent(b, &two, &m.trf(d, b, r)?)?;
                }
                rep.push("res_transitive", chain.clone(), res_ok);
                rep.push("trf_transitive", chain, trf_ok);
            }
        }
    }

    for b in &subs {
        for c in subs.iter().filter(|c| c.is_subgroup_of(b)) {
            for d in subs.iter().filter(|d| d.is_subgroup_of(b)) {
                let cd = c.intersection(d)?;
                let index = b.order() / c.sum(d)?.order();
                let mut ok = true;
                for r in &basis {
                    let lhs = m.res(b, c, &m.trf(d, b, r)?)?;
                    let rhs = k.mul(&k.int(index as i64), &m.trf(&cd, c, &m.res(d, &cd, r)?)?);
                    ok &= m.congruent(c, &lhs, &rhs)?;
                }
                rep.push("double_coset", format!("{c}, {d} ≤ {b}"), ok);
            }
        }
    }

    for b in &subs {
        for c in subs.iter().filter(|c| c.is_subgroup_of(b)) {
            let mut ok = true;
            for r in &basis {
                for s in &basis {
                    let lhs = m.trf(c, b, &k.mul(&m.res(b, c, r)?, s))?;
                    let rhs = k.mul(r, &m.trf(c, b, s)?);
                    ok &= m.congruent(b, &lhs, &rhs)?;
                }
            }
            rep.push("frobenius", format!("{c} ≤ {b}"), ok);
        }
    }
    Ok(rep)
}
