use std::collections::BTreeMap;
use std::fmt;

use super::group::FinAbGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};

/// Integer combination of the classes `[A/B]`, keyed by `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnsideElement {
    group: FinAbGroup,
    coeffs: BTreeMap<Subgroup, i64>,
}

impl BurnsideElement {
    pub fn zero(group: &FinAbGroup) -> Self {
        BurnsideElement { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// The class `[A/B]`.
    pub fn basis(b: &Subgroup) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(b.clone(), 1);
        BurnsideElement { group: b.group().clone(), coeffs }
    }

    /// `[A/A]`.
    pub fn one(group: &FinAbGroup) -> Self {
        Self::basis(&Subgroup::whole(group))
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &BTreeMap<Subgroup, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, b: &Subgroup) -> i64 {
        self.coeffs.get(b).copied().unwrap_or(0)
    }

    fn accumulate(&mut self, b: Subgroup, c: i64) {
        let e = self.coeffs.entry(b).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (b, &c) in &other.coeffs {
            out.accumulate(b.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(&self.group);
        for (b, &c) in &self.coeffs {
            out.accumulate(b.clone(), c * k);
        }
        out
    }

    /// Bilinear extension of `[A/B][A/B'] = |A/(B+B')| [A/(B∩B')]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let order = self.group.order() as i64;
        let mut out = Self::zero(&self.group);
        for (b0, &c0) in &self.coeffs {
            for (b1, &c1) in &other.coeffs {
                let s = b0.sum(b1)?;
                let i = b0.intersection(b1)?;
                out.accumulate(i, c0 * c1 * (order / s.order() as i64));
            }
        }
        Ok(out)
    }
}

pub fn burnside_mul(a: &BurnsideElement, b: &BurnsideElement) -> Result<BurnsideElement> {
    a.mul(b)
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(b, c)| format!("{c}[A/{b}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
