//! `F₂[e] ⊕ M` with `M` spanned by `u_1, u_2, …`, `e·u_{i+1} = u_i`, `u_0 = 0`, `u_i u_j = 0`.

use std::collections::BTreeSet;

/// `p(e) + Σ u_i`: the exponents of `p` with coefficient 1, and the indices `i ≥ 1` present.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqZero {
    pub poly: BTreeSet<u32>,
    pub module: BTreeSet<u32>,
}

fn toggle(set: &mut BTreeSet<u32>, k: u32) {
    if !set.remove(&k) {
        set.insert(k);
    }
}

impl SqZero {
    pub fn zero() -> Self {
        SqZero::default()
    }

    pub fn one() -> Self {
        let mut s = SqZero::default();
        s.poly.insert(0);
        s
    }

    pub fn e() -> Self {
        let mut s = SqZero::default();
        s.poly.insert(1);
        s
    }

    pub fn u(i: u32) -> Self {
        let mut s = SqZero::default();
        if i > 0 {
            s.module.insert(i);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.module.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &k in &other.poly {
            toggle(&mut out.poly, k);
        }
        for &k in &other.module {
            toggle(&mut out.module, k);
        }
        out
    }

    fn act(poly: &BTreeSet<u32>, module: &BTreeSet<u32>, out: &mut BTreeSet<u32>) {
        for &j in poly {
            for &i in module {
                if i > j {
                    toggle(out, i - j);
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SqZero::default();
        for &a in &self.poly {
            for &b in &other.poly {
                toggle(&mut out.poly, a + b);
            }
        }
        Self::act(&self.poly, &other.module, &mut out.module);
        Self::act(&other.poly, &self.module, &mut out.module);
        out
    }

    /// Units are `1 + m` with `m ∈ M`; each is its own inverse.
    pub fn inverse(&self) -> Option<Self> {
        (self.poly.len() == 1 && self.poly.contains(&0)).then(|| self.clone())
    }

    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for &k in &self.poly {
            terms.push(match k {
                0 => "1".to_string(),
                1 => "e".to_string(),
                _ => format!("e^{k}"),
            });
        }
        for &i in &self.module {
            terms.push(format!("u{i}"));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}
