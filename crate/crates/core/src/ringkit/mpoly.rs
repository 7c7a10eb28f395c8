use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{Algebra, BaseRing, Elem, Ring};

/// Sparse polynomial: exponent vector ↦ nonzero coefficient.
pub type MPoly = BTreeMap<Vec<u32>, Elem>;

#[derive(Debug)]
struct MInner {
    base: BaseRing,
    names: Vec<String>,
    max_degree: u32,
}

/// `k[t_0, …, t_{n−1}]` modulo all monomials of total degree above a bound.
#[derive(Clone, Debug)]
pub struct MPolyRing {
    inner: Arc<MInner>,
}

impl MPolyRing {
    pub fn new(base: &BaseRing, names: Vec<String>, max_degree: u32) -> Self {
        MPolyRing { inner: Arc::new(MInner { base: base.clone(), names, max_degree }) }
    }

    pub fn base(&self) -> &BaseRing {
        &self.inner.base
    }

    pub fn num_vars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.inner.max_degree
    }

    pub fn var(&self, i: usize) -> MPoly {
        let mut e = vec![0; self.num_vars()];
        e[i] = 1;
        self.monomial(e, self.base().one())
    }

    pub fn monomial(&self, exps: Vec<u32>, c: Elem) -> MPoly {
        let mut m = MPoly::new();
        if !self.base().is_zero(&c) && exps.iter().sum::<u32>() <= self.max_degree() {
            m.insert(exps, c);
        }
        m
    }

    pub fn coeff(&self, p: &MPoly, exps: &[u32]) -> Elem {
        p.get(exps).cloned().unwrap_or_else(|| self.base().zero())
    }

    fn accumulate(&self, p: &mut MPoly, exps: Vec<u32>, c: Elem) {
        let k = self.base();
        match p.get_mut(&exps) {
            Some(v) => {
                *v = k.add(v, &c);
                if k.is_zero(v) {
                    p.remove(&exps);
                }
            }
            None => {
                if !k.is_zero(&c) {
                    p.insert(exps, c);
                }
            }
        }
    }
}

impl Ring for MPolyRing {
    type Elem = MPoly;

    fn zero(&self) -> MPoly {
        MPoly::new()
    }

    fn one(&self) -> MPoly {
        self.monomial(vec![0; self.num_vars()], self.base().one())
    }

    fn from_int(&self, n: &BigInt) -> MPoly {
        self.monomial(vec![0; self.num_vars()], self.base().from_int(n))
    }

    fn add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut out = a.clone();
        for (e, c) in b {
            self.accumulate(&mut out, e.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &MPoly) -> MPoly {
        a.iter().map(|(e, c)| (e.clone(), self.base().neg(c))).collect()
    }

    fn mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let k = self.base();
        let mut out = MPoly::new();
        for (ea, ca) in a {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in b {
                let db: u32 = eb.iter().sum();
                if da + db > self.max_degree() {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.accumulate(&mut out, e, k.mul(ca, cb));
            }
        }
        out
    }

    fn is_zero(&self, a: &MPoly) -> bool {
        a.is_empty()
    }

    fn inverse(&self, a: &MPoly) -> Option<MPoly> {
        // units are c + nilpotent; invert c and sum the geometric series until it stops
        let k = self.base();
        let c0 = self.coeff(a, &vec![0; self.num_vars()]);
        let inv0 = k.inverse(&c0)?;
        let mut unit_part = a.clone();
        unit_part.remove(&vec![0; self.num_vars()]);
        let scaled: MPoly = unit_part.iter().map(|(e, c)| (e.clone(), k.neg(&k.mul(c, &inv0)))).collect();
        let mut acc = self.one();
        let mut term = self.one();
        let mut steps = 0u32;
        while !term.is_empty() {
            if steps >= self.max_degree().min(1 << 12) {
                return None;
            }
            term = self.mul(&term, &scaled);
            acc = self.add(&acc, &term);
            steps += 1;
        }
        let inv0p = self.monomial(vec![0; self.num_vars()], inv0);
        Some(self.mul(&acc, &inv0p))
    }

    fn render(&self, a: &MPoly) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let k = self.base();
        let terms: Vec<String> = a
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { self.inner.names[i].clone() } else { format!("{}^{x}", self.inner.names[i]) })
                    .collect();
                let s = k.render(c);
                if mono.is_empty() {
                    s
                } else if s == "1" {
                    mono.join("*")
                } else {
                    format!("({s})*{}", mono.join("*"))
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl Algebra for MPolyRing {
    fn scalars(&self) -> &BaseRing {
        self.base()
    }

    fn embed(&self, c: &Elem) -> MPoly {
        self.monomial(vec![0; self.num_vars()], c.clone())
    }
}
