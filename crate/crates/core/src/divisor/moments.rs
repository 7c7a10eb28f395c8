use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multicurve::Efg;
use crate::ringkit::{det_division_free, Elem, MPolyRing, Matrix, Ring};

use super::core::{model_over, Divisor};

/// Coefficients `β ↦ c*(e′_β)` of the norm of the generic function on `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentVector {
    pub degree: usize,
    pub cutoff: usize,
    pub entries: BTreeMap<Vec<u32>, Elem>,
}

impl MomentVector {
    pub fn get(&self, beta: &[u32]) -> Option<&Elem> {
        self.entries.get(beta)
    }
}

/// Restrictions `e_i |_D` for `i` up to the first index where they vanish.
pub fn restricted_basis(d: &Divisor, e: &Efg) -> Result<Vec<Vec<Elem>>> {
    let e = model_over(e, d)?;
    let Some(o) = d.structure_ring() else {
        return Ok(vec![]);
    };
    let xs: Vec<Vec<Elem>> = e.group().elements().map(|a| o.reduce(&e.x_alpha(&a))).collect();
    let mut out = Vec::new();
    let mut cur = o.one();
    let limit = e.curve().rank() + 1;
    while !o.is_zero(&cur) {
        if out.len() > limit {
            return Err(Error::OpennessFailed(e.curve().truncation()));
        }
        out.push(cur.clone());
        cur = o.mul(&cur, &xs[(out.len() - 1) % xs.len()]);
    }
    Ok(out)
}

/// `N(Σ_{i<m} t_i e_i|_D)` as a degree-`r` form in `t_0, …, t_{m−1}`.
pub fn moments(d: &Divisor, e: &Efg, cutoff: usize) -> Result<MomentVector> {
    let basis = restricted_basis(d, e)?;
    if cutoff < basis.len() {
        return Err(Error::CutoffTooSmall { given: cutoff, needed: basis.len() });
    }
    let k = d.base();
    let r = d.degree();
    let mut entries = BTreeMap::new();
    if r == 0 {
        entries.insert(vec![0; cutoff], k.one());
        return Ok(MomentVector { degree: 0, cutoff, entries });
    }
    let names = (0..cutoff).map(|i| format!("t{i}")).collect();
    let mr = MPolyRing::new(k, names, r as u32);
    let o = d.structure_ring().expect("positive degree");
    let mult: Vec<Matrix<Elem>> = basis.iter().map(|b| o.mul_matrix(b)).collect();
    let g = Matrix::from_fn(r, r, |i, j| {
        let mut acc = mr.zero();
        for (t, m) in mult.iter().enumerate() {
            let c = m.get(i, j);
            if !k.is_zero(c) {
                let mut ex = vec![0; cutoff];
                ex[t] = 1;
                acc = mr.add(&acc, &mr.monomial(ex, c.clone()));
            }
        }
        acc
    });
    let det = det_division_free(&mr, &g)?;
    for (beta, c) in det {
        if beta.iter().sum::<u32>() as usize == r {
            entries.insert(beta, c);
        }
    }
    Ok(MomentVector { degree: r, cutoff, entries })
}
