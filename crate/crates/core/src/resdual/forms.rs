use crate::error::{Error, Result};
use crate::ringkit::poly;
use crate::ringkit::{BaseRing, Elem, Poly, QuotientRing, Ring};

/// `p(x)/q(x)·dx` with `q` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct MeromorphicForm {
    num: Poly,
    den: Poly,
}

impl MeromorphicForm {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if num.ring() != den.ring() {
            return Err(Error::BaseMismatch);
        }
        if !den.is_monic() {
            return Err(Error::NonMonicDenominator);
        }
        Ok(MeromorphicForm { num, den })
    }

    /// A polynomial form `p·dx`.
    pub fn polynomial(num: Poly) -> Self {
        let den = Poly::new(num.ring(), vec![num.ring().one()]);
        MeromorphicForm { num, den }
    }

    pub fn ring(&self) -> &BaseRing {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// `d(p/q) = (q p′ − p q′)/q² · dx`.
    pub fn derivative_of(p: &Poly, q: &Poly) -> Result<Self> {
        let num = q.mul(&p.derivative()).sub(&p.mul(&q.derivative()));
        MeromorphicForm::new(num, q.mul(q))
    }
}

/// Reduce `p` mod `q = x^n + …` to `Σ_{i<n} b_i x^i` and return `b_{n−1}`.
pub fn residue(w: &MeromorphicForm) -> Elem {
    let k = w.ring();
    let n = w.den.degree().unwrap_or(0);
    if n == 0 {
        return k.zero();
    }
    let r = poly::reduce_monic(k, w.num.coeffs(), w.den.coeffs());
    r[n - 1].clone()
}

/// `res(d(p/q))`, which always vanishes.
pub fn residue_of_derivative(p: &Poly, q: &Poly) -> Result<Elem> {
    Ok(residue(&MeromorphicForm::derivative_of(p, q)?))
}

/// Trace of multiplication by `g` on `k[x]/f`.
pub fn trace_of_multiplication(g: &Poly, f: &Poly) -> Result<Elem> {
    if !f.is_monic() || f.degree().unwrap_or(0) == 0 {
        return Err(Error::NonMonicDenominator);
    }
    let a = QuotientRing::new(f.ring(), f.coeffs().to_vec(), "x")?;
    Ok(a.trace(&a.reduce(g.coeffs())))
}
