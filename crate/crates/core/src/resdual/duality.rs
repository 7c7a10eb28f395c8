use crate::error::{Error, Result};
use crate::ringkit::poly;
use crate::ringkit::{BaseRing, Elem, Matrix, Poly, QuotientRing, Ring};

use super::forms::{residue, MeromorphicForm};

/// `A = k[x]/f` with the element `e(x0, x1) = (f(x1) − f(x0))/(x1 − x0)`.
#[derive(Clone, Debug)]
pub struct DualityAlgebra {
    f: Poly,
    ring: QuotientRing<BaseRing>,
}

/// A `k`-linear map `A → k`, given by its values on `1, x, …, x^{r−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Functional {
    pub values: Vec<Elem>,
}

impl Functional {
    /// The dual basis functional `ζ_j`.
    pub fn basis(k: &BaseRing, r: usize, j: usize) -> Self {
        Functional { values: (0..r).map(|i| if i == j { k.one() } else { k.zero() }).collect() }
    }

    pub fn apply(&self, k: &BaseRing, a: &[Elem]) -> Elem {
        k.sum(a.iter().zip(&self.values).map(|(c, v)| k.mul(c, v)).collect::<Vec<_>>().iter())
    }
}

impl DualityAlgebra {
    pub fn new(f: &Poly) -> Result<Self> {
        if !f.is_monic() || f.degree().unwrap_or(0) == 0 {
            return Err(Error::NonMonicDenominator);
        }
        let ring = QuotientRing::new(f.ring(), f.coeffs().to_vec(), "x")?;
        Ok(DualityAlgebra { f: f.clone(), ring })
    }

    pub fn base(&self) -> &BaseRing {
        self.f.ring()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn rank(&self) -> usize {
        self.ring.degree()
    }

    pub fn algebra(&self) -> &QuotientRing<BaseRing> {
        &self.ring
    }

    /// The trace functional `x^i ↦ tr(μ_{x^i})`.
    pub fn trace_functional(&self) -> Functional {
        let r = self.rank();
        let mut cur = self.ring.one();
        let mut values = Vec::with_capacity(r);
        for _ in 0..r {
            values.push(self.ring.trace(&cur));
            cur = self.ring.mul(&cur, &self.ring.generator());
        }
        Functional { values }
    }
}

/// Coefficients `e[i][j]` of `x0^i x1^j` in `e(x0, x1)`; `e_ij` is the coefficient of `x^{i+j+1}` in `f`.
pub fn duality_e(alg: &DualityAlgebra) -> Vec<Vec<Elem>> {
    let r = alg.rank();
    let k = alg.base();
    (0..r).map(|i| (0..r).map(|j| if i + j < r { alg.f.coeff(i + j + 1) } else { k.zero() }).collect()).collect()
}

/// `(1⊗φ)(e) ∈ A`.
pub fn theta0(alg: &DualityAlgebra, phi: &Functional) -> Vec<Elem> {
    let k = alg.base();
    duality_e(alg).iter().map(|row| phi.apply(k, row)).collect()
}

/// Columns `θ0(ζ_j)`; anti-triangular with ones on the anti-diagonal.
pub fn theta0_matrix(alg: &DualityAlgebra) -> Matrix<Elem> {
    let e = duality_e(alg);
    let r = alg.rank();
    Matrix::from_fn(r, r, |i, j| e[i][j].clone())
}

/// The unique `φ` with `θ0(φ) = a`, by back substitution.
pub fn theta0_inverse(alg: &DualityAlgebra, a: &[Elem]) -> Functional {
    let k = alg.base();
    let r = alg.rank();
    let mut phi = vec![k.zero(); r];
    for i in (0..r).rev() {
        let j0 = r - 1 - i;
        let mut v = a[i].clone();
        for (j, p) in phi.iter().enumerate().take(j0) {
            v = k.sub(&v, &k.mul(&alg.f.coeff(i + j + 1), p));
        }
        phi[j0] = v;
    }
    Functional { values: phi }
}

/// `ε(λ) = φ(1)` where `λ(e) = a = θ0(φ)`.
pub fn epsilon(alg: &DualityAlgebra, a: &[Elem]) -> Elem {
    theta0_inverse(alg, a).values[0].clone()
}

/// `ψ = θ0^{-1}(1)`.
pub fn psi(alg: &DualityAlgebra) -> Functional {
    theta0_inverse(alg, &alg.ring.one())
}

/// `Σ_i a_i ψ(b_i)` for `e = Σ a_i ⊗ b_i`; equals 1.
pub fn epsilon_unit_identity(alg: &DualityAlgebra) -> Vec<Elem> {
    theta0(alg, &psi(alg))
}

/// `(1⊗τ)(e)` for the trace functional, which equals `f′ mod f`.
pub fn trace_element(alg: &DualityAlgebra) -> Vec<Elem> {
    theta0(alg, &alg.trace_functional())
}

/// `(res(θ0(φ)·dx/f), φ(1))`.
pub fn residue_pairing_check(alg: &DualityAlgebra, phi: &Functional) -> (Elem, Elem) {
    let k = alg.base();
    let num = Poly::new(k, theta0(alg, phi));
    let w = MeromorphicForm::new(num, alg.f.clone()).expect("monic");
    (residue(&w), phi.values[0].clone())
}

/// Residues of `θ0_{f0}(φ)/f0` and `θ0_{f1}(q^∨φ)/f1` for `f0 | f1`.
pub fn residue_inclusion_check(f0: &Poly, f1: &Poly, phi: &Functional) -> Result<(Elem, Elem)> {
    let k = f0.ring();
    let a0 = DualityAlgebra::new(f0)?;
    let a1 = DualityAlgebra::new(f1)?;
    let (_, rem) = poly::divmod(k, f1.coeffs(), f0.coeffs())?;
    if !rem.is_empty() {
        return Err(Error::NotDivisible);
    }
    let pulled: Vec<Elem> = (0..a1.rank())
        .map(|i| {
            let mut xi = vec![k.zero(); i + 1];
            xi[i] = k.one();
            phi.apply(k, &a0.ring.reduce(&xi))
        })
        .collect();
    let lhs = residue_pairing_check(&a0, phi).0;
    let rhs = residue_pairing_check(&a1, &Functional { values: pulled }).0;
    Ok((lhs, rhs))
}
