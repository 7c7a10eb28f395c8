use crate::abelian::{FinAbGroup, GroupElement};
use crate::error::{Error, Result};
use crate::ringkit::poly;
use crate::ringkit::{Algebra, BaseRing, Elem, Matrix, QuotientRing, Ring};

use super::curve::{eval1, eval2, Curve, CurveElem, TensorElem};
use super::validate::validate_efg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Multiplicative,
    Additive,
    Counterexample,
    Explicit,
}

/// An `A`-equivariant formal group model on a truncated curve.
#[derive(Clone, Debug)]
pub struct Efg {
    curve: Curve,
    group: FinAbGroup,
    kind: ModelKind,
    sigma: TensorElem,
    iota: CurveElem,
    phi: Vec<Elem>,
    norm_unit: Elem,
}

fn root_product(k: &BaseRing, roots: &[Elem]) -> Vec<Elem> {
    roots.iter().fold(vec![k.one()], |acc, c| poly::mul(k, &acc, &[k.neg(c), k.one()]))
}

fn check_factor_orders(k: &BaseRing, group: &FinAbGroup, gens: &[Elem]) -> Result<()> {
    if gens.len() != group.rank() {
        return Err(Error::ValidationFailed(format!(
            "expected {} character values, got {}",
            group.rank(),
            gens.len()
        )));
    }
    if let Some(g) = gens.iter().find(|g| !k.contains(g)) {
        return Err(Error::ValidationFailed(format!("{g:?} is not an element of {}", k.descriptor())));
    }
    Ok(())
}

impl Efg {
    /// Assembles a model from raw data without validating it.
    pub fn from_parts(
        curve: Curve,
        group: FinAbGroup,
        kind: ModelKind,
        sigma: TensorElem,
        iota: CurveElem,
        phi: Vec<Elem>,
        norm_unit: Elem,
    ) -> Result<Self> {
        let m = curve.rank();
        if phi.len() != group.order() as usize {
            return Err(Error::DimensionMismatch("one character value per element of A*".into()));
        }
        if iota.len() != m || sigma.len() != m || sigma.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("sigma and iota must be reduced elements".into()));
        }
        Ok(Efg { curve, group, kind, sigma, iota, phi, norm_unit })
    }

    fn validated(self) -> Result<Self> {
        let report = validate_efg(&self);
        match report.failures().first() {
            Some(c) => Err(Error::ValidationFailed(format!("{}: {}", c.name, c.detail))),
            None => Ok(self),
        }
    }

    fn multiplicative_unvalidated(k: &BaseRing, group: &FinAbGroup, gens: &[Elem], truncation: usize) -> Result<Self> {
        check_factor_orders(k, group, gens)?;
        for (g, &d) in gens.iter().zip(group.factors()) {
            if k.pow(g, d) != k.one() {
                return Err(Error::ValidationFailed(format!("character value {} has order not dividing {d}", k.render(g))));
            }
        }
        let lam: Vec<Elem> = group
            .elements()
            .map(|a| k.product(a.coords().iter().zip(gens).map(|(&e, g)| k.pow(g, e)).collect::<Vec<_>>().iter()))
            .collect();
        let phi: Vec<Elem> = lam.iter().map(|l| k.sub(&k.one(), l)).collect();
        let curve = Curve::new(k, root_product(k, &phi), truncation)?;
        let sigma = curve.tensor_from_fn(|i, j| match (i, j) {
            (1, 0) | (0, 1) => k.one(),
            (1, 1) => k.int(-1),
            _ => k.zero(),
        });
        let r = curve.ring();
        let one_minus_x = r.sub(&r.one(), &curve.x());
        let inv = r.inverse(&one_minus_x).ok_or(Error::NonUnitDeterminant)?;
        let iota = r.neg(&r.mul(&curve.x(), &inv));
        let norm_unit = k.product(lam.iter());
        Efg::from_parts(curve, group.clone(), ModelKind::Multiplicative, sigma, iota, phi, norm_unit)
    }

    /// `x = 1 − u`, `x0 + x1 − x0 x1`; `gens` are the unit values of `φ` on the basis characters.
    pub fn multiplicative(k: &BaseRing, group: &FinAbGroup, gens: &[Elem], truncation: usize) -> Result<Self> {
        Self::multiplicative_unvalidated(k, group, gens, truncation)?.validated()
    }

    /// The multiplicative model over `coeffs[A*]` with `φ(α) = [α]`.
    pub fn multiplicative_universal(coeffs: &BaseRing, group: &FinAbGroup, truncation: usize) -> Result<Self> {
        let k = BaseRing::group_ring(coeffs, group)?;
        let gens: Vec<Elem> = (0..group.rank())
            .map(|i| {
                let mut c = vec![0i64; group.rank()];
                c[i] = 1;
                let idx = group.index(&group.elem(&c).expect("in range"));
                k.group_element(idx as usize).expect("group ring")
            })
            .collect();
        Self::multiplicative(&k, group, &gens, truncation)
    }

    fn additive_unvalidated(k: &BaseRing, group: &FinAbGroup, gens: &[Elem], truncation: usize) -> Result<Self> {
        check_factor_orders(k, group, gens)?;
        for (g, &d) in gens.iter().zip(group.factors()) {
            if !k.is_zero(&k.mul(&k.int(d as i64), g)) {
                return Err(Error::ValidationFailed(format!("{d}·{} is not zero", k.render(g))));
            }
        }
        let phi: Vec<Elem> = group
            .elements()
            .map(|a| {
                let terms: Vec<Elem> = a.coords().iter().zip(gens).map(|(&e, g)| k.mul(&k.int(e as i64), g)).collect();
                k.sum(terms.iter())
            })
            .collect();
        let curve = Curve::new(k, root_product(k, &phi), truncation)?;
        let sigma = curve.tensor_from_fn(|i, j| if i + j == 1 { k.one() } else { k.zero() });
        let iota = curve.ring().neg(&curve.x());
        Efg::from_parts(curve, group.clone(), ModelKind::Additive, sigma, iota, phi, k.one())
    }

    /// `x0 + x1` with `φ` additive; `gens` are the values on the basis characters.
    pub fn additive(k: &BaseRing, group: &FinAbGroup, gens: &[Elem], truncation: usize) -> Result<Self> {
        Self::additive_unvalidated(k, group, gens, truncation)?.validated()
    }

    /// Multiplicative model over a field with `φ` injective, so all `c_α − c_β` are units.
    pub fn product_over_field(field: &BaseRing, group: &FinAbGroup, gens: &[Elem], truncation: usize) -> Result<Self> {
        if !field.is_field() {
            return Err(Error::ValidationFailed(format!("{} is not a field", field.descriptor())));
        }
        let e = Self::multiplicative_unvalidated(field, group, gens, truncation)?;
        for (i, a) in e.phi.iter().enumerate() {
            for b in &e.phi[i + 1..] {
                if field.inverse(&field.sub(a, b)).is_none() {
                    return Err(Error::ValidationFailed("character values are not distinct".into()));
                }
            }
        }
        e.validated()
    }

    /// The additive model over `F2[e] ⊕ M` with `A = Z/2`, `c = e` and `f = x² + ex`.
    pub fn counterexample(truncation: usize) -> Result<Self> {
        let k = BaseRing::square_zero_f2();
        let e = crate::ringkit::text::ring_symbol(&k, "e")?;
        let mut m = Self::additive_unvalidated(&k, &FinAbGroup::cyclic(2), &[e], truncation)?;
        m.kind = ModelKind::Counterexample;
        m.validated()
    }

    /// A model from explicit `(f, σ, ι, φ)` data, validated.
    pub fn explicit(
        curve: Curve,
        group: FinAbGroup,
        sigma: TensorElem,
        iota: CurveElem,
        phi: Vec<Elem>,
        norm_unit: Elem,
    ) -> Result<Self> {
        Self::from_parts(curve, group, ModelKind::Explicit, sigma, iota, phi, norm_unit)?.validated()
    }

    /// Same data with a replaced group law, not validated.
    pub fn with_sigma(&self, sigma: TensorElem) -> Self {
        Efg { sigma, kind: ModelKind::Explicit, ..self.clone() }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn base(&self) -> &BaseRing {
        self.curve.base()
    }

    /// The group `A`; `A*` has the same shape and its elements index the character values.
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn sigma(&self) -> &TensorElem {
        &self.sigma
    }

    pub fn iota(&self) -> &CurveElem {
        &self.iota
    }

    pub fn norm_unit(&self) -> &Elem {
        &self.norm_unit
    }

    /// `c_α = x(φ(α))`.
    pub fn phi(&self, alpha: &GroupElement) -> &Elem {
        &self.phi[self.group.index(alpha) as usize]
    }

    pub fn phi_values(&self) -> &[Elem] {
        &self.phi
    }

    /// Models where `x_n` is an honest polynomial, so series-level `v_n` is exact.
    pub fn is_substitution_closed(&self) -> bool {
        matches!(self.kind, ModelKind::Multiplicative | ModelKind::Additive | ModelKind::Counterexample)
    }

    pub fn eval_at_point(&self, r: &[Elem], c: &Elem) -> Result<Elem> {
        self.curve.eval_at(r, c)
    }

    /// `σ(a, b)` for points `a, b` of the base.
    pub fn sigma_at(&self, a: &Elem, b: &Elem) -> Elem {
        eval2(self.base(), &self.sigma, a, b)
    }

    /// `ι(c)` for a point `c` of the base.
    pub fn iota_at(&self, c: &Elem) -> Elem {
        eval1(self.base(), &self.iota, c)
    }

    /// `d(x0, x1) = σ(ι(x0), x1)`, the difference function.
    pub fn difference_function(&self) -> Result<TensorElem> {
        let t = self.curve.tensor();
        let a = self.curve.in_slot0(&self.iota);
        let b = self.curve.tensor_x1();
        self.curve.check_image(self.curve.ring(), &self.iota)?;
        Ok(eval2(t, &self.sigma, &a, &b))
    }

    /// `x_α = σ(x, ι(c_α))`, vanishing at `c_α`.
    pub fn x_alpha(&self, alpha: &GroupElement) -> CurveElem {
        let r = self.curve.ring();
        let shift = r.constant(&self.iota_at(self.phi(alpha)));
        eval2(r, &self.sigma, &self.curve.x(), &shift)
    }

    /// `e_i = Π_{j<i} x_{α_j}` with `α_{nj+k} = α_k`, and the matrix of their coefficients.
    pub fn topological_basis(&self, count: usize) -> Result<(Vec<CurveElem>, Matrix<Elem>)> {
        let m = self.curve.rank();
        if count > m {
            return Err(Error::PrecisionExceeded { requested: count, truncation: m });
        }
        let r = self.curve.ring();
        let xs: Vec<CurveElem> = self.group.elements().map(|a| self.x_alpha(&a)).collect();
        let mut basis = Vec::with_capacity(count);
        let mut cur = r.one();
        for i in 0..count {
            basis.push(cur.clone());
            cur = r.mul(&cur, &xs[i % xs.len()]);
        }
        let mat = Matrix::from_fn(count, m, |i, j| basis[i][j].clone());
        Ok((basis, mat))
    }

    /// Image of `x` under translation by `α`: `σ(x, c_α)`.
    pub fn translation(&self, alpha: &GroupElement) -> CurveElem {
        let r = self.curve.ring();
        eval2(r, &self.sigma, &self.curve.x(), &r.constant(self.phi(alpha)))
    }

    pub fn translate(&self, p: &[Elem], alpha: &GroupElement) -> Result<CurveElem> {
        self.curve.substitute(self.curve.ring(), p, &self.translation(alpha))
    }

    /// The map `R → k[t]/(t^M)`, `x ↦ σ(c_α, t)`; requires `M ≤ N`.
    pub fn formal_expansion_at(&self, alpha: &GroupElement, precision: usize) -> Result<Expansion> {
        let n = self.curve.truncation();
        if precision > n {
            return Err(Error::PrecisionExceeded { requested: precision, truncation: n });
        }
        let mut e = self.expand_representative(alpha, precision)?;
        e.checked = true;
        Ok(e)
    }

    /// `x ↦ σ(c_α, t)` applied to the degree `< nN` representative, at any precision.
    pub fn expand_representative(&self, alpha: &GroupElement, precision: usize) -> Result<Expansion> {
        let k = self.base();
        if precision == 0 {
            return Err(Error::PrecisionExceeded { requested: 0, truncation: self.curve.truncation() });
        }
        let mut tm = vec![k.zero(); precision + 1];
        tm[precision] = k.one();
        let ring = QuotientRing::new(k, tm, "t")?;
        let c = ring.constant(self.phi(alpha));
        let image = eval2(&ring, &self.sigma, &c, &ring.generator());
        Ok(Expansion { curve: self.curve.clone(), ring, image, checked: false })
    }

    /// The same model with all coefficients pushed into an extension `k′` of `k`.
    pub fn base_change(&self, target: &BaseRing) -> Result<Efg> {
        let k = self.base();
        let lift = |c: &Elem| target.lift_from(k, c).ok_or(Error::BaseMismatch);
        let f = self.curve.f().iter().map(lift).collect::<Result<Vec<_>>>()?;
        let curve = Curve::new(target, f, self.curve.truncation())?;
        let sigma = self
            .sigma
            .iter()
            .map(|row| row.iter().map(lift).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let iota = self.iota.iter().map(lift).collect::<Result<Vec<_>>>()?;
        let phi = self.phi.iter().map(lift).collect::<Result<Vec<_>>>()?;
        Efg::from_parts(curve, self.group.clone(), self.kind, sigma, iota, phi, lift(&self.norm_unit)?)
    }
}

/// A ring map `R → k[t]/(t^M)` given by the image of `x`.
#[derive(Clone, Debug)]
pub struct Expansion {
    curve: Curve,
    ring: QuotientRing<BaseRing>,
    image: Vec<Elem>,
    checked: bool,
}

impl Expansion {
    pub fn ring(&self) -> &QuotientRing<BaseRing> {
        &self.ring
    }

    pub fn image_of_x(&self) -> &[Elem] {
        &self.image
    }

    pub fn apply(&self, r: &[Elem]) -> Result<Vec<Elem>> {
        if self.checked {
            self.curve.substitute(&self.ring, r, &self.image)
        } else {
            Ok(eval1(&self.ring, r, &self.image))
        }
    }
}

/// `f_K = Σ_{k≤K} u_{2^{k+1}−1} y^{2^k}` on the counterexample curve.
pub fn counterexample_element(e: &Efg, big_k: u32) -> Result<CurveElem> {
    if !e.base().is_square_zero() {
        return Err(Error::UnsupportedModel("the kernel element lives over F2[e]+M".into()));
    }
    let r = e.curve().ring();
    let y = e.curve().y();
    let mut acc = r.zero();
    let mut ypow = y.clone();
    for k in 0..=big_k {
        let u = crate::ringkit::text::ring_symbol(e.base(), &format!("u{}", (1u64 << (k + 1)) - 1))?;
        acc = r.add(&acc, &r.scale(&u, &ypow));
        ypow = r.mul(&ypow, &ypow);
    }
    Ok(acc)
}
