use std::fmt;

use crate::error::{Error, Result};
use crate::multicurve::curve::eval2;
use crate::multicurve::{Curve, CurveElem, Efg};
use crate::ringkit::poly;
use crate::ringkit::{charpoly, BaseRing, Elem, IdealSpan, Matrix, QuotientRing, Ring};

/// Default exponent bound for nilpotence checks.
pub const NILPOTENCE_BOUND: u64 = 64;

/// A divisor `V(g)` on the curve over some base `k′`, with `g` monic.
#[derive(Clone, Debug)]
pub struct Divisor {
    curve: Curve,
    gen: Vec<Elem>,
    openness: usize,
}

impl PartialEq for Divisor {
    fn eq(&self, other: &Self) -> bool {
        self.base() == other.base() && self.gen == other.gen
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({})", poly::render(self.base(), &self.gen, "x"))
    }
}

/// Smallest `M ≤ N` with `g | f^M`.
fn openness_exponent(curve: &Curve, gen: &[Elem]) -> Result<usize> {
    let k = curve.base();
    let mut p = vec![k.one()];
    for m in 0..=curve.truncation() {
        if m > 0 {
            p = poly::mul(k, &p, curve.f());
        }
        let (_, r) = poly::divmod(k, &p, gen)?;
        if r.is_empty() {
            return Ok(m);
        }
    }
    Err(Error::OpennessFailed(curve.truncation()))
}

/// Whether every coefficient is nilpotent within [`NILPOTENCE_BOUND`].
pub fn is_nilpotent(k: &BaseRing, c: &Elem) -> bool {
    k.is_zero(&k.pow(c, NILPOTENCE_BOUND))
}

impl Divisor {
    /// Normalizes `gen` to be monic and verifies `gen | f^M` for some `M ≤ N`.
    pub fn new(curve: &Curve, gen: Vec<Elem>) -> Result<Self> {
        let k = curve.base();
        let gen = poly::trimmed(k, gen);
        let lead = gen.last().ok_or(Error::NonUnitLeadingCoefficient)?;
        let inv = k.inverse(lead).ok_or(Error::NonUnitLeadingCoefficient)?;
        let gen: Vec<Elem> = gen.iter().map(|c| k.mul(c, &inv)).collect();
        let openness = openness_exponent(curve, &gen)?;
        Ok(Divisor { curve: curve.clone(), gen, openness })
    }

    /// The empty divisor, `g = 1`.
    pub fn empty(curve: &Curve) -> Self {
        Divisor { curve: curve.clone(), gen: vec![curve.base().one()], openness: 0 }
    }

    pub fn base(&self) -> &BaseRing {
        self.curve.base()
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    /// The monic generator, ascending coefficients.
    pub fn generator(&self) -> &[Elem] {
        &self.gen
    }

    pub fn degree(&self) -> usize {
        self.gen.len() - 1
    }

    pub fn openness_exponent(&self) -> usize {
        self.openness
    }

    /// `O_D = k′[x]/(g)`, or `None` for the empty divisor.
    pub fn structure_ring(&self) -> Option<QuotientRing<BaseRing>> {
        (self.degree() > 0).then(|| QuotientRing::new(self.base(), self.gen.clone(), "a").expect("monic"))
    }

    /// The generator as an element of `R`.
    pub fn generator_in_curve(&self) -> CurveElem {
        self.curve.from_poly(&self.gen)
    }

    /// Reduction of a curve element to `O_D`, as a polynomial of degree `< deg D`.
    pub fn restrict(&self, r: &[Elem]) -> Vec<Elem> {
        poly::reduce_monic(self.base(), r, &self.gen)
    }
}

/// `e` over the base of `d`, lifting coefficients when `d` lives over an extension.
pub(crate) fn model_over(e: &Efg, d: &Divisor) -> Result<Efg> {
    let b = d.base();
    let e = if e.base() == b {
        e.clone()
    } else if b.extends(e.base()) {
        e.base_change(b)?
    } else {
        return Err(Error::BaseMismatch);
    };
    if e.curve().f() != d.curve().f() || e.curve().truncation() != d.curve().truncation() {
        return Err(Error::BaseMismatch);
    }
    Ok(e)
}

fn same_base(d0: &Divisor, d1: &Divisor) -> Result<()> {
    if d0.base() != d1.base() || d0.curve().f() != d1.curve().f() {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// The divisor `[c]` of a point, `g = x − c`.
pub fn point_divisor(e: &Efg, c: &Elem) -> Result<Divisor> {
    if !e.curve().is_point(c) {
        return Err(Error::NotAPoint);
    }
    let k = e.base();
    Divisor::new(e.curve(), vec![k.neg(c), k.one()])
}

/// The divisor of a full set of points, `Σ [u_i]`.
pub fn full_set_divisor(e: &Efg, points: &[Elem]) -> Result<Divisor> {
    let mut d = Divisor::empty(e.curve());
    for u in points {
        d = divisor_sum(&d, &point_divisor(e, u)?)?;
    }
    Ok(d)
}

/// `Σ_α [φ(α)]`, whose generator is `f`.
pub fn full_divisor(e: &Efg) -> Result<Divisor> {
    let pts: Vec<Elem> = e.group().elements().map(|a| e.phi(&a).clone()).collect();
    full_set_divisor(e, &pts)
}

pub fn divisor_sum(d0: &Divisor, d1: &Divisor) -> Result<Divisor> {
    same_base(d0, d1)?;
    let k = d0.base();
    Divisor::new(d0.curve(), poly::mul(k, &d0.gen, &d1.gen))
}

/// The element `d(u, x) = x(x − u)` of `R` for a point `u`.
pub fn difference_at(e: &Efg, u: &Elem) -> Result<CurveElem> {
    if !e.curve().is_point(u) {
        return Err(Error::NotAPoint);
    }
    let d = e.difference_function()?;
    let r = e.curve().ring();
    Ok(eval2(r, &d, &r.constant(u), &e.curve().x()))
}

/// `f_D = N(d)`: the determinant of multiplication by `d(x0, x)` on `O_D ⊗ R` over `R`.
pub fn fd_norm(d: &Divisor, e: &Efg) -> Result<CurveElem> {
    let e = model_over(e, d)?;
    let curve = e.curve();
    let r = curve.ring();
    if d.degree() == 0 {
        return Ok(r.one());
    }
    let diff = e.difference_function()?;
    let modulus: Vec<CurveElem> = d.gen.iter().map(|c| r.constant(c)).collect();
    let s = QuotientRing::new(r, modulus, "x0")?;
    let a = s.generator();
    curve.check_image(&s, &a)?;
    let elem = eval2(&s, &diff, &a, &s.constant(&curve.x()));
    Ok(s.norm(&elem))
}

/// `e_D = f_D(0)`.
pub fn euler_class(d: &Divisor, e: &Efg) -> Result<Elem> {
    Ok(fd_norm(d, e)?[0].clone())
}

/// The Thom generator `u_D`, which is `f_D` itself.
pub fn thom_generator(d: &Divisor, e: &Efg) -> Result<CurveElem> {
    fd_norm(d, e)
}

/// `Π_i d(u_i, x)` for a list of points.
pub fn full_set_norm(e: &Efg, points: &[Elem]) -> Result<CurveElem> {
    let r = e.curve().ring();
    let mut acc = r.one();
    for u in points {
        acc = r.mul(&acc, &difference_at(e, u)?);
    }
    Ok(acc)
}

/// Matrix of multiplication on a free module given by products with basis vectors.
fn mult_matrix<T: Ring>(basis: &[T::Elem], ring: &T, a: &T::Elem, coords: impl Fn(&T::Elem) -> Vec<Elem>) -> Matrix<Elem> {
    let cols: Vec<Vec<Elem>> = basis.iter().map(|b| coords(&ring.mul(a, b))).collect();
    let n = basis.len();
    Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
}

/// `D * D′`: generated by the characteristic polynomial of `σ(a, b)` on `O_D ⊗ O_D′`.
pub fn convolution(d0: &Divisor, d1: &Divisor, e: &Efg) -> Result<Divisor> {
    same_base(d0, d1)?;
    let e = model_over(e, d0)?;
    let k = d0.base();
    let (Some(o0), Some(_)) = (d0.structure_ring(), d1.structure_ring()) else {
        return Ok(Divisor::empty(d0.curve()));
    };
    let modulus: Vec<Vec<Elem>> = d1.gen.iter().map(|c| o0.constant(c)).collect();
    let t = QuotientRing::new(&o0, modulus, "b")?;
    let a = t.constant(&o0.generator());
    let b = t.generator();
    let s = eval2(&t, e.sigma(), &a, &b);
    let mut basis = Vec::new();
    for j in 0..d1.degree() {
        for i in 0..d0.degree() {
            let mut el = t.zero();
            el[j][i] = k.one();
            basis.push(el);
        }
    }
    let m = mult_matrix(&basis, &t, &s, |v: &Vec<Vec<Elem>>| v.iter().flatten().cloned().collect());
    Divisor::new(d0.curve(), charpoly(k, &m)?)
}

/// Pullback along translation by `α`, the divisor `D − φ(α)`.
pub fn translate_divisor(d: &Divisor, alpha: &crate::abelian::GroupElement, e: &Efg) -> Result<Divisor> {
    let e = model_over(e, d)?;
    let Some(o) = d.structure_ring() else {
        return Ok(d.clone());
    };
    let shift = o.constant(&e.iota_at(e.phi(alpha)));
    let s = eval2(&o, e.sigma(), &o.generator(), &shift);
    Divisor::new(d.curve(), o.charpoly_of(&s))
}

/// Result of a containment test; `obstruction` lists the coefficients of `g_big mod g_small`.
#[derive(Clone, Debug, PartialEq)]
pub struct Containment {
    pub contained: bool,
    pub obstruction: Vec<Elem>,
}

pub fn contains(big: &Divisor, small: &Divisor) -> Result<Containment> {
    same_base(big, small)?;
    let (_, r) = poly::divmod(big.base(), &big.gen, &small.gen)?;
    Ok(Containment { contained: r.is_empty(), obstruction: r })
}

/// `D_big − D_small`, by exact division of generators.
pub fn subtract(big: &Divisor, small: &Divisor) -> Result<Divisor> {
    same_base(big, small)?;
    let (q, r) = poly::divmod(big.base(), &big.gen, &small.gen)?;
    if !r.is_empty() {
        return Err(Error::NotContained);
    }
    Divisor::new(big.curve(), q)
}

/// `g′ = g + r` for `r` with nilpotent coefficients and degree below `deg D`.
pub fn perturb(d: &Divisor, r: &[Elem]) -> Result<Divisor> {
    let k = d.base();
    let r = poly::trimmed(k, r.to_vec());
    if r.len() > d.degree() {
        return Err(Error::DegreeMismatch(r.len(), d.degree()));
    }
    if r.iter().any(|c| !is_nilpotent(k, c)) {
        return Err(Error::NotNilpotent);
    }
    Divisor::new(d.curve(), poly::add(k, &d.gen, &r))
}

/// `g′ mod g = g′ − g` as an element of `O_{D_ref}`.
pub fn restrict_generator(reference: &Divisor, other: &Divisor) -> Result<Vec<Elem>> {
    same_base(reference, other)?;
    if reference.degree() != other.degree() {
        return Err(Error::DegreeMismatch(reference.degree(), other.degree()));
    }
    let k = reference.base();
    let mut diff = poly::sub(k, &other.gen, &reference.gen);
    if diff.iter().any(|c| !is_nilpotent(k, c)) {
        return Err(Error::NotNilpotent);
    }
    diff.resize(reference.degree(), k.zero());
    Ok(diff)
}

/// `g | a` in `R`: the image of `a` in `O_D` vanishes.
pub fn vanishes_on(d: &Divisor, a: &[Elem]) -> bool {
    let k = d.base();
    d.restrict(a).iter().all(|c| k.is_zero(c))
}

/// `(a) = (g)` as ideals of `R`.
pub fn generates_same_ideal(d: &Divisor, a: &CurveElem) -> Result<bool> {
    let r = d.curve().ring();
    let g = d.generator_in_curve();
    Ok(vanishes_on(d, a) && IdealSpan::new(r, std::slice::from_ref(a))?.contains(&g)?)
}

/// Regularity of `a` before truncation: `ann_R(a) ⊆ (f^N / g)` where `(a) = (g)`.
pub fn regular_before_truncation(d: &Divisor, a: &CurveElem) -> Result<bool> {
    let k = d.base();
    let r = d.curve().ring();
    let (q, rem) = poly::divmod(k, r.modulus(), &d.gen)?;
    if !rem.is_empty() {
        return Ok(false);
    }
    let span = IdealSpan::new(r, &[r.reduce(&q)])?;
    for y in crate::ringkit::annihilator_basis(r, a)? {
        if !span.contains(&y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `k′`-rank of an extension tower over `k`.
pub fn rank_over(top: &BaseRing, bottom: &BaseRing) -> Option<usize> {
    if top == bottom {
        return Some(1);
    }
    top.base().and_then(|b| rank_over(b, bottom)).map(|r| r * top.relative_rank())
}
