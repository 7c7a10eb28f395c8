use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ringkit::poly;
use crate::ringkit::{Algebra, BaseRing, Elem, QuotientRing, Ring};

/// Element of `R = k[x]/(f^N)`: coefficients on `1, x, …, x^{nN−1}`.
pub type CurveElem = Vec<Elem>;
/// Element of `R ⊗ R`: outer index is the power of `x1`, inner the power of `x0`.
pub type TensorElem = Vec<Vec<Elem>>;
pub type CurveRing = QuotientRing<BaseRing>;
pub type TensorRing = QuotientRing<CurveRing>;
pub type TripleRing = QuotientRing<TensorRing>;

#[derive(Debug)]
struct CurveInner {
    base: BaseRing,
    f: Vec<Elem>,
    truncation: usize,
    ring: CurveRing,
    tensor: OnceLock<TensorRing>,
    triple: OnceLock<TripleRing>,
}

/// The truncated embeddable curve `k[x]/(f^N)` with `f` monic and `f(0) = 0`.
#[derive(Clone, Debug)]
pub struct Curve {
    inner: Arc<CurveInner>,
}

/// Lazily computed powers of one element.
pub(crate) struct Powers<'a, T: Ring> {
    ring: &'a T,
    base: T::Elem,
    list: Vec<T::Elem>,
}

impl<'a, T: Ring> Powers<'a, T> {
    pub(crate) fn new(ring: &'a T, base: T::Elem) -> Self {
        Powers { ring, list: vec![ring.one()], base }
    }

    pub(crate) fn get(&mut self, i: usize) -> &T::Elem {
        while self.list.len() <= i {
            let next = self.ring.mul(self.list.last().expect("nonempty"), &self.base);
            self.list.push(next);
        }
        &self.list[i]
    }
}

/// `Σ c_ij a^i b^j` for a bivariate coefficient table, in any algebra over the scalars.
pub(crate) fn eval2<T: Algebra>(target: &T, t: &TensorElem, a: &T::Elem, b: &T::Elem) -> T::Elem {
    let k = target.scalars().clone();
    let mut pa = Powers::new(target, a.clone());
    let mut pb = Powers::new(target, b.clone());
    let mut acc = target.zero();
    for (j, row) in t.iter().enumerate() {
        let mut inner: Option<T::Elem> = None;
        for (i, c) in row.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let term = target.scale(c, pa.get(i));
            inner = Some(match inner {
                Some(s) => target.add(&s, &term),
                None => term,
            });
        }
        if let Some(s) = inner {
            let term = if j == 0 { s } else { target.mul(&s, pb.get(j)) };
            acc = target.add(&acc, &term);
        }
    }
    acc
}

/// `Σ c_i a^i` with lazily built powers, skipping zero coefficients.
pub(crate) fn eval1<T: Algebra>(target: &T, p: &[Elem], a: &T::Elem) -> T::Elem {
    let k = target.scalars().clone();
    let mut pa = Powers::new(target, a.clone());
    let mut acc = target.zero();
    for (i, c) in p.iter().enumerate() {
        if !k.is_zero(c) {
            acc = target.add(&acc, &target.scale(c, pa.get(i)));
        }
    }
    acc
}

impl Curve {
    pub fn new(base: &BaseRing, f: Vec<Elem>, truncation: usize) -> Result<Self> {
        let f = poly::trimmed(base, f);
        if f.len() < 2 || f.last() != Some(&base.one()) {
            return Err(Error::ValidationFailed("f must be monic of degree at least one".into()));
        }
        if !base.is_zero(&f[0]) {
            return Err(Error::ValidationFailed("f(0) must vanish".into()));
        }
        if truncation == 0 {
            return Err(Error::ValidationFailed("truncation must be positive".into()));
        }
        let fpow = poly::pow(base, &f, truncation as u64);
        let ring = QuotientRing::new(base, fpow, "x")?;
        Ok(Curve {
            inner: Arc::new(CurveInner {
                base: base.clone(),
                f,
                truncation,
                ring,
                tensor: OnceLock::new(),
                triple: OnceLock::new(),
            }),
        })
    }

    pub fn base(&self) -> &BaseRing {
        &self.inner.base
    }

    pub fn f(&self) -> &[Elem] {
        &self.inner.f
    }

    pub fn truncation(&self) -> usize {
        self.inner.truncation
    }

    /// Degree `n` of `f`.
    pub fn degree(&self) -> usize {
        self.inner.f.len() - 1
    }

    /// Rank `nN` of `R` over `k`.
    pub fn rank(&self) -> usize {
        self.degree() * self.truncation()
    }

    pub fn ring(&self) -> &CurveRing {
        &self.inner.ring
    }

    pub fn tensor(&self) -> &TensorRing {
        self.inner.tensor.get_or_init(|| {
            let r = self.ring();
            let m: Vec<CurveElem> = r.modulus().iter().map(|c| r.constant(c)).collect();
            QuotientRing::new(r, m, "x1").expect("monic")
        })
    }

    pub fn triple(&self) -> &TripleRing {
        self.inner.triple.get_or_init(|| {
            let t = self.tensor();
            let m: Vec<TensorElem> = self.ring().modulus().iter().map(|c| t.embed(c)).collect();
            QuotientRing::new(t, m, "x2").expect("monic")
        })
    }

    pub fn x(&self) -> CurveElem {
        self.ring().generator()
    }

    /// The good parameter `y = f(x)`.
    pub fn y(&self) -> CurveElem {
        self.from_poly(self.f())
    }

    pub fn from_poly(&self, p: &[Elem]) -> CurveElem {
        self.ring().reduce(p)
    }

    pub fn constant(&self, c: &Elem) -> CurveElem {
        self.ring().constant(c)
    }

    /// Whether `x ↦ c` defines an algebra map `R → k`, i.e. `f(c)^N = 0`.
    pub fn is_point(&self, c: &Elem) -> bool {
        let k = self.base();
        k.is_zero(&k.pow(&poly::eval(k, self.f(), c), self.truncation() as u64))
    }

    pub fn eval_at(&self, r: &[Elem], c: &Elem) -> Result<Elem> {
        if !self.is_point(c) {
            return Err(Error::NotAPoint);
        }
        Ok(poly::eval(self.base(), r, c))
    }

    /// Fails with `IllegalSubstitution` unless `f(image)^N = 0` in the target.
    pub fn check_image<T: Algebra>(&self, target: &T, image: &T::Elem) -> Result<()> {
        let fi = eval1(target, self.f(), image);
        let n = self.truncation();
        let mut p = target.one();
        let mut vanishing = None;
        for m in 1..=4 * n {
            p = target.mul(&p, &fi);
            if target.is_zero(&p) {
                vanishing = Some(m);
                break;
            }
        }
        match vanishing {
            Some(m) if m <= n => Ok(()),
            v => Err(Error::IllegalSubstitution { truncation: n, vanishing: v }),
        }
    }

    /// The algebra map `R → T`, `x ↦ image`, applied to `r`.
    pub fn substitute<T: Algebra>(&self, target: &T, r: &[Elem], image: &T::Elem) -> Result<T::Elem> {
        self.check_image(target, image)?;
        Ok(eval1(target, r, image))
    }

    /// The algebra map `R ⊗ R → T`, `(x0, x1) ↦ (a, b)`, applied to `t`.
    pub fn substitute2<T: Algebra>(&self, target: &T, t: &TensorElem, a: &T::Elem, b: &T::Elem) -> Result<T::Elem> {
        self.check_image(target, a)?;
        self.check_image(target, b)?;
        Ok(eval2(target, t, a, b))
    }

    pub fn tensor_x0(&self) -> TensorElem {
        self.tensor().constant(&self.x())
    }

    pub fn tensor_x1(&self) -> TensorElem {
        self.tensor().generator()
    }

    /// `r(x0)` inside `R ⊗ R`.
    pub fn in_slot0(&self, r: &[Elem]) -> TensorElem {
        self.tensor().constant(&r.to_vec())
    }

    /// `r(x1)` inside `R ⊗ R`.
    pub fn in_slot1(&self, r: &[Elem]) -> TensorElem {
        let t = self.tensor();
        r.iter().map(|c| self.ring().constant(c)).chain(std::iter::repeat(self.ring().zero())).take(t.degree()).collect()
    }

    /// Builds a tensor element from a coefficient function `(i, j) ↦ c_ij` on `x0^i x1^j`.
    pub fn tensor_from_fn(&self, f: impl Fn(usize, usize) -> Elem) -> TensorElem {
        let m = self.rank();
        (0..m).map(|j| (0..m).map(|i| f(i, j)).collect()).collect()
    }

    pub fn tensor_coeff(&self, t: &TensorElem, i: usize, j: usize) -> Elem {
        t[j][i].clone()
    }

    /// Swaps the two tensor factors.
    pub fn swap(&self, t: &TensorElem) -> TensorElem {
        self.tensor_from_fn(|i, j| t[i][j].clone())
    }

    /// Restriction along the diagonal `x0, x1 ↦ x`.
    pub fn diagonal(&self, t: &TensorElem) -> CurveElem {
        let x = self.x();
        eval2(self.ring(), t, &x, &x)
    }
}
