use crate::error::{Error, Result};
use crate::multicurve::Curve;
use crate::ringkit::{BaseRing, Elem, Ring};

use super::core::{rank_over, subtract, Divisor};

/// The tower `k = k_0 → … → k_r` classifying lists of `r` points in `D`.
#[derive(Clone, Debug)]
pub struct PointsScheme {
    pub rings: Vec<BaseRing>,
    /// Tautological points, all lifted to `k_r`.
    pub points: Vec<Elem>,
    /// What is left of `D` over `k_r` after removing the points.
    pub remaining: Divisor,
}

impl PointsScheme {
    pub fn top(&self) -> &BaseRing {
        self.rings.last().expect("k_0 is always present")
    }

    /// Rank of `k_r` over `k_0`.
    pub fn rank(&self) -> usize {
        rank_over(self.top(), &self.rings[0]).expect("tower")
    }
}

fn lift_curve(curve: &Curve, from: &BaseRing, to: &BaseRing) -> Result<Curve> {
    let f: Vec<Elem> = curve.f().iter().map(|c| to.lift_from(from, c).ok_or(Error::BaseMismatch)).collect::<Result<_>>()?;
    Curve::new(to, f, curve.truncation())
}

fn lift_divisor(d: &Divisor, to: &BaseRing) -> Result<Divisor> {
    let from = d.base();
    let curve = lift_curve(d.curve(), from, to)?;
    let gen: Vec<Elem> = d.generator().iter().map(|c| to.lift_from(from, c).ok_or(Error::BaseMismatch)).collect::<Result<_>>()?;
    Divisor::new(&curve, gen)
}

/// Adjoins the points of `D` one at a time: `k_{i+1} = k_i[a_{i+1}]/(g_i)` where `g_i` generates
/// what remains of `D` over `k_i`.
pub fn points_scheme(d: &Divisor, r: usize) -> Result<PointsScheme> {
    if d.base().is_square_zero() {
        return Err(Error::UnsupportedRing("F2[e]+M".into()));
    }
    if r > d.degree() {
        return Err(Error::DegreeMismatch(r, d.degree()));
    }
    let mut rings = vec![d.base().clone()];
    let mut points: Vec<Elem> = Vec::new();
    let mut rem = d.clone();
    for i in 0..r {
        let k = rem.base().clone();
        let next = BaseRing::poly_quotient(&k, rem.generator().to_vec(), &format!("a_{}", i + 1))?;
        let lifted = lift_divisor(&rem, &next)?;
        let u = next.generator().expect("quotient");
        let pd = Divisor::new(lifted.curve(), vec![next.neg(&u), next.one()])?;
        rem = subtract(&lifted, &pd)?;
        points = points.iter().map(|p| next.lift_from(&k, p).expect("tower")).collect();
        points.push(u);
        rings.push(next);
    }
    Ok(PointsScheme { rings, points, remaining: rem })
}
