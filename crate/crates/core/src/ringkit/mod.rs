//! Exact commutative rings: the base-ring menu, polynomials, quotient towers,
//! truncated multivariate polynomials, division-free determinants and lattice decisions.

mod base;
mod decide;
pub mod lattice;
mod matrix;
mod mpoly;
pub mod poly;
mod quotient;
mod sqzero;
pub mod text;

use std::fmt::Debug;

use num_bigint::BigInt;

pub use base::{BaseRing, Elem, RingDescriptor, RingValue, UNIT_SYMBOLS};
pub use decide::{
    annihilator_basis, ideal_membership, ideal_membership_in, is_regular, is_regular_in, is_unit, is_unit_in,
    verify_split, Finite, IdealSpan,
};
pub use matrix::{adjugate, charpoly, det_berkowitz, det_division_free, det_leibniz, Matrix};
pub use mpoly::{MPoly, MPolyRing};
pub use poly::{poly_divmod, Poly};
pub use quotient::QuotientRing;
pub use sqzero::SqZero;

/// A commutative ring acting on plain element values.
pub trait Ring: Clone {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` when `a` is not a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn int(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}

/// A ring receiving the scalars of a menu ring.
pub trait Algebra: Ring {
    fn scalars(&self) -> &BaseRing;
    fn embed(&self, c: &Elem) -> Self::Elem;

    fn scale(&self, c: &Elem, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.embed(c), a)
    }
}
