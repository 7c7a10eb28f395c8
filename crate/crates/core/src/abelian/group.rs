use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `Z/d_1 × … × Z/d_k`, written by its factor list. The same shape stands for the dual group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FinAbGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidGroup(format!("factor {d} is below 2")));
        }
        let mut order: u64 = 1;
        for &d in &factors {
            order = order
                .checked_mul(d)
                .ok_or_else(|| Error::InvalidGroup("order overflows".into()))?;
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            FinAbGroup { factors: vec![n] }
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |a, &d| a.lcm(&d))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.factors.len()] }
    }

    /// Reduces integer coordinates into the group.
    pub fn elem(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a group of rank {}",
                coords.len(),
                self.factors.len()
            )));
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
                .collect(),
        })
    }

    /// Element with the given position in the canonical (lexicographic) enumeration.
    pub fn element(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0; self.factors.len()];
        for (c, &d) in coords.iter_mut().zip(&self.factors).rev() {
            *c = index % d;
            index /= d;
        }
        GroupElement { coords }
    }

    pub fn index(&self, g: &GroupElement) -> u64 {
        g.coords.iter().zip(&self.factors).fold(0, |acc, (&c, &d)| acc * d + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a.coords.iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect(),
        }
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
                .collect(),
        }
    }

    pub fn order_of(&self, a: &GroupElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &d)| acc.lcm(&(d / x.gcd(&d))))
    }

    /// `⟨a, α⟩ = Σ a_i α_i / d_i` in Q/Z, as a numerator over the group exponent.
    pub fn pairing(&self, a: &GroupElement, alpha: &GroupElement) -> u64 {
        let e = self.exponent();
        let mut acc: u128 = 0;
        for ((&x, &y), &d) in a.coords.iter().zip(&alpha.coords).zip(&self.factors) {
            acc += (x as u128 * y as u128 % d as u128) * (e / d) as u128;
        }
        (acc % e as u128) as u64
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}
