use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::group::{FinAbGroup, GroupElement};
use crate::error::{Error, Result};
use crate::ringkit::lattice;

pub const DEFAULT_GROUP_BOUND: u64 = 64;

/// A subgroup, kept both as a sorted member list and as canonical (Hermite-reduced) generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: FinAbGroup,
    gens: Vec<GroupElement>,
    members: Vec<u64>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.gens == other.gens
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.gens.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.group, self.order(), &self.gens).cmp(&(&other.group, other.order(), &other.gens))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| format!("({g})")).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

fn to_big(g: &GroupElement) -> Vec<BigInt> {
    g.coords().iter().map(|&c| BigInt::from(c)).collect()
}

fn relation_rows(group: &FinAbGroup) -> Vec<Vec<BigInt>> {
    let k = group.rank();
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::from(group.factors()[i]) } else { BigInt::zero() }).collect())
        .collect()
}

fn closure(group: &FinAbGroup, gens: &[GroupElement]) -> Vec<u64> {
    let n = group.order() as usize;
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut members = vec![group.zero()];
    for g in gens {
        if seen[group.index(g) as usize] {
            continue;
        }
        let mut fresh = Vec::new();
        for m in &members {
            let mut cur = group.add(m, g);
            loop {
                let i = group.index(&cur) as usize;
                if seen[i] {
                    break;
                }
                seen[i] = true;
                fresh.push(cur.clone());
                cur = group.add(&cur, g);
            }
        }
        members.extend(fresh);
    }
    let mut idx: Vec<u64> = members.iter().map(|m| group.index(m)).collect();
    idx.sort_unstable();
    idx
}

impl Subgroup {
    pub fn trivial(group: &FinAbGroup) -> Self {
        Subgroup { group: group.clone(), gens: vec![], members: vec![0] }
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        let gens: Vec<GroupElement> = (0..group.rank())
            .map(|i| {
                let mut c = vec![0i64; group.rank()];
                c[i] = 1;
                group.elem(&c).expect("rank matches")
            })
            .collect();
        Self::generated_by(group, &gens)
    }

    pub fn generated_by(group: &FinAbGroup, gens: &[GroupElement]) -> Self {
        let idx = closure(group, gens);
        Self::from_parts(group, gens, idx)
    }

    fn from_parts(group: &FinAbGroup, gens: &[GroupElement], idx: Vec<u64>) -> Self {
        let mut rows: Vec<Vec<BigInt>> = gens.iter().map(to_big).collect();
        rows.extend(relation_rows(group));
        let h = lattice::hnf(&rows, group.rank());
        let canon = h
            .iter()
            .filter_map(|row| {
                let c: Vec<i64> = row.iter().map(|x| x.to_i64().expect("small entries")).collect();
                let e = group.elem(&c).expect("rank matches");
                (!e.is_zero()).then_some(e)
            })
            .collect();
        Subgroup { group: group.clone(), gens: canon, members: idx }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.members.binary_search(&self.group.index(g)).is_ok()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.members.iter().map(move |&i| self.group.element(i))
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group == other.group && self.members.iter().all(|i| other.members.binary_search(i).is_ok())
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let gens: Vec<GroupElement> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::generated_by(&self.group, &gens))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let common: Vec<GroupElement> = self
            .members
            .iter()
            .filter(|i| other.members.binary_search(i).is_ok())
            .map(|&i| self.group.element(i))
            .collect();
        Ok(Self::generated_by(&self.group, &common))
    }

    /// `{α ∈ A* : α(b) = 0 for b ∈ B}`.
    pub fn annihilator(&self) -> Subgroup {
        let g = &self.group;
        let members: Vec<GroupElement> = g
            .elements()
            .filter(|alpha| self.gens.iter().all(|b| g.pairing(b, alpha) == 0))
            .collect();
        Self::generated_by(g, &members)
    }

    /// Hermite basis of the preimage lattice in `Z^k`.
    fn lattice(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigInt>> = self.gens.iter().map(to_big).collect();
        rows.extend(relation_rows(&self.group));
        lattice::hnf(&rows, self.group.rank())
    }
}

pub fn subgroups_all(group: &FinAbGroup) -> Result<Vec<Subgroup>> {
    subgroups_all_bounded(group, DEFAULT_GROUP_BOUND)
}

pub fn subgroups_all_bounded(group: &FinAbGroup, bound: u64) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::GroupTooLarge { order: group.order(), bound });
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let start = Subgroup::trivial(group);
    seen.insert(start.members.clone());
    found.insert(start.clone());
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for g in group.elements() {
            if h.contains(&g) {
                continue;
            }
            let mut gens = h.gens.clone();
            gens.push(g);
            let idx = closure(group, &gens);
            if seen.insert(idx.clone()) {
                let k = Subgroup::from_parts(group, &gens, idx);
                found.insert(k.clone());
                queue.push(k);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// `U/V` in invariant-factor form, with projection and a deterministic section.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: FinAbGroup,
    ambient: FinAbGroup,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    q: Vec<Vec<BigInt>>,
    kept: Vec<(usize, u64)>,
    lifts: Vec<GroupElement>,
}

pub fn quotient(u: &Subgroup, v: &Subgroup) -> Result<Quotient> {
    if !v.is_subgroup_of(u) {
        return Err(Error::NotASubgroup("V is not contained in U".into()));
    }
    let ambient = u.group.clone();
    let k = ambient.rank();
    let bu = u.lattice();
    let bv = v.lattice();
    let pivots = lattice::pivot_columns(&bu);
    let m: Vec<Vec<BigInt>> = bv
        .iter()
        .map(|row| lattice::echelon_solve(&bu, &pivots, row).expect("V lies in U"))
        .collect();
    let s = lattice::smith(&m, k);
    let mut kept = Vec::new();
    let mut lifts = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        let d = d.to_u64().expect("small invariant factor");
        if d > 1 {
            let c: Vec<i64> = (0..k)
                .map(|j| {
                    let x: BigInt = (0..k).map(|t| &s.q_inv[i][t] * &bu[t][j]).sum();
                    let dj = BigInt::from(ambient.factors()[j]);
                    (((x % &dj) + &dj) % &dj).to_i64().expect("reduced")
                })
                .collect();
            kept.push((i, d));
            lifts.push(ambient.elem(&c)?);
        }
    }
    let group = FinAbGroup::new(kept.iter().map(|&(_, d)| d).collect())?;
    Ok(Quotient { group, ambient, basis: bu, pivots, q: s.q, kept, lifts })
}

impl Quotient {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Lifts in `U` of the quotient's coordinate generators.
    pub fn generators(&self) -> &[GroupElement] {
        &self.lifts
    }

    pub fn project(&self, x: &GroupElement) -> Result<GroupElement> {
        let v = to_big(x);
        let y = lattice::echelon_solve(&self.basis, &self.pivots, &v)
            .ok_or_else(|| Error::NotASubgroup("element is outside U".into()))?;
        let k = self.basis.len();
        let coords: Vec<i64> = self
            .kept
            .iter()
            .map(|&(i, d)| {
                let z: BigInt = (0..k).map(|t| &y[t] * &self.q[t][i]).sum();
                let d = BigInt::from(d);
                (((z % &d) + &d) % &d).to_i64().expect("reduced")
            })
            .collect();
        self.group.elem(&coords)
    }

    pub fn section(&self, q: &GroupElement) -> GroupElement {
        let mut acc = self.ambient.zero();
        for (&c, lift) in q.coords().iter().zip(&self.lifts) {
            acc = self.ambient.add(&acc, &self.ambient.scale(lift, c as i64));
        }
        acc
    }
}

/// A set of nonzero elements inducing `⊕ Z/ord(p) ≅ U`; stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presentation {
    elements: Vec<GroupElement>,
}

impl Presentation {
    pub fn new(group: &FinAbGroup, u: &Subgroup, mut elements: Vec<GroupElement>) -> Result<Self> {
        elements.sort();
        let p = Presentation { elements };
        if p.is_presentation_of(group, u) {
            Ok(p)
        } else {
            Err(Error::NotASubgroup("elements do not present U".into()))
        }
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn is_presentation_of(&self, group: &FinAbGroup, u: &Subgroup) -> bool {
        if self.elements.iter().any(|e| e.is_zero() || !u.contains(e)) {
            return false;
        }
        let prod: u64 = self.elements.iter().map(|e| group.order_of(e)).product();
        prod == u.order() && Subgroup::generated_by(group, &self.elements).order() == u.order()
    }
}

pub fn smith_presentation(u: &Subgroup) -> Presentation {
    let q = quotient(u, &Subgroup::trivial(&u.group)).expect("trivial subgroup is contained");
    let mut elements = q.lifts;
    elements.sort();
    Presentation { elements }
}

pub fn presentations_enumerate(u: &Subgroup, limit: usize) -> Result<Vec<Presentation>> {
    if u.order() > 16 {
        return Err(Error::GroupTooLarge { order: u.order(), bound: 16 });
    }
    let g = &u.group;
    let nonzero: Vec<GroupElement> = u.elements().filter(|e| !e.is_zero()).collect();
    let mut out = Vec::new();
    if u.is_trivial() {
        out.push(Presentation { elements: vec![] });
        return Ok(out);
    }
    let max_size = 64 - u.order().leading_zeros() as usize;
    let mut chosen = Vec::new();
    fn rec(
        g: &FinAbGroup,
        u: &Subgroup,
        pool: &[GroupElement],
        start: usize,
        size: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Presentation>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if chosen.len() == size {
            let p = Presentation { elements: chosen.iter().map(|&i| pool[i].clone()).collect() };
            if p.is_presentation_of(g, u) {
                out.push(p);
            }
            return;
        }
        for i in start..pool.len() {
            chosen.push(i);
            rec(g, u, pool, i + 1, size, chosen, out, limit);
            chosen.pop();
        }
    }
    for size in 1..=max_size {
        rec(g, u, &nonzero, 0, size, &mut chosen, &mut out, limit);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(f: &[u64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(subgroups_all(&FinAbGroup::trivial()).unwrap().len(), 1);
        assert_eq!(subgroups_all(&grp(&[2, 2])).unwrap().len(), 5);
        let z4 = subgroups_all(&grp(&[4])).unwrap();
        assert_eq!(z4.iter().map(|s| s.order()).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(subgroups_all(&grp(&[2, 2, 2, 2, 2, 2, 2])).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let g = grp(&[4]);
        let b = Subgroup::generated_by(&g, &[g.elem(&[2]).unwrap()]);
        let a = b.annihilator();
        assert_eq!(a, b);
        assert!(Subgroup::whole(&g).annihilator().is_trivial());
        assert_eq!(Subgroup::trivial(&g).annihilator(), Subgroup::whole(&g));
    }

    #[test]
    fn quotient_examples() {
        let g = grp(&[4]);
        let u = Subgroup::whole(&g);
        let v = Subgroup::generated_by(&g, &[g.elem(&[2]).unwrap()]);
        let q = quotient(&u, &v).unwrap();
        assert_eq!(q.group().factors(), &[2]);
        assert_eq!(q.project(&g.elem(&[3]).unwrap()).unwrap(), q.group().elem(&[1]).unwrap());
        assert!(quotient(&u, &u).unwrap().group().order() == 1);
        assert_eq!(quotient(&u, &Subgroup::trivial(&g)).unwrap().group().factors(), &[4]);
        assert!(quotient(&v, &u).is_err());
    }

    #[test]
    fn presentations() {
        let g = grp(&[4, 2]);
        let u = Subgroup::generated_by(&g, &[g.elem(&[2, 1]).unwrap()]);
        assert_eq!(smith_presentation(&u).elements(), &[g.elem(&[2, 1]).unwrap()]);
        let z3 = grp(&[3]);
        assert_eq!(presentations_enumerate(&Subgroup::whole(&z3), 100).unwrap().len(), 2);
        let v4 = grp(&[2, 2]);
        assert_eq!(presentations_enumerate(&Subgroup::whole(&v4), 100).unwrap().len(), 3);
        let z6 = grp(&[6]);
        let p = smith_presentation(&Subgroup::whole(&z6));
        assert_eq!(p.elements().len(), 1);
        assert_eq!(z6.order_of(&p.elements()[0]), 6);
    }
}
