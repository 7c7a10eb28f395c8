use std::collections::BTreeSet;

use efgc::abelian::*;

fn grp(f: &[u64]) -> FinAbGroup {
    FinAbGroup::new(f.to_vec()).unwrap()
}

/// Every invariant-factor list `d1 | d2 | …` with product at most `bound`.
fn groups_up_to(bound: u64) -> Vec<FinAbGroup> {
    fn rec(prefix: &mut Vec<u64>, prod: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied();
        for d in (last.unwrap_or(2)..=bound / prod).filter(|d| last.map_or(true, |p| d % p == 0)) {
            prefix.push(d);
            rec(prefix, prod * d, bound, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), 1, bound, &mut out);
    out.iter().map(|f| grp(f)).collect()
}

fn index_set(g: &FinAbGroup, elems: impl Iterator<Item = GroupElement>) -> BTreeSet<u64> {
    elems.map(|e| g.index(&e)).collect()
}

/// Subgroups as element-index sets, by closing under adjoining one element at a time.
fn brute_subgroups(g: &FinAbGroup) -> BTreeSet<BTreeSet<u64>> {
    let all: Vec<GroupElement> = g.elements().collect();
    let mut found: BTreeSet<BTreeSet<u64>> = BTreeSet::new();
    found.insert([g.index(&g.zero())].into());
    let mut frontier: Vec<BTreeSet<u64>> = found.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for x in &all {
            let mut next = BTreeSet::new();
            for &i in &h {
                let hi = g.element(i);
                for k in 0..g.order_of(x) {
                    next.insert(g.index(&g.add(&hi, &g.scale(x, k as i64))));
                }
            }
            if found.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    found
}

fn brute_annihilator(g: &FinAbGroup, b: &Subgroup) -> BTreeSet<u64> {
    g.elements().filter(|a| b.elements().all(|x| g.pairing(&x, a) == 0)).map(|a| g.index(&a)).collect()
}

#[test]
fn subgroup_examples() {
    assert_eq!(subgroups_all(&FinAbGroup::trivial()).unwrap().len(), 1);
    assert_eq!(subgroups_all(&grp(&[2, 2])).unwrap().len(), 5);
    let orders: Vec<u64> = subgroups_all(&grp(&[4])).unwrap().iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![1, 2, 4]);
    assert!(subgroups_all(&grp(&[2, 2, 2, 2, 2, 2, 2])).is_err());
}

#[test]
fn subgroup_lattice_matches_closure() {
    for g in groups_up_to(36) {
        let subs = subgroups_all(&g).unwrap();
        let got: Vec<BTreeSet<u64>> = subs.iter().map(|s| index_set(&g, s.elements())).collect();
        let got_set: BTreeSet<_> = got.iter().cloned().collect();
        assert_eq!(got.len(), got_set.len(), "duplicates for {g}");
        assert_eq!(got_set, brute_subgroups(&g), "lattice of {g}");
        for (s, set) in subs.iter().zip(&got) {
            assert_eq!(s.order(), set.len() as u64);
        }
        let mut sorted = subs.clone();
        sorted.sort_by_key(|s| s.order());
        assert_eq!(sorted.iter().map(|s| s.order()).collect::<Vec<_>>(), subs.iter().map(|s| s.order()).collect::<Vec<_>>());
    }
}

#[test]
fn cyclic_subgroup_counts_are_divisor_counts() {
    for n in 1..=36u64 {
        let g = if n == 1 { FinAbGroup::trivial() } else { FinAbGroup::cyclic(n) };
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(subgroups_all(&g).unwrap().len(), divisors, "Z/{n}");
    }
}

#[test]
fn annihilator_examples() {
    let g = grp(&[4]);
    let b = Subgroup::generated_by(&g, &[g.elem(&[2]).unwrap()]);
    assert_eq!(annihilator(&b), b);
    assert!(annihilator(&Subgroup::whole(&g)).is_trivial());
    assert_eq!(annihilator(&Subgroup::trivial(&g)), Subgroup::whole(&g));
}

#[test]
fn annihilator_properties() {
    for g in groups_up_to(36) {
        let subs = subgroups_all(&g).unwrap();
        for b in &subs {
            let a = annihilator(b);
            assert_eq!(a.order() * b.order(), g.order(), "{g}");
            assert_eq!(index_set(&g, a.elements()), brute_annihilator(&g, b), "{g}");
            assert_eq!(&annihilator(&a), b, "{g}");
            for c in subs.iter().filter(|c| b.is_subgroup_of(c)) {
                assert!(annihilator(c).is_subgroup_of(&a));
            }
        }
    }
}

#[test]
fn quotient_examples() {
    let g = grp(&[4]);
    let u = Subgroup::whole(&g);
    assert_eq!(quotient(&u, &u).unwrap().group().order(), 1);
    assert_eq!(quotient(&u, &Subgroup::trivial(&g)).unwrap().group().factors(), &[4]);
    let half = Subgroup::generated_by(&g, &[g.elem(&[2]).unwrap()]);
    let q = quotient(&u, &half).unwrap();
    assert_eq!(q.group().factors(), &[2]);
    assert!(quotient(&half, &u).is_err());
}

#[test]
fn quotient_projection_is_a_surjective_homomorphism() {
    for g in groups_up_to(24) {
        let subs = subgroups_all(&g).unwrap();
        for u in &subs {
            for v in subs.iter().filter(|v| v.is_subgroup_of(u)) {
                let q = quotient(u, v).unwrap();
                let qg = q.group();
                assert_eq!(qg.order() * v.order(), u.order());
                let mut image = BTreeSet::new();
                for x in u.elements() {
                    let px = q.project(&x).unwrap();
                    image.insert(qg.index(&px));
                    assert_eq!(px.is_zero(), v.contains(&x));
                    for y in u.elements().take(6) {
                        let lhs = q.project(&g.add(&x, &y)).unwrap();
                        assert_eq!(lhs, qg.add(&px, &q.project(&y).unwrap()));
                    }
                }
                assert_eq!(image.len() as u64, qg.order());
                for z in qg.elements() {
                    let s = q.section(&z);
                    assert!(u.contains(&s));
                    assert_eq!(q.project(&s).unwrap(), z);
                }
            }
        }
    }
}

#[test]
fn smith_presentation_examples() {
    let g = grp(&[6]);
    let p = smith_presentation(&Subgroup::whole(&g));
    assert_eq!(p.elements().len(), 1);
    assert_eq!(g.order_of(&p.elements()[0]), 6);

    let g = grp(&[2, 2]);
    let p = smith_presentation(&Subgroup::whole(&g));
    assert_eq!(p.elements().iter().map(|e| g.order_of(e)).collect::<Vec<_>>(), vec![2, 2]);

    let g = grp(&[2, 4]);
    let x = g.elem(&[1, 2]).unwrap();
    let p = smith_presentation(&Subgroup::generated_by(&g, &[x.clone()]));
    assert_eq!(p.elements(), &[x]);

    assert!(smith_presentation(&Subgroup::trivial(&g)).elements().is_empty());
}

#[test]
fn presentation_enumeration_examples() {
    let count = |f: &[u64]| presentations_enumerate(&Subgroup::whole(&grp(f)), 1000).unwrap().len();
    assert_eq!(count(&[2]), 1);
    assert_eq!(count(&[3]), 2);
    assert_eq!(count(&[2, 2]), 3);
    assert_eq!(count(&[4]), 2);
    assert_eq!(count(&[6]), 2 + 2);
    assert_eq!(presentations_enumerate(&Subgroup::whole(&grp(&[2, 2])), 2).unwrap().len(), 2);
    assert!(presentations_enumerate(&Subgroup::whole(&grp(&[32])), 4).is_err());
}

#[test]
fn every_presentation_is_an_isomorphism() {
    for g in groups_up_to(16) {
        for u in subgroups_all(&g).unwrap() {
            let mut ps = presentations_enumerate(&u, 200).unwrap();
            ps.push(smith_presentation(&u));
            for p in &ps {
                let orders: u64 = p.elements().iter().map(|e| g.order_of(e)).product();
                assert_eq!(orders, u.order());
                assert!(p.elements().iter().all(|e| !e.is_zero() && u.contains(e)));
                let span = brute_span(&g, p.elements());
                assert_eq!(span, index_set(&g, u.elements()));
                assert!(p.is_presentation_of(&g, &u));
            }
        }
    }
}

fn brute_span(g: &FinAbGroup, gens: &[GroupElement]) -> BTreeSet<u64> {
    let mut acc: BTreeSet<u64> = [g.index(&g.zero())].into();
    for x in gens {
        let mut next = BTreeSet::new();
        for &i in &acc {
            for k in 0..g.order_of(x) {
                next.insert(g.index(&g.add(&g.element(i), &g.scale(x, k as i64))));
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn burnside_examples() {
    let g = grp(&[2]);
    let one = BurnsideElement::one(&g);
    let free = BurnsideElement::basis(&Subgroup::trivial(&g));
    assert_eq!(burnside_mul(&free, &free).unwrap(), free.scale(2));
    assert_eq!(burnside_mul(&one, &free).unwrap(), free);

    let g = grp(&[2, 2]);
    let order2: Vec<Subgroup> = subgroups_all(&g).unwrap().into_iter().filter(|s| s.order() == 2).collect();
    let (b, c) = (BurnsideElement::basis(&order2[0]), BurnsideElement::basis(&order2[1]));
    assert_eq!(burnside_mul(&b, &c).unwrap(), BurnsideElement::basis(&Subgroup::trivial(&g)));

    let other = BurnsideElement::one(&grp(&[3]));
    assert!(burnside_mul(&one, &other).is_err());
}

/// Marks `φ_C([A/B]) = |A/B|` when `C ≤ B`, else 0, for abelian `A`.
fn mark(z: &BurnsideElement, c: &Subgroup) -> i64 {
    let n = z.group().order();
    z.coeffs().iter().filter(|(b, _)| c.is_subgroup_of(b)).map(|(b, k)| k * (n / b.order()) as i64).sum()
}

#[test]
fn burnside_ring_axioms() {
    for g in groups_up_to(16) {
        let subs = subgroups_all(&g).unwrap();
        let basis: Vec<BurnsideElement> = subs.iter().map(BurnsideElement::basis).collect();
        let one = BurnsideElement::one(&g);
        let prods: Vec<Vec<BurnsideElement>> =
            basis.iter().map(|x| basis.iter().map(|y| burnside_mul(x, y).unwrap()).collect()).collect();
        for i in 0..basis.len() {
            assert_eq!(burnside_mul(&one, &basis[i]).unwrap(), basis[i]);
            for j in 0..basis.len() {
                assert_eq!(prods[i][j], prods[j][i]);
                for c in &subs {
                    assert_eq!(mark(&prods[i][j], c), mark(&basis[i], c) * mark(&basis[j], c));
                }
                for k in 0..basis.len() {
                    let l = burnside_mul(&prods[i][j], &basis[k]).unwrap();
                    let r = burnside_mul(&basis[i], &prods[j][k]).unwrap();
                    assert_eq!(l, r, "{g}");
                }
            }
        }
    }
}
