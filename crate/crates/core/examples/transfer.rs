//! v_n values, transfer elements, η on the Burnside ring and Mackey checks.

use efgc::abelian::{subgroups_all, BurnsideElement, FinAbGroup, Subgroup};
use efgc::multicurve::Efg;
use efgc::ringkit::{BaseRing, Ring};
use efgc::transfer::*;

fn main() -> efgc::Result<()> {
    let e = Efg::multiplicative_universal(&BaseRing::integers(), &FinAbGroup::new(vec![2, 2])?, 2)?;
    let k = e.base();
    let g = e.group();
    for a in g.elements() {
        let row: Vec<String> = (1..=4).map(|n| vn_at_point(&e, n, &a).map(|v| k.render(&v))).collect::<Result<_, _>>()?;
        println!("v_1..4(c_{a}) = {}", row.join(", "));
    }
    for u in subgroups_all(g)? {
        println!("t({u}) = {}", k.render(&transfer_element(&e, &u, None)?));
    }
    let free = BurnsideElement::basis(&Subgroup::trivial(g));
    println!("eta([A/1]) = {}", k.render(&eta_burnside(&e, &free)?));
    let report = transfer_theorem_suite(&e, 16, 4)?;
    println!("transfer theorem checks: {} passed of {}", report.checks.iter().filter(|c| c.pass).count(), report.checks.len());
    let mackey = mackey_verify(&mackey_build(&e)?)?;
    println!("Mackey checks pass: {}", mackey.passed());
    Ok(())
}
