//! Builds the universal multiplicative model for Z/2 and validates it.

use efgc::abelian::FinAbGroup;
use efgc::multicurve::{validate_efg, Efg};
use efgc::ringkit::poly::render;
use efgc::ringkit::{BaseRing, Ring};

fn main() -> efgc::Result<()> {
    let e = Efg::multiplicative_universal(&BaseRing::integers(), &FinAbGroup::cyclic(2), 2)?;
    let k = e.base();
    println!("f = {}", render(k, e.curve().f(), "x"));
    println!("iota = {}", render(k, e.iota(), "x"));
    for a in e.group().elements() {
        println!("c_{a} = {}, x_{a} = {}", k.render(e.phi(&a)), render(k, &e.x_alpha(&a), "x"));
    }
    for c in validate_efg(&e).checks {
        println!("{:<20} {:<7} {}", c.name, c.status, c.detail);
    }

    let ce = Efg::counterexample(4)?;
    let lam = ce.formal_expansion_at(&ce.group().element(1), 3)?;
    println!("counterexample λ_a(x) = {}", render(ce.base(), lam.image_of_x(), "t"));
    Ok(())
}
