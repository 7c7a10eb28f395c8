//! Point divisors, norms, convolution and the points scheme over F7.

use efgc::abelian::FinAbGroup;
use efgc::divisor::*;
use efgc::multicurve::Efg;
use efgc::ringkit::poly::render;
use efgc::ringkit::{BaseRing, Ring};

fn main() -> efgc::Result<()> {
    let f7 = BaseRing::prime_field(7)?;
    let e = Efg::additive(&f7, &FinAbGroup::cyclic(7), &[f7.one()], 1)?;
    let d = full_set_divisor(&e, &[f7.int(1), f7.int(3)])?;
    println!("D = ({})", render(&f7, d.generator(), "x"));
    println!("f_D = {}", render(&f7, &fd_norm(&d, &e)?, "x"));
    println!("euler class = {}", f7.render(&euler_class(&d, &e)?));
    let c = point_divisor(&e, &f7.int(2))?;
    println!("D * [2] = ({})", render(&f7, convolution(&d, &c, &e)?.generator(), "x"));
    for r in 0..=2 {
        println!("rank O(P_{r}(D)) = {}", points_scheme(&d, r)?.rank());
    }
    let m = moments(&d, &e, e.curve().rank())?;
    for (beta, v) in m.entries.iter().filter(|(_, v)| !f7.is_zero(v)) {
        println!("moment {beta:?} = {}", f7.render(v));
    }
    let parsed = parse_divisor(&e, "point(1) + point(3) - point(1)")?;
    println!("expression gives ({})", render(&f7, parsed.generator(), "x"));
    Ok(())
}
