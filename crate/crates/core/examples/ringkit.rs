//! Determinants, division and ideal decisions over the ring menu.

use efgc::abelian::FinAbGroup;
use efgc::ringkit::text::parse_value;
use efgc::ringkit::{adjugate, det_division_free, ideal_membership, is_regular, is_unit, poly_divmod};
use efgc::ringkit::{BaseRing, Matrix, Poly, Ring};

fn main() -> efgc::Result<()> {
    let z4 = BaseRing::integers_mod(4)?;
    let m = Matrix::from_rows(vec![vec![z4.int(2), z4.int(1)], vec![z4.int(3), z4.int(2)]])?;
    println!("det over Z/4 = {}", z4.render(&det_division_free(&z4, &m)?));
    let adj = adjugate(&z4, &m)?;
    println!("adj·m = det·I: {}", adj.mul(&z4, &m)? == Matrix::identity(&z4, 2));

    let (q, r) = poly_divmod(&Poly::from_ints(&z4, &[0, 0, 1]), &Poly::from_ints(&z4, &[2, 1]))?;
    println!("x^2 = ({q})(x+2) + {r} over Z/4");

    let zv = BaseRing::group_ring(&BaseRing::integers(), &FinAbGroup::cyclic(2))?;
    let v = |s: &str| parse_value(&zv, s).map(|e| zv.value(e));
    println!("1+v unit: {}, regular: {}", is_unit(&v("1+v")?)?, is_regular(&v("1+v")?)?);
    println!("v unit: {}", is_unit(&v("v")?)?);
    println!("2 in (1-v, 1+v): {}", ideal_membership(&v("2")?, &[v("1-v")?, v("1+v")?])?);
    println!("1+v in (1-v): {}", ideal_membership(&v("1+v")?, &[v("1-v")?])?);
    Ok(())
}
