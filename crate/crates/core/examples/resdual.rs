//! Residues of meromorphic forms and the duality of k[x]/f.

use efgc::resdual::*;
use efgc::ringkit::text::parse_poly;
use efgc::ringkit::{det_division_free, BaseRing, Poly, Ring};

fn main() -> efgc::Result<()> {
    let q = BaseRing::rationals();
    let p = |s: &str| parse_poly(&q, "x", s).map(|c| Poly::new(&q, c));
    let w = MeromorphicForm::new(p("2*x")?, p("x^2 - 1")?)?;
    println!("res 2x/(x^2-1) dx = {}", q.render(&residue(&w)));
    println!("res d(x/(x^2-1)) = {}", q.render(&residue_of_derivative(&p("x")?, &p("x^2 - 1")?)?));
    println!("trace of x^2 on Q[x]/(x^3-2) = {}", q.render(&trace_of_multiplication(&p("x^2")?, &p("x^3 - 2")?)?));

    let z = BaseRing::integers();
    let f = Poly::from_ints(&z, &[1, -3, 0, 1]);
    let alg = DualityAlgebra::new(&f)?;
    println!("det theta0 = {}", z.render(&det_division_free(&z, &theta0_matrix(&alg))?));
    let phi = Functional { values: vec![z.int(2), z.int(-1), z.int(5)] };
    let a = theta0(&alg, &phi);
    println!("epsilon(theta0(phi)) = {} = phi(1)", z.render(&epsilon(&alg, &a)));
    let (l, r) = residue_pairing_check(&alg, &phi);
    println!("residue pairing: {} = {}", z.render(&l), z.render(&r));
    Ok(())
}
