//! Subgroup lattices, annihilators, presentations and Burnside products.

use efgc::abelian::*;

fn main() -> efgc::Result<()> {
    let a = FinAbGroup::new(vec![2, 4])?;
    for b in subgroups_all(&a)? {
        let ann = annihilator(&b);
        let p = smith_presentation(&b);
        let orders: Vec<u64> = p.elements().iter().map(|e| a.order_of(e)).collect();
        println!("B = {b} (order {}), ann(B) order {}, presentation orders {orders:?}", b.order(), ann.order());
    }

    let v = FinAbGroup::new(vec![2, 2])?;
    println!("presentations of (Z/2)^2: {}", presentations_enumerate(&Subgroup::whole(&v), 100)?.len());
    let pairs: Vec<Subgroup> = subgroups_all(&v)?.into_iter().filter(|s| s.order() == 2).collect();
    let prod = burnside_mul(&BurnsideElement::basis(&pairs[0]), &BurnsideElement::basis(&pairs[1]))?;
    println!("[A/B][A/B'] = {prod}");
    Ok(())
}
