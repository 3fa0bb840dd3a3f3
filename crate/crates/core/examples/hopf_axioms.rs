//! Build the restricted enveloping algebra of the 2-dimensional non-abelian
//! restricted Lie algebra and check the Hopf axioms on it and its dual.

use drinfeld::group::two_dim_solvable;
use drinfeld::hopf::verify_hopf;
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    for p in [2, 3] {
        let f = Field::prime(p)?;
        let g = two_dim_solvable(&f)?;
        println!("p = {p}: k[G] has dimension {}", g.kg.dim());
        print!("{}", verify_hopf(&g.kg).render());
        let dual = g.kg.dual();
        println!("dual:");
        print!("{}", verify_hopf(&dual).render());
    }
    Ok(())
}
