//! D(S3) over F7 with its R-matrix and ribbon element.

use drinfeld::double::{canonical_r_and_v, drinfeld_double, drinfeld_map_rank, is_factorizable, verify_quasitriangular, verify_ribbon};
use drinfeld::group::{constant_group, FiniteGroup};
use drinfeld::hopf::verify_hopf;
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(7)?;
    let g = constant_group(&f, &FiniteGroup::symmetric3())?;
    let dbl = drinfeld_double(&g)?;
    println!("dim D(G) = {}", dbl.d.dim());
    print!("{}", verify_hopf(&dbl.d).render());
    let q = canonical_r_and_v(&g, &dbl);
    print!("{}", verify_quasitriangular(&q).render());
    print!("{}", verify_ribbon(&q)?.render());
    println!("Drinfeld map rank {} of {}, factorizable: {}", drinfeld_map_rank(&q), dbl.d.dim(), is_factorizable(&q));
    Ok(())
}
