//! Recover the triple behind a surjection out of D(G).

use drinfeld::double::drinfeld_double;
use drinfeld::group::{constant_group, FiniteGroup, SubgroupScheme};
use drinfeld::quotient::{build_quotient, recognize_triple, Triple};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::rationals();
    let g = constant_group(&f, &FiniteGroup::cyclic(2))?;
    let dbl = drinfeld_double(&g)?;
    let full = SubgroupScheme::full(&g);
    let t = Triple::trivial_b(&g, full.clone(), SubgroupScheme::trivial(&g))?;
    let qp = build_quotient(&g, &t)?;
    let rec = recognize_triple(&g, &dbl, &qp.d, &qp.theta)?;
    println!("recovered |K| = {}, |H| = {}, same triple: {}", rec.pair.triple.k.order(), rec.pair.triple.h.order(), rec.pair.triple == t);
    let relabelled = rec.pair.d.clone().with_labels(dbl.d.labels().to_vec());
    println!("D(G,1,1) labels: {:?}", rec.pair.d.labels());
    println!("structure constants equal to D(G): {}", relabelled == dbl.d);
    Ok(())
}
