//! The built-in families and their normal subgroup schemes.

use drinfeld::group::{constant_group, direct_product, ga_kernel, mu_p_kernel, FiniteGroup, GroupScheme};
use drinfeld::lattice::{normal_subgroups, DEFAULT_LATTICE_BUDGET};
use drinfeld::Field;

fn show(name: &str, g: &GroupScheme) -> drinfeld::Result<()> {
    let subs = normal_subgroups(g, DEFAULT_LATTICE_BUDGET)?;
    let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
    println!(
        "{name}: order {}, {} points, connected part of order {}, normal subgroups of orders {orders:?}",
        g.order(),
        g.tag.points,
        g.tag.connected_order
    );
    Ok(())
}

fn main() -> drinfeld::Result<()> {
    let f3 = Field::prime(3)?;
    show("S3 over F7", &constant_group(&Field::prime(7)?, &FiniteGroup::symmetric3())?)?;
    show("Ga,2 over F3", &ga_kernel(&f3, 2)?)?;
    show("mu_3", &mu_p_kernel(&f3)?)?;
    let z2 = constant_group(&f3, &FiniteGroup::cyclic(2))?;
    show("Z/2 x Ga,1 over F3", &direct_product(&z2, &ga_kernel(&f3, 1)?)?)?;
    Ok(())
}
