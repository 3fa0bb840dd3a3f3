//! Enumerate every triple over S3 and print the Hasse diagram as DOT.

use drinfeld::group::{constant_group, FiniteGroup};
use drinfeld::lattice::{enumerate_triples, DEFAULT_LATTICE_BUDGET};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(7)?;
    let g = constant_group(&f, &FiniteGroup::symmetric3())?;
    let lat = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET)?;
    eprintln!("{} triples", lat.nodes.len());
    print!("{}", lat.to_dot(&g));
    Ok(())
}
