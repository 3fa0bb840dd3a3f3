//! Centralizers, meets and degeneracy over Ga,1.

use drinfeld::group::ga_kernel;
use drinfeld::lattice::{centralizer_triple, contains, enumerate_triples, intersect, DEFAULT_LATTICE_BUDGET};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(3)?;
    let g = ga_kernel(&f, 1)?;
    let lat = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET)?;
    for (i, n) in lat.nodes.iter().enumerate() {
        let c = centralizer_triple(&g, &n.triple)?;
        let meet = intersect(&g, &n.triple, &c)?;
        println!(
            "{}: centralizer {}, meet with it has FPdim {}, nondegenerate {}, lagrangian {}",
            lat.node_label(&g, i),
            lat.node_label(&g, n.centralizer),
            meet.fp_dim(&g),
            n.flags.nondegenerate,
            n.flags.lagrangian
        );
        assert!(contains(&g, &n.triple, &meet));
    }
    Ok(())
}
