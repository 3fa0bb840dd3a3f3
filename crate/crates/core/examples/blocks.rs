//! Block data for the triples over S3 with K = H = A3.

use drinfeld::group::{constant_group, FiniteGroup};
use drinfeld::lattice::{block_data, enumerate_triples, DEFAULT_LATTICE_BUDGET};
use drinfeld::quotient::build_quotient;
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(7)?;
    let g = constant_group(&f, &FiniteGroup::symmetric3())?;
    let lat = enumerate_triples(&g, DEFAULT_LATTICE_BUDGET)?;
    for (i, n) in lat.nodes.iter().enumerate() {
        if n.triple.k.order() != 3 || n.triple.h.order() != 3 {
            continue;
        }
        let qp = build_quotient(&g, &n.triple)?;
        let blocks = block_data(&g, &qp)?;
        let dims: Vec<usize> = blocks.iter().map(|b| b.block_fp_dimension).collect();
        println!("{}: block FPdims {dims:?}, total {}", lat.node_label(&g, i), n.fp_dimension);
        for b in &blocks {
            let ch: Vec<String> = b.character.iter().map(|c| f.format(c)).collect();
            println!("  {}: B_g = [{}], checks pass {}", g.kg.labels()[b.representative], ch.join(", "), b.checks.all_passed());
        }
    }
    Ok(())
}
