//! Sparse exact linear algebra: rank, kernel, solving.

use drinfeld::linalg::{solve_affine, SparseMat};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(5)?;
    let rows: Vec<Vec<_>> = [[1, 2, 0, 1], [0, 1, 1, 3], [1, 3, 1, 4]]
        .iter()
        .map(|r| r.iter().map(|x| f.from_i64(*x)).collect())
        .collect();
    let m = SparseMat::from_dense_rows(&f, &rows);
    println!("rank {}", m.rank(&f));
    let ker = m.kernel(&f);
    println!("kernel of dimension {}", ker.dim());
    for v in ker.basis() {
        let dense: Vec<String> = v.dense(&f).iter().map(|c| f.format(c)).collect();
        println!("  [{}]", dense.join(", "));
    }
    let rhs = m.col(0).add(&f, &m.col(3).scale(&f, &f.from_i64(2)));
    let sol = solve_affine(&f, &m, &rhs)?;
    let p: Vec<String> = sol.particular.dense(&f).iter().map(|c| f.format(c)).collect();
    println!("particular solution [{}], {} free directions", p.join(", "), sol.kernel.dim());
    Ok(())
}
