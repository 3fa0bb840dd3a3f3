//! Section and cleaving data for Ga,1 inside Ga,2.

use drinfeld::group::{cleaving, ga_kernel, section_mu, QuotientGroup, SubgroupScheme};
use drinfeld::hopf::format_vec;
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(3)?;
    let g = ga_kernel(&f, 2)?;
    let h = SubgroupScheme::frobenius_sub(&g, 1)?;
    let q = QuotientGroup::new(&g, &h)?;
    let cl = cleaving(&g, &h, &q)?;
    let ql = q.own.kg.labels();
    let gl = g.kg.labels();
    for (i, l) in ql.iter().enumerate() {
        println!(
            "γ({l}) = {}   γ⁻¹({l}) = {}",
            format_vec(&f, gl, cl.gamma.col(i)),
            format_vec(&f, gl, cl.gamma_inv.col(i))
        );
    }
    for (i, l) in gl.iter().enumerate() {
        println!("η({l}) = {}", format_vec(&f, gl, cl.eta.col(i)));
    }
    let mu = section_mu(&g, &h)?;
    println!("μ closed form: {}", mu.closed_form);
    Ok(())
}
