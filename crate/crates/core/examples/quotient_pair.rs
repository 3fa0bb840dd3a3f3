//! The quotient D(K,H,B) of D(Ga,2) for K = H = Ga,1 and B = B_λ.

use drinfeld::appendix::b_lambda;
use drinfeld::double::drinfeld_double;
use drinfeld::group::{ga_kernel, SubgroupScheme};
use drinfeld::hopf::format_tensor;
use drinfeld::quotient::{build_quotient, quotient_checks, Triple};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(3)?;
    let g = ga_kernel(&f, 2)?;
    let sub = SubgroupScheme::frobenius_sub(&g, 1)?;
    let dbl = drinfeld_double(&g)?;
    for lam in f.elements().unwrap() {
        let t = Triple::new(&g, sub.clone(), sub.clone(), b_lambda(&f, &lam)?)?;
        let qp = build_quotient(&g, &t)?;
        println!("λ = {}: dim {} (FPdim {})", f.format(&lam), qp.d.dim(), t.fp_dim(&g));
        println!("  R = {}", format_tensor(&f, qp.d.labels(), 2, &qp.qt.r));
        let checks = quotient_checks(&g, &dbl, &qp)?;
        println!("  {} checks, all passed: {}", checks.checks.len(), checks.all_passed());
    }
    Ok(())
}
