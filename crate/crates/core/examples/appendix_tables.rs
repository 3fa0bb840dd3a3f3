//! Regenerate the Ga,1 ⊆ Ga,2 tables and compare them with the committed ones.

use drinfeld::appendix::{appendix_report, expected_report, json_diff, r_lambda_checks};
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    for p in [2, 3, 5] {
        let (report, checks) = appendix_report(p)?;
        let diff = json_diff(&expected_report(p).unwrap(), &report);
        println!("p = {p}: {} differences, checks pass {}", diff.len(), checks.all_passed());
        let f = Field::prime(p)?;
        for lam in f.elements().unwrap() {
            let rc = r_lambda_checks(p, &lam)?;
            println!(
                "  λ = {}: quotient ok {}, dual ok {}, factorizable {}, triangular {}",
                f.format(&lam),
                rc.quotient.all_passed(),
                rc.on_dual.all_passed(),
                rc.factorizable,
                rc.triangular
            );
        }
    }
    if let Some(l) = expected_report(3).and_then(|r| r["lambdas"][1]["tau"]["δ1"].as_array().cloned()) {
        println!("τ(δ1) at p = 3, λ = 1: {l:?}");
    }
    Ok(())
}
