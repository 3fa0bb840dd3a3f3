//! Exact arithmetic over prime fields, extensions and the rationals.

use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f7 = Field::parse("p7")?;
    let g = f7.from_i64(3);
    let powers: Vec<String> = (1..=6).map(|e| f7.format(&f7.pow(&g, e))).collect();
    println!("powers of 3 in {}: {}", f7.name(), powers.join(" "));

    let f4 = Field::parse("p2^2")?;
    let elems = f4.elements().unwrap();
    for a in &elems {
        println!("{}: frobenius {}", f4.pretty(a), f4.pretty(&f4.frobenius(a)));
    }

    let q = Field::rationals();
    let x = q.div(&q.from_i64(3), &q.from_i64(-12))?;
    println!("3/-12 = {}", q.format(&x));

    // Lucas: C(7, 3) mod 3 = C(2,1)·C(1,0)
    let f3 = Field::prime(3)?;
    println!("binomial(7,3) mod 3 = {}", f3.format(&f3.binomial(7, 3)));
    println!("4! mod 5 = {}", Field::prime(5)?.format(&Field::prime(5)?.factorial(4)));
    Ok(())
}
