//! Group schemes and triples through JSON and back.

use drinfeld::group::{constant_group, FiniteGroup, SubgroupScheme};
use drinfeld::io::{group_from_json, group_to_json, triple_from_json, triple_to_json};
use drinfeld::quotient::Triple;
use drinfeld::Field;

fn main() -> drinfeld::Result<()> {
    let f = Field::prime(7)?;
    let g = constant_group(&f, &FiniteGroup::symmetric3())?;
    let text = serde_json::to_string(&group_to_json(&g)).unwrap();
    println!("{} bytes of JSON for S3", text.len());
    let back = group_from_json(&serde_json::from_str(&text).unwrap())?;
    println!("k[G] equal after round trip: {}", back.kg == g.kg);

    let a3 = SubgroupScheme::from_elements(&g, &[0, 4, 5])?;
    let t = Triple::trivial_b(&g, a3.clone(), a3)?;
    let tv = triple_to_json(&g, &t);
    println!("{}", serde_json::to_string_pretty(&tv).unwrap());
    println!("triple equal after round trip: {}", triple_from_json(&g, &tv)? == t);
    Ok(())
}
