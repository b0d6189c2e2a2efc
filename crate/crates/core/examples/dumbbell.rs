//! Comparing E_i F_i on the symmetric and skew sides at weight (1^n).

use qhowe::howemod::{Coproduct, Flavor};
use qhowe::skewsym::{check_dumbbell, dumbbell_check, ef_block, identify_bases};
use qhowe::weights::Weight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = Weight::new(vec![1, 1]);
    for (s, _) in identify_bases(&k, 2)? {
        println!("shared basis element {s}");
    }
    let sym = ef_block(Flavor::Sym, 2, 2, 1, Coproduct::Standard)?;
    let skew = ef_block(Flavor::Skew, 2, 2, 1, Coproduct::Standard)?;
    println!("B_sym:\n{sym:?}B_skew:\n{skew:?}");

    let r = dumbbell_check(2, 2);
    for c in &r.cases {
        println!("{} {:?}", c.name, c.status);
    }
    let r = check_dumbbell(4, 3, Coproduct::Standard);
    println!(
        "n<=4, m<=3: {} cases, {} failures",
        r.cases.len(),
        r.failures
    );
    Ok(())
}
