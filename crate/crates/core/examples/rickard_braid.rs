//! Braid operators from Rickard complexes, as blocks between weight spaces.

use qhowe::howemod::{Flavor, HoweModule};
use qhowe::rickard::{check_braid, invert_block, rickard_block, BraidVariant};
use qhowe::weights::Weight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in [vec![0, 2], vec![1, 1], vec![2, 0]] {
        let k = Weight::new(k);
        let t = rickard_block(1, &k, Flavor::Sym, 1, BraidVariant::T)?;
        let tp = rickard_block(1, &k, Flavor::Sym, 1, BraidVariant::TPrime)?;
        println!("m=1, k={k}: T = {}, T' = {}", t.entry(0, 0), tp.entry(0, 0));
    }

    let k = Weight::new(vec![1, 1]);
    let t = rickard_block(1, &k, Flavor::Sym, 2, BraidVariant::T)?;
    println!("T_1 on sym, m=2, k={k}:\n{t:?}");
    println!("inverse:\n{:?}", invert_block(&t)?);
    println!("det T_1 = {}", t.determinant()?);

    // T_1 T_2 T_1 = T_2 T_1 T_2 on one weight space of n = 3
    let module = HoweModule::new(Flavor::Skew, 3, 2);
    let k = Weight::new(vec![2, 1, 0]);
    let step =
        |i: usize, k: &Weight| qhowe::rickard::rickard_block_in(&module, i, k, BraidVariant::T);
    let k1 = qhowe::weights::weyl_act(1, &k)?;
    let k12 = qhowe::weights::weyl_act(2, &k1)?;
    let lhs = step(1, &k12)?.compose(&step(2, &k1)?.compose(&step(1, &k)?)?)?;
    let k2 = qhowe::weights::weyl_act(2, &k)?;
    let k21 = qhowe::weights::weyl_act(1, &k2)?;
    let rhs = step(2, &k21)?.compose(&step(1, &k2)?.compose(&step(2, &k)?)?)?;
    println!("braid relation at skew {k}: {}", lhs == rhs);

    let r = check_braid(3, 1, 4, Flavor::Sym);
    println!(
        "braid suite n=3, m=1, N<=4: {} cases, {} failures",
        r.cases.len(),
        r.failures
    );
    Ok(())
}
