//! Generators acting on a symmetric Howe module, and the relation suite.

use qhowe::howemod::{Flavor, Gen, HoweModule, Letter, ModuleVector};
use qhowe::weights::Weight;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let module = HoweModule::new(Flavor::Sym, 2, 2);
    let k = Weight::new(vec![2, 1]);
    println!("basis of Sym^2 C^2 ⊗ Sym^1 C^2 at {k}:");
    for b in module.basis(&k) {
        println!("  {b}");
    }

    let v = ModuleVector::basis(&module.basis(&k)[0]);
    let ev = module.apply_gen(Gen::E(1), &v)?;
    println!("E_1 {} = {}", module.basis(&k)[0], ev.to_json());

    // E_1 F_1 - F_1 E_1 acts on weight k by [k_2 - k_1]
    let ef = module.operator_block(&[Letter::e(1), Letter::f(1)], &k)?;
    let fe = module.operator_block(&[Letter::f(1), Letter::e(1)], &k)?;
    println!("E_1 F_1 - F_1 E_1 = {:?}", ef.sub(&fe)?);

    for flavor in Flavor::BOTH {
        let r = HoweModule::new(flavor, 3, 2).check_relations(4);
        println!(
            "{flavor}, n=3, m=2, N<=4: {} cases, {} failures",
            r.cases.len(),
            r.failures
        );
    }
    Ok(())
}
