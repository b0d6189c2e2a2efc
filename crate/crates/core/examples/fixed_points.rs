//! Fixed-point counts and weight-space dimensions.

use qhowe::howemod::Flavor;
use qhowe::kdim::{count_fixed_points, fixed_points, total_dim, total_dim_check, weight_dim};
use qhowe::weights::Weight;

fn main() {
    println!("fixed points for m=3, k=2: {:?}", fixed_points(3, 2));
    for m in 1..=4 {
        let row: Vec<u64> = (0..=6).map(|k| count_fixed_points(m, k)).collect();
        println!("m={m}: {row:?}");
    }

    for k in Weight::compositions(2, 2) {
        println!(
            "k={k}, m=2: sym {}, skew {}",
            weight_dim(Flavor::Sym, &k, 2),
            weight_dim(Flavor::Skew, &k, 2)
        );
    }
    println!(
        "Sym^2(C^2 ⊗ C^2) has dimension {}",
        total_dim(Flavor::Sym, 2, 2, 2)
    );

    let r = total_dim_check(3, 2, 4);
    for c in &r.cases {
        println!("{}: {}", c.name, c.detail);
    }
}
