//! Quantum integers, binomials and the `q -> -q^-1` substitution.

use qhowe::qlaurent::{check_qidentities, qbinom, qfact, qint, LaurentPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in -3..=4 {
        println!("[{n}] = {}", qint(n));
    }
    println!("[3]! = {}", qfact(3));
    println!("qbinom(4, 2) = {}", qbinom(4, 2));

    let a: LaurentPoly = "q^2 - q^-2".parse()?;
    println!("(q^2 - q^-2) / [2] = {}", a.div_exact(&qint(2))?);
    println!("[2] under q -> -q^-1: {}", qint(2).substitute_neg_inv());
    println!("qbinom(4, 2) at q = 1: {}", qbinom(4, 2).eval_at_one());

    let r = check_qidentities(10, 10);
    println!("{} identity cases, {} failures", r.cases.len(), r.failures);
    Ok(())
}
