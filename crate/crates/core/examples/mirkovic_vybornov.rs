//! Lattices in Q[z]^m and the chart between block matrices and lattices.

use num_rational::BigRational;
use qhowe::mvlattice::{
    in_x0, lattice_to_mv, mv_to_lattice, perp, perp_lattice, Lattice, MVMatrix, QPoly,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mu = vec![2, 1];
    let free: Vec<BigRational> = [1, 0, 2, -1, 3]
        .iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect();
    let a = MVMatrix::from_free(mu.clone(), free)?;
    println!("A = {}", a.entries().to_json());

    let l = mv_to_lattice(&a);
    println!("HNF of L = {}", l.hnf().to_json());
    println!("codim {} (deg det {})", l.codim(), l.det_degree());
    println!("ch(L) = {}", l.ch().display_in("x"));
    println!("charpoly(A) = {}", a.entries().charpoly().display_in("x"));
    println!("round trip exact: {}", lattice_to_mv(&mu, &l)? == a);
    println!("in the open locus X(3)_0: {}", in_x0(3, &l));

    let outside = Lattice::diag(vec![QPoly::from_ints(&[0, 0, 1]), QPoly::one()])?;
    println!(
        "diag(z^2, 1) in chart (1,1): {:?}",
        lattice_to_mv(&[1, 1], &outside).err()
    );

    let lp = perp_lattice(&l)?;
    println!("perp(L) = {}", lp.to_json());
    println!(
        "perp(perp(L)) = L: {}",
        perp(&lp)?.as_lattice().as_ref() == Some(&l)
    );
    Ok(())
}
