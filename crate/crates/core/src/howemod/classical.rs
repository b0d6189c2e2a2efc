//! The `q = 1` action, written out independently of the quantum one: plain
//! derivations `x_{i+1} d/dx_i` and `x_i d/dx_{i+1}` on each tensor factor,
//! summed over factors with no `K` twists.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{BasisElement, Flavor, Gen};

pub type ClassicalVector = BTreeMap<BasisElement, BigInt>;

/// `E_i` or `F_i` at `q = 1`. `K_i^{±1}` act as the identity.
pub fn classical_apply(g: Gen, v: &ClassicalVector) -> ClassicalVector {
    let mut out = ClassicalVector::new();
    let (from, to) = match g {
        Gen::E(i) => (i - 1, i),
        Gen::F(i) => (i, i - 1),
        Gen::K(_) | Gen::KInv(_) => return v.clone(),
    };
    for (b, c) in v {
        for a in 0..b.m() {
            let x = b.rows()[a][from];
            if x == 0 {
                continue;
            }
            let mut rows = b.rows().to_vec();
            rows[a][from] -= 1;
            rows[a][to] += 1;
            if b.flavor() == Flavor::Skew && rows[a][to] > 1 {
                continue;
            }
            let target = BasisElement::new(b.flavor(), rows).expect("entries stay in range");
            *out.entry(target).or_default() += c * BigInt::from(x);
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_commutator_is_pairing() {
        // sl_2 on Sym^3 of C^2: [E, F] = h
        let b = BasisElement::new(Flavor::Sym, vec![vec![1, 2]]).unwrap();
        let v: ClassicalVector = [(b.clone(), BigInt::from(1))].into();
        let ef = classical_apply(Gen::E(1), &classical_apply(Gen::F(1), &v));
        let fe = classical_apply(Gen::F(1), &classical_apply(Gen::E(1), &v));
        let diff =
            ef.get(&b).cloned().unwrap_or_default() - fe.get(&b).cloned().unwrap_or_default();
        assert_eq!(diff, BigInt::from(1));
    }
}
