use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Lattice, MvError, PolyMatrix, QMatrix, QPoly};

fn offsets(mu: &[usize]) -> Vec<usize> {
    mu.iter()
        .scan(0, |acc, &x| {
            let o = *acc;
            *acc += x;
            Some(o)
        })
        .collect()
}

/// Free positions `(row, col)` of the block pattern, block by block in
/// row-major order, top to bottom within a block.
///
/// Block `(i, j)` is free in its last column, in every row when `i = j`
/// and in rows `< min(mu_i, mu_j)` otherwise.
pub fn free_positions(mu: &[usize]) -> Vec<(usize, usize)> {
    let off = offsets(mu);
    let mut out = Vec::new();
    for (i, &mi) in mu.iter().enumerate() {
        for (j, &mj) in mu.iter().enumerate() {
            if mj == 0 {
                continue;
            }
            let rows = if i == j { mi } else { mi.min(mj) };
            out.extend((0..rows).map(|r| (off[i] + r, off[j] + mj - 1)));
        }
    }
    out
}

/// `Σ_{i,j} min(mu_i, mu_j)`.
pub fn num_free(mu: &[usize]) -> usize {
    mu.iter()
        .flat_map(|a| mu.iter().map(move |b| a.min(b)))
        .sum()
}

/// A `k x k` rational matrix with the block shape of the chart for `mu`:
/// diagonal blocks are companion-like (1s on the subdiagonal), every other
/// nonzero entry sits in a free position of [`free_positions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVMatrix {
    mu: Vec<usize>,
    entries: QMatrix,
}

impl MVMatrix {
    pub fn new(mu: Vec<usize>, entries: QMatrix) -> Result<Self, MvError> {
        let k: usize = mu.iter().sum();
        let bad = |why: String| MvError::Pattern {
            mu: mu.clone(),
            why,
        };
        if entries.nrows() != k || entries.ncols() != k {
            return Err(bad(format!(
                "expected {k}x{k}, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let mut free = vec![vec![false; k]; k];
        for (r, c) in free_positions(&mu) {
            free[r][c] = true;
        }
        let mut ones = vec![vec![false; k]; k];
        for (&o, &mi) in offsets(&mu).iter().zip(&mu) {
            for r in 1..mi {
                ones[o + r][o + r - 1] = true;
            }
        }
        for r in 0..k {
            for c in 0..k {
                let x = entries.get(r, c);
                if ones[r][c] && !x.is_one() {
                    return Err(bad(format!("entry ({r},{c}) must be 1")));
                }
                if !ones[r][c] && !free[r][c] && !x.is_zero() {
                    return Err(bad(format!("entry ({r},{c}) must be 0")));
                }
            }
        }
        Ok(Self { mu, entries })
    }

    /// Fills the free positions, in [`free_positions`] order.
    pub fn from_free(mu: Vec<usize>, free: Vec<BigRational>) -> Result<Self, MvError> {
        let pos = free_positions(&mu);
        if pos.len() != free.len() {
            return Err(MvError::Pattern {
                mu,
                why: format!("expected {} free entries, got {}", pos.len(), free.len()),
            });
        }
        let k: usize = mu.iter().sum();
        let mut a = QMatrix::zeros(k, k);
        for (&o, &mi) in offsets(&mu).iter().zip(&mu) {
            for r in 1..mi {
                a.set(o + r, o + r - 1, BigRational::one());
            }
        }
        for ((r, c), x) in pos.into_iter().zip(free) {
            a.set(r, c, x);
        }
        Ok(Self { mu, entries: a })
    }

    /// Free entries `n/d` with `d ∈ {1,2,3}` and `|n/d| <= 3`.
    pub fn random(mu: Vec<usize>, rng: &mut impl Rng) -> Self {
        let free = (0..num_free(&mu))
            .map(|_| {
                let d: i64 = rng.gen_range(1..=3);
                let n: i64 = rng.gen_range(-3 * d..=3 * d);
                BigRational::new(BigInt::from(n), BigInt::from(d))
            })
            .collect();
        Self::from_free(mu, free).expect("free count matches")
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn entries(&self) -> &QMatrix {
        &self.entries
    }

    pub fn free_coordinates(&self) -> Vec<BigRational> {
        free_positions(&self.mu)
            .into_iter()
            .map(|(r, c)| self.entries.get(r, c).clone())
            .collect()
    }

    /// `{"mu": [...], "free": ["p/q", ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mu": self.mu,
            "free": self.free_coordinates().iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

/// `L = span(v_j)`, `v_j = z^{mu_j} e_j - Σ_i p_ij(z) e_i`, where `p_ij` has
/// the last column of block `A_ij` as coefficients.
pub fn mv_to_lattice(a: &MVMatrix) -> Lattice {
    let mu = &a.mu;
    let m = mu.len();
    let off = offsets(mu);
    let cols = (0..m)
        .map(|j| {
            let mut v: Vec<QPoly> = vec![QPoly::zero(); m];
            v[j] = QPoly::monomial(BigRational::one(), mu[j]);
            if mu[j] > 0 {
                let last = off[j] + mu[j] - 1;
                for i in 0..m {
                    let p = QPoly::from_coeffs(
                        (0..mu[i])
                            .map(|r| a.entries.get(off[i] + r, last).clone())
                            .collect(),
                    );
                    v[i] = &v[i] - &p;
                }
            }
            v
        })
        .collect();
    Lattice::new(PolyMatrix::from_columns(cols))
        .expect("leading terms z^mu_j make the generators nonsingular")
}

/// Matrix of `z` on `L_0 / L` in the basis `[z^t e_i]`, `t < mu_i`. Fails
/// with `NotInChart` if those classes are not a basis or the result leaves
/// the block pattern.
pub fn lattice_to_mv(mu: &[usize], l: &Lattice) -> Result<MVMatrix, MvError> {
    let not_in = || MvError::NotInChart(mu.to_vec());
    let k: usize = mu.iter().sum();
    if mu.len() != l.m() || l.codim() != k {
        return Err(not_in());
    }
    let (_, zm) = l.quotient_action();
    let mut p = QMatrix::zeros(k, k);
    let mut col = 0;
    for (i, &mi) in mu.iter().enumerate() {
        for t in 0..mi {
            let mut v = vec![QPoly::zero(); l.m()];
            v[i] = QPoly::monomial(BigRational::one(), t);
            for (row, x) in l.quotient_coords(&v).into_iter().enumerate() {
                p.set(row, col, x);
            }
            col += 1;
        }
    }
    let p_inv = p.inverse().ok_or_else(not_in)?;
    let a = p_inv.mul(&zm).mul(&p);
    MVMatrix::new(mu.to_vec(), a).map_err(|_| not_in())
}

/// Membership in the chart for `mu`.
pub fn in_x_mu(mu: &[usize], l: &Lattice) -> bool {
    lattice_to_mv(mu, l).is_ok()
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat;
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn pattern_for_three_two() {
        let mu = vec![3, 2];
        let free: Vec<BigRational> = (1..=9).map(rat).collect();
        let a = MVMatrix::from_free(mu.clone(), free).unwrap();
        let shape: Vec<Vec<bool>> = a
            .entries()
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| !x.is_zero()).collect())
            .collect();
        let expected = [
            [false, false, true, false, true],
            [true, false, true, false, true],
            [false, true, true, false, false],
            [false, false, true, false, true],
            [false, false, true, true, true],
        ];
        for (r, row) in expected.iter().enumerate() {
            assert_eq!(shape[r], row.to_vec(), "row {r}");
        }
        assert_eq!(num_free(&mu), 9);
        let l = mv_to_lattice(&a);
        let degs: Vec<_> = (0..2)
            .map(|j| {
                (0..2)
                    .filter_map(|i| l.gens().get(i, j).degree())
                    .max()
                    .unwrap()
            })
            .collect();
        assert_eq!(degs, vec![3, 2]);
    }

    #[test]
    fn pattern_violation() {
        let mut a = MVMatrix::from_free(vec![3, 2], vec![rat(0); 9])
            .unwrap()
            .entries()
            .clone();
        a.set(2, 4, rat(1));
        assert!(matches!(
            MVMatrix::new(vec![3, 2], a),
            Err(MvError::Pattern { .. })
        ));
    }

    #[test]
    fn rank_one_chart() {
        let a = MVMatrix::from_free(vec![1], vec![rat(4)]).unwrap();
        let l = mv_to_lattice(&a);
        assert_eq!(l, Lattice::diag(vec![p(&[-4, 1])]).unwrap());
        assert_eq!(lattice_to_mv(&[1], &l).unwrap(), a);
    }

    #[test]
    fn fixed_point_lattice() {
        let a = MVMatrix::from_free(vec![2, 1], vec![rat(0); 5]).unwrap();
        let l = mv_to_lattice(&a);
        assert_eq!(l, Lattice::diag(vec![p(&[0, 0, 1]), p(&[0, 1])]).unwrap());
        assert!(lattice_to_mv(&[2, 1], &l)
            .unwrap()
            .free_coordinates()
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn outside_chart() {
        let l = Lattice::diag(vec![p(&[0, 0, 1]), p(&[1])]).unwrap();
        assert_eq!(
            lattice_to_mv(&[1, 1], &l),
            Err(MvError::NotInChart(vec![1, 1]))
        );
        assert!(!in_x_mu(&[1, 1], &l));
        assert!(in_x_mu(&[2, 0], &l));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn round_trip(mu in prop::collection::vec(0usize..=3, 1..=3), seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = MVMatrix::random(mu.clone(), &mut rng);
            let l = mv_to_lattice(&a);
            prop_assert_eq!(l.codim(), mu.iter().sum::<usize>());
            prop_assert_eq!(l.det_degree(), l.codim());
            prop_assert_eq!(lattice_to_mv(&mu, &l).unwrap(), a.clone());
            prop_assert_eq!(l.ch(), a.entries().charpoly());
            prop_assert_eq!(a.free_coordinates().len(), num_free(&mu));
        }
    }
}
