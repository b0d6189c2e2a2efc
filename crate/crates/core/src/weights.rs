//! The `gl_n` weight lattice `Z^n`, simple roots, the standard pairing,
//! the symmetric-group action and weighted lengths.
//!
//! Simple roots are indexed `1..=n-1` as in the usual notation:
//! `alpha_i = (0, ..., -1, 1, ..., 0)` with the `-1` in position `i`.
//!
//! Permutations are one-line arrays; composition is `(v . w)(a) = v(w(a))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("rank mismatch: weight has {weight} entries, root needs {root}")]
    RankMismatch { weight: usize, root: usize },
    #[error("simple root index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0:?} is not a permutation of 1..=n")]
    NotPermutation(Vec<usize>),
    #[error("cannot parse weight from {0:?}")]
    Parse(String),
}

/// A `gl_n` weight `(k_1, ..., k_n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        Self(entries.into())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `k_i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// All entries nonnegative.
    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    /// `k + alpha`.
    pub fn add_root(&self, alpha: &RootVector) -> Result<Weight, WeightError> {
        let v = alpha.to_weight_vector(self.rank())?;
        Ok(Weight(self.0.iter().zip(v).map(|(a, b)| a + b).collect()))
    }

    /// `k + c * alpha_i`.
    pub fn add_simple(&self, i: usize, c: i64) -> Weight {
        let mut out = self.0.clone();
        out[i - 1] -= c;
        out[i] += c;
        Weight(out)
    }

    /// All weights in `N^n` with entry sum exactly `total`, in lexicographic
    /// order.
    pub fn compositions(n: usize, total: u32) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fn rec(pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            let n = cur.len();
            if pos + 1 == n {
                cur[pos] = left;
                out.push(Weight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
        }
        if n == 0 {
            if total == 0 {
                out.push(Weight(Vec::new()));
            }
            return out;
        }
        rec(0, i64::from(total), &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

impl FromStr for Weight {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, WeightError> {
        let err = || WeightError::Parse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

/// A root-lattice element `sum_i a_i alpha_i`, stored by its coefficients
/// `(a_1, ..., a_{n-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n.saturating_sub(1)])
    }

    /// The simple root `alpha_i` of `gl_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        let mut v = vec![0; n - 1];
        v[i - 1] = 1;
        Self(v)
    }

    /// `alpha_0 = -(alpha_1 + ... + alpha_{n-1})`.
    pub fn alpha_zero(n: usize) -> Self {
        Self(vec![-1; n - 1])
    }

    /// The ambient rank `n`.
    pub fn rank(&self) -> usize {
        self.0.len() + 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Expansion in `Z^n`.
    pub fn to_weight_vector(&self, n: usize) -> Result<Vec<i64>, WeightError> {
        if self.rank() != n {
            return Err(WeightError::RankMismatch {
                weight: n,
                root: self.rank(),
            });
        }
        let mut v = vec![0i64; n];
        for (idx, a) in self.0.iter().enumerate() {
            v[idx] -= a;
            v[idx + 1] += a;
        }
        Ok(v)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }

    /// `<alpha, beta>` through the `Z^n` expansions.
    pub fn pairing(&self, other: &RootVector) -> i64 {
        let n = self.rank();
        let a = self.to_weight_vector(n).expect("same rank");
        let b = other.to_weight_vector(n).expect("same rank");
        a.iter().zip(&b).map(|(x, y)| x * y).sum()
    }

    /// `s_i . alpha = alpha - <alpha, alpha_i> alpha_i`.
    pub fn reflect(&self, i: usize) -> RootVector {
        let n = self.rank();
        let c = self.pairing(&RootVector::simple(i, n));
        let mut out = self.0.clone();
        out[i - 1] -= c;
        RootVector(out)
    }
}

/// `<k, alpha>`, the dot product of `k` with the `Z^n` expansion of `alpha`.
pub fn pairing(k: &Weight, alpha: &RootVector) -> Result<i64, WeightError> {
    let v = alpha.to_weight_vector(k.rank())?;
    Ok(k.0.iter().zip(v).map(|(a, b)| a * b).sum())
}

/// `<k, alpha_i> = -k_i + k_{i+1}`.
pub fn simple_pairing(k: &Weight, i: usize) -> i64 {
    k.get(i + 1) - k.get(i)
}

fn check_index(i: usize, n: usize) -> Result<(), WeightError> {
    if i == 0 || i >= n {
        return Err(WeightError::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `s_i . k`: swaps `k_i` and `k_{i+1}`.
pub fn weyl_act(i: usize, k: &Weight) -> Result<Weight, WeightError> {
    check_index(i, k.rank())?;
    let mut out = k.0.clone();
    out.swap(i - 1, i);
    Ok(Weight(out))
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// From one-line notation `(w(1), ..., w(n))`.
    pub fn from_one_line(images: impl Into<Vec<usize>>) -> Result<Self, WeightError> {
        let images = images.into();
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(WeightError::NotPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Self(images))
    }

    /// The simple transposition `s_i` of `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, WeightError> {
        check_index(i, n)?;
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Ok(Self(v))
    }

    /// `s_{i_1} s_{i_2} ... s_{i_r}` for the word `[i_1, ..., i_r]`.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self, WeightError> {
        word.iter().try_fold(Self::identity(n), |acc, &i| {
            Ok(acc.compose(&Self::simple(i, n)?))
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(a)`, 1-based.
    pub fn apply(&self, a: usize) -> usize {
        self.0[a - 1]
    }

    /// `self . other`, i.e. `a -> self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&a| self.0[a - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (a, &wa) in self.0.iter().enumerate() {
            inv[wa - 1] = a + 1;
        }
        Permutation(inv)
    }

    /// Pairs `a < b` with `w(a) > w(b)`, 1-based.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.0.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.0[a] > self.0[b] {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        self.inversions().len()
    }
}

/// `l_k(w) = sum over inversions (a, b) of w of k_a k_b`.
///
/// For `w = s_i` this is `k_i k_{i+1}`; for `k = (1, ..., 1)` it is the
/// Coxeter length.
pub fn weighted_length(w: &Permutation, k: &Weight) -> Result<u64, WeightError> {
    if w.len() != k.rank() {
        return Err(WeightError::RankMismatch {
            weight: k.rank(),
            root: w.len(),
        });
    }
    Ok(w.inversions()
        .into_iter()
        .map(|(a, b)| (k.get(a) * k.get(b)) as u64)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&w(&[0, 2]), &RootVector::simple(1, 2)).unwrap(), 2);
        assert_eq!(
            pairing(&w(&[1, 2, 3]), &RootVector::alpha_zero(3)).unwrap(),
            -2
        );
        assert_eq!(pairing(&w(&[7, -3, 4]), &RootVector::zero(3)).unwrap(), 0);
        assert!(matches!(
            pairing(&w(&[1, 2]), &RootVector::simple(1, 3)),
            Err(WeightError::RankMismatch { .. })
        ));
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_act(1, &w(&[2, 5])).unwrap(), w(&[5, 2]));
        assert_eq!(weyl_act(2, &w(&[1, 1, 1])).unwrap(), w(&[1, 1, 1]));
        let k = w(&[3, -1, 4]);
        assert_eq!(weyl_act(1, &weyl_act(1, &k).unwrap()).unwrap(), k);
        assert!(weyl_act(0, &k).is_err());
        assert!(weyl_act(3, &k).is_err());
    }

    #[test]
    fn weighted_length_examples() {
        let k = w(&[2, 1, 3]);
        let s2 = Permutation::simple(2, 3).unwrap();
        assert_eq!(weighted_length(&s2, &k).unwrap(), 3);
        let p = Permutation::from_one_line([2, 3, 1]).unwrap();
        assert_eq!(p.inversions(), vec![(1, 3), (2, 3)]);
        assert_eq!(weighted_length(&p, &k).unwrap(), 9);
        let ones = w(&[1, 1, 1, 1]);
        for word in [&[1usize, 2, 1][..], &[3, 2, 1, 3], &[]] {
            let p = Permutation::from_word(word, 4).unwrap();
            assert_eq!(weighted_length(&p, &ones).unwrap(), p.length() as u64);
        }
    }

    #[test]
    fn weight_text_round_trip() {
        assert_eq!(w(&[2, 1, 3]).to_string(), "[2,1,3]");
        assert_eq!("[2, -1,3]".parse::<Weight>().unwrap(), w(&[2, -1, 3]));
        assert!("2,1".parse::<Weight>().is_err());
    }

    #[test]
    fn compositions_are_complete() {
        let all = Weight::compositions(3, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn not_a_permutation() {
        assert!(Permutation::from_one_line([1, 1, 2]).is_err());
        assert!(Permutation::from_one_line([0, 1]).is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(v).unwrap())
    }

    proptest! {
        #[test]
        fn reflection_negates_pairing(k in prop::collection::vec(-6i64..=6, 4), i in 1usize..4) {
            let k = Weight(k);
            let a = RootVector::simple(i, 4);
            let sk = weyl_act(i, &k).unwrap();
            prop_assert_eq!(pairing(&k, &a).unwrap() + pairing(&sk, &a).unwrap(), 0);
        }

        #[test]
        fn alpha_zero_is_level_zero(k in prop::collection::vec(-6i64..=6, 5)) {
            let k = Weight(k);
            let total: i64 = (1..5).map(|i| pairing(&k, &RootVector::simple(i, 5)).unwrap()).sum();
            prop_assert_eq!(pairing(&k, &RootVector::alpha_zero(5)).unwrap(), -total);
        }

        #[test]
        fn weighted_length_is_additive_on_reduced_products(
            w0 in arb_perm(4), i in 1usize..4, k in prop::collection::vec(0i64..=4, 4)
        ) {
            // w = s_i . w0 with l(w) = l(w0) + 1; s_i then acts on the
            // weight w0^-1 . k, so it contributes k'_i k'_{i+1} for k' = w0 . k
            let si = Permutation::simple(i, 4).unwrap();
            let w = si.compose(&w0);
            prop_assume!(w.length() == w0.length() + 1);
            let k = Weight(k);
            // k'_a = k_{w0^-1(a)}
            let inv = w0.inverse();
            let kp: Vec<i64> = (1..=4).map(|a| k.get(inv.apply(a))).collect();
            let step = (kp[i - 1] * kp[i]) as u64;
            prop_assert_eq!(
                weighted_length(&w, &k).unwrap(),
                step + weighted_length(&w0, &k).unwrap()
            );
        }

        #[test]
        fn composition_is_associative(a in arb_perm(5), b in arb_perm(5), c in arb_perm(5)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert_eq!(a.compose(&a.inverse()), Permutation::identity(5));
        }
    }
}
