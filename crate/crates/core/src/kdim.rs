//! Dimension counts for the weight spaces and the torus-fixed lattices.

use num_integer::binomial;
use rayon::prelude::*;

use crate::howemod::{enumerate_basis, Flavor};
use crate::report::{Case, Report};
use crate::weights::Weight;

/// The fixed points `span(z^{mu_j} e_j)` of codimension `k` in rank `m`,
/// one per `mu ∈ N^m` with `Σ mu = k`.
pub fn fixed_points(m: usize, k: usize) -> Vec<Vec<usize>> {
    Weight::compositions(m, k as u32)
        .into_iter()
        .map(|w| w.entries().iter().map(|&x| x as usize).collect())
        .collect()
}

/// Enumerated count of [`fixed_points`].
///
/// # Panics
///
/// Panics if the count disagrees with `C(m+k-1, k)`.
pub fn count_fixed_points(m: usize, k: usize) -> u64 {
    assert!(m >= 1, "rank must be positive");
    let n = fixed_points(m, k).len() as u64;
    assert_eq!(
        n,
        binomial((m + k - 1) as u64, k as u64),
        "fixed-point count for m={m}, k={k}"
    );
    n
}

/// `Π C(m+k_i-1, k_i)` for sym, `Π C(m, k_i)` for skew; 0 on a negative part.
pub fn weight_dim(flavor: Flavor, k: &Weight, m: usize) -> u64 {
    k.entries()
        .iter()
        .map(|&ki| {
            if ki < 0 {
                return 0;
            }
            let (ki, m) = (ki as u64, m as u64);
            match flavor {
                Flavor::Sym => binomial(m + ki - 1, ki),
                Flavor::Skew if ki > m => 0,
                Flavor::Skew => binomial(m, ki),
            }
        })
        .product()
}

/// `dim Sym^N(C^n ⊗ C^m)` or `dim Λ^N(C^n ⊗ C^m)`.
pub fn total_dim(flavor: Flavor, n: usize, m: usize, total: usize) -> u64 {
    let (nm, total) = ((n * m) as u64, total as u64);
    match flavor {
        Flavor::Sym if nm == 0 => u64::from(total == 0),
        Flavor::Sym => binomial(nm + total - 1, total),
        Flavor::Skew if total > nm => 0,
        Flavor::Skew => binomial(nm, total),
    }
}

/// The weight decomposition of the total space: `Σ_k weight_dim = total_dim`
/// over compositions `k` of `total` into `n` parts.
pub fn total_dim_check(n: usize, m: usize, total: usize) -> Report {
    let mut report = Report::new("dims", serde_json::json!({"n": n, "m": m, "N": total}));
    report.extend(total_cases(n, m, total));
    report
}

fn total_cases(n: usize, m: usize, total: usize) -> Vec<Case> {
    let weights = Weight::compositions(n, total as u32);
    Flavor::BOTH
        .iter()
        .map(|&f| {
            let sum: u64 = weights.iter().map(|k| weight_dim(f, k, m)).sum();
            let want = total_dim(f, n, m, total);
            Case::check(
                format!("total/{f}/n={n},m={m},N={total}"),
                sum == want,
                format!(
                    "sum over {} weights = {sum}, closed form = {want}",
                    weights.len()
                ),
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimsConfig {
    pub n_max: usize,
    pub m_max: usize,
    pub total_max: usize,
    pub fixed_m_max: usize,
    pub fixed_k_max: usize,
    /// Basis enumeration is checked against [`weight_dim`] up to this total.
    pub basis_total_max: usize,
}

impl Default for DimsConfig {
    fn default() -> Self {
        Self {
            n_max: 4,
            m_max: 4,
            total_max: 8,
            fixed_m_max: 6,
            fixed_k_max: 8,
            basis_total_max: 8,
        }
    }
}

pub fn check_dims(cfg: &DimsConfig) -> Report {
    let mut report = Report::new(
        "dims",
        serde_json::json!({
            "n_max": cfg.n_max,
            "m_max": cfg.m_max,
            "N_max": cfg.total_max,
            "fixed_m_max": cfg.fixed_m_max,
            "fixed_k_max": cfg.fixed_k_max,
            "basis_N_max": cfg.basis_total_max,
        }),
    );
    for m in 1..=cfg.fixed_m_max {
        for k in 0..=cfg.fixed_k_max {
            let got = fixed_points(m, k).len() as u64;
            let want = binomial((m + k - 1) as u64, k as u64);
            report.push(Case::check(
                format!("fixed-points/m={m},k={k}"),
                got == want,
                format!("enumerated {got}, C(m+k-1,k) = {want}"),
            ));
        }
    }
    let mut triples = Vec::new();
    for n in 1..=cfg.n_max {
        for m in 1..=cfg.m_max {
            for total in 0..=cfg.total_max {
                triples.push((n, m, total));
            }
        }
    }
    let cases: Vec<Vec<Case>> = triples
        .par_iter()
        .map(|&(n, m, total)| {
            let mut out = total_cases(n, m, total);
            if total <= cfg.basis_total_max {
                for k in Weight::compositions(n, total as u32) {
                    for f in Flavor::BOTH {
                        let got = enumerate_basis(f, &k, m).len() as u64;
                        let want = weight_dim(f, &k, m);
                        out.push(Case::check(
                            format!("basis/{f}/k={k}/m={m}"),
                            got == want,
                            format!("enumerated {got}, product formula {want}"),
                        ));
                    }
                }
            }
            out
        })
        .collect();
    report.extend(cases.into_iter().flatten());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fixed_point_examples() {
        assert_eq!(count_fixed_points(2, 2), 3);
        assert_eq!(count_fixed_points(3, 2), 6);
        for k in 0..6 {
            assert_eq!(count_fixed_points(1, k), 1);
        }
        let mut pts = fixed_points(3, 2);
        pts.sort();
        assert_eq!(
            pts,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0]
            ]
        );
    }

    #[test]
    fn weight_dim_examples() {
        assert_eq!(weight_dim(Flavor::Sym, &Weight::new(vec![1, 1]), 2), 4);
        assert_eq!(weight_dim(Flavor::Skew, &Weight::new(vec![3]), 2), 0);
        for m in 1..5 {
            for k in 0..6 {
                assert_eq!(
                    weight_dim(Flavor::Sym, &Weight::new(vec![k as i64]), m),
                    count_fixed_points(m, k)
                );
            }
        }
    }

    #[test]
    fn total_examples() {
        let r = total_dim_check(2, 1, 2);
        assert!(r.all_passed());
        assert_eq!(total_dim(Flavor::Sym, 2, 1, 2), 3);
        assert_eq!(total_dim(Flavor::Sym, 2, 2, 2), 10);
        assert_eq!(
            Weight::compositions(2, 2)
                .iter()
                .map(|k| weight_dim(Flavor::Sym, k, 2))
                .collect::<Vec<_>>(),
            vec![3, 4, 3]
        );
        assert!(total_dim_check(1, 3, 4).all_passed());
    }

    #[test]
    fn small_suite() {
        let cfg = DimsConfig {
            n_max: 3,
            m_max: 2,
            total_max: 4,
            fixed_m_max: 3,
            fixed_k_max: 4,
            basis_total_max: 3,
        };
        let r = check_dims(&cfg);
        assert!(r.all_passed());
        assert!(r.cases.iter().any(|c| c.name == "fixed-points/m=2,k=2"));
    }

    proptest! {
        #[test]
        fn basis_length_matches(k in prop::collection::vec(0i64..=3, 1..=3), m in 1usize..=3) {
            let k = Weight::new(k);
            for f in Flavor::BOTH {
                prop_assert_eq!(enumerate_basis(f, &k, m).len() as u64, weight_dim(f, &k, m));
            }
        }
    }
}
