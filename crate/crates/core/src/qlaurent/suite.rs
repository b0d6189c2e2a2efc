use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Signed;

use super::{qbinom, qint, LaurentPoly};
use crate::report::{Case, Report};

/// Quantum-integer and quantum-binomial identities:
///
/// - `[k'-1][k] - [k'][k-1] = [k'-k]` for `0 <= k, k' <= k_max`;
/// - `qbinom(n, k) = qbinom(n, n-k)`, bar invariance, nonnegative
///   coefficients, and the balanced Pascal rule
///   `qbinom(n, k) = q^-k qbinom(n-1, k) + q^(n-k) qbinom(n-1, k-1)`;
/// - at `q = 1`: `[n] -> n` and `qbinom(n, k) -> C(n, k)`, for `n <= n_max`.
pub fn check_qidentities(k_max: i64, n_max: u32) -> Report {
    let mut report = Report::new(
        "qidentities",
        serde_json::json!({"k_max": k_max, "n_max": n_max}),
    );
    for kp in 0..=k_max {
        for k in 0..=k_max {
            let lhs = &(&qint(kp - 1) * &qint(k)) - &(&qint(kp) * &qint(k - 1));
            let rhs = qint(kp - k);
            report.push(Case::check(
                format!("qint-identity/k'={kp},k={k}"),
                lhs == rhs,
                format!("lhs = {lhs}, rhs = {rhs}"),
            ));
        }
    }
    for n in 0..=n_max {
        let at_one = qint(i64::from(n)).eval_at_one();
        report.push(Case::check(
            format!("q=1/qint/n={n}"),
            at_one == BigInt::from(n),
            format!("[{n}](1) = {at_one}"),
        ));
        for k in 0..=n {
            let b = qbinom(n, k);
            let c = binomial(BigInt::from(n), BigInt::from(k));
            report.push(Case::check(
                format!("q=1/qbinom/n={n},k={k}"),
                b.eval_at_one() == c,
                format!("{b} at q=1, C(n,k) = {c}"),
            ));
            report.push(Case::check(
                format!("symmetry/n={n},k={k}"),
                b == qbinom(n, n - k) && b == b.bar() && b.terms().all(|(_, c)| !c.is_negative()),
                b.to_string(),
            ));
            if n > 0 {
                let mut pascal = LaurentPoly::zero();
                if k < n {
                    pascal = &pascal + &qbinom(n - 1, k).shift(-i64::from(k));
                }
                if k > 0 {
                    pascal = &pascal + &qbinom(n - 1, k - 1).shift(i64::from(n - k));
                }
                report.push(Case::check(
                    format!("pascal/n={n},k={k}"),
                    b == pascal,
                    format!("{b} vs {pascal}"),
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = check_qidentities(10, 10);
        assert!(r.all_passed(), "{:?}", r.failed_cases().next());
        assert_eq!(
            r.cases
                .iter()
                .filter(|c| c.name.starts_with("qint-identity"))
                .count(),
            121
        );
    }
}
