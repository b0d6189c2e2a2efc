use num_bigint::BigInt;
use rayon::prelude::*;

use super::classical::{classical_apply, ClassicalVector};
use super::{Flavor, Gen, HoweError, HoweModule, Letter, ModuleVector};
use crate::qlaurent::{qint, LaurentPoly};
use crate::report::{Case, Report};
use crate::weights::{simple_pairing, Weight};

/// Verifies the defining relations on every weight space of total degree
/// `<= n_max`. See [`HoweModule::check_relations`].
pub fn check_relations(n: usize, m: usize, n_max: u32, flavor: Flavor) -> Report {
    HoweModule::new(flavor, n, m).check_relations(n_max)
}

/// Outcome of one relation over a whole weight space: `Ok(())` or the first
/// offending basis vector.
type Verdict = Result<(), String>;

impl HoweModule {
    /// Relation suite over all weights `k` with `|k| <= n_max`, one case per
    /// (relation, weight, indices):
    ///
    /// - `ef`: `E_i F_i - F_i E_i = [<k, alpha_i>]`
    /// - `commute`: `E_i F_j = F_j E_i` for `i != j`
    /// - `square-e`, `square-f`: `X_i^2 = [2] X_i^(2)`
    /// - `serre-e`, `serre-f`: `X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 = 0`, `|i-j| = 1`
    /// - `k-conj`: `K_i E_j K_i^-1 = q^(a_ij) E_j` and `K_i K_i^-1 = 1`
    /// - `divided`: `E_i^(r)`, `F_i^(r)` integral for `r <= 3`
    /// - `classical`: at `q = 1`, `E_i`, `F_i` match the classical action and
    ///   `[E_i, F_i] = <k, alpha_i>`
    pub fn check_relations(&self, n_max: u32) -> Report {
        let mut report = Report::new(
            "relations",
            serde_json::json!({
                "n": self.n,
                "m": self.m,
                "N_max": n_max,
                "flavor": self.flavor,
            }),
        );
        let weights: Vec<Weight> = (0..=n_max)
            .flat_map(|total| Weight::compositions(self.n, total))
            .filter(|k| self.dim(k) > 0)
            .collect();
        let cases: Vec<Vec<Case>> = weights.par_iter().map(|k| self.cases_at(k)).collect();
        report.extend(cases.into_iter().flatten());
        report
    }

    fn cases_at(&self, k: &Weight) -> Vec<Case> {
        let basis: Vec<ModuleVector> = self.basis(k).iter().map(ModuleVector::basis).collect();
        let mut out = Vec::new();
        let mut record = |name: String, verdict: Verdict, ok_detail: String| {
            out.push(match verdict {
                Ok(()) => Case::pass(name, ok_detail),
                Err(why) => Case::fail(name, why),
            });
        };
        let dim = basis.len();
        let over_basis = |f: &dyn Fn(&ModuleVector) -> Result<bool, HoweError>| -> Verdict {
            for v in &basis {
                let at = v
                    .coords()
                    .keys()
                    .next()
                    .map_or_else(String::new, ToString::to_string);
                match f(v) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("fails on {at}")),
                    Err(e) => return Err(format!("{e} on {at}")),
                }
            }
            Ok(())
        };
        let word = |w: &[Letter], v: &ModuleVector| self.apply_word(w, v);
        let two = qint(2);

        for i in 1..self.n {
            let lam = simple_pairing(k, i);
            let verdict = over_basis(&|v| {
                let lhs = word(&[Letter::e(i), Letter::f(i)], v)?
                    .minus(&word(&[Letter::f(i), Letter::e(i)], v)?);
                Ok(lhs == v.scale(&qint(lam)))
            });
            record(
                format!("ef/k={k}/i={i}"),
                verdict,
                format!("dim {dim}, EF-FE = [{lam}]"),
            );

            for j in (1..self.n).filter(|&j| j != i) {
                let verdict = over_basis(&|v| {
                    Ok(word(&[Letter::e(i), Letter::f(j)], v)?
                        == word(&[Letter::f(j), Letter::e(i)], v)?)
                });
                record(
                    format!("commute/k={k}/i={i},j={j}"),
                    verdict,
                    format!("dim {dim}"),
                );
            }

            for (tag, g) in [("e", Gen::E(i)), ("f", Gen::F(i))] {
                let verdict = over_basis(&|v| {
                    let sq = word(&[g.into(), g.into()], v)?;
                    let dp = word(&[Letter::new(g, 2)], v)?;
                    Ok(sq == dp.scale(&two))
                });
                record(
                    format!("square-{tag}/k={k}/i={i}"),
                    verdict,
                    format!("dim {dim}"),
                );
            }

            for j in [i.wrapping_sub(1), i + 1] {
                if j == 0 || j >= self.n {
                    continue;
                }
                for (tag, gi, gj) in [("e", Gen::E(i), Gen::E(j)), ("f", Gen::F(i), Gen::F(j))] {
                    let (xi, xj) = (Letter::from(gi), Letter::from(gj));
                    let verdict = over_basis(&|v| {
                        let a = word(&[xi, xi, xj], v)?;
                        let b = word(&[xi, xj, xi], v)?.scale(&two);
                        let c = word(&[xj, xi, xi], v)?;
                        Ok(a.minus(&b).plus(&c).is_zero())
                    });
                    record(
                        format!("serre-{tag}/k={k}/i={i},j={j}"),
                        verdict,
                        format!("dim {dim}"),
                    );
                }
            }

            for j in 1..self.n {
                let a_ij = cartan(i, j);
                let verdict = over_basis(&|v| {
                    let lhs = word(&[Gen::K(i).into(), Letter::e(j), Gen::KInv(i).into()], v)?;
                    let rhs = word(&[Letter::e(j)], v)?.scale(&LaurentPoly::monomial(1, a_ij));
                    let unit = word(&[Gen::K(i).into(), Gen::KInv(i).into()], v)?;
                    Ok(lhs == rhs && unit == *v)
                });
                record(
                    format!("k-conj/k={k}/i={i},j={j}"),
                    verdict,
                    format!("dim {dim}"),
                );
            }

            let verdict = over_basis(&|v| {
                for r in 0..=3 {
                    self.divided_power(Gen::E(i), r, v)?;
                    self.divided_power(Gen::F(i), r, v)?;
                }
                Ok(true)
            });
            record(
                format!("divided/k={k}/i={i}"),
                verdict,
                "r <= 3".to_string(),
            );

            let verdict = over_basis(&|v| Ok(self.classical_agrees(i, lam, v)));
            record(
                format!("classical/k={k}/i={i}"),
                verdict,
                format!("[E,F] = {lam} at q=1"),
            );
        }
        out
    }

    fn classical_agrees(&self, i: usize, lam: i64, v: &ModuleVector) -> bool {
        let at_one = |w: &ModuleVector| -> ClassicalVector {
            w.coords()
                .iter()
                .map(|(b, c)| (b.clone(), c.eval_at_one()))
                .filter(|(_, c)| *c != BigInt::from(0))
                .collect()
        };
        let cv = at_one(v);
        for g in [Gen::E(i), Gen::F(i)] {
            let quantum = self.apply_gen_unchecked(g, v);
            if at_one(&quantum) != classical_apply(g, &cv) {
                return false;
            }
        }
        let ef = classical_apply(Gen::E(i), &classical_apply(Gen::F(i), &cv));
        let mut diff = classical_apply(Gen::F(i), &classical_apply(Gen::E(i), &cv));
        for c in diff.values_mut() {
            *c = -&*c;
        }
        for (b, c) in ef {
            *diff.entry(b).or_default() += c;
        }
        for (b, c) in &cv {
            *diff.entry(b.clone()).or_default() -= c * BigInt::from(lam);
        }
        diff.values().all(|c| *c == BigInt::from(0))
    }
}

/// Cartan matrix entry `<alpha_i, alpha_j>` of type A.
fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::howemod::Coproduct;

    #[test]
    fn small_cases_pass() {
        for (n, m, nmax, flavor) in [
            (2, 1, 2, Flavor::Sym),
            (3, 1, 1, Flavor::Sym),
            (2, 2, 2, Flavor::Skew),
            (3, 2, 3, Flavor::Sym),
            (3, 3, 3, Flavor::Skew),
        ] {
            let r = check_relations(n, m, nmax, flavor);
            let bad: Vec<_> = r.failed_cases().collect();
            assert!(bad.is_empty(), "n={n} m={m} {flavor}: {bad:?}");
            assert!(!r.cases.is_empty());
        }
    }

    #[test]
    fn ef_case_at_02_reports_qint_two() {
        let r = check_relations(2, 1, 2, Flavor::Sym);
        let case = r.cases.iter().find(|c| c.name == "ef/k=[0,2]/i=1").unwrap();
        assert!(case.passed());
        assert!(case.detail.contains("[2]"));
    }

    #[test]
    fn corrupted_coproduct_is_detected() {
        let r = HoweModule::new(Flavor::Sym, 2, 2)
            .with_coproduct(Coproduct::Corrupted)
            .check_relations(2);
        assert!(r.failed_cases().any(|c| c.name.starts_with("ef/")));
    }

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan(2, 2), 2);
        assert_eq!(cartan(2, 3), -1);
        assert_eq!(cartan(1, 3), 0);
    }
}
