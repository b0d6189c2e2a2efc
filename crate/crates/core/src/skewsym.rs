//! Gluing the symmetric and skew Howe modules along the weight `(1^n)`,
//! where both are `(C^m)^{⊗n}`.

use rayon::prelude::*;
use thiserror::Error;

use crate::howemod::{
    enumerate_basis, BasisElement, Coproduct, Flavor, HoweError, HoweModule, Letter, OperatorBlock,
};
use crate::qlaurent::{qint, RatFun};
use crate::report::{Case, Report};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewSymError {
    #[error("bases are only identified at the weight (1^n), got {0}")]
    NotUnitWeight(Weight),
    #[error(transparent)]
    Howe(#[from] HoweError),
}

fn unit_weight(n: usize) -> Weight {
    Weight::new(vec![1; n])
}

/// Pairs `(sym, skew)` of basis elements with the same matrix. At `(1^n)`
/// every column has a single 1, so both sides enumerate the same matrices.
pub fn identify_bases(
    k: &Weight,
    m: usize,
) -> Result<Vec<(BasisElement, BasisElement)>, SkewSymError> {
    if k.entries().iter().any(|&x| x != 1) {
        return Err(SkewSymError::NotUnitWeight(k.clone()));
    }
    let sym = enumerate_basis(Flavor::Sym, k, m);
    let skew = enumerate_basis(Flavor::Skew, k, m);
    assert_eq!(sym.len(), skew.len(), "sym and skew disagree at (1^n)");
    Ok(sym.into_iter().zip(skew).collect())
}

/// `E_i F_i` on `(1^n)` for one flavor.
pub fn ef_block(
    flavor: Flavor,
    n: usize,
    m: usize,
    i: usize,
    coproduct: Coproduct,
) -> Result<OperatorBlock, HoweError> {
    HoweModule::new(flavor, n, m)
        .with_coproduct(coproduct)
        .operator_block(&[Letter::e(i), Letter::f(i)], &unit_weight(n))
}

fn sigma(b: &OperatorBlock) -> Vec<Vec<RatFun>> {
    b.rows()
        .iter()
        .map(|r| r.iter().map(RatFun::substitute_neg_inv).collect())
        .collect()
}

/// `lhs - rhs == [2] id`, entrywise.
fn is_two_identity(lhs: &[Vec<RatFun>], rhs: &[Vec<RatFun>]) -> bool {
    let two = RatFun::from(qint(2));
    lhs.len() == rhs.len()
        && lhs.iter().zip(rhs).enumerate().all(|(r, (a, b))| {
            a.len() == b.len()
                && a.iter().zip(b).enumerate().all(|(c, (x, y))| {
                    let d = x - y;
                    if r == c {
                        d == two
                    } else {
                        d.is_zero()
                    }
                })
        })
}

fn dumbbell_cases(n: usize, m: usize, i: usize, coproduct: Coproduct) -> Vec<Case> {
    let tag = format!("n={n},m={m}/i={i}");
    let blocks = ef_block(Flavor::Sym, n, m, i, coproduct)
        .and_then(|s| Ok((s, ef_block(Flavor::Skew, n, m, i, coproduct)?)));
    let (sym, skew) = match blocks {
        Ok(b) => b,
        Err(e) => return vec![Case::fail(format!("dumbbell/{tag}"), e.to_string())],
    };
    let detail = |ok: bool| {
        if ok {
            format!("{} x {} block", sym.nrows(), sym.ncols())
        } else {
            format!("B_sym = {}, B_skew = {}", sym.to_json(), skew.to_json())
        }
    };
    let direct = is_two_identity(sym.rows(), &sigma(&skew));
    let swapped = is_two_identity(skew.rows(), &sigma(&sym));
    vec![
        Case::check(format!("dumbbell/{tag}"), direct, detail(direct)),
        Case::check(format!("involution/{tag}"), swapped, detail(swapped)),
    ]
}

/// `[2] id = B_sym - σ(B_skew)` with `B = E_i F_i` on `(1^n)` and `σ` the
/// substitution `q -> -q^-1`, plus the same identity with the roles of the
/// two sides exchanged: `[2] id = B_skew - σ(B_sym)`.
pub fn dumbbell_check(n: usize, m: usize) -> Report {
    dumbbell_check_with(n, m, Coproduct::Standard)
}

pub fn dumbbell_check_with(n: usize, m: usize, coproduct: Coproduct) -> Report {
    let mut report = Report::new("dumbbell", serde_json::json!({"n": n, "m": m}));
    let cases: Vec<Vec<Case>> = (1..n)
        .into_par_iter()
        .map(|i| dumbbell_cases(n, m, i, coproduct))
        .collect();
    report.extend(cases.into_iter().flatten());
    report
}

/// [`dumbbell_check`] for `2 <= n <= n_max`, `1 <= m <= m_max`.
pub fn check_dumbbell(n_max: usize, m_max: usize, coproduct: Coproduct) -> Report {
    let mut report = Report::new(
        "dumbbell",
        serde_json::json!({"n_max": n_max, "m_max": m_max}),
    );
    for n in 2..=n_max {
        for m in 1..=m_max {
            report.extend(dumbbell_check_with(n, m, coproduct).cases);
        }
    }
    report
}
