//! Braid operators `T_i` on the Howe modules, obtained as the alternating
//! (Euler characteristic) sum of the terms of a Rickard complex.
//!
//! With `λ = <k, alpha_i>` on the weight-`k` space:
//!
//! ```text
//! λ >= 0:  T_i = Σ_s (-q^-1)^s E_i^(s) F_i^(λ+s)
//! λ <= 0:  T_i = (-1)^(-λ) q^λ Σ_s (-q^-1)^s F_i^(s) E_i^(-λ+s)
//! ```
//!
//! Cohomological degree `-s` contributes `(-1)^s` and the grading shift
//! `<-s>` contributes `q^-s`. Differentials play no role after taking the
//! alternating sum; each term of the complex is determined up to rescaling
//! of the maps, which does not change its class.
//!
//! `T'_i` is `T_i` times `(-1)^(k_i) q^(k_i)`. Both send weight `k` to
//! `s_i k`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::howemod::{
    BlockError, Flavor, Gen, HoweError, HoweModule, Letter, ModuleVector, OperatorBlock,
};
use crate::qlaurent::{LaurentPoly, RatFun};
use crate::report::{Case, Report};
use crate::weights::{simple_pairing, weyl_act, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RickardError {
    #[error("weight space {0} is empty")]
    EmptyWeightSpace(Weight),
    #[error("complex did not terminate by s = {bound} at weight {weight}")]
    Unbounded { weight: Weight, bound: i64 },
    #[error(transparent)]
    Howe(#[from] HoweError),
    #[error(transparent)]
    Block(#[from] BlockError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BraidVariant {
    T,
    #[serde(rename = "Tprime")]
    TPrime,
}

impl BraidVariant {
    pub const BOTH: [BraidVariant; 2] = [BraidVariant::T, BraidVariant::TPrime];

    pub fn as_str(self) -> &'static str {
        match self {
            BraidVariant::T => "T",
            BraidVariant::TPrime => "Tprime",
        }
    }
}

fn signed_monomial(sign_exp: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(if sign_exp.rem_euclid(2) == 0 { 1 } else { -1 }, e)
}

/// `T_i` (or `T'_i`) applied to a vector, without materializing a block.
pub fn apply_braid(
    module: &HoweModule,
    i: usize,
    variant: BraidVariant,
    v: &ModuleVector,
) -> Result<ModuleVector, RickardError> {
    let k = v.weight();
    let target = weyl_act(i, k).map_err(HoweError::from)?;
    let lam = simple_pairing(k, i);
    let (outer, inner, prefactor) = if lam >= 0 {
        (Gen::E(i), Gen::F(i), LaurentPoly::one())
    } else {
        (Gen::F(i), Gen::E(i), signed_monomial(-lam, lam))
    };
    let base = lam.unsigned_abs() as u32;
    let bound = k.total();
    let mut out = ModuleVector::zero(module.flavor, module.m, target);
    let mut s = 0u32;
    loop {
        let inner_v = module.apply_word(&[Letter::new(inner, base + s)], v)?;
        if inner_v.is_zero() {
            break;
        }
        if i64::from(s) > bound {
            return Err(RickardError::Unbounded {
                weight: k.clone(),
                bound,
            });
        }
        let term = module.apply_word(&[Letter::new(outer, s)], &inner_v)?;
        out = out.plus(&term.scale(&signed_monomial(i64::from(s), -i64::from(s))));
        s += 1;
    }
    let mut scalar = prefactor;
    if variant == BraidVariant::TPrime {
        let ki = k.get(i);
        scalar = &scalar * &signed_monomial(ki, ki);
    }
    Ok(out.scale(&scalar))
}

/// The matrix of `T_i` from weight `k` to `s_i k`.
pub fn rickard_block(
    i: usize,
    k: &Weight,
    flavor: Flavor,
    m: usize,
    variant: BraidVariant,
) -> Result<OperatorBlock, RickardError> {
    rickard_block_in(&HoweModule::new(flavor, k.rank(), m), i, k, variant)
}

pub fn rickard_block_in(
    module: &HoweModule,
    i: usize,
    k: &Weight,
    variant: BraidVariant,
) -> Result<OperatorBlock, RickardError> {
    let basis = module.basis(k);
    if basis.is_empty() {
        return Err(RickardError::EmptyWeightSpace(k.clone()));
    }
    let target = weyl_act(i, k).map_err(HoweError::from)?;
    let images = basis
        .iter()
        .map(|b| apply_braid(module, i, variant, &ModuleVector::basis(b)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OperatorBlock::from_columns(
        module.flavor,
        module.m,
        k.clone(),
        target,
        &images,
    ))
}

/// Exact inverse over `Q(q)`.
pub fn invert_block(b: &OperatorBlock) -> Result<OperatorBlock, BlockError> {
    b.inverse()
}

/// Braid, distant commutation and invertibility checks for both variants.
pub fn check_braid(n: usize, m: usize, n_max: u32, flavor: Flavor) -> Report {
    check_braid_in(&HoweModule::new(flavor, n, m), n_max)
}

pub fn check_braid_in(module: &HoweModule, n_max: u32) -> Report {
    let mut report = Report::new(
        "braid",
        serde_json::json!({
            "n": module.n,
            "m": module.m,
            "N_max": n_max,
            "flavor": module.flavor,
        }),
    );
    let weights: Vec<Weight> = (0..=n_max)
        .flat_map(|total| Weight::compositions(module.n, total))
        .filter(|k| module.dim(k) > 0)
        .collect();
    let cases: Vec<Vec<Case>> = weights
        .par_iter()
        .map(|k| braid_cases_at(module, k))
        .collect();
    report.extend(cases.into_iter().flatten());
    report
}

fn is_signed_monomial(x: &RatFun) -> bool {
    x.is_unit_monomial()
}

fn braid_cases_at(module: &HoweModule, k: &Weight) -> Vec<Case> {
    let n = module.n;
    let basis: Vec<ModuleVector> = module.basis(k).iter().map(ModuleVector::basis).collect();
    let mut out = Vec::new();
    // T_{w[0]} ... T_{w[last]} v, rightmost first
    let word = |w: &[usize], variant, v: &ModuleVector| -> Result<ModuleVector, RickardError> {
        w.iter()
            .rev()
            .try_fold(v.clone(), |acc, &i| apply_braid(module, i, variant, &acc))
    };
    let compare = |lhs: &[usize], rhs: &[usize], variant| -> Result<bool, RickardError> {
        for v in &basis {
            if word(lhs, variant, v)? != word(rhs, variant, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for variant in BraidVariant::BOTH {
        let tag = variant.as_str();
        for i in 1..n {
            let name = format!("invertible/{tag}/k={k}/i={i}");
            out.push(match rickard_block_in(module, i, k, variant) {
                Err(e) => Case::fail(name, e.to_string()),
                Ok(b) => match b.inverse_and_determinant() {
                    Err(e) => Case::fail(name, e.to_string()),
                    Ok((inv, det)) => {
                        let round = b.compose(&inv).map(|p| p.is_identity()).unwrap_or(false);
                        Case::check(
                            name,
                            round && is_signed_monomial(&det),
                            format!("dim {}, det {det}", b.nrows()),
                        )
                    }
                },
            });
            for j in i + 1..n {
                let (name, lhs, rhs) = if j == i + 1 {
                    (
                        format!("braid/{tag}/k={k}/i={i},j={j}"),
                        vec![i, j, i],
                        vec![j, i, j],
                    )
                } else {
                    (
                        format!("commute/{tag}/k={k}/i={i},j={j}"),
                        vec![i, j],
                        vec![j, i],
                    )
                };
                out.push(match compare(&lhs, &rhs, variant) {
                    Ok(ok) => Case::check(name, ok, format!("dim {}", basis.len())),
                    Err(e) => Case::fail(name, e.to_string()),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::qint;

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn lp(s: &str) -> RatFun {
        RatFun::from(s.parse::<LaurentPoly>().unwrap())
    }

    #[test]
    fn rank_one_blocks() {
        let b = rickard_block(1, &wt(&[0, 2]), Flavor::Sym, 1, BraidVariant::T).unwrap();
        assert_eq!(b.target(), &wt(&[2, 0]));
        assert_eq!(b.entry(0, 0), &RatFun::one());

        let b = rickard_block(1, &wt(&[1, 1]), Flavor::Sym, 1, BraidVariant::T).unwrap();
        // 1 - q^-1 [2]
        let expected = &RatFun::one() - &RatFun::from(qint(2).shift(-1));
        assert_eq!(b.entry(0, 0), &expected);
        assert_eq!(b.entry(0, 0), &lp("-q^-2"));

        let b = rickard_block(1, &wt(&[1, 1]), Flavor::Sym, 1, BraidVariant::TPrime).unwrap();
        assert_eq!(b.entry(0, 0), &lp("q^-1"));
    }

    #[test]
    fn negative_pairing_prefactor() {
        // k=(2,0): λ = -2, T = q^-2 E^(2) on the line
        let b = rickard_block(1, &wt(&[2, 0]), Flavor::Sym, 1, BraidVariant::T).unwrap();
        assert_eq!(b.entry(0, 0), &lp("q^-2"));
        // T_(2,0) T_(0,2) is a scalar on the line
        let back = rickard_block(1, &wt(&[0, 2]), Flavor::Sym, 1, BraidVariant::T).unwrap();
        assert_eq!(b.compose(&back).unwrap().entry(0, 0), &lp("q^-2"));
    }

    #[test]
    fn inversion() {
        let b = rickard_block(1, &wt(&[1, 1]), Flavor::Sym, 1, BraidVariant::T).unwrap();
        assert_eq!(invert_block(&b).unwrap().entry(0, 0), &lp("-q^2"));
        let id = OperatorBlock::identity(Flavor::Sym, 2, wt(&[1, 2]));
        assert!(invert_block(&id).unwrap().is_identity());
        for k in Weight::compositions(3, 3) {
            for i in 1..3 {
                let b = rickard_block(i, &k, Flavor::Sym, 2, BraidVariant::T).unwrap();
                let inv = invert_block(&b).unwrap();
                assert!(b.compose(&inv).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn empty_weight_space() {
        assert!(matches!(
            rickard_block(1, &wt(&[3, 0]), Flavor::Skew, 2, BraidVariant::T),
            Err(RickardError::EmptyWeightSpace(_))
        ));
    }

    #[test]
    fn braid_suites_pass() {
        for (n, m, nmax, flavor) in [
            (3, 1, 2, Flavor::Sym),
            (4, 1, 1, Flavor::Sym),
            (4, 1, 1, Flavor::Skew),
            (3, 2, 2, Flavor::Skew),
            (3, 2, 3, Flavor::Sym),
        ] {
            let r = check_braid(n, m, nmax, flavor);
            let bad: Vec<_> = r.failed_cases().collect();
            assert!(bad.is_empty(), "n={n} m={m} {flavor}: {bad:?}");
        }
        let r = check_braid(4, 1, 1, Flavor::Sym);
        assert!(r
            .cases
            .iter()
            .any(|c| c.name.starts_with("commute/T/") && c.name.ends_with("i=1,j=3")));
    }
}
