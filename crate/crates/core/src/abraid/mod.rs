//! The affine braid groupoid on `Z^n`, realized on Laurent polynomials in
//! `x_1, ..., x_n` over `Q(q)`.
//!
//! `T_i` acts by the Demazure-Lusztig operator
//!
//! ```text
//! T_i f = a s_i(f) + b x_{i+1} (f - s_i f) / (x_i - x_{i+1})
//! ```
//!
//! which satisfies `(T_i - a)(T_i + b') = 0` with `b' = a + b`, so
//! `T_i^-1 = (T_i + b' - a) / (a b')`. Lattice elements act by monomials:
//! `x_j` models the class of the `j`-th tautological line bundle and
//! `φ_{α_j}` multiplies by `x_j / x_{j+1}` (orientation `LineBundle`) or by
//! `x_{j+1} / x_j` (orientation `Dual`).
//!
//! Neither the scalars nor the orientation are fixed up front; the
//! calibration routine searches a small candidate set and keeps the first
//! choice for which every groupoid relation holds. The result is
//! `Dual`, `a = q`, `b = q^-1 - q`: the `LineBundle` orientation fails the
//! `T φ T` relation for every candidate.

mod multi;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qlaurent::{LaurentPoly, RatFun};
use crate::report::{Case, Report};
use crate::weights::{RootVector, Weight, WeightError};

pub use multi::MultiLaurent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbraidError {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("malformed word: {0}")]
    Malformed(String),
    #[error("no candidate parameters satisfy the relations for n = {0}")]
    NoValidParams(usize),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// Which way `φ_{α_j}` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// `φ_{α_j} = x_j / x_{j+1}`
    LineBundle,
    /// `φ_{α_j} = x_{j+1} / x_j`
    Dual,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::LineBundle, Orientation::Dual];

    /// Exponent vector of `φ_λ` for `λ ∈ Z^n`, where `α_j = e_{j+1} - e_j`.
    fn exponent(self, lambda: &[i64]) -> Vec<i64> {
        match self {
            Orientation::Dual => lambda.to_vec(),
            Orientation::LineBundle => lambda.iter().map(|x| -x).collect(),
        }
    }
}

/// Demazure-Lusztig scalars plus the unit `b'` of the quadratic relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DLParams {
    pub a: RatFun,
    pub b: RatFun,
    pub quad_unit: RatFun,
    pub orientation: Orientation,
}

impl DLParams {
    /// `quad_unit` is derived as `a + b`.
    pub fn new(a: RatFun, b: RatFun, orientation: Orientation) -> Self {
        let quad_unit = &a + &b;
        Self {
            a,
            b,
            quad_unit,
            orientation,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "quad_unit": self.quad_unit.to_string(),
            "orientation": self.orientation,
        })
    }
}

fn check_dl_index(i: usize, f: &MultiLaurent) -> Result<(), AbraidError> {
    if i == 0 || i >= f.nvars() {
        return Err(WeightError::IndexOutOfRange {
            index: i,
            max: f.nvars().saturating_sub(1),
        }
        .into());
    }
    Ok(())
}

/// `T_i f`.
pub fn dl_apply(i: usize, f: &MultiLaurent, p: &DLParams) -> Result<MultiLaurent, AbraidError> {
    check_dl_index(i, f)?;
    let s = f.swap(i);
    let mut e = vec![0; f.nvars()];
    e[i] = 1;
    let diff = (f - &s).div_by_difference(i)?.mul_monomial(&e);
    Ok(&s.scale(&p.a) + &diff.scale(&p.b))
}

/// `T_i^-1 f = (T_i f + (b' - a) f) / (a b')`.
pub fn dl_apply_inverse(
    i: usize,
    f: &MultiLaurent,
    p: &DLParams,
) -> Result<MultiLaurent, AbraidError> {
    let t = dl_apply(i, f, p)?;
    let shift = &p.quad_unit - &p.a;
    let denom = (&p.a * &p.quad_unit)
        .inv()
        .map_err(|_| AbraidError::Malformed("quadratic relation has a zero root".into()))?;
    Ok((&t + &f.scale(&shift)).scale(&denom))
}

/// Multiplication by `φ_λ` for `λ ∈ Z^n`.
pub fn phi_apply_weight(
    lambda: &[i64],
    f: &MultiLaurent,
    orientation: Orientation,
) -> MultiLaurent {
    f.mul_monomial(&orientation.exponent(lambda))
}

/// Multiplication by `φ_α`.
pub fn phi_apply(
    alpha: &RootVector,
    f: &MultiLaurent,
    orientation: Orientation,
) -> Result<MultiLaurent, AbraidError> {
    let lambda = alpha.to_weight_vector(f.nvars())?;
    Ok(phi_apply_weight(&lambda, f, orientation))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BraidLetter {
    T(usize),
    TInv(usize),
    Phi(usize),
    PhiInv(usize),
}

impl BraidLetter {
    pub fn index(self) -> usize {
        match self {
            BraidLetter::T(i)
            | BraidLetter::TInv(i)
            | BraidLetter::Phi(i)
            | BraidLetter::PhiInv(i) => i,
        }
    }

    pub fn inverse(self) -> BraidLetter {
        match self {
            BraidLetter::T(i) => BraidLetter::TInv(i),
            BraidLetter::TInv(i) => BraidLetter::T(i),
            BraidLetter::Phi(i) => BraidLetter::PhiInv(i),
            BraidLetter::PhiInv(i) => BraidLetter::Phi(i),
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidLetter::T(i) => write!(f, "T{i}"),
            BraidLetter::TInv(i) => write!(f, "T{i}^-1"),
            BraidLetter::Phi(i) => write!(f, "phi{i}"),
            BraidLetter::PhiInv(i) => write!(f, "phi{i}^-1"),
        }
    }
}

/// A morphism of the groupoid: letters applied first to last, starting at
/// `source`. `T_i^{±1}` moves the object by `s_i`; `φ` letters fix it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    source: Weight,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(source: Weight, letters: Vec<BraidLetter>) -> Result<Self, AbraidError> {
        let n = source.rank();
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= n) {
            return Err(AbraidError::Malformed(format!(
                "{l} is out of range for n = {n}"
            )));
        }
        Ok(Self { source, letters })
    }

    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn target(&self) -> Weight {
        let mut k = self.source.entries().to_vec();
        for l in &self.letters {
            if let BraidLetter::T(i) | BraidLetter::TInv(i) = *l {
                k.swap(i - 1, i);
            }
        }
        Weight::new(k)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &BraidWord) -> Result<BraidWord, AbraidError> {
        if self.target() != next.source {
            return Err(AbraidError::Malformed(format!(
                "target {} does not match source {}",
                self.target(),
                next.source
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&next.letters);
        Ok(BraidWord {
            source: self.source.clone(),
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{}: [{}] -> {}",
            self.source,
            ls.join(", "),
            self.target()
        )
    }
}

/// Applies the letters of `w` to `f`, first letter first.
pub fn word_apply(
    w: &BraidWord,
    f: &MultiLaurent,
    p: &DLParams,
) -> Result<MultiLaurent, AbraidError> {
    if f.nvars() != w.source.rank() {
        return Err(AbraidError::Malformed(format!(
            "word on Z^{} applied to a polynomial in {} variables",
            w.source.rank(),
            f.nvars()
        )));
    }
    let n = f.nvars();
    w.letters.iter().try_fold(f.clone(), |acc, &l| match l {
        BraidLetter::T(i) => dl_apply(i, &acc, p),
        BraidLetter::TInv(i) => dl_apply_inverse(i, &acc, p),
        BraidLetter::Phi(i) => phi_apply(&RootVector::simple(i, n), &acc, p.orientation),
        BraidLetter::PhiInv(i) => phi_apply(&RootVector::simple(i, n).neg(), &acc, p.orientation),
    })
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut stack: Vec<BraidLetter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    BraidWord {
        source: w.source.clone(),
        letters: stack,
    }
}

/// Candidate `(a, b)` pairs in search order: `a` over
/// `q, q^-1, -q, -q^-1`, then `b` over `q - q^-1, q^-1 - q`.
pub fn default_candidates() -> Vec<(RatFun, RatFun)> {
    let m = |c: i64, e: i64| RatFun::from(LaurentPoly::monomial(c, e));
    let a_list = [m(1, 1), m(1, -1), m(-1, 1), m(-1, -1)];
    let b_list = [&m(1, 1) - &m(1, -1), &m(1, -1) - &m(1, 1)];
    a_list
        .iter()
        .flat_map(|a| b_list.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Box radius used while calibrating.
const CALIBRATION_RADIUS: i64 = 1;

/// First parameters, orientation outermost (`LineBundle` before `Dual`),
/// passing [`check_affine_relations`] on the calibration box.
pub fn calibrate_dl(n: usize) -> Result<DLParams, AbraidError> {
    calibrate_dl_from(n, &default_candidates())
}

pub fn calibrate_dl_from(
    n: usize,
    candidates: &[(RatFun, RatFun)],
) -> Result<DLParams, AbraidError> {
    for orientation in Orientation::ALL {
        for (a, b) in candidates {
            let p = DLParams::new(a.clone(), b.clone(), orientation);
            if check_affine_relations(n, CALIBRATION_RADIUS, &p).all_passed() {
                return Ok(p);
            }
        }
    }
    Err(AbraidError::NoValidParams(n))
}

/// Test lattice elements: `0`, `±e_j`, `±α_j`, `±(α_j + α_{j+1})`.
fn lattice_probes(n: usize) -> Vec<Vec<i64>> {
    let mut base: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        base.push(e);
    }
    for j in 1..n {
        base.push(
            RootVector::simple(j, n)
                .to_weight_vector(n)
                .expect("rank matches"),
        );
        if j + 1 < n {
            let r = RootVector::simple(j, n).add(&RootVector::simple(j + 1, n));
            base.push(r.to_weight_vector(n).expect("rank matches"));
        }
    }
    let mut out = vec![vec![0; n]];
    for v in base {
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    }
    out
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Every Laurent monomial with exponents in `[-r, r]^n`.
fn box_monomials(n: usize, r: i64) -> Vec<MultiLaurent> {
    let mut out = Vec::new();
    let mut e = vec![-r; n];
    loop {
        out.push(MultiLaurent::monomial(e.clone(), RatFun::one()));
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if e[pos] < r {
                e[pos] += 1;
                break;
            }
            e[pos] = -r;
        }
    }
}

type Check<'a> = Box<dyn Fn(&MultiLaurent) -> Result<bool, AbraidError> + Sync + 'a>;

/// Groupoid relations on every monomial of the box `[-r, r]^n`, one case
/// per relation instance:
///
/// - `braid`: `T_i T_j T_i = T_j T_i T_j`, `|i - j| = 1`
/// - `commute`: `T_i T_j = T_j T_i`, `|i - j| >= 2`
/// - `phi-commute`: `φ_λ φ_μ = φ_μ φ_λ`
/// - `t-phi-commute`: `T_i φ_λ = φ_λ T_i` when `<α_i, λ> = 0`
/// - `t-phi-conj`: `T_i φ_λ T_i = φ_{s_i λ}` when `<α_i, λ> = -1`
/// - `quadratic`: `(T_i - a)(T_i + b') = 0`
/// - `inverse`: `T_i^-1 T_i = 1`
pub fn check_affine_relations(n: usize, box_radius: i64, p: &DLParams) -> Report {
    let mut report = Report::new(
        "affine",
        serde_json::json!({
            "n": n,
            "box_radius": box_radius,
            "params": p.to_json(),
        }),
    );
    let monomials = box_monomials(n, box_radius);
    let t = |i: usize, f: &MultiLaurent| dl_apply(i, f, p);
    let phi = |l: &[i64], f: &MultiLaurent| phi_apply_weight(l, f, p.orientation);
    let probes = lattice_probes(n);

    let mut checks: Vec<(String, Check)> = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            if j == i + 1 {
                checks.push((
                    format!("braid/i={i},j={j}"),
                    Box::new(move |f| Ok(t(i, &t(j, &t(i, f)?)?)? == t(j, &t(i, &t(j, f)?)?)?)),
                ));
            } else {
                checks.push((
                    format!("commute/i={i},j={j}"),
                    Box::new(move |f| Ok(t(i, &t(j, f)?)? == t(j, &t(i, f)?)?)),
                ));
            }
        }
    }
    for (x, l) in probes.iter().enumerate() {
        for m in &probes[x + 1..] {
            let (l, m) = (l.clone(), m.clone());
            checks.push((
                format!("phi-commute/{}/{}", fmt_vec(&l), fmt_vec(&m)),
                Box::new(move |f| Ok(phi(&l, &phi(&m, f)) == phi(&m, &phi(&l, f)))),
            ));
        }
    }
    for i in 1..n {
        for l in &probes {
            let pairing = l[i] - l[i - 1];
            let l = l.clone();
            match pairing {
                0 => checks.push((
                    format!("t-phi-commute/i={i}/lambda={}", fmt_vec(&l)),
                    Box::new(move |f| Ok(t(i, &phi(&l, f))? == phi(&l, &t(i, f)?))),
                )),
                -1 => {
                    let mut sl = l.clone();
                    sl.swap(i - 1, i);
                    checks.push((
                        format!("t-phi-conj/i={i}/lambda={}", fmt_vec(&l)),
                        Box::new(move |f| Ok(t(i, &phi(&l, &t(i, f)?))? == phi(&sl, f))),
                    ));
                }
                _ => {}
            }
        }
        checks.push((
            format!("quadratic/i={i}"),
            Box::new(move |f| {
                let tf = t(i, f)?;
                let g = &tf + &f.scale(&p.quad_unit);
                Ok((&t(i, &g)? - &g.scale(&p.a)).is_zero())
            }),
        ));
        checks.push((
            format!("inverse/i={i}"),
            Box::new(move |f| Ok(dl_apply_inverse(i, &t(i, f)?, p)? == *f)),
        ));
    }

    let cases: Vec<Case> = checks
        .par_iter()
        .map(|(name, check)| {
            for f in &monomials {
                match check(f) {
                    Ok(true) => {}
                    Ok(false) => return Case::fail(name.clone(), format!("fails on {f}")),
                    Err(e) => return Case::fail(name.clone(), format!("{e} on {f}")),
                }
            }
            Case::pass(name.clone(), format!("{} monomials", monomials.len()))
        })
        .collect();
    report.extend(cases);
    report
}
