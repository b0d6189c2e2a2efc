//! Symmetric and skew Howe modules over `Q(q)` with the `U_q(gl_n)`
//! generators `E_i`, `F_i`, `K_i^{±1}`.
//!
//! # Realization
//!
//! The symmetric module is the `m`-fold tensor product of quantum symmetric
//! algebras of the standard rank-`n` module; the skew module uses exterior
//! algebras instead. A basis vector is an `m x n` matrix of naturals whose
//! row `a` is the exponent vector of tensor factor `a` (entries `<= 1` in the
//! skew case). Its weight is the vector of column sums.
//!
//! On a single factor with exponent vector `x`:
//!
//! ```text
//! E_i x = [x_i]     (x - e_i + e_{i+1})
//! F_i x = [x_{i+1}] (x + e_i - e_{i+1})
//! K_i x = q^(x_{i+1} - x_i) x
//! ```
//!
//! so `E_i` raises the weight by `alpha_i = (.., -1, 1, ..)` and
//! `E_i F_i - F_i E_i = [<k, alpha_i>]` on weight `k`. In the skew case any
//! result with an entry `> 1` is zero.
//!
//! Factors are combined with the coproduct
//!
//! ```text
//! Δ(E_i) = E_i ⊗ 1 + K_i ⊗ E_i
//! Δ(F_i) = F_i ⊗ K_i^-1 + 1 ⊗ F_i
//! Δ(K_i) = K_i ⊗ K_i
//! ```
//!
//! iterated left to right over the rows: `E_i` acting on row `a` picks up
//! `K_i` from every row above it and `F_i` acting on row `a` picks up
//! `K_i^-1` from every row below it.
//!
//! Basis vectors of a weight space are listed in lexicographic row-major
//! order. Weight spaces with a negative entry (or, for skew, an entry `> m`)
//! are empty.

mod block;
mod classical;
mod relations;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qlaurent::{qfact, qint, LaurentPoly, QError};
use crate::weights::{Weight, WeightError};

pub use block::{BlockError, OperatorBlock};
pub use classical::{classical_apply, ClassicalVector};
pub use relations::check_relations;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoweError {
    #[error("malformed vector: {0}")]
    Malformed(String),
    #[error("weight inconsistency: {0}")]
    WeightInconsistency(String),
    #[error(transparent)]
    Divisibility(#[from] QError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Sym,
    Skew,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::Sym, Flavor::Skew];

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Sym => "sym",
            Flavor::Skew => "skew",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign convention for the coproduct of `E_i`.
///
/// `Corrupted` flips the sign of the `K_i ⊗ E_i` term. It exists so tests
/// can confirm the relation suites notice a broken convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coproduct {
    #[default]
    Standard,
    Corrupted,
}

/// An `m x n` matrix of naturals labelling a basis vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    flavor: Flavor,
    rows: Vec<Vec<u32>>,
}

impl BasisElement {
    pub fn new(flavor: Flavor, rows: Vec<Vec<u32>>) -> Result<Self, HoweError> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(HoweError::Malformed("ragged basis matrix".into()));
        }
        if flavor == Flavor::Skew && rows.iter().flatten().any(|&x| x > 1) {
            return Err(HoweError::Malformed(
                "skew basis entries must be 0 or 1".into(),
            ));
        }
        Ok(Self { flavor, rows })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of tensor factors.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Column sums.
    pub fn weight(&self) -> Weight {
        let n = self.n();
        Weight(
            (0..n)
                .map(|c| self.rows.iter().map(|r| i64::from(r[c])).sum())
                .collect(),
        )
    }

    /// Same matrix, other flavor. Only valid when the entries fit.
    pub fn with_flavor(&self, flavor: Flavor) -> Result<Self, HoweError> {
        Self::new(flavor, self.rows.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (a, row) in self.rows.iter().enumerate() {
            if a > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.flavor, self)
    }
}

/// All basis labels of the weight space `k` with `m` tensor factors.
pub fn enumerate_basis(flavor: Flavor, k: &Weight, m: usize) -> Vec<BasisElement> {
    assert!(m >= 1, "at least one tensor factor is required");
    if k.entries().iter().any(|&x| x < 0) {
        return Vec::new();
    }
    if flavor == Flavor::Skew && k.entries().iter().any(|&x| x as usize > m) {
        return Vec::new();
    }
    let max_entry = match flavor {
        Flavor::Sym => u32::MAX,
        Flavor::Skew => 1,
    };
    // per column: every way to spread k_c units over m rows
    let columns: Vec<Vec<Vec<u32>>> = k
        .entries()
        .iter()
        .map(|&kc| distributions(kc as u32, m, max_entry))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; columns.len()];
    loop {
        let rows = (0..m)
            .map(|a| {
                columns
                    .iter()
                    .zip(&choice)
                    .map(|(col, &j)| col[j][a])
                    .collect()
            })
            .collect();
        out.push(BasisElement { flavor, rows });
        // odometer
        let mut pos = columns.len();
        loop {
            if pos == 0 {
                out.sort();
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < columns[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

fn distributions(total: u32, parts: usize, max_entry: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, slot: usize, cur: &mut Vec<u32>, max_entry: u32, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == cur.len() {
            if left <= max_entry {
                cur[slot] = left;
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left.min(max_entry) {
            cur[slot] = v;
            rec(left - v, slot + 1, cur, max_entry, out);
        }
    }
    let mut out = Vec::new();
    rec(total, 0, &mut vec![0; parts], max_entry, &mut out);
    out
}

/// Generators of `U_q(gl_n)` acting on a Howe module; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::E(i) | Gen::F(i) | Gen::K(i) | Gen::KInv(i) => i,
        }
    }

    /// Weight shift in multiples of `alpha_i`.
    fn root_shift(self) -> i64 {
        match self {
            Gen::E(_) => 1,
            Gen::F(_) => -1,
            Gen::K(_) | Gen::KInv(_) => 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "E{i}"),
            Gen::F(i) => write!(f, "F{i}"),
            Gen::K(i) => write!(f, "K{i}"),
            Gen::KInv(i) => write!(f, "K{i}^-1"),
        }
    }
}

/// One factor of a word: a divided power `E_i^(r)` / `F_i^(r)`, or an
/// ordinary power of `K_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub power: u32,
}

impl Letter {
    pub fn new(gen: Gen, power: u32) -> Self {
        Self { gen, power }
    }

    pub fn e(i: usize) -> Self {
        Self::new(Gen::E(i), 1)
    }

    pub fn f(i: usize) -> Self {
        Self::new(Gen::F(i), 1)
    }
}

impl From<Gen> for Letter {
    fn from(gen: Gen) -> Self {
        Letter::new(gen, 1)
    }
}

/// A vector in one weight space, stored sparsely over basis labels.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleVector {
    flavor: Flavor,
    m: usize,
    weight: Weight,
    coords: BTreeMap<BasisElement, LaurentPoly>,
}

impl ModuleVector {
    pub fn zero(flavor: Flavor, m: usize, weight: Weight) -> Self {
        Self {
            flavor,
            m,
            weight,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(b: &BasisElement) -> Self {
        let mut v = Self::zero(b.flavor, b.m(), b.weight());
        v.coords.insert(b.clone(), LaurentPoly::one());
        v
    }

    /// Builds a vector from coordinates, checking that every label has the
    /// given weight, flavor and shape.
    pub fn from_coords(
        flavor: Flavor,
        m: usize,
        weight: Weight,
        coords: impl IntoIterator<Item = (BasisElement, LaurentPoly)>,
    ) -> Result<Self, HoweError> {
        let mut v = Self::zero(flavor, m, weight);
        for (b, c) in coords {
            v.check_label(&b)?;
            v.add_coord(b, &c);
        }
        Ok(v)
    }

    fn check_label(&self, b: &BasisElement) -> Result<(), HoweError> {
        if b.flavor != self.flavor {
            return Err(HoweError::Malformed(format!("{b:?} has the wrong flavor")));
        }
        if b.m() != self.m || b.n() != self.weight.rank() {
            return Err(HoweError::Malformed(format!("{b:?} has the wrong shape")));
        }
        if b.weight() != self.weight {
            return Err(HoweError::Malformed(format!(
                "{b:?} does not have weight {}",
                self.weight
            )));
        }
        Ok(())
    }

    fn add_coord(&mut self, b: BasisElement, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(b) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn coords(&self) -> &BTreeMap<BasisElement, LaurentPoly> {
        &self.coords
    }

    pub fn coeff(&self, b: &BasisElement) -> LaurentPoly {
        self.coords.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn assert_compatible(&self, other: &ModuleVector) {
        assert!(
            self.flavor == other.flavor && self.m == other.m && self.weight == other.weight,
            "cannot combine vectors of weights {} and {}",
            self.weight,
            other.weight
        );
    }

    /// `self + other`.
    ///
    /// # Panics
    ///
    /// Panics if the vectors live in different weight spaces.
    pub fn plus(&self, other: &ModuleVector) -> ModuleVector {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (b, c) in &other.coords {
            out.add_coord(b.clone(), c);
        }
        out
    }

    /// `self - other`; same panics as [`ModuleVector::plus`].
    pub fn minus(&self, other: &ModuleVector) -> ModuleVector {
        self.plus(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> ModuleVector {
        let mut out = Self::zero(self.flavor, self.m, self.weight.clone());
        if !c.is_zero() {
            for (b, x) in &self.coords {
                out.add_coord(b.clone(), &(x * c));
            }
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> ModuleVector {
        let mut out = Self::zero(self.flavor, self.m, self.weight.clone());
        for (b, x) in &self.coords {
            out.add_coord(b.clone(), &f(x));
        }
        out
    }

    /// `[[basis matrix, "coefficient"], ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|(b, c)| serde_json::json!([b.to_json(), c.to_string()]))
                .collect(),
        )
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleVector({}, wt {}, {})",
            self.flavor,
            self.weight,
            self.to_json()
        )
    }
}

/// A Howe module: flavor, rank `n` of `gl_n`, number `m` of tensor factors
/// and the coproduct convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HoweModule {
    pub flavor: Flavor,
    pub n: usize,
    pub m: usize,
    pub coproduct: Coproduct,
}

impl HoweModule {
    pub fn new(flavor: Flavor, n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "need n >= 1 and m >= 1");
        Self {
            flavor,
            n,
            m,
            coproduct: Coproduct::Standard,
        }
    }

    pub fn with_coproduct(mut self, coproduct: Coproduct) -> Self {
        self.coproduct = coproduct;
        self
    }

    pub fn basis(&self, k: &Weight) -> Vec<BasisElement> {
        enumerate_basis(self.flavor, k, self.m)
    }

    pub fn dim(&self, k: &Weight) -> usize {
        self.basis(k).len()
    }

    fn check_vector(&self, v: &ModuleVector) -> Result<(), HoweError> {
        if v.flavor != self.flavor || v.m != self.m || v.weight.rank() != self.n {
            return Err(HoweError::Malformed(format!(
                "vector of shape ({}, m={}, n={}) does not belong to ({}, m={}, n={})",
                v.flavor,
                v.m,
                v.weight.rank(),
                self.flavor,
                self.m,
                self.n
            )));
        }
        v.coords.keys().try_for_each(|b| v.check_label(b))
    }

    fn check_index(&self, i: usize) -> Result<(), HoweError> {
        if i == 0 || i >= self.n {
            return Err(WeightError::IndexOutOfRange {
                index: i,
                max: self.n - 1,
            }
            .into());
        }
        Ok(())
    }

    /// One generator on one basis label, accumulated into `out`.
    fn gen_on_basis(&self, g: Gen, b: &BasisElement, coeff: &LaurentPoly, out: &mut ModuleVector) {
        let i = g.index();
        let (ci, cj) = (i - 1, i);
        let rows = &b.rows;
        // <row, alpha_i> for each factor
        let pair = |r: &Vec<u32>| i64::from(r[cj]) - i64::from(r[ci]);
        match g {
            Gen::K(_) | Gen::KInv(_) => {
                let lam: i64 = rows.iter().map(pair).sum();
                let e = if matches!(g, Gen::K(_)) { lam } else { -lam };
                out.add_coord(b.clone(), &coeff.shift(e));
            }
            Gen::E(_) => {
                let mut above = 0i64;
                for a in 0..rows.len() {
                    let x = rows[a][ci];
                    if x > 0 && !(self.flavor == Flavor::Skew && rows[a][cj] >= 1) {
                        let mut new_rows = rows.clone();
                        new_rows[a][ci] -= 1;
                        new_rows[a][cj] += 1;
                        let mut c = (coeff * &qint(i64::from(x))).shift(above);
                        if a > 0 && self.coproduct == Coproduct::Corrupted {
                            c = -c;
                        }
                        out.add_coord(
                            BasisElement {
                                flavor: self.flavor,
                                rows: new_rows,
                            },
                            &c,
                        );
                    }
                    above += pair(&rows[a]);
                }
            }
            Gen::F(_) => {
                let mut below: i64 = rows.iter().map(pair).sum();
                for a in 0..rows.len() {
                    below -= pair(&rows[a]);
                    let x = rows[a][cj];
                    if x > 0 && !(self.flavor == Flavor::Skew && rows[a][ci] >= 1) {
                        let mut new_rows = rows.clone();
                        new_rows[a][ci] += 1;
                        new_rows[a][cj] -= 1;
                        let c = (coeff * &qint(i64::from(x))).shift(-below);
                        out.add_coord(
                            BasisElement {
                                flavor: self.flavor,
                                rows: new_rows,
                            },
                            &c,
                        );
                    }
                }
            }
        }
    }

    /// A single generator applied to `v`.
    pub fn apply_gen(&self, g: Gen, v: &ModuleVector) -> Result<ModuleVector, HoweError> {
        self.check_vector(v)?;
        self.check_index(g.index())?;
        Ok(self.apply_gen_unchecked(g, v))
    }

    fn apply_gen_unchecked(&self, g: Gen, v: &ModuleVector) -> ModuleVector {
        let target = v.weight.add_simple(g.index(), g.root_shift());
        let mut out = ModuleVector::zero(self.flavor, self.m, target);
        for (b, c) in &v.coords {
            self.gen_on_basis(g, b, c, &mut out);
        }
        out
    }

    /// `g^r / [r]!` for `g` an `E_i` or `F_i`, divided exactly.
    pub fn divided_power(
        &self,
        g: Gen,
        r: u32,
        v: &ModuleVector,
    ) -> Result<ModuleVector, HoweError> {
        if !matches!(g, Gen::E(_) | Gen::F(_)) {
            return Err(HoweError::Malformed(format!(
                "divided powers are defined for E and F, not {g}"
            )));
        }
        self.check_vector(v)?;
        self.check_index(g.index())?;
        self.divided_power_unchecked(g, r, v)
    }

    fn divided_power_unchecked(
        &self,
        g: Gen,
        r: u32,
        v: &ModuleVector,
    ) -> Result<ModuleVector, HoweError> {
        let mut cur = v.clone();
        for _ in 0..r {
            if cur.is_zero() {
                let target = v
                    .weight
                    .add_simple(g.index(), g.root_shift() * i64::from(r));
                return Ok(ModuleVector::zero(self.flavor, self.m, target));
            }
            cur = self.apply_gen_unchecked(g, &cur);
        }
        if r <= 1 {
            return Ok(cur);
        }
        let fact = qfact(r);
        let mut out = ModuleVector::zero(self.flavor, self.m, cur.weight.clone());
        for (b, c) in cur.coords {
            let quotient = c.div_exact(&fact)?;
            out.add_coord(b, &quotient);
        }
        Ok(out)
    }

    fn apply_letter(&self, l: Letter, v: &ModuleVector) -> Result<ModuleVector, HoweError> {
        match l.gen {
            Gen::E(_) | Gen::F(_) => self.divided_power_unchecked(l.gen, l.power, v),
            Gen::K(_) | Gen::KInv(_) => {
                let mut cur = v.clone();
                for _ in 0..l.power {
                    cur = self.apply_gen_unchecked(l.gen, &cur);
                }
                Ok(cur)
            }
        }
    }

    /// Applies the operator product `word[0] * word[1] * ... * word[last]`,
    /// i.e. the last letter acts first.
    pub fn apply_word(&self, word: &[Letter], v: &ModuleVector) -> Result<ModuleVector, HoweError> {
        self.check_vector(v)?;
        for l in word {
            self.check_index(l.gen.index())?;
        }
        word.iter()
            .rev()
            .try_fold(v.clone(), |acc, &l| self.apply_letter(l, &acc))
    }

    /// The weight reached from `k` by the operator product `word`.
    pub fn word_target(&self, word: &[Letter], k: &Weight) -> Weight {
        word.iter().fold(k.clone(), |acc, l| {
            acc.add_simple(l.gen.index(), l.gen.root_shift() * i64::from(l.power))
        })
    }

    /// The matrix of the operator product `word` from weight `k`, columns
    /// indexed by the basis at `k` and rows by the basis at the target.
    pub fn operator_block(&self, word: &[Letter], k: &Weight) -> Result<OperatorBlock, HoweError> {
        if k.rank() != self.n {
            return Err(HoweError::WeightInconsistency(format!(
                "weight {k} does not have rank {}",
                self.n
            )));
        }
        for l in word {
            self.check_index(l.gen.index())?;
        }
        let target = self.word_target(word, k);
        let images = self
            .basis(k)
            .iter()
            .map(|b| self.apply_word(word, &ModuleVector::basis(b)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OperatorBlock::from_columns(
            self.flavor,
            self.m,
            k.clone(),
            target,
            &images,
        ))
    }
}

/// Free-function form of [`HoweModule::apply_gen`] with the standard
/// coproduct.
pub fn apply_gen(g: Gen, v: &ModuleVector) -> Result<ModuleVector, HoweError> {
    HoweModule::new(v.flavor, v.weight.rank(), v.m).apply_gen(g, v)
}

/// Free-function form of [`HoweModule::divided_power`].
pub fn divided_power(g: Gen, r: u32, v: &ModuleVector) -> Result<ModuleVector, HoweError> {
    HoweModule::new(v.flavor, v.weight.rank(), v.m).divided_power(g, r, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn be(flavor: Flavor, rows: &[&[u32]]) -> BasisElement {
        BasisElement::new(flavor, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(Flavor::Sym, &wt(&[1, 1]), 2).len(), 4);
        assert_eq!(enumerate_basis(Flavor::Sym, &wt(&[2]), 2).len(), 3);
        assert!(enumerate_basis(Flavor::Skew, &wt(&[3]), 2).is_empty());
        assert!(enumerate_basis(Flavor::Sym, &wt(&[1, -1]), 2).is_empty());
    }

    #[test]
    fn basis_dimension_formula() {
        for m in 1..=3u64 {
            for k in Weight::compositions(3, 4) {
                let sym: u64 = k
                    .entries()
                    .iter()
                    .map(|&x| binom(m + x as u64 - 1, x as u64))
                    .product();
                let skew: u64 = k
                    .entries()
                    .iter()
                    .map(|&x| if x as u64 > m { 0 } else { binom(m, x as u64) })
                    .product();
                assert_eq!(
                    enumerate_basis(Flavor::Sym, &k, m as usize).len() as u64,
                    sym
                );
                assert_eq!(
                    enumerate_basis(Flavor::Skew, &k, m as usize).len() as u64,
                    skew
                );
            }
        }
    }

    #[test]
    fn basis_is_sorted_row_major() {
        let b = enumerate_basis(Flavor::Sym, &wt(&[1, 1]), 2);
        let shown: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        assert_eq!(
            shown,
            [
                "[[0,0],[1,1]]",
                "[[0,1],[1,0]]",
                "[[1,0],[0,1]]",
                "[[1,1],[0,0]]"
            ]
        );
    }

    #[test]
    fn single_factor_examples() {
        let v = ModuleVector::basis(&be(Flavor::Sym, &[&[0, 2]]));
        assert!(apply_gen(Gen::E(1), &v).unwrap().is_zero());
        let fv = apply_gen(Gen::F(1), &v).unwrap();
        assert_eq!(fv.weight(), &wt(&[1, 1]));
        assert_eq!(fv.coeff(&be(Flavor::Sym, &[&[1, 1]])), qint(2));
        let kv = apply_gen(Gen::K(1), &v).unwrap();
        assert_eq!(kv, v.scale(&LaurentPoly::monomial(1, 2)));
        let kinv = apply_gen(Gen::KInv(1), &kv).unwrap();
        assert_eq!(kinv, v);
    }

    #[test]
    fn divided_power_examples() {
        let v = ModuleVector::basis(&be(Flavor::Sym, &[&[0, 2]]));
        assert_eq!(divided_power(Gen::F(1), 0, &v).unwrap(), v);
        assert_eq!(
            divided_power(Gen::F(1), 1, &v).unwrap(),
            apply_gen(Gen::F(1), &v).unwrap()
        );
        let f2 = divided_power(Gen::F(1), 2, &v).unwrap();
        assert_eq!(f2, ModuleVector::basis(&be(Flavor::Sym, &[&[2, 0]])));
        assert!(divided_power(Gen::K(1), 2, &v).is_err());
    }

    #[test]
    fn operator_block_examples() {
        let module = HoweModule::new(Flavor::Sym, 2, 1);
        let k = wt(&[0, 2]);
        let id = module.operator_block(&[], &k).unwrap();
        assert!(id.is_identity());
        let ef = module
            .operator_block(&[Letter::e(1), Letter::f(1)], &k)
            .unwrap();
        let fe = module
            .operator_block(&[Letter::f(1), Letter::e(1)], &k)
            .unwrap();
        assert_eq!((ef.nrows(), ef.ncols()), (1, 1));
        assert!(fe.is_zero());
        assert_eq!(
            ef.sub(&fe).unwrap(),
            OperatorBlock::identity(Flavor::Sym, 1, k.clone()).scale(&qint(2).into())
        );

        let module = HoweModule::new(Flavor::Sym, 3, 2);
        for k in Weight::compositions(3, 3) {
            let a = module
                .operator_block(&[Letter::e(1), Letter::f(2)], &k)
                .unwrap();
            let b = module
                .operator_block(&[Letter::f(2), Letter::e(1)], &k)
                .unwrap();
            assert!(a.sub(&b).unwrap().is_zero(), "k={k}");
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(BasisElement::new(Flavor::Skew, vec![vec![2, 0]]).is_err());
        assert!(BasisElement::new(Flavor::Sym, vec![vec![1], vec![1, 0]]).is_err());
        let b = be(Flavor::Sym, &[&[1, 0]]);
        assert!(
            ModuleVector::from_coords(Flavor::Sym, 1, wt(&[0, 1]), [(b.clone(), qint(1))]).is_err()
        );
        let v = ModuleVector::basis(&b);
        let module = HoweModule::new(Flavor::Skew, 2, 1);
        assert!(matches!(
            module.apply_gen(Gen::E(1), &v),
            Err(HoweError::Malformed(_))
        ));
        let module = HoweModule::new(Flavor::Sym, 2, 1);
        assert!(matches!(
            module.apply_gen(Gen::E(2), &v),
            Err(HoweError::Weight(_))
        ));
        assert!(module.operator_block(&[], &wt(&[1, 0, 0])).is_err());
    }

    #[test]
    fn skew_single_factor_moves_are_unit() {
        let v = ModuleVector::basis(&be(Flavor::Skew, &[&[1, 0, 1]]));
        let module = HoweModule::new(Flavor::Skew, 3, 1);
        let e1 = module.apply_gen(Gen::E(1), &v).unwrap();
        assert_eq!(e1, ModuleVector::basis(&be(Flavor::Skew, &[&[0, 1, 1]])));
        // moving into an occupied slot vanishes in the exterior algebra
        let e2_of_e1 = module.apply_gen(Gen::E(2), &e1).unwrap();
        assert!(e2_of_e1.is_zero());
    }

    #[test]
    fn json_forms() {
        let b = be(Flavor::Sym, &[&[1, 0], &[0, 1]]);
        assert_eq!(b.to_string(), "[[1,0],[0,1]]");
        let v = ModuleVector::basis(&b).scale(&qint(2));
        assert_eq!(v.to_json().to_string(), r#"[[[[1,0],[0,1]],"q^-1 + q"]]"#);
    }
}
