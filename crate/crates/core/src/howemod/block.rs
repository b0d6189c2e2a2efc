use std::collections::HashMap;

use thiserror::Error;

use super::{enumerate_basis, BasisElement, Flavor, ModuleVector};
use crate::qlaurent::RatFun;
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("block is singular")]
    Singular,
}

/// A dense matrix over `Q(q)` between two weight spaces of the same Howe
/// module. Columns follow the basis order of `source`, rows that of `target`.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorBlock {
    flavor: Flavor,
    m: usize,
    source: Weight,
    target: Weight,
    rows: Vec<Vec<RatFun>>,
}

impl OperatorBlock {
    pub fn zero(flavor: Flavor, m: usize, source: Weight, target: Weight) -> Self {
        let r = enumerate_basis(flavor, &target, m).len();
        let c = enumerate_basis(flavor, &source, m).len();
        Self {
            flavor,
            m,
            source,
            target,
            rows: vec![vec![RatFun::zero(); c]; r],
        }
    }

    pub fn identity(flavor: Flavor, m: usize, k: Weight) -> Self {
        let mut b = Self::zero(flavor, m, k.clone(), k);
        for (i, row) in b.rows.iter_mut().enumerate() {
            row[i] = RatFun::one();
        }
        b
    }

    pub fn from_rows(
        flavor: Flavor,
        m: usize,
        source: Weight,
        target: Weight,
        rows: Vec<Vec<RatFun>>,
    ) -> Result<Self, BlockError> {
        let shell = Self::zero(flavor, m, source, target);
        if rows.len() != shell.nrows() || rows.iter().any(|r| r.len() != shell.ncols()) {
            return Err(BlockError::Shape(format!(
                "expected {}x{} entries",
                shell.nrows(),
                shell.ncols()
            )));
        }
        Ok(Self { rows, ..shell })
    }

    /// Assembles a block from the images of the source basis vectors.
    pub(crate) fn from_columns(
        flavor: Flavor,
        m: usize,
        source: Weight,
        target: Weight,
        images: &[ModuleVector],
    ) -> Self {
        let mut b = Self::zero(flavor, m, source, target);
        let index: HashMap<BasisElement, usize> = enumerate_basis(flavor, &b.target, m)
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        for (c, v) in images.iter().enumerate() {
            for (e, x) in v.coords() {
                b.rows[index[e]][c] = RatFun::from(x);
            }
        }
        b
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn source(&self) -> &Weight {
        &self.source
    }

    pub fn target(&self) -> &Weight {
        &self.target
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        if self.rows.is_empty() {
            enumerate_basis(self.flavor, &self.source, self.m).len()
        } else {
            self.rows[0].len()
        }
    }

    pub fn rows(&self) -> &[Vec<RatFun>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &RatFun {
        &self.rows[r][c]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(RatFun::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.rows.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }

    fn same_shape(&self, other: &Self) -> Result<(), BlockError> {
        if self.flavor != other.flavor
            || self.m != other.m
            || self.source != other.source
            || self.target != other.target
        {
            return Err(BlockError::Shape(format!(
                "{} -> {} vs {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, BlockError> {
        self.same_shape(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Self {
            rows,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, BlockError> {
        self.add(&other.scale(&RatFun::from(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        self.map(|x| x * c)
    }

    /// Entrywise image under `f`.
    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&f).collect())
            .collect();
        Self {
            rows,
            ..self.clone()
        }
    }

    /// `self ∘ rhs`: first `rhs`, then `self`.
    pub fn compose(&self, rhs: &Self) -> Result<Self, BlockError> {
        if self.flavor != rhs.flavor || self.m != rhs.m || self.source != rhs.target {
            return Err(BlockError::Shape(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, rhs.source, rhs.target
            )));
        }
        let inner = rhs.nrows();
        let cols = rhs.ncols();
        let mut rows = vec![vec![RatFun::zero(); cols]; self.nrows()];
        for (i, out) in rows.iter_mut().enumerate() {
            for k in 0..inner {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = &rhs.rows[k][j];
                    if !b.is_zero() {
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(Self {
            flavor: self.flavor,
            m: self.m,
            source: rhs.source.clone(),
            target: self.target.clone(),
            rows,
        })
    }

    /// Inverse and determinant in one elimination pass.
    pub fn inverse_and_determinant(&self) -> Result<(Self, RatFun), BlockError> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(BlockError::Shape(format!(
                "{}x{} is not square",
                n,
                self.ncols()
            )));
        }
        self.eliminate()
    }

    /// Gauss-Jordan elimination over `Q(q)`.
    fn eliminate(&self) -> Result<(Self, RatFun), BlockError> {
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut inv: Vec<Vec<RatFun>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            RatFun::one()
                        } else {
                            RatFun::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut det = RatFun::one();
        for col in 0..n {
            // unit pivots keep the entries from growing
            let pivot = (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| {
                    let x = &a[r][col];
                    (
                        !x.is_unit_monomial(),
                        x.numer().num_terms() + x.denom().num_terms(),
                    )
                })
                .ok_or(BlockError::Singular)?;
            if pivot != col {
                a.swap(pivot, col);
                inv.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det = &det * &p;
            let p_inv = p.inv().expect("pivot is nonzero");
            for j in 0..n {
                a[col][j] = &a[col][j] * &p_inv;
                inv[col][j] = &inv[col][j] * &p_inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] = &a[r][j] - &x;
                    inv[r][j] = &inv[r][j] - &y;
                }
            }
        }
        Ok((
            Self {
                flavor: self.flavor,
                m: self.m,
                source: self.target.clone(),
                target: self.source.clone(),
                rows: inv,
            },
            det,
        ))
    }

    pub fn inverse(&self) -> Result<Self, BlockError> {
        self.inverse_and_determinant().map(|(inv, _)| inv)
    }

    pub fn determinant(&self) -> Result<RatFun, BlockError> {
        match self.inverse_and_determinant() {
            Ok((_, d)) => Ok(d),
            Err(BlockError::Singular) => Ok(RatFun::zero()),
            Err(e) => Err(e),
        }
    }

    /// `{source, target, flavor, m, row_basis, col_basis, entries}` with
    /// entries as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let basis = |k: &Weight| -> Vec<serde_json::Value> {
            enumerate_basis(self.flavor, k, self.m)
                .iter()
                .map(BasisElement::to_json)
                .collect()
        };
        serde_json::json!({
            "flavor": self.flavor,
            "m": self.m,
            "source": self.source.entries(),
            "target": self.target.entries(),
            "row_basis": basis(&self.target),
            "col_basis": basis(&self.source),
            "entries": self.rows.iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Debug for OperatorBlock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "OperatorBlock({} {} -> {})",
            self.flavor, self.source, self.target
        )?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::howemod::{HoweModule, Letter};
    use crate::qlaurent::{qint, LaurentPoly};

    fn rf(s: &str) -> RatFun {
        RatFun::from(s.parse::<LaurentPoly>().unwrap())
    }

    #[test]
    fn inverse_and_determinant() {
        let k = Weight::new(vec![1, 1]);
        let rows = vec![
            vec![rf("q"), rf("1"), rf("0"), rf("0")],
            vec![rf("0"), rf("q^-1"), rf("0"), rf("0")],
            vec![rf("0"), rf("0"), rf("0"), rf("1")],
            vec![rf("0"), rf("0"), RatFun::from(qint(2)), rf("0")],
        ];
        let b = OperatorBlock::from_rows(Flavor::Sym, 2, k.clone(), k.clone(), rows).unwrap();
        let inv = b.inverse().unwrap();
        assert!(b.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&b).unwrap().is_identity());
        assert_eq!(b.determinant().unwrap(), -RatFun::from(qint(2)));
        let z = OperatorBlock::zero(Flavor::Sym, 2, k.clone(), k);
        assert_eq!(z.inverse(), Err(BlockError::Singular));
        assert!(z.determinant().unwrap().is_zero());
    }

    #[test]
    fn composition_matches_words() {
        let module = HoweModule::new(Flavor::Sym, 3, 2);
        let k = Weight::new(vec![1, 2, 0]);
        let f1 = module.operator_block(&[Letter::f(1)], &k).unwrap();
        let e2 = module.operator_block(&[Letter::e(2)], f1.target()).unwrap();
        let both = module
            .operator_block(&[Letter::e(2), Letter::f(1)], &k)
            .unwrap();
        assert_eq!(e2.compose(&f1).unwrap(), both);
        assert!(f1.compose(&f1).is_err());
    }

    #[test]
    fn json_shape() {
        let module = HoweModule::new(Flavor::Sym, 2, 1);
        let b = module
            .operator_block(&[Letter::f(1)], &Weight::new(vec![0, 2]))
            .unwrap();
        let j = b.to_json();
        assert_eq!(j["entries"], serde_json::json!([["q^-1 + q"]]));
        assert_eq!(j["target"], serde_json::json!([1, 1]));
        assert_eq!(j["flavor"], "sym");
    }
}
