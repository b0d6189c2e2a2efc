use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::AbraidError;
use crate::qlaurent::RatFun;

/// A Laurent polynomial in `x_1, ..., x_n` with coefficients in `Q(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, RatFun>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], RatFun::one())
    }

    pub fn monomial(exps: Vec<i64>, coeff: RatFun) -> Self {
        let mut out = Self::zero(exps.len());
        out.add_term(exps, &coeff);
        out
    }

    /// The variable `x_j`, 1-based.
    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j - 1] = 1;
        Self::monomial(e, RatFun::one())
    }

    pub fn constant(nvars: usize, c: RatFun) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    fn add_term(&mut self, exps: Vec<i64>, c: &RatFun) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &RatFun)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> RatFun {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        let mut out = Self::zero(self.nvars);
        if !c.is_zero() {
            for (e, x) in &self.terms {
                out.add_term(e.clone(), &(x * c));
            }
        }
        out
    }

    /// Multiplication by `x^shift`.
    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        assert_eq!(
            shift.len(),
            self.nvars,
            "exponent vector has the wrong length"
        );
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `s_i`: swaps `x_i` and `x_{i+1}` (1-based).
    pub fn swap(&self, i: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by `x_i - x_{i+1}`.
    ///
    /// Terms are grouped by the exponents of the other variables and the
    /// total degree `d` in `x_i, x_{i+1}`. Writing a group as
    /// `x_{i+1}^d Σ_j c_j t^j` with `t = x_i / x_{i+1}`, division by
    /// `x_{i+1} (t - 1)` gives coefficients `Q_j = -Σ_{a <= j} c_a`,
    /// which terminate exactly when `Σ c_j = 0`.
    pub fn div_by_difference(&self, i: usize) -> Result<Self, AbraidError> {
        let (ci, cj) = (i - 1, i);
        let mut groups: BTreeMap<(Vec<i64>, i64), BTreeMap<i64, &RatFun>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[ci] = 0;
            rest[cj] = 0;
            groups
                .entry((rest, e[ci] + e[cj]))
                .or_default()
                .insert(e[ci], c);
        }
        let mut out = Self::zero(self.nvars);
        for ((rest, d), coeffs) in groups {
            let mut partial = RatFun::zero();
            let last = *coeffs.keys().next_back().expect("groups are nonempty");
            let first = *coeffs.keys().next().expect("groups are nonempty");
            for j in first..last {
                if let Some(c) = coeffs.get(&j) {
                    partial = &partial + *c;
                }
                let mut e = rest.clone();
                e[ci] = j;
                e[cj] = d - 1 - j;
                out.add_term(e, &-&partial);
            }
            partial = &partial + coeffs[&last];
            if !partial.is_zero() {
                return Err(AbraidError::NotDivisible(format!(
                    "{self} by x{i} - x{}",
                    i + 1
                )));
            }
        }
        Ok(out)
    }

    /// JSON string form (same as `Display`).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl Add<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        self + &(-rhs)
    }
}

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiLaurent::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

/// Terms in ascending lexicographic exponent order, each
/// `coeff * x1^e1*x2^e2*...`; zero exponents are omitted and multi-term
/// coefficients are parenthesized.
impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let coeff = c.to_string();
            let coeff = if coeff.contains(' ') {
                format!("({coeff})")
            } else {
                coeff
            };
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(j, &x)| {
                    if x == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{x}", j + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff} * {}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}
