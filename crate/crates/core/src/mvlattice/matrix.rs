use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, QPoly};

/// A dense matrix over `Q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigRational>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![BigRational::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigRational::one();
        }
        m
    }

    /// # Panics
    ///
    /// Panics on ragged input.
    pub fn from_rows(data: Vec<Vec<BigRational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols, data }
    }

    pub fn from_ints(data: &[&[i64]]) -> Self {
        Self::from_rows(
            data.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigRational) {
        self.data[i][j] = x;
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.data
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i][j] += a * &rhs.data[k][j];
                }
            }
        }
        out
    }

    /// Row echelon form by Gaussian elimination; returns the rank and the
    /// reduced matrix.
    fn echelon(&self) -> (usize, Vec<Vec<BigRational>>) {
        let mut a = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][col].recip();
            for x in a[rank].iter_mut() {
                *x *= &inv;
            }
            let pivot = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            rank += 1;
        }
        (rank, a)
    }

    pub fn rank(&self) -> usize {
        self.echelon().0
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][n + i] = BigRational::one();
        }
        let (_, red) = aug.echelon();
        for (i, row) in red.iter().enumerate() {
            if !row[i].is_one() {
                return None;
            }
        }
        Some(QMatrix::from_rows(
            red.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    /// Monic characteristic polynomial `det(x I - A)` by Faddeev-LeVerrier.
    pub fn charpoly(&self) -> QPoly {
        assert_eq!(self.rows, self.cols, "charpoly of a non-square matrix");
        let n = self.rows;
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        let mut m = QMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                next.data[i][i] += &c[n - k + 1];
            }
            let am = self.mul(&next);
            let trace: BigRational = (0..n).map(|i| am.data[i][i].clone()).sum();
            c[n - k] = -trace / rat(k as i64);
            m = next;
        }
        QPoly::from_coeffs(c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .data
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// A dense matrix over `Q[z]`; its columns are read as generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<QPoly>>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![QPoly::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(vec![QPoly::one(); n])
    }

    pub fn diag(entries: Vec<QPoly>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i][i] = e;
        }
        m
    }

    /// # Panics
    ///
    /// Panics on ragged input.
    pub fn from_rows(data: Vec<Vec<QPoly>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols, data }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(cols: Vec<Vec<QPoly>>) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged columns");
            for (i, x) in col.into_iter().enumerate() {
                m.data[i][j] = x;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QPoly) {
        self.data[i][j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<QPoly> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<QPoly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_columns(self.data.clone())
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = &self.data[i][k] * &rhs.data[k][j];
                    out.data[i][j] = &out.data[i][j] + &t;
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> QPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return QPoly::one();
        }
        let mut a = self.data.clone();
        let mut prev = QPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return QPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = x.div_exact(&prev).expect("Bareiss step divides exactly");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        PolyMatrix::from_rows(
            self.data
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip_row)
                .map(|(_, r)| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != skip_col)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect(),
        )
    }

    /// Classical adjugate: `adj(A) A = A adj(A) = det(A) I`.
    pub fn adjugate(&self) -> PolyMatrix {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.rows;
        let mut out = PolyMatrix::zeros(n, n);
        if n == 1 {
            out.data[0][0] = QPoly::one();
            return out;
        }
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(i, j).det();
                out.data[j][i] = if (i + j) % 2 == 0 { d } else { -&d };
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .data
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }

    fn col_combine(&mut self, dst: usize, a: &QPoly, src: usize, b: &QPoly) -> Vec<QPoly> {
        // returns a*col_dst + b*col_src without writing it back
        (0..self.rows)
            .map(|r| &(a * &self.data[r][dst]) + &(b * &self.data[r][src]))
            .collect()
    }

    fn set_column(&mut self, j: usize, col: Vec<QPoly>) {
        for (r, x) in col.into_iter().enumerate() {
            self.data[r][j] = x;
        }
    }
}

/// Column Hermite normal form over `Q[z]`.
///
/// Rows are processed bottom-up; each row's entries among the still-free
/// columns are gathered into the rightmost free column with extended gcd
/// steps (unimodular 2x2 column operations), and the pivot is made monic.
/// Afterwards every entry to the right of a pivot is reduced modulo it,
/// in decreasing row order so later reductions do not disturb earlier ones.
/// For a nonsingular square input the result is upper triangular with
/// monic pivots on the diagonal. The column span is preserved.
pub fn hnf(m: &PolyMatrix) -> PolyMatrix {
    let mut h = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut free_end = h.cols; // columns [0, free_end) are unassigned
    for r in (0..h.rows).rev() {
        if free_end == 0 {
            break;
        }
        let pc = free_end - 1;
        for j in 0..pc {
            let b = h.data[r][j].clone();
            if b.is_zero() {
                continue;
            }
            let a = h.data[r][pc].clone();
            if a.is_zero() {
                let cj = h.column(j);
                let cp = h.column(pc);
                h.set_column(pc, cj);
                h.set_column(j, cp);
                continue;
            }
            let (g, s, t) = QPoly::xgcd(&a, &b);
            let bg = b.div_exact(&g).expect("gcd divides");
            let ag = a.div_exact(&g).expect("gcd divides");
            let new_p = h.col_combine(pc, &s, j, &t);
            let new_j = h.col_combine(pc, &bg, j, &-&ag);
            h.set_column(pc, new_p);
            h.set_column(j, new_j);
        }
        if h.data[r][pc].is_zero() {
            continue;
        }
        let inv = h.data[r][pc].lead().expect("nonzero").recip();
        let col: Vec<QPoly> = h.column(pc).iter().map(|x| x.scale(&inv)).collect();
        h.set_column(pc, col);
        pivots.push((r, pc));
        free_end -= 1;
    }
    // pivots were found bottom-up, i.e. in decreasing row order
    for &(r, c) in &pivots {
        let p = h.data[r][c].clone();
        for c2 in c + 1..h.cols {
            let (q, _) = h.data[r][c2].div_rem(&p);
            if q.is_zero() {
                continue;
            }
            let col = h.col_combine(c2, &QPoly::one(), c, &-&q);
            h.set_column(c2, col);
        }
    }
    h
}
