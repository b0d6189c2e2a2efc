//! Finite-codimension `Q[z]`-submodules of `L_0 = Q[z]^m` and the
//! Mirković–Vybornov chart.
//!
//! Conventions:
//!
//! - A lattice is the column span of a square nonsingular generator matrix.
//!   Its canonical form is the column Hermite normal form ([`hnf`]): upper
//!   triangular, monic diagonal pivots, entries right of a pivot reduced
//!   modulo it. Two lattices are equal iff their normal forms agree.
//! - The quotient `L_0 / L` has the monomial basis `z^t e_a` with
//!   `t < deg(pivot_a)`, ordered by `a` then `t`.
//! - [`Lattice::ch`] is the monic characteristic polynomial of `z` on the
//!   quotient, in a variable `x`. With `x^k + c_1 x^(k-1) + ... + c_k` the
//!   elementary symmetric functions of the eigenvalues are
//!   `e_i = (-1)^i c_i`. Under the `C^*`-action `deg z = 2`, so `e_i` has
//!   weight `2i`.
//! - [`perp`] uses the coordinate bilinear form `(v, w) = Σ v_a w_a`.

mod matrix;
mod mv;
mod poly;
mod suite;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::weights::Weight;

pub use matrix::{hnf, PolyMatrix, QMatrix};
pub use mv::{free_positions, in_x_mu, lattice_to_mv, mv_to_lattice, num_free, MVMatrix};
pub use poly::QPoly;
pub use suite::{check_mv, MvConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("generator matrix is singular")]
    Singular,
    #[error("generator matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix violates the block pattern for mu = {mu:?}: {why}")]
    Pattern { mu: Vec<usize>, why: String },
    #[error("lattice is not in the chart for mu = {0:?}")]
    NotInChart(Vec<usize>),
}

/// A finite-codimension submodule of `Q[z]^m`.
#[derive(Clone, Debug)]
pub struct Lattice {
    gens: PolyMatrix,
    hnf: PolyMatrix,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn new(gens: PolyMatrix) -> Result<Self, MvError> {
        if !gens.is_square() {
            return Err(MvError::NotSquare(gens.nrows(), gens.ncols()));
        }
        let h = hnf(&gens);
        if (0..h.nrows()).any(|i| h.get(i, i).is_zero()) {
            return Err(MvError::Singular);
        }
        Ok(Self { gens, hnf: h })
    }

    /// `L_0` itself.
    pub fn full(m: usize) -> Self {
        Self::new(PolyMatrix::identity(m)).expect("identity is nonsingular")
    }

    pub fn diag(entries: Vec<QPoly>) -> Result<Self, MvError> {
        Self::new(PolyMatrix::diag(entries))
    }

    pub fn m(&self) -> usize {
        self.gens.nrows()
    }

    pub fn gens(&self) -> &PolyMatrix {
        &self.gens
    }

    pub fn hnf(&self) -> &PolyMatrix {
        &self.hnf
    }

    fn pivot_degrees(&self) -> Vec<usize> {
        (0..self.m())
            .map(|i| self.hnf.get(i, i).degree().expect("nonzero pivot"))
            .collect()
    }

    /// `dim L_0 / L` as the sum of pivot degrees.
    pub fn codim(&self) -> usize {
        self.pivot_degrees().iter().sum()
    }

    /// `dim L_0 / L` as `deg det(gens)`; always equals [`Lattice::codim`].
    pub fn det_degree(&self) -> usize {
        self.gens.det().degree().expect("nonsingular")
    }

    /// Membership by back-substitution against the normal form.
    pub fn contains(&self, v: &[QPoly]) -> bool {
        let m = self.m();
        assert_eq!(v.len(), m, "vector has the wrong length");
        let mut rest = v.to_vec();
        for j in (0..m).rev() {
            let Some(c) = rest[j].div_exact(self.hnf.get(j, j)) else {
                return false;
            };
            for (i, slot) in rest.iter_mut().enumerate().take(j + 1) {
                *slot = &*slot - &(&c * self.hnf.get(i, j));
            }
        }
        rest.iter().all(QPoly::is_zero)
    }

    /// `other ⊆ self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.gens.columns().iter().all(|c| self.contains(c))
    }

    /// Remainder of `v` modulo `L`: every coordinate `a` has degree below
    /// the `a`-th pivot.
    pub fn normal_form(&self, v: &[QPoly]) -> Vec<QPoly> {
        let mut rest = v.to_vec();
        for j in (0..self.m()).rev() {
            let (c, _) = rest[j].div_rem(self.hnf.get(j, j));
            if c.is_zero() {
                continue;
            }
            for (i, slot) in rest.iter_mut().enumerate().take(j + 1) {
                *slot = &*slot - &(&c * self.hnf.get(i, j));
            }
        }
        rest
    }

    /// Labels `(a, t)` of the monomial quotient basis `z^t e_a`.
    pub fn quotient_basis(&self) -> Vec<(usize, usize)> {
        self.pivot_degrees()
            .iter()
            .enumerate()
            .flat_map(|(a, &d)| (0..d).map(move |t| (a, t)))
            .collect()
    }

    /// Coordinates of `[v]` in [`Lattice::quotient_basis`].
    pub fn quotient_coords(&self, v: &[QPoly]) -> Vec<BigRational> {
        let nf = self.normal_form(v);
        self.quotient_basis()
            .iter()
            .map(|&(a, t)| nf[a].coeff(t))
            .collect()
    }

    /// The quotient basis and the matrix of multiplication by `z` on it.
    pub fn quotient_action(&self) -> (Vec<(usize, usize)>, QMatrix) {
        let basis = self.quotient_basis();
        let k = basis.len();
        let mut zm = QMatrix::zeros(k, k);
        for (col, &(a, t)) in basis.iter().enumerate() {
            let coords = self.quotient_coords(&unit_monomial(self.m(), a, t + 1));
            for (row, x) in coords.into_iter().enumerate() {
                zm.set(row, col, x);
            }
        }
        (basis, zm)
    }

    /// Monic characteristic polynomial of `z` on `L_0 / L`.
    pub fn ch(&self) -> QPoly {
        self.quotient_action().1.charpoly()
    }

    /// `dim (L ∩ W_p)` where `W_p` is spanned by `z^t e_a`, `t < p`:
    /// the kernel dimension of `W_p -> L_0 / L`.
    pub fn dim_intersection_w(&self, p: usize) -> usize {
        let m = self.m();
        let k = self.codim();
        let mut map = QMatrix::zeros(k, m * p);
        let mut col = 0;
        for a in 0..m {
            for t in 0..p {
                for (row, x) in self
                    .quotient_coords(&unit_monomial(m, a, t))
                    .into_iter()
                    .enumerate()
                {
                    map.set(row, col, x);
                }
                col += 1;
            }
        }
        m * p - map.rank()
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.hnf.to_json()
    }
}

/// `z^t e_a` in `Q[z]^m`.
fn unit_monomial(m: usize, a: usize, t: usize) -> Vec<QPoly> {
    let mut v = vec![QPoly::zero(); m];
    v[a] = QPoly::monomial(BigRational::one(), t);
    v
}

/// Whether `L` lies in the open locus of codimension-`k` lattices: with
/// `k = q m + r`, `L ∩ W_q = 0` and `dim L ∩ W_{q+1} = m - r`.
pub fn in_x0(k: usize, l: &Lattice) -> bool {
    let m = l.m();
    if l.codim() != k {
        return false;
    }
    let (q, r) = (k / m, k % m);
    l.dim_intersection_w(q) == 0 && l.dim_intersection_w(q + 1) == m - r
}

/// The column span of `numer / denom` inside `Q(z)^m`.
///
/// Canonical: `denom` monic, `gcd(denom, all entries of numer) = 1`, and
/// `numer` in column Hermite normal form. `denom` is then the least
/// polynomial clearing every denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    denom: QPoly,
    numer: PolyMatrix,
}

impl RationalLattice {
    pub fn new(numer: PolyMatrix, denom: QPoly) -> Result<Self, MvError> {
        if denom.is_zero() {
            return Err(MvError::Singular);
        }
        if !numer.is_square() {
            return Err(MvError::NotSquare(numer.nrows(), numer.ncols()));
        }
        let lead_inv = denom.lead().expect("nonzero").recip();
        let denom = denom.scale(&lead_inv);
        let numer = numer.map(|x| x.scale(&lead_inv));
        let mut g = denom.clone();
        for c in numer.columns() {
            for x in c {
                g = g.gcd(&x);
            }
        }
        let numer = numer.map(|x| x.div_exact(&g).expect("gcd divides"));
        let denom = denom.div_exact(&g).expect("gcd divides");
        let numer = hnf(&numer);
        if (0..numer.nrows()).any(|i| numer.get(i, i).is_zero()) {
            return Err(MvError::Singular);
        }
        Ok(Self { denom, numer })
    }

    pub fn from_lattice(l: &Lattice) -> Self {
        Self {
            denom: QPoly::one(),
            numer: l.hnf.clone(),
        }
    }

    pub fn denom(&self) -> &QPoly {
        &self.denom
    }

    pub fn numer(&self) -> &PolyMatrix {
        &self.numer
    }

    /// `Some` when the span is a polynomial lattice.
    pub fn as_lattice(&self) -> Option<Lattice> {
        if self.denom.is_one() {
            Lattice::new(self.numer.clone()).ok()
        } else {
            None
        }
    }

    /// `L_0 ⊆ self`: every `denom * e_a` lies in the span of `numer`.
    pub fn contains_l0(&self) -> bool {
        let m = self.numer.nrows();
        let span = Lattice::new(self.numer.clone()).expect("canonical numerators are nonsingular");
        (0..m).all(|a| {
            let mut v = vec![QPoly::zero(); m];
            v[a] = self.denom.clone();
            span.contains(&v)
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "denom": self.denom.to_string(),
            "numer": self.numer.to_json(),
        })
    }
}

/// `{v : (v, w) ∈ Q[z] for all w ∈ L}` for the coordinate form: the span of
/// `G^-T` when `L` is spanned by `G`.
pub fn perp(l: &RationalLattice) -> Result<RationalLattice, MvError> {
    // (N / d)^-T = d adj(N)^T / det N
    let det = l.numer.det();
    if det.is_zero() {
        return Err(MvError::Singular);
    }
    let numer = l.numer.adjugate().transpose().map(|x| x * &l.denom);
    RationalLattice::new(numer, det)
}

/// `perp` of a polynomial lattice.
pub fn perp_lattice(l: &Lattice) -> Result<RationalLattice, MvError> {
    perp(&RationalLattice::from_lattice(l))
}

/// A chain `L_0 ⊇ L_1 ⊇ ... ⊇ L_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFlag(pub Vec<Lattice>);

/// Stepwise containment and codimension steps `k_i`.
pub fn validate_flag(flag: &LatticeFlag, k: &Weight) -> bool {
    let chain = &flag.0;
    if chain.is_empty() || chain.len() != k.rank() + 1 {
        return false;
    }
    chain.windows(2).zip(k.entries()).all(|(pair, &step)| {
        pair[0].contains_lattice(&pair[1])
            && pair[1].codim() as i64 - pair[0].codim() as i64 == step
    })
}

/// `Σ_a v_a w_a`.
pub fn coordinate_form(v: &[QPoly], w: &[QPoly]) -> QPoly {
    v.iter()
        .zip(w)
        .fold(QPoly::zero(), |acc, (a, b)| &acc + &(a * b))
}

#[cfg(test)]
mod tests {
    use super::poly::rat;
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn codim_examples() {
        let l = Lattice::diag(vec![p(&[0, 0, 1]), p(&[1])]).unwrap();
        assert_eq!(l.codim(), 2);
        assert_eq!(l.det_degree(), 2);
        let u = Lattice::new(PolyMatrix::from_rows(vec![
            vec![p(&[1]), p(&[0, 1])],
            vec![p(&[0]), p(&[3])],
        ]))
        .unwrap();
        assert_eq!(u.codim(), 0);
        assert_eq!(u, Lattice::full(2));
        assert_eq!(
            Lattice::diag(vec![p(&[0]), p(&[1])]),
            Err(MvError::Singular)
        );
    }

    #[test]
    fn quotient_examples() {
        let l = Lattice::diag(vec![p(&[0, 0, 1]), p(&[1])]).unwrap();
        let (basis, zm) = l.quotient_action();
        assert_eq!(basis, vec![(0, 0), (0, 1)]);
        assert_eq!(zm, QMatrix::from_ints(&[&[0, 0], &[1, 0]]));

        let c = Lattice::diag(vec![p(&[-5, 1]), p(&[1]), p(&[1])]).unwrap();
        let (basis, zm) = c.quotient_action();
        assert_eq!(basis.len(), 1);
        assert_eq!(zm, QMatrix::from_ints(&[&[5]]));

        let (basis, zm) = Lattice::full(3).quotient_action();
        assert!(basis.is_empty());
        assert_eq!((zm.nrows(), zm.ncols()), (0, 0));
    }

    #[test]
    fn ch_examples() {
        let l = Lattice::diag(vec![p(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(l.ch(), p(&[0, 0, 0, 1]));
        let l = Lattice::diag(vec![p(&[-3, 1]), p(&[1])]).unwrap();
        assert_eq!(l.ch(), p(&[-3, 1]));
    }

    #[test]
    fn open_locus_examples() {
        let l = Lattice::diag(vec![p(&[0, 1]), p(&[0, 1])]).unwrap();
        assert!(in_x0(2, &l));
        let l = Lattice::diag(vec![p(&[0, 0, 1]), p(&[1])]).unwrap();
        assert!(!in_x0(2, &l));
        for k in 0..5 {
            let l = Lattice::diag(vec![QPoly::monomial(rat(1), k)]).unwrap();
            assert!(in_x0(k, &l));
        }
    }

    #[test]
    fn intersection_bounds() {
        let l = Lattice::new(PolyMatrix::from_rows(vec![
            vec![p(&[0, 0, 1]), p(&[1, 1])],
            vec![p(&[0]), p(&[2, 0, 1])],
        ]))
        .unwrap();
        let k = l.codim();
        let mut last = 0;
        for q in 0..6 {
            let d = l.dim_intersection_w(q);
            assert!(d >= last);
            assert!(d as i64 >= (2 * q) as i64 - k as i64);
            last = d;
        }
    }

    #[test]
    fn perp_examples() {
        let l = Lattice::diag(vec![p(&[-2, 1])]).unwrap();
        let lp = perp_lattice(&l).unwrap();
        assert_eq!(lp.denom(), &p(&[-2, 1]));
        assert!(lp.contains_l0());
        // (f / (z-2), (z-2) g) = f g
        let w = l.gens().column(0);
        let v = vec![p(&[7, 1])];
        assert_eq!(coordinate_form(&v, &w), &p(&[7, 1]) * &p(&[-2, 1]));
        assert_eq!(perp(&lp).unwrap().as_lattice().unwrap(), l);
        let full = Lattice::full(2);
        assert_eq!(perp_lattice(&full).unwrap().as_lattice().unwrap(), full);
    }

    #[test]
    fn flags() {
        let a = Lattice::full(2);
        let b = Lattice::diag(vec![p(&[0, 1]), p(&[1])]).unwrap();
        let c = Lattice::diag(vec![p(&[0, 1]), p(&[0, 1])]).unwrap();
        let flag = LatticeFlag(vec![a.clone(), b, c]);
        assert!(validate_flag(&flag, &Weight::new(vec![1, 1])));
        assert!(!validate_flag(&flag, &Weight::new(vec![2, 0])));
        assert!(validate_flag(
            &LatticeFlag(vec![a]),
            &Weight::new(Vec::<i64>::new())
        ));
    }
}
