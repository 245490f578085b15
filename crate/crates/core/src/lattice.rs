//! Integral lattices: symmetric bilinear forms over Z.
//!
//! A lattice here is a free Z-module of finite rank with a symmetric
//! integer Gram matrix. For a closed oriented 4-manifold the middle
//! homology modulo torsion carries exactly such a form; the manifold is
//! spin precisely when the form is even (all squares even), and Poincare
//! duality makes it unimodular. The invariants exposed here are the
//! inertia triple (b_plus, b_minus, b_zero) and the signature
//! sigma = b_plus - b_minus, computed exactly by symmetric congruence
//! elimination over the rationals. By Sylvester's law of inertia the
//! triple does not depend on the elimination choices.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Inertia data of a symmetric form: positive, negative, and null counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureData {
    /// Dimension of a maximal positive-definite subspace.
    pub b_plus: usize,
    /// Dimension of a maximal negative-definite subspace.
    pub b_minus: usize,
    /// Dimension of the radical (degenerate directions).
    pub b_zero: usize,
    /// Signature `b_plus - b_minus`.
    pub sigma: i64,
}

/// Free Z-module with a symmetric integer Gram matrix.
pub struct Lattice<T> {
    gram: Matrix<T>,
    sig: OnceLock<SignatureData>,
}

impl<T: Scalar> Lattice<T> {
    /// Wraps a Gram matrix, rejecting non-square or non-symmetric input.
    pub fn new(gram: Matrix<T>) -> Result<Self> {
        if gram.nrows() != gram.ncols() {
            return Err(Error::NotSquare {
                rows: gram.nrows(),
                cols: gram.ncols(),
            });
        }
        if let Some((row, col)) = gram.symmetry_violation() {
            return Err(Error::NonSymmetric { row, col });
        }
        Ok(Lattice {
            gram,
            sig: OnceLock::new(),
        })
    }

    /// Builds a lattice from Gram rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    /// Builds a lattice from machine-integer literals. Panics on invalid
    /// input, so it is only for constants that are correct by construction.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(Matrix::from_i64(rows)).expect("literal Gram matrix must be symmetric")
    }

    /// The hyperbolic plane `H`: rank 2, Gram [[0,1],[1,0]].
    ///
    /// This is the intersection form of `S^2 x S^2`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_i64(&[&[0, 1], &[1, 0]])
    }

    /// The `E8` lattice: positive definite, even, unimodular, rank 8.
    ///
    /// Basis: simple roots in Bourbaki order, so the Gram matrix is the
    /// `E8` Cartan matrix with 2 on the diagonal and -1 at the adjacencies
    /// (1,3), (2,4), (3,4), (4,5), (5,6), (6,7), (7,8) in 1-based labels.
    pub fn e8() -> Self {
        let mut g = Matrix::<T>::zeros(8, 8);
        for i in 0..8 {
            g[(i, i)] = T::from_int(2);
        }
        for &(a, b) in &[(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
            g[(a, b)] = T::from_int(-1);
            g[(b, a)] = T::from_int(-1);
        }
        Lattice {
            gram: g,
            sig: OnceLock::new(),
        }
    }

    /// The negative definite `-E8` lattice.
    pub fn minus_e8() -> Self {
        Self::e8().negate()
    }

    /// The K3 intersection form `3H + 2(-E8)`: rank 22, signature -16.
    ///
    /// Block order is frozen as H, H, H, -E8, -E8 so that basis-dependent
    /// constructions (block swaps, twist vectors) are reproducible.
    pub fn k3() -> Self {
        let h = Self::hyperbolic_plane();
        let me8 = Self::minus_e8();
        h.direct_sum(&h)
            .direct_sum(&h)
            .direct_sum(&me8)
            .direct_sum(&me8)
    }

    /// Borrows the Gram matrix.
    pub fn gram(&self) -> &Matrix<T> {
        &self.gram
    }

    /// Rank of the underlying free module.
    pub fn rank(&self) -> usize {
        self.gram.nrows()
    }

    /// Orthogonal direct sum: block-diagonal Gram matrix.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Lattice {
            gram: self.gram.block_diag(&other.gram),
            sig: OnceLock::new(),
        }
    }

    /// The same module with the negated form (orientation reversal).
    pub fn negate(&self) -> Self {
        Lattice {
            gram: self.gram.map(|x| -x.clone()),
            sig: OnceLock::new(),
        }
    }

    /// First basis index with odd self-intersection, if any.
    pub fn even_violation(&self) -> Option<usize> {
        (0..self.rank()).find(|&i| self.gram[(i, i)].is_odd())
    }

    /// Whether every square is even (the spin condition).
    pub fn is_even(&self) -> bool {
        self.even_violation().is_none()
    }

    /// Exact determinant of the Gram matrix.
    pub fn determinant(&self) -> T {
        self.gram
            .determinant()
            .expect("gram matrix is square by construction")
    }

    /// Whether the form is unimodular (determinant +-1).
    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs() == T::one()
    }

    /// Pairing of two coordinate vectors: `u^T G v`.
    pub fn inner_product(&self, u: &[T], v: &[T]) -> Result<T> {
        let n = self.rank();
        if u.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.len(),
            });
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let gv = self.gram.mul_vec(v);
        let mut acc = T::zero();
        for i in 0..n {
            if !u[i].is_zero() && !gv[i].is_zero() {
                acc = acc + u[i].clone() * gv[i].clone();
            }
        }
        Ok(acc)
    }

    /// Inertia and signature, computed once and cached.
    pub fn signature(&self) -> SignatureData {
        *self.sig.get_or_init(|| inertia(&self.gram))
    }

    /// Signature `b_plus - b_minus`.
    pub fn sigma(&self) -> i64 {
        self.signature().sigma
    }

    /// Positive inertia index.
    pub fn b_plus(&self) -> usize {
        self.signature().b_plus
    }

    /// Negative inertia index.
    pub fn b_minus(&self) -> usize {
        self.signature().b_minus
    }

    /// Radical dimension.
    pub fn b_zero(&self) -> usize {
        self.signature().b_zero
    }
}

impl<T: Scalar> Clone for Lattice<T> {
    fn clone(&self) -> Self {
        Lattice {
            gram: self.gram.clone(),
            sig: self.sig.clone(),
        }
    }
}

impl<T: Scalar> PartialEq for Lattice<T> {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}

impl<T: Scalar> Eq for Lattice<T> {}

impl<T: Scalar> Hash for Lattice<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gram.hash(state);
    }
}

impl<T: Scalar> fmt::Debug for Lattice<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice").field("gram", &self.gram).finish()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Lattice<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gram)
    }
}

/// Inertia of a symmetric matrix by congruence elimination over Q.
///
/// Symmetric row-and-column operations preserve the congruence class, so
/// reading signs off the resulting diagonal is Sylvester's law of inertia.
/// When every remaining diagonal entry vanishes but some off-diagonal entry
/// `a[i][j]` survives, the basis change `e_i -> e_i + e_j` exposes the
/// nonzero diagonal entry `2 a[i][j]` and elimination proceeds.
#[allow(clippy::needless_range_loop)]
pub(crate) fn inertia<T: Scalar>(gram: &Matrix<T>) -> SignatureData {
    let n = gram.nrows();
    let mut a: Vec<Vec<Ratio<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(gram[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut b_plus = 0usize;
    let mut b_minus = 0usize;
    let mut b_zero = 0usize;

    for k in 0..n {
        if a[k][k].is_zero() {
            // Prefer an honest diagonal pivot further down.
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                sym_swap(&mut a, k, i);
            } else {
                // All remaining diagonals vanish. Look for any coupling.
                let mut found = None;
                'outer: for i in k..n {
                    for j in i + 1..n {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    Some((i, j)) => {
                        sym_add(&mut a, i, j, &Ratio::from_integer(T::one()));
                        sym_swap(&mut a, k, i);
                    }
                    None => {
                        b_zero += n - k;
                        break;
                    }
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            b_plus += 1;
        } else {
            b_minus += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = -(a[i][k].clone() / pivot.clone());
            sym_add(&mut a, i, k, &f);
        }
    }

    SignatureData {
        b_plus,
        b_minus,
        b_zero,
        sigma: b_plus as i64 - b_minus as i64,
    }
}

/// Symmetric swap of basis vectors `i` and `j`.
fn sym_swap<T: Scalar>(a: &mut [Vec<Ratio<T>>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Congruence by the basis change `e_i -> e_i + f * e_j`.
#[allow(clippy::needless_range_loop)]
fn sym_add<T: Scalar>(a: &mut [Vec<Ratio<T>>], i: usize, j: usize, f: &Ratio<T>) {
    let n = a.len();
    for col in 0..n {
        let delta = f.clone() * a[j][col].clone();
        if !delta.is_zero() {
            a[i][col] = a[i][col].clone() + delta;
        }
    }
    for row in a.iter_mut() {
        let delta = f.clone() * row[j].clone();
        if !delta.is_zero() {
            row[i] = row[i].clone() + delta;
        }
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type L = Lattice<BigInt>;

    fn sig(l: &L) -> (usize, usize, usize, i64) {
        let s = l.signature();
        (s.b_plus, s.b_minus, s.b_zero, s.sigma)
    }

    #[test]
    fn hyperbolic_plane_invariants() {
        let h = L::hyperbolic_plane();
        assert_eq!(sig(&h), (1, 1, 0, 0));
        assert!(h.is_even());
        assert!(h.is_unimodular());
        assert_eq!(h.determinant(), BigInt::from(-1));
    }

    #[test]
    fn e8_is_positive_definite_even_unimodular() {
        let e8 = L::e8();
        assert_eq!(sig(&e8), (8, 0, 0, 8));
        assert!(e8.is_even());
        assert!(e8.is_unimodular());
        assert_eq!(e8.determinant(), BigInt::from(1));
    }

    #[test]
    fn minus_e8_invariants() {
        let m = L::minus_e8();
        assert_eq!(sig(&m), (0, 8, 0, -8));
        assert!(m.is_even());
        assert!(m.is_unimodular());
    }

    #[test]
    fn k3_form_invariants() {
        let k3 = L::k3();
        assert_eq!(k3.rank(), 22);
        assert_eq!(sig(&k3), (3, 19, 0, -16));
        assert!(k3.is_even());
        assert!(k3.is_unimodular());
        assert_eq!(k3.determinant(), BigInt::from(-1));
    }

    #[test]
    fn direct_sum_adds_inertia() {
        let s = L::k3().direct_sum(&L::hyperbolic_plane());
        assert_eq!(s.rank(), 24);
        assert_eq!(sig(&s), (4, 20, 0, -16));
    }

    #[test]
    fn negate_swaps_inertia() {
        let n = L::k3().negate();
        assert_eq!(sig(&n), (19, 3, 0, 16));
    }

    #[test]
    fn degenerate_directions_are_counted() {
        let z = L::from_i64(&[&[0]]);
        assert_eq!(sig(&z), (0, 0, 1, 0));
        let mixed = L::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(sig(&mixed), (1, 0, 1, 1));
        assert!(!mixed.is_unimodular());
    }

    #[test]
    fn odd_lattice_detected() {
        let odd = L::from_i64(&[&[1]]);
        assert!(!odd.is_even());
        assert_eq!(odd.even_violation(), Some(0));
    }

    #[test]
    fn inner_product_matches_gram() {
        let h = L::hyperbolic_plane();
        let one = BigInt::from(1);
        let zero = BigInt::from(0);
        let e = vec![one.clone(), zero.clone()];
        let f = vec![zero.clone(), one.clone()];
        assert_eq!(h.inner_product(&e, &f).unwrap(), BigInt::from(1));
        assert_eq!(h.inner_product(&e, &e).unwrap(), BigInt::from(0));
        let d = vec![one.clone(), one.clone()];
        assert_eq!(h.inner_product(&d, &d).unwrap(), BigInt::from(2));
    }

    #[test]
    fn inner_product_checks_dimensions() {
        let h = L::hyperbolic_plane();
        let short = vec![BigInt::from(1)];
        let ok = vec![BigInt::from(1), BigInt::from(0)];
        assert_eq!(
            h.inner_product(&short, &ok),
            Err(crate::error::Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn non_symmetric_gram_rejected() {
        let err = L::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(2), BigInt::from(0)],
        ])
        .unwrap_err();
        assert_eq!(err, crate::error::Error::NonSymmetric { row: 0, col: 1 });
    }
}
