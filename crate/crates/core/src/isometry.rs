//! Isometries of a lattice and their fixed-point data.
//!
//! An isometry is an integer matrix `m` with `m^T G m = G` and
//! `det m = +-1`, acting on column vectors. Two geometric sources matter
//! here. A smoothly embedded 2-sphere of self-intersection +-2 induces the
//! reflection-type twist `x -> x -+ <x,v> v` on homology, which is an
//! involution fixing the orthogonal complement of the sphere class. And a
//! finite-order diffeomorphism induces a finite-order isometry, whose
//! fixed sublattice `ker(m - 1)` carries the restricted form; its inertia
//! is the input to the realizability checks in [`crate::obstruction`].
//!
//! The fixed sublattice is computed as an integer kernel, which is
//! automatically saturated (primitively embedded), so restricting the Gram
//! matrix to it gives well-defined invariants.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{inertia, Lattice, SignatureData};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default cap for [`Isometry::order_default`].
pub const DEFAULT_ORDER_CAP: usize = 120;

/// The two allowed squares of an embedded sphere class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphereClass {
    /// Self-intersection +2.
    PlusTwo,
    /// Self-intersection -2.
    MinusTwo,
}

impl SphereClass {
    /// The self-intersection number as an integer.
    pub fn square(self) -> i64 {
        match self {
            SphereClass::PlusTwo => 2,
            SphereClass::MinusTwo => -2,
        }
    }

    /// Classifies a declared square, rejecting anything besides +-2.
    pub fn from_square(square: i64) -> Result<Self> {
        match square {
            2 => Ok(SphereClass::PlusTwo),
            -2 => Ok(SphereClass::MinusTwo),
            other => Err(Error::InvalidSelfIntersection {
                found: other.to_string(),
            }),
        }
    }
}

/// Signature data of the form restricted to the fixed sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantSignatureData {
    /// Positive inertia index of the restricted form.
    pub b_plus_inv: usize,
    /// Negative inertia index of the restricted form.
    pub b_minus_inv: usize,
    /// Radical dimension of the restricted form.
    pub b_zero_inv: usize,
    /// Signature of the restricted form.
    pub sigma_inv: i64,
    /// Rank of the fixed sublattice.
    pub fixed_rank: usize,
    /// How much positivity the fixed part misses: `b_plus - b_plus_inv`.
    pub codimension_b_plus: usize,
}

/// A form-preserving automorphism of a lattice.
pub struct Isometry<T> {
    lattice: Lattice<T>,
    matrix: Matrix<T>,
}

impl<T: Scalar> Clone for Isometry<T> {
    fn clone(&self) -> Self {
        Isometry {
            lattice: self.lattice.clone(),
            matrix: self.matrix.clone(),
        }
    }
}

impl<T: Scalar> PartialEq for Isometry<T> {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.matrix == other.matrix
    }
}

impl<T: Scalar> Eq for Isometry<T> {}

impl<T: Scalar> Isometry<T> {
    /// Validates and wraps a matrix: it must be square of the right size,
    /// preserve the Gram matrix, and be invertible over Z.
    pub fn new(lattice: &Lattice<T>, matrix: Matrix<T>) -> Result<Self> {
        let n = lattice.rank();
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.nrows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.nrows(),
            });
        }
        let g = lattice.gram();
        let preserved = matrix.transpose().mul(&g.mul(&matrix)) == *g;
        if !preserved {
            return Err(Error::NotAnIsometry);
        }
        let det = matrix.determinant()?;
        if det.abs() != T::one() {
            return Err(Error::NotAnIsometry);
        }
        Ok(Isometry {
            lattice: lattice.clone(),
            matrix,
        })
    }

    /// Wraps a matrix known to be an isometry by construction, skipping the
    /// cubic validation. Callers must guarantee validity; debug builds
    /// re-check.
    pub(crate) fn trusted(lattice: Lattice<T>, matrix: Matrix<T>) -> Self {
        debug_assert!(
            matrix.transpose().mul(&lattice.gram().mul(&matrix)) == *lattice.gram(),
            "trusted isometry must preserve the form"
        );
        Isometry { lattice, matrix }
    }

    /// The identity isometry.
    pub fn identity(lattice: &Lattice<T>) -> Self {
        let n = lattice.rank();
        Isometry {
            lattice: lattice.clone(),
            matrix: Matrix::identity(n),
        }
    }

    /// Borrows the acting matrix.
    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// Borrows the underlying lattice.
    pub fn lattice(&self) -> &Lattice<T> {
        &self.lattice
    }

    /// Twist along an embedded sphere class of square +-2.
    ///
    /// For `<v,v> = -2` this is `x -> x + <x,v> v`; for `<v,v> = +2` it is
    /// `x -> x - <x,v> v`. Both are involutions fixing the orthogonal
    /// complement of `v` and sending `v` to `-v`. Any other square is
    /// rejected.
    pub fn dehn_twist(lattice: &Lattice<T>, v: &[T]) -> Result<Self> {
        let n = lattice.rank();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let square = lattice.inner_product(v, v)?;
        let two = T::from_int(2);
        let sign = if square == -two.clone() {
            T::one()
        } else if square == two {
            -T::one()
        } else {
            return Err(Error::InvalidSelfIntersection {
                found: square.to_string(),
            });
        };
        let gv = lattice.gram().mul_vec(v);
        let mut m: Matrix<T> = Matrix::identity(n);
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if gv[j].is_zero() {
                    continue;
                }
                let delta = sign.clone() * v[i].clone() * gv[j].clone();
                m[(i, j)] = m[(i, j)].clone() + delta;
            }
        }
        Ok(Self::trusted(lattice.clone(), m))
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.lattice != other.lattice {
            return Err(Error::LatticeMismatch);
        }
        Ok(Self::trusted(
            self.lattice.clone(),
            self.matrix.mul(&other.matrix),
        ))
    }

    /// Multiplicative order, or an error if no power up to `cap` is the
    /// identity.
    pub fn order(&self, cap: usize) -> Result<usize> {
        let mut power = self.matrix.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Ok(k);
            }
            power = power.mul(&self.matrix);
        }
        Err(Error::OrderExceedsCap { cap })
    }

    /// Multiplicative order with the default cap of [`DEFAULT_ORDER_CAP`].
    pub fn order_default(&self) -> Result<usize> {
        self.order(DEFAULT_ORDER_CAP)
    }

    /// Whether the square is the identity (includes the identity itself).
    pub fn is_involution(&self) -> bool {
        self.matrix.mul(&self.matrix).is_identity()
    }

    /// Whether this is the identity map.
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Whether the induced map on homology is trivial. A diffeomorphism
    /// acting this way can still be smoothly nontrivial; the checkers in
    /// [`crate::obstruction`] quantify when it cannot even exist.
    pub fn is_homologically_trivial(&self) -> bool {
        self.is_identity()
    }

    /// Basis of the fixed sublattice `ker(m - 1)`, as matrix rows in
    /// Hermite form. The basis is saturated in the ambient lattice.
    pub fn fixed_sublattice_basis(&self) -> Matrix<T> {
        let n = self.lattice.rank();
        self.matrix.sub(&Matrix::identity(n)).integer_kernel()
    }

    /// Basis of the anti-fixed sublattice `ker(m + 1)`, as matrix rows.
    pub fn anti_fixed_sublattice_basis(&self) -> Matrix<T> {
        let n = self.lattice.rank();
        self.matrix.add(&Matrix::identity(n)).integer_kernel()
    }

    /// Gram matrix of the form restricted to the fixed sublattice.
    pub fn fixed_gram(&self) -> Matrix<T> {
        let k = self.fixed_sublattice_basis();
        k.mul(&self.lattice.gram().mul(&k.transpose()))
    }

    /// Inertia of the form restricted to the fixed sublattice, together
    /// with the ambient comparison `b_plus - b_plus_inv` that the
    /// realizability inequalities consume.
    pub fn invariant_signature(&self) -> InvariantSignatureData {
        let k = self.fixed_sublattice_basis();
        let restricted = k.mul(&self.lattice.gram().mul(&k.transpose()));
        let s: SignatureData = inertia(&restricted);
        let ambient = self.lattice.signature();
        debug_assert!(
            s.b_plus <= ambient.b_plus,
            "fixed positivity cannot exceed ambient positivity"
        );
        InvariantSignatureData {
            b_plus_inv: s.b_plus,
            b_minus_inv: s.b_minus,
            b_zero_inv: s.b_zero,
            sigma_inv: s.sigma,
            fixed_rank: k.nrows(),
            codimension_b_plus: ambient.b_plus - s.b_plus,
        }
    }
}

impl<T: Scalar> fmt::Debug for Isometry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Isometry")
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Isometry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    type L = Lattice<BigInt>;
    type Iso = Isometry<BigInt>;

    fn vec_i64(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn swap_on_hyperbolic_plane_is_an_isometry_of_order_two() {
        let h = L::hyperbolic_plane();
        let swap = Iso::new(&h, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(swap.order_default().unwrap(), 2);
        assert!(swap.is_involution());
        assert!(!swap.is_identity());
    }

    #[test]
    fn shear_on_hyperbolic_plane_is_rejected() {
        let h = L::hyperbolic_plane();
        let err = Iso::new(&h, Matrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap_err();
        assert_eq!(err, Error::NotAnIsometry);
    }

    #[test]
    fn form_preserver_outside_gl_n_z_is_rejected() {
        // Doubling preserves the zero form but is not invertible over Z.
        let zero = L::from_i64(&[&[0]]);
        let err = Iso::new(&zero, Matrix::from_i64(&[&[2]])).unwrap_err();
        assert_eq!(err, Error::NotAnIsometry);
    }

    #[test]
    fn twist_along_minus_two_vector_in_hyperbolic_plane() {
        let h = L::hyperbolic_plane();
        let t = Iso::dehn_twist(&h, &vec_i64(&[1, -1])).unwrap();
        assert_eq!(*t.matrix(), Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn twist_along_plus_two_vector_in_hyperbolic_plane() {
        let h = L::hyperbolic_plane();
        let t = Iso::dehn_twist(&h, &vec_i64(&[1, 1])).unwrap();
        assert_eq!(*t.matrix(), Matrix::from_i64(&[&[0, -1], &[-1, 0]]));
    }

    #[test]
    fn twist_on_rank_one_minus_two_lattice_is_negation() {
        let l = L::from_i64(&[&[-2]]);
        let t = Iso::dehn_twist(&l, &vec_i64(&[1])).unwrap();
        assert_eq!(*t.matrix(), Matrix::from_i64(&[&[-1]]));
    }

    #[test]
    fn twist_rejects_other_squares() {
        let h = L::hyperbolic_plane();
        let err = Iso::dehn_twist(&h, &vec_i64(&[1, 2])).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidSelfIntersection {
                found: "4".to_string()
            }
        );
        let err0 = Iso::dehn_twist(&h, &vec_i64(&[1, 0])).unwrap_err();
        assert_eq!(
            err0,
            Error::InvalidSelfIntersection {
                found: "0".to_string()
            }
        );
    }

    #[test]
    fn twists_compose_to_minus_identity_on_hyperbolic_plane() {
        let h = L::hyperbolic_plane();
        let a = Iso::dehn_twist(&h, &vec_i64(&[1, -1])).unwrap();
        let b = Iso::dehn_twist(&h, &vec_i64(&[1, 1])).unwrap();
        let c = a.compose(&b).unwrap();
        assert_eq!(*c.matrix(), Matrix::from_i64(&[&[-1, 0], &[0, -1]]));
        assert_eq!(c.order_default().unwrap(), 2);
    }

    #[test]
    fn compose_requires_matching_lattices() {
        let h = L::hyperbolic_plane();
        let k3 = L::k3();
        let a = Iso::identity(&h);
        let b = Iso::identity(&k3);
        assert_eq!(a.compose(&b).unwrap_err(), Error::LatticeMismatch);
    }

    #[test]
    fn unipotent_map_exceeds_the_order_cap() {
        let zero = L::from_i64(&[&[0, 0], &[0, 0]]);
        let u = Iso::new(&zero, Matrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(
            u.order(DEFAULT_ORDER_CAP).unwrap_err(),
            Error::OrderExceedsCap {
                cap: DEFAULT_ORDER_CAP
            }
        );
    }

    #[test]
    fn swap_fixes_the_diagonal_class() {
        let h = L::hyperbolic_plane();
        let swap = Iso::new(&h, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        let inv = swap.invariant_signature();
        assert_eq!(inv.fixed_rank, 1);
        assert_eq!(
            (inv.b_plus_inv, inv.b_minus_inv, inv.b_zero_inv, inv.sigma_inv),
            (1, 0, 0, 1)
        );
        assert_eq!(inv.codimension_b_plus, 0);
    }

    #[test]
    fn identity_fixes_everything() {
        let k3 = L::k3();
        let id = Iso::identity(&k3);
        assert!(id.is_homologically_trivial());
        let inv = id.invariant_signature();
        assert_eq!(inv.fixed_rank, 22);
        assert_eq!(
            (inv.b_plus_inv, inv.b_minus_inv, inv.b_zero_inv, inv.sigma_inv),
            (3, 19, 0, -16)
        );
        assert_eq!(inv.codimension_b_plus, 0);
    }

    #[test]
    fn minus_identity_fixes_nothing() {
        let h = L::hyperbolic_plane();
        let neg = Iso::new(&h, Matrix::from_i64(&[&[-1, 0], &[0, -1]])).unwrap();
        let inv = neg.invariant_signature();
        assert_eq!(inv.fixed_rank, 0);
        assert_eq!(inv.sigma_inv, 0);
        assert_eq!(inv.codimension_b_plus, 1);
    }

    #[test]
    fn minus_two_twist_on_k3_fixes_corank_one() {
        // First basis vector of the first -E8 block has square -2.
        let k3 = L::k3();
        let mut v = vec![0i64; 22];
        v[6] = 1;
        let t = Iso::dehn_twist(&k3, &vec_i64(&v)).unwrap();
        assert!(t.is_involution());
        let inv = t.invariant_signature();
        assert_eq!(inv.fixed_rank, 21);
        assert_eq!(
            (inv.b_plus_inv, inv.b_minus_inv, inv.b_zero_inv, inv.sigma_inv),
            (3, 18, 0, -15)
        );
        assert_eq!(inv.codimension_b_plus, 0);
    }

    #[test]
    fn plus_two_twist_on_k3_plus_h_drops_positivity() {
        // The diagonal class of the extra H block has square +2.
        let l = L::k3().direct_sum(&L::hyperbolic_plane());
        let mut v = vec![0i64; 24];
        v[22] = 1;
        v[23] = 1;
        let t = Iso::dehn_twist(&l, &vec_i64(&v)).unwrap();
        assert!(t.is_involution());
        let inv = t.invariant_signature();
        assert_eq!(inv.fixed_rank, 23);
        assert_eq!(
            (inv.b_plus_inv, inv.b_minus_inv, inv.b_zero_inv, inv.sigma_inv),
            (3, 20, 0, -17)
        );
        assert_eq!(inv.codimension_b_plus, 1);
    }

    #[test]
    fn twist_negates_its_sphere_class_and_fixes_its_complement() {
        let k3 = L::k3();
        let mut v = vec![0i64; 22];
        v[6] = 1;
        let vb = vec_i64(&v);
        let t = Iso::dehn_twist(&k3, &vb).unwrap();
        let image = t.matrix().mul_vec(&vb);
        let neg: Vec<BigInt> = vb.iter().map(|x| -x.clone()).collect();
        assert_eq!(image, neg);
        // A vector orthogonal to v is fixed.
        let mut w = vec![0i64; 22];
        w[0] = 1;
        let wb = vec_i64(&w);
        assert_eq!(k3.inner_product(&vb, &wb).unwrap(), BigInt::from(0));
        assert_eq!(t.matrix().mul_vec(&wb), wb);
    }

    #[test]
    fn fixed_and_anti_fixed_ranks_are_complementary_for_twists() {
        let k3 = L::k3();
        let mut v = vec![0i64; 22];
        v[6] = 1;
        let t = Iso::dehn_twist(&k3, &vec_i64(&v)).unwrap();
        let fixed = t.fixed_sublattice_basis().nrows();
        let anti = t.anti_fixed_sublattice_basis().nrows();
        assert_eq!(fixed + anti, 22);
        assert_eq!(anti, 1);
    }
}
