//! Manifold descriptions: manifests naming a direct sum of standard
//! forms (or explicit Gram blocks) and the standard involutions carried
//! by connected sums of K3 and S2 x S2 summands.
//!
//! A manifest is the JSON input format of the command-line tool:
//!
//! ```json
//! {
//!   "label": "2K3 # S2xS2",
//!   "summands": [{"name": "K3", "count": 2}, {"name": "S2xS2"}],
//!   "spin": true,
//!   "orientation": "given"
//! }
//! ```
//!
//! Assembly is deliberately frozen: summands are laid down in manifest
//! order, each named block in its documented basis, so a basis index in
//! one run means the same thing in every run.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::Lattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Standard forms addressable by name in a manifest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum NamedForm {
    /// The K3 form `3H + 2(-E8)`, rank 22, signature -16.
    K3,
    /// The hyperbolic plane, as the form of S2 x S2.
    S2xS2,
    /// The hyperbolic plane under its lattice name.
    H,
    /// The positive definite E8 form.
    E8,
    /// The negative definite E8 form.
    #[serde(alias = "-E8")]
    MinusE8,
}

impl NamedForm {
    /// The Gram lattice of this form in its frozen basis.
    pub fn lattice<T: Scalar>(self) -> Lattice<T> {
        match self {
            NamedForm::K3 => Lattice::k3(),
            NamedForm::S2xS2 | NamedForm::H => Lattice::hyperbolic_plane(),
            NamedForm::E8 => Lattice::e8(),
            NamedForm::MinusE8 => Lattice::minus_e8(),
        }
    }
}

/// One direct summand: a named form with a multiplicity, or an explicit
/// symmetric integer Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Summand {
    /// A named standard form, repeated `count` times.
    Named {
        /// Which standard form.
        name: NamedForm,
        /// Multiplicity; defaults to 1.
        #[serde(default = "one")]
        count: u32,
    },
    /// An explicit Gram matrix.
    Gram {
        /// Row-major symmetric integer matrix.
        gram: Vec<Vec<i64>>,
    },
}

fn one() -> u32 {
    1
}

/// Whether the assembled form is taken as given or negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Use the form as written.
    #[default]
    Given,
    /// Negate the form (reverse the orientation).
    Reversed,
}

/// JSON description of a manifold's intersection form.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldManifest {
    /// Display label.
    #[serde(default)]
    pub label: String,
    /// Direct summands in assembly order.
    pub summands: Vec<Summand>,
    /// Whether the manifold is claimed to be spin. The claim is checked
    /// (the form must be even) only where a computation relies on it.
    #[serde(default)]
    pub spin: bool,
    /// Orientation convention applied after assembly.
    #[serde(default)]
    pub orientation: Orientation,
}

impl ManifoldManifest {
    /// Assembles the direct sum in manifest order, then applies the
    /// orientation. A manifest contributing no rank is an error.
    pub fn assemble<T: Scalar>(&self) -> Result<Lattice<T>> {
        let mut acc: Option<Lattice<T>> = None;
        for summand in &self.summands {
            match summand {
                Summand::Named { name, count } => {
                    let block = name.lattice::<T>();
                    for _ in 0..*count {
                        append(&mut acc, &block);
                    }
                }
                Summand::Gram { gram } => {
                    let rows: Vec<Vec<T>> = gram
                        .iter()
                        .map(|r| r.iter().map(|&x| T::from_int(x)).collect())
                        .collect();
                    let block = Lattice::from_rows(rows)?;
                    if block.rank() > 0 {
                        append(&mut acc, &block);
                    }
                }
            }
        }
        let lattice = acc.ok_or(Error::EmptyManifest)?;
        Ok(match self.orientation {
            Orientation::Given => lattice,
            Orientation::Reversed => lattice.negate(),
        })
    }
}

fn append<T: Scalar>(acc: &mut Option<Lattice<T>>, block: &Lattice<T>) {
    *acc = Some(match acc.take() {
        None => block.clone(),
        Some(sum) => sum.direct_sum(block),
    });
}

/// The factor-swap involution of S2 x S2 on the hyperbolic plane: it
/// exchanges the two basis classes. Fixed sublattice: rank 1, positive.
pub fn sphere_factor_swap<T: Scalar>() -> Isometry<T> {
    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    Isometry::trusted(Lattice::hyperbolic_plane(), swap)
}

/// The standard involution of the K3 form: the factor swap on each of
/// the three hyperbolic planes, and the coordinatewise exchange of the
/// two `-E8` blocks. Fixed sublattice: rank 11, inertia (3, 8),
/// signature -5.
pub fn k3_swap_involution<T: Scalar>() -> Isometry<T> {
    let mut m = Matrix::<T>::zeros(22, 22);
    let one = T::from_int(1);
    for h in 0..3 {
        m[(2 * h, 2 * h + 1)] = one.clone();
        m[(2 * h + 1, 2 * h)] = one.clone();
    }
    for i in 0..8 {
        m[(6 + i, 14 + i)] = one.clone();
        m[(14 + i, 6 + i)] = one.clone();
    }
    Isometry::trusted(Lattice::k3(), m)
}

/// The involution `f(m, n)` of the connected sum of `m` copies of K3 and
/// `n` copies of S2 x S2 (form `m K3 + n H`, K3 blocks first): the K3
/// involution on each K3 summand and the factor swap on each S2 x S2.
/// Fixed sublattice: rank `11m + n`, inertia `(3m + n, 8m)`, signature
/// `n - 5m`. Requires `m >= 1`.
pub fn connected_sum_involution<T: Scalar>(m: u32, n: u32) -> Result<Isometry<T>> {
    if m == 0 {
        return Err(Error::BadParameters(
            "m = 0: at least one K3 summand is required".to_string(),
        ));
    }
    let k3_part = k3_swap_involution::<T>();
    let h_part = sphere_factor_swap::<T>();
    let mut lattice = k3_part.lattice().clone();
    let mut matrix = k3_part.matrix().clone();
    for _ in 1..m {
        lattice = lattice.direct_sum(k3_part.lattice());
        matrix = matrix.block_diag(k3_part.matrix());
    }
    for _ in 0..n {
        lattice = lattice.direct_sum(h_part.lattice());
        matrix = matrix.block_diag(h_part.matrix());
    }
    Ok(Isometry::trusted(lattice, matrix))
}
