//! Shared test support: an inertia oracle kept independent of the
//! library's elimination code, plus seeded random generators.
//!
//! The oracle computes the characteristic polynomial of a symmetric
//! integer matrix by the Faddeev-LeVerrier recurrence over exact
//! rationals and reads the inertia off Descartes' rule of signs. For a
//! polynomial with all roots real (always the case for a symmetric
//! matrix) Descartes' bound is attained, so the positive and negative
//! sign-variation counts are the exact numbers of positive and negative
//! eigenvalues, and the zero eigenvalue multiplicity is the number of
//! trailing zero coefficients.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinform::{Int, Lattice, Matrix};

type Q = Ratio<BigInt>;

fn q_int(n: i64) -> Q {
    Ratio::from_integer(BigInt::from(n))
}

fn mat_to_q(m: &Matrix) -> Vec<Vec<Q>> {
    (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|j| Ratio::from_integer(m[(i, j)].clone()))
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut out = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] += a[i][k].clone() * b[k][j].clone();
            }
        }
    }
    out
}

fn mat_trace(a: &[Vec<Q>]) -> Q {
    let mut t = Q::zero();
    for (i, row) in a.iter().enumerate() {
        t += row[i].clone();
    }
    t
}

/// Characteristic polynomial coefficients `c[0] + c[1] x + ... + c[n] x^n`
/// (monic, `c[n] = 1`) by the Faddeev-LeVerrier recurrence.
pub fn char_poly(gram: &Matrix) -> Vec<Q> {
    let n = gram.nrows();
    assert_eq!(n, gram.ncols());
    let a = mat_to_q(gram);
    let mut c = vec![Q::zero(); n + 1];
    c[n] = q_int(1);
    // m_prev holds M_{k-1}; M_k = A M_{k-1} + c_{n-k+1} I.
    let mut m_prev = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let mut m_k = mat_mul(&a, &m_prev);
        let shift = c[n - k + 1].clone();
        for (i, row) in m_k.iter_mut().enumerate() {
            row[i] += shift.clone();
        }
        let am = mat_mul(&a, &m_k);
        c[n - k] = -mat_trace(&am) / q_int(k as i64);
        m_prev = m_k;
    }
    c
}

/// `(b_plus, b_minus, b_zero)` of a symmetric integer matrix, read from
/// its characteristic polynomial by Descartes' rule of signs.
pub fn oracle_inertia(gram: &Matrix) -> (usize, usize, usize) {
    let c = char_poly(gram);
    let b_zero = c.iter().position(|x| !x.is_zero()).unwrap();
    let variations = |flip: bool| {
        let mut prev = 0i32;
        let mut count = 0usize;
        for (k, x) in c[b_zero..].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mut s = if x.is_positive() { 1 } else { -1 };
            if flip && k % 2 == 1 {
                s = -s;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    };
    (variations(false), variations(true), b_zero)
}

/// Deterministic RNG for reproducible suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random symmetric integer matrix with entries in `-bound..=bound`.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = Int::from(rng.random_range(-bound..=bound));
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

/// Collapses basis vector `j` onto basis vector `i` (a singular change
/// of coordinates), forcing the form to be degenerate while staying
/// symmetric.
pub fn make_degenerate(m: &Matrix, i: usize, j: usize) -> Matrix {
    let n = m.nrows();
    let pick = |a: usize| if a == j { i } else { a };
    let mut out = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            out[(a, b)] = m[(pick(a), pick(b))].clone();
        }
    }
    out
}

/// One standard block of a random even lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    H,
    E8,
    MinusE8,
}

impl Block {
    pub fn rank(self) -> usize {
        match self {
            Block::H => 2,
            Block::E8 | Block::MinusE8 => 8,
        }
    }

    pub fn lattice(self) -> Lattice {
        match self {
            Block::H => Lattice::hyperbolic_plane(),
            Block::E8 => Lattice::e8(),
            Block::MinusE8 => Lattice::minus_e8(),
        }
    }
}

/// Random direct sum of H, E8, -E8 blocks with total rank at most
/// `max_rank` (at least one block). Returns the lattice and each block
/// with its basis offset.
pub fn random_block_lattice(
    rng: &mut ChaCha8Rng,
    max_rank: usize,
) -> (Lattice, Vec<(Block, usize)>) {
    assert!(max_rank >= 2);
    let mut blocks = Vec::new();
    let mut lattice: Option<Lattice> = None;
    let mut rank = 0usize;
    loop {
        let mut candidates = Vec::new();
        if rank + 2 <= max_rank {
            candidates.push(Block::H);
        }
        if rank + 8 <= max_rank {
            candidates.push(Block::E8);
            candidates.push(Block::MinusE8);
        }
        if candidates.is_empty() || (!blocks.is_empty() && rng.random_bool(0.2)) {
            break;
        }
        let block = candidates[rng.random_range(0..candidates.len())];
        blocks.push((block, rank));
        rank += block.rank();
        let piece = block.lattice();
        lattice = Some(match lattice.take() {
            None => piece,
            Some(acc) => acc.direct_sum(&piece),
        });
    }
    (lattice.unwrap(), blocks)
}

/// A random class of square +2 or -2 in a block lattice: rejection
/// sampling over sparse small vectors, with a canonical in-block class
/// as fallback so the function never fails.
pub fn random_two_class(
    rng: &mut ChaCha8Rng,
    lattice: &Lattice,
    blocks: &[(Block, usize)],
) -> Vec<Int> {
    let n = lattice.rank();
    let two = Int::from(2);
    let minus_two = Int::from(-2);
    let p_nonzero = (6.0 / n as f64).min(1.0);
    for _ in 0..300 {
        let v: Vec<Int> = (0..n)
            .map(|_| {
                if rng.random_bool(p_nonzero) {
                    let choices = [-2i64, -1, 1, 2];
                    Int::from(choices[rng.random_range(0..4)])
                } else {
                    Int::from(0)
                }
            })
            .collect();
        let square = lattice.inner_product(&v, &v).unwrap();
        if square == two || square == minus_two {
            return v;
        }
    }
    // Deterministic fallback inside the first block.
    let (block, offset) = blocks[0];
    let mut v = vec![Int::from(0); n];
    match block {
        Block::H => {
            v[offset] = Int::from(1);
            v[offset + 1] = Int::from(if rng.random_bool(0.5) { 1 } else { -1 });
        }
        Block::E8 | Block::MinusE8 => {
            v[offset] = Int::from(1);
        }
    }
    v
}
