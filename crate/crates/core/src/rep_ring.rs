//! The representation ring of Z/4 and a Borsuk-Ulam feasibility test.
//!
//! R(Z/4) is Z[t]/(t^4 - 1), with t the weight-1 character. An element is
//! determined by its four character values at the group elements
//! 1, j, -1, -j (powers of a chosen generator j), each a Gaussian integer:
//! the character sends t to 1, i, -1, -i respectively. The alternating sum
//! of exterior powers, lambda_minus_one, is multiplicative over direct
//! sums and takes a one-dimensional character t^k to 1 - t^k.
//!
//! An equivariant-degree identity pins the trace at j of the relevant
//! lambda class: for a difference of representations made of copies of
//! t^2 (multiplicity m1-m0) and of t, t^3 (multiplicity n1-n0 each), the
//! trace is 2^{(m1-m0)+(n1-n0)}. Since 1 - t^k is a zero divisor in the
//! ring, virtual (negative-multiplicity) differences never materialize as
//! ring elements; quotients are formed at the character level in Z[i],
//! exactly. Feasibility of the associated Borsuk-Ulam constraint system
//! then amounts to that power of two being an even integer, which is the
//! closed-form inequality n0 - n1 + 1 <= m1 - m0.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Gaussian integer a + bi with exact components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt<T> {
    /// Real part.
    pub re: T,
    /// Imaginary part.
    pub im: T,
}

impl<T: Scalar> GaussianInt<T> {
    /// Builds a + bi.
    pub fn new(re: T, im: T) -> Self {
        GaussianInt { re, im }
    }

    /// The rational integer n.
    pub fn from_int(n: i64) -> Self {
        Self::new(T::from_int(n), T::zero())
    }

    /// Additive identity.
    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// Multiplicative identity.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// Whether this is 0.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.re.clone() + other.re.clone(),
            self.im.clone() + other.im.clone(),
        )
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            self.re.clone() - other.re.clone(),
            self.im.clone() - other.im.clone(),
        )
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.re.clone() * other.re.clone() - self.im.clone() * other.im.clone(),
            self.re.clone() * other.im.clone() + self.im.clone() * other.re.clone(),
        )
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    /// Power by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Norm `re^2 + im^2`.
    pub fn norm(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// Exact division in Z[i].
    ///
    /// Fails with [`Error::SingularDenominator`] when `other` is 0 and with
    /// [`Error::NonIntegralResult`] when the quotient exists in Q(i) but
    /// not in Z[i].
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::SingularDenominator);
        }
        let n = other.norm();
        let scaled = self.mul(&other.conj());
        let (q_re, r_re) = scaled.re.div_rem(&n);
        let (q_im, r_im) = scaled.im.div_rem(&n);
        if !r_re.is_zero() || !r_im.is_zero() {
            return Err(Error::NonIntegralResult);
        }
        Ok(Self::new(q_re, q_im))
    }
}

impl<T: Scalar> std::fmt::Display for GaussianInt<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let unit_im = self.im.abs().is_one();
        if self.re.is_zero() {
            return if unit_im {
                write!(f, "{}i", if self.im.is_negative() { "-" } else { "" })
            } else {
                write!(f, "{}i", self.im)
            };
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if unit_im {
            write!(f, "{}{}i", self.re, sign)
        } else {
            write!(f, "{}{}{}i", self.re, sign, self.im.abs())
        }
    }
}

/// Element of R(Z/4) = Z[t]/(t^4 - 1), as coefficients of 1, t, t^2, t^3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RGElement<T> {
    coeffs: [T; 4],
}

impl<T: Scalar> RGElement<T> {
    /// Builds an element from the coefficients of 1, t, t^2, t^3.
    pub fn from_coeffs(coeffs: [T; 4]) -> Self {
        RGElement { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: [i64; 4]) -> Self {
        Self::from_coeffs([
            T::from_int(coeffs[0]),
            T::from_int(coeffs[1]),
            T::from_int(coeffs[2]),
            T::from_int(coeffs[3]),
        ])
    }

    /// The zero element.
    pub fn zero() -> Self {
        Self::from_i64([0, 0, 0, 0])
    }

    /// The unit 1.
    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    /// The generator t (the weight-1 character).
    pub fn generator() -> Self {
        Self::from_i64([0, 1, 0, 0])
    }

    /// The monomial t^k with exponents reduced mod 4.
    pub fn monomial(k: u32) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        c[(k % 4) as usize] = T::one();
        Self::from_coeffs(c)
    }

    /// Borrows the coefficient array.
    pub fn coeffs(&self) -> &[T; 4] {
        &self.coeffs
    }

    /// Whether this is 0.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (lhs, rhs) in c.iter_mut().zip(&other.coeffs) {
            *lhs = lhs.clone() + rhs.clone();
        }
        RGElement { coeffs: c }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (lhs, rhs) in c.iter_mut().zip(&other.coeffs) {
            *lhs = lhs.clone() - rhs.clone();
        }
        RGElement { coeffs: c }
    }

    /// Product: cyclic convolution of coefficients (t^4 = 1).
    pub fn mul(&self, other: &Self) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        for a in 0..4 {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                if other.coeffs[b].is_zero() {
                    continue;
                }
                let k = (a + b) % 4;
                c[k] = c[k].clone() + self.coeffs[a].clone() * other.coeffs[b].clone();
            }
        }
        RGElement { coeffs: c }
    }

    /// Power by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl<T: Scalar> std::fmt::Display for RGElement<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The four elements of Z/4, written multiplicatively as powers of j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupElement {
    /// The identity.
    One,
    /// A chosen generator.
    J,
    /// j^2.
    MinusOne,
    /// j^3.
    MinusJ,
}

impl GroupElement {
    /// All four elements, in the order 1, j, -1, -j.
    pub fn all() -> [GroupElement; 4] {
        [
            GroupElement::One,
            GroupElement::J,
            GroupElement::MinusOne,
            GroupElement::MinusJ,
        ]
    }

    /// Display label, also the CLI spelling.
    pub fn label(self) -> &'static str {
        match self {
            GroupElement::One => "1",
            GroupElement::J => "j",
            GroupElement::MinusOne => "-1",
            GroupElement::MinusJ => "-j",
        }
    }

    /// Character value of the generator t at this element: one of
    /// 1, i, -1, -i.
    pub fn character<T: Scalar>(self) -> GaussianInt<T> {
        match self {
            GroupElement::One => GaussianInt::one(),
            GroupElement::J => GaussianInt::i(),
            GroupElement::MinusOne => GaussianInt::from_int(-1),
            GroupElement::MinusJ => GaussianInt::i().neg(),
        }
    }
}

impl std::str::FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(GroupElement::One),
            "j" => Ok(GroupElement::J),
            "-1" => Ok(GroupElement::MinusOne),
            "-j" => Ok(GroupElement::MinusJ),
            other => Err(Error::BadParameters(format!(
                "unknown group element {other:?}; expected one of 1, j, -1, -j"
            ))),
        }
    }
}

/// Character of `a` at `g`: the trace of `a` on the corresponding
/// representation, a Gaussian integer. This is a ring homomorphism
/// R(Z/4) -> Z[i] for each fixed `g`.
pub fn trace<T: Scalar>(g: GroupElement, a: &RGElement<T>) -> GaussianInt<T> {
    let chi = g.character::<T>();
    let mut acc: GaussianInt<T> = GaussianInt::zero();
    let mut power: GaussianInt<T> = GaussianInt::one();
    for k in 0..4 {
        let c = &a.coeffs()[k];
        if !c.is_zero() {
            let term = GaussianInt::new(
                c.clone() * power.re.clone(),
                c.clone() * power.im.clone(),
            );
            acc = acc.add(&term);
        }
        if k < 3 {
            power = power.mul(&chi);
        }
    }
    acc
}

/// Alternating sum of exterior powers of a non-virtual representation
/// given as (exponent k, multiplicity) pairs: the product of
/// `(1 - t^k)^multiplicity`, reduced in R(Z/4).
pub fn lambda_minus_one<T: Scalar>(reps: &[(u32, u32)]) -> RGElement<T> {
    let mut acc = RGElement::one();
    for &(k, m) in reps {
        if m == 0 {
            continue;
        }
        let factor = RGElement::one().sub(&RGElement::monomial(k));
        acc = acc.mul(&factor.pow(u64::from(m)));
    }
    acc
}

/// Trace at `g` of `d` times the lambda class of a virtual difference of
/// representations, given as (exponent, signed multiplicity) pairs.
///
/// Positive multiplicities go to the numerator, negative ones to the
/// denominator, and the quotient is taken exactly in Z[i]:
/// `d * tr_g(lambda(pos)) / tr_g(lambda(neg))`. The division happens at
/// the character level because `1 - t^k` is a zero divisor in R(Z/4), so
/// the virtual lambda class itself does not exist in the ring.
pub fn tom_dieck_trace<T: Scalar>(
    g: GroupElement,
    d: i64,
    difference: &[(u32, i64)],
) -> Result<GaussianInt<T>> {
    let chi = g.character::<T>();
    let mut num = GaussianInt::from_int(d);
    let mut den = GaussianInt::one();
    for &(k, m) in difference {
        if m == 0 {
            continue;
        }
        let factor = GaussianInt::one().sub(&chi.pow(u64::from(k % 4)));
        let power = factor.pow(m.unsigned_abs());
        if m > 0 {
            num = num.mul(&power);
        } else {
            den = den.mul(&power);
        }
    }
    num.exact_div(&den)
}

/// Dimensions (m0, m1, n0, n1) of the fixed/moving parts on the two sides
/// of the Borsuk-Ulam comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BUParameters {
    pub m0: u32,
    pub m1: u32,
    pub n0: u32,
    pub n1: u32,
}

impl BUParameters {
    /// Plain constructor.
    pub fn new(m0: u32, m1: u32, n0: u32, n1: u32) -> Self {
        BUParameters { m0, m1, n0, n1 }
    }

    /// Builds parameters from the two differences that the inequalities
    /// consume: `m1 - m0` and `n0 - n1` (the latter may be negative).
    pub fn from_differences(m1_minus_m0: u32, n0_minus_n1: i64) -> Self {
        let (n0, n1) = if n0_minus_n1 >= 0 {
            (n0_minus_n1 as u32, 0)
        } else {
            (0, (-n0_minus_n1) as u32)
        };
        BUParameters {
            m0: 0,
            m1: m1_minus_m0,
            n0,
            n1,
        }
    }

    /// The exponent `(m1 - m0) + (n1 - n0)` of the required trace 2^e.
    fn exponent(&self) -> i64 {
        i64::from(self.m1) - i64::from(self.m0) + i64::from(self.n1) - i64::from(self.n0)
    }
}

/// Why the Borsuk-Ulam constraint system has no integer solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InfeasibilityWitness<T> {
    /// The required trace is this odd integer (it must be even).
    OddTrace { trace: T },
    /// The required trace is 1/denominator, not an integer at all.
    NonIntegralTrace { denominator: T },
}

impl<T: Scalar> std::fmt::Display for InfeasibilityWitness<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfeasibilityWitness::OddTrace { trace } => {
                write!(f, "tr_j(alpha) = {trace} is odd")
            }
            InfeasibilityWitness::NonIntegralTrace { denominator } => {
                write!(f, "tr_j(alpha) = 1/{denominator} is not an integer")
            }
        }
    }
}

/// Outcome of the Borsuk-Ulam feasibility test.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BUVerdict<T> {
    /// An integer solution of the constraint system exists; `witness` is
    /// one, with trace `trace_j` = 2^e at j.
    Feasible { trace_j: T, witness: RGElement<T> },
    /// No integer solution; the witness explains which constraint broke.
    Infeasible { witness: InfeasibilityWitness<T> },
}

/// Decides whether the Borsuk-Ulam constraint system admits an integer
/// solution.
///
/// The constraints on alpha = a0 + a1 t + a2 t^2 + a3 t^3 are
/// `tr_{-1}(alpha) = 0` (so a0 - a1 + a2 - a3 = 0), the symmetry a1 = a3,
/// hence `tr_j(alpha) = a0 - a2 = 2(a1 - a2)`, and the degree identity
/// `tr_j(alpha) = 2^e` with `e = (m1 - m0) + (n1 - n0)`. An integer
/// solution exists precisely when 2^e is an even integer, i.e. `e >= 1`,
/// which is the inequality `n0 - n1 + 1 <= m1 - m0`. The feasible witness
/// returned is `(2^e, 2^{e-1}, 0, 2^{e-1})`.
pub fn borsuk_ulam_feasible<T: Scalar>(p: &BUParameters) -> Result<BUVerdict<T>> {
    if p.m0 >= p.m1 {
        return Err(Error::HypothesisViolated { m0: p.m0, m1: p.m1 });
    }
    let e = p.exponent();
    if e >= 1 {
        let q = int_pow::<T>(T::from_int(2), e as u64);
        let half = int_pow::<T>(T::from_int(2), (e - 1) as u64);
        let witness =
            RGElement::from_coeffs([q.clone(), half.clone(), T::zero(), half]);
        debug_assert!(trace(GroupElement::MinusOne, &witness).is_zero());
        debug_assert_eq!(
            trace(GroupElement::J, &witness),
            GaussianInt::new(q.clone(), T::zero())
        );
        Ok(BUVerdict::Feasible {
            trace_j: q,
            witness,
        })
    } else if e == 0 {
        Ok(BUVerdict::Infeasible {
            witness: InfeasibilityWitness::OddTrace { trace: T::one() },
        })
    } else {
        Ok(BUVerdict::Infeasible {
            witness: InfeasibilityWitness::NonIntegralTrace {
                denominator: int_pow::<T>(T::from_int(2), (-e) as u64),
            },
        })
    }
}

/// Cross-check exposed for property testing: XOR of the constraint-system
/// verdict with the closed-form inequality `n0 - n1 + 1 <= m1 - m0`. A
/// correct implementation returns false for every valid parameter tuple.
// The comparison is written exactly as the documented closed form.
#[allow(clippy::int_plus_one)]
pub fn feasibility_equals_inequality(p: &BUParameters) -> Result<bool> {
    let feasible = matches!(
        borsuk_ulam_feasible::<num_bigint::BigInt>(p)?,
        BUVerdict::Feasible { .. }
    );
    let inequality_holds =
        i64::from(p.n0) - i64::from(p.n1) + 1 <= i64::from(p.m1) - i64::from(p.m0);
    Ok(feasible != inequality_holds)
}

/// Integer power by square-and-multiply.
fn int_pow<T: Scalar>(base: T, mut e: u64) -> T {
    let mut base = base;
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}
