//! Sparse Laurent polynomials with exact integer coefficients.
//!
//! Exponents are stored as machine integers in a declared fractional unit:
//! a [`QuarterA`](ExpUnit::QuarterA) polynomial stores the integer exponent
//! `k` of `A^k` (one power of `A` is a quarter power of `t` under the
//! substitution `A = t^{-1/4}`), while a [`HalfT`](ExpUnit::HalfT)
//! polynomial stores `k` for `t^{k/2}`. Keeping exponents integral makes
//! every computation exact; the natural-unit view only appears when
//! printing or when taking spans.
//!
//! Coefficient arithmetic is overflow-checked. Exceeding the coefficient
//! or exponent range aborts with a diagnostic instead of wrapping, so a
//! golden test can never silently pass on corrupted values.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::Neg;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, Signed, Zero};

use crate::error::Error;

/// Exponent denominator declared by a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ExpUnit {
    /// Stored exponent `k` is the integer exponent of `A^k`.
    QuarterA,
    /// Stored exponent `k` represents `t^{k/2}`.
    HalfT,
}

impl ExpUnit {
    fn variable(self) -> char {
        match self {
            ExpUnit::QuarterA => 'A',
            ExpUnit::HalfT => 't',
        }
    }

    /// Stored units per natural unit: exponents print as `stored / scale`.
    fn scale(self) -> i64 {
        match self {
            ExpUnit::QuarterA => 1,
            ExpUnit::HalfT => 2,
        }
    }
}

/// Coefficient ring bound. Satisfied by `i64`, `i128` and `num_bigint::BigInt`.
pub trait Coeff:
    Clone + Eq + Zero + One + Neg<Output = Self> + Signed + CheckedAdd + CheckedMul + FromPrimitive + Display + Debug
{
}

impl<T> Coeff for T where
    T: Clone + Eq + Zero + One + Neg<Output = Self> + Signed + CheckedAdd + CheckedMul + FromPrimitive + Display + Debug
{
}

/// A sparse Laurent polynomial in one variable.
///
/// Invariant: no stored coefficient is zero. Two polynomials are equal iff
/// their units match and their term maps match.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<C: Coeff = i64> {
    unit: ExpUnit,
    terms: BTreeMap<i64, C>,
}

fn checked_exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).unwrap_or_else(|| panic!("exponent overflow: {a} + {b}"))
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(unit: ExpUnit) -> Self {
        Self { unit, terms: BTreeMap::new() }
    }

    pub fn one(unit: ExpUnit) -> Self {
        Self::monomial(unit, C::one(), 0)
    }

    /// The single term `c·x^k` (`k` in stored units). `c` may be zero,
    /// yielding the zero polynomial.
    pub fn monomial(unit: ExpUnit, c: C, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { unit, terms }
    }

    pub fn from_terms(unit: ExpUnit, iter: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero(unit);
        for (k, c) in iter {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e
                    .get()
                    .checked_add(&c)
                    .unwrap_or_else(|| panic!("coefficient overflow at exponent {k}"));
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn unit(&self) -> ExpUnit {
        self.unit
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in increasing exponent order (stored units).
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn require_same_unit(&self, other: &Self) -> Result<(), Error> {
        if self.unit == other.unit {
            Ok(())
        } else {
            Err(Error::UnitMismatch { left: self.unit, right: other.unit })
        }
    }

    /// Termwise sum. Fails on unit mismatch.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.require_same_unit(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        Self {
            unit: self.unit,
            terms: self.terms.iter().map(|(&k, c)| (k, c.clone().neg())).collect(),
        }
    }

    /// Convolution product, exact. Fails on unit mismatch.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.require_same_unit(other)?;
        let mut out = Self::zero(self.unit);
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                let c = c1
                    .checked_mul(c2)
                    .unwrap_or_else(|| panic!("coefficient overflow in product at exponent {}", k1 + k2));
                out.add_term(checked_exp_add(k1, k2), c);
            }
        }
        Ok(out)
    }

    /// Multiplies every term by `c·x^k`. Requires `c != 0`.
    pub fn monomial_shift(&self, c: C, k: i64) -> Self {
        assert!(!c.is_zero(), "monomial_shift requires a nonzero scalar");
        let terms = self
            .terms
            .iter()
            .map(|(&e, coeff)| {
                let prod = coeff
                    .checked_mul(&c)
                    .unwrap_or_else(|| panic!("coefficient overflow in shift at exponent {e}"));
                (checked_exp_add(e, k), prod)
            })
            .collect();
        Self { unit: self.unit, terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.unit);
        for _ in 0..n {
            out = out.mul(self).expect("same unit");
        }
        out
    }

    /// Max exponent minus min exponent, in natural units.
    pub fn span(&self) -> Result<Frac, Error> {
        let (min, max) = match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::EmptyPoly),
        };
        Ok(Frac::new(max - min, self.unit.scale()))
    }

    /// Dense coefficient run between the extreme exponents, one entry per
    /// stored unit step.
    pub fn to_coeff_vector(&self) -> CoeffVector<C> {
        match (self.min_exp(), self.max_exp()) {
            (Some(min), Some(max)) => CoeffVector {
                unit: self.unit,
                min_exp: min,
                coeffs: (min..=max).map(|k| self.coeff(k)).collect(),
            },
            _ => CoeffVector { unit: self.unit, min_exp: 0, coeffs: Vec::new() },
        }
    }

    pub fn from_coeff_vector(v: &CoeffVector<C>) -> Self {
        Self::from_terms(
            v.unit,
            v.coeffs.iter().enumerate().map(|(i, c)| (v.min_exp + i as i64, c.clone())),
        )
    }

    /// Reinterprets a bracket polynomial in `A` as a polynomial in `t` via
    /// `A = t^{-1/4}`: the `A`-exponent `k` becomes `t^{-k/4}`, i.e. `-k/2`
    /// in half-`t` units. Every `A`-exponent must be even.
    pub fn substitute_a_to_t(&self) -> Result<Self, Error> {
        if self.unit != ExpUnit::QuarterA {
            return Err(Error::UnitMismatch { left: self.unit, right: ExpUnit::QuarterA });
        }
        let mut out = Self::zero(ExpUnit::HalfT);
        for (k, c) in self.terms() {
            if k % 2 != 0 {
                return Err(Error::Internal(format!(
                    "bracket exponent {k} not divisible by 2 in t-substitution"
                )));
            }
            out.add_term(-k / 2, c.clone());
        }
        Ok(out)
    }
}

/// An exact fraction used for spans in natural units.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Self { num: num / g, den: den / g }
    }

    pub fn from_int(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Dense view of a polynomial: coefficients from the lowest to the highest
/// exponent in steps of one stored unit. First and last entries are nonzero
/// unless the vector is empty (the zero polynomial).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffVector<C: Coeff = i64> {
    pub unit: ExpUnit,
    pub min_exp: i64,
    pub coeffs: Vec<C>,
}

/// Canonical text form: terms in increasing exponent, exponents printed in
/// natural units, unit coefficients printed as a bare sign.
impl<C: Coeff> Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = self.unit.variable();
        let scale = self.unit.scale();
        for (i, (k, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "{var}")?;
                if k != scale {
                    write!(f, "^{}", exponent_text(k, scale))?;
                }
            }
        }
        Ok(())
    }
}

fn exponent_text(k: i64, scale: i64) -> String {
    let frac = Frac::new(k, scale);
    if frac.is_integer() && frac.num() >= 0 {
        format!("{}", frac.num())
    } else {
        format!("({frac})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    fn a_poly(terms: &[(i64, i64)]) -> P {
        P::from_terms(ExpUnit::QuarterA, terms.iter().copied().map(|(k, c)| (k, c)))
    }

    #[test]
    fn add_cancels() {
        // (A^2 + 1) + (-A^2 + A) = A + 1
        let p = a_poly(&[(2, 1), (0, 1)]);
        let q = a_poly(&[(2, -1), (1, 1)]);
        assert_eq!(p.add(&q).unwrap(), a_poly(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn add_identity_and_doubling() {
        let p = a_poly(&[(3, 2), (-1, 5)]);
        assert_eq!(p.add(&P::zero(ExpUnit::QuarterA)).unwrap(), p);
        let d = a_poly(&[(2, -1), (-2, -1)]);
        assert_eq!(d.add(&d).unwrap(), a_poly(&[(2, -2), (-2, -2)]));
    }

    #[test]
    fn mul_powers_of_loop_factor() {
        let delta = a_poly(&[(2, -1), (-2, -1)]);
        assert_eq!(delta.pow(1), delta);
        assert_eq!(delta.pow(2), a_poly(&[(4, 1), (0, 2), (-4, 1)]));
        let a3 = a_poly(&[(3, 1)]);
        let a3inv = a_poly(&[(-3, 1)]);
        assert_eq!(a3.mul(&a3inv).unwrap(), P::one(ExpUnit::QuarterA));
    }

    #[test]
    fn unit_mismatch_rejected() {
        let p = P::one(ExpUnit::QuarterA);
        let q = P::one(ExpUnit::HalfT);
        assert!(matches!(p.add(&q), Err(Error::UnitMismatch { .. })));
        assert!(matches!(p.mul(&q), Err(Error::UnitMismatch { .. })));
    }

    #[test]
    fn monomial_shift_examples() {
        assert_eq!(P::one(ExpUnit::QuarterA).monomial_shift(-1, 3), a_poly(&[(3, -1)]));
        let p = a_poly(&[(1, 1), (-1, -1)]);
        assert_eq!(p.monomial_shift(1, 0), p);
        assert_eq!(a_poly(&[(4, 1)]).monomial_shift(-1, -4), a_poly(&[(0, -1)]));
    }

    #[test]
    fn span_examples() {
        assert_eq!(a_poly(&[(5, 1)]).span().unwrap(), Frac::from_int(0));
        assert!(matches!(P::zero(ExpUnit::QuarterA).span(), Err(Error::EmptyPoly)));
        // span in t-units of a HalfT polynomial is a half-integer rational
        let v = P::from_terms(ExpUnit::HalfT, [(-1, -1), (2, 3)]);
        assert_eq!(v.span().unwrap(), Frac::new(3, 2));
    }

    #[test]
    fn coeff_vector_round_trip() {
        let p = a_poly(&[(2, -1), (-2, -1)]);
        let v = p.to_coeff_vector();
        assert_eq!(v.min_exp, -2);
        assert_eq!(v.coeffs, vec![-1, 0, 0, 0, -1]);
        assert_eq!(P::from_coeff_vector(&v), p);

        let z = P::zero(ExpUnit::HalfT).to_coeff_vector();
        assert_eq!(z.min_exp, 0);
        assert!(z.coeffs.is_empty());
        assert_eq!(P::from_coeff_vector(&z), P::zero(ExpUnit::HalfT));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(P::zero(ExpUnit::HalfT).to_string(), "0");
        assert_eq!(P::one(ExpUnit::QuarterA).to_string(), "1");
        let unlink2 = P::from_terms(ExpUnit::HalfT, [(-1, -1), (1, -1)]);
        assert_eq!(unlink2.to_string(), "-t^(-1/2) - t^(1/2)");
        let p = P::from_terms(ExpUnit::HalfT, [(2, 1), (4, -3), (8, 1)]);
        assert_eq!(p.to_string(), "t - 3t^2 + t^4");
        assert_eq!(a_poly(&[(-5, -1), (3, -1), (7, 1)]).to_string(), "-A^(-5) - A^3 + A^7");
        assert_eq!(a_poly(&[(1, 2)]).to_string(), "2A");
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn coefficient_overflow_aborts() {
        let big = a_poly(&[(0, i64::MAX)]);
        let _ = big.add(&a_poly(&[(0, 1)]));
    }
}
