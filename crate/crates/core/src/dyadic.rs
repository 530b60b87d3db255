//! Exact arithmetic on dyadic rationals, numbers of the form `a / 2^e`.
//!
//! Every closeness quantity in this crate is a finite sum of powers of two,
//! so it is representable exactly as a dyadic rational. Working in this type
//! instead of floating point lets formulas be compared to brute-force oracle
//! values with `==` rather than with tolerances.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// An exact rational with a power-of-two denominator: `mantissa / 2^exponent`.
///
/// Values are kept in lowest terms: whenever the denominator exponent is
/// positive the mantissa is odd, and zero is stored as `0 / 2^0`. Equal
/// values therefore have identical representations, which makes derived
/// `Eq`/`Hash` sound.
///
/// The mantissa budget is a signed 128-bit integer. An operation whose exact
/// result does not fit reports [`Error::Overflow`] through the `try_*`
/// methods; the operator impls (`+`, `-`, `*`) panic on the same condition.
/// Mantissas stay far below the budget for every parameter range accepted by
/// the rest of this crate, so the operators are safe on validated inputs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: i128,
    exponent: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { mantissa: 0, exponent: 0 };
    pub const ONE: Dyadic = Dyadic { mantissa: 1, exponent: 0 };

    /// Builds `mantissa / 2^exponent`, reducing to lowest terms.
    pub fn new(mantissa: i128, exponent: u32) -> Dyadic {
        if mantissa == 0 {
            return Dyadic::ZERO;
        }
        let shift = (mantissa.trailing_zeros()).min(exponent);
        Dyadic { mantissa: mantissa >> shift, exponent: exponent - shift }
    }

    /// The integer `v` as a dyadic rational.
    pub fn integer(v: i128) -> Dyadic {
        Dyadic { mantissa: v, exponent: 0 }
    }

    /// `2^e` for any (possibly negative) exponent.
    ///
    /// Panics when `e > 126`, where the mantissa no longer fits the budget.
    pub fn pow2(e: i32) -> Dyadic {
        if e >= 0 {
            assert!(e <= 126, "2^{e} exceeds the 128-bit mantissa budget");
            Dyadic { mantissa: 1i128 << e, exponent: 0 }
        } else {
            Dyadic { mantissa: 1, exponent: e.unsigned_abs() }
        }
    }

    pub fn mantissa(self) -> i128 {
        self.mantissa
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_zero(self) -> bool {
        self.mantissa == 0
    }

    pub fn is_negative(self) -> bool {
        self.mantissa < 0
    }

    /// Exact sum, or [`Error::Overflow`] if the result mantissa does not fit.
    pub fn try_add(self, rhs: Dyadic) -> Result<Dyadic, Error> {
        let exponent = self.exponent.max(rhs.exponent);
        let a = shift_up(self.mantissa, exponent - self.exponent)?;
        let b = shift_up(rhs.mantissa, exponent - rhs.exponent)?;
        let mantissa = a.checked_add(b).ok_or(Error::Overflow)?;
        Ok(Dyadic::new(mantissa, exponent))
    }

    /// Exact difference, or [`Error::Overflow`].
    pub fn try_sub(self, rhs: Dyadic) -> Result<Dyadic, Error> {
        self.try_add(rhs.try_neg()?)
    }

    /// Exact product, or [`Error::Overflow`].
    pub fn try_mul(self, rhs: Dyadic) -> Result<Dyadic, Error> {
        let mantissa = self.mantissa.checked_mul(rhs.mantissa).ok_or(Error::Overflow)?;
        let exponent = self.exponent.checked_add(rhs.exponent).ok_or(Error::Overflow)?;
        Ok(Dyadic::new(mantissa, exponent))
    }

    pub fn try_neg(self) -> Result<Dyadic, Error> {
        let mantissa = self.mantissa.checked_neg().ok_or(Error::Overflow)?;
        Ok(Dyadic { mantissa, exponent: self.exponent })
    }

    /// Nearest binary64 value; for display only, never for comparisons.
    pub fn to_f64(self) -> f64 {
        let e = self.exponent.min(4096) as i32;
        self.mantissa as f64 * 2f64.powi(-e)
    }

    /// Position of the value's leading bit: `floor(log2 |v|)` for `v != 0`.
    fn magnitude_order(self) -> i64 {
        debug_assert!(self.mantissa != 0);
        let top = 127 - self.mantissa.unsigned_abs().leading_zeros() as i64;
        top - self.exponent as i64
    }
}

/// `m * 2^s` or [`Error::Overflow`]; exact, never wraps.
fn shift_up(m: i128, s: u32) -> Result<i128, Error> {
    if m == 0 || s == 0 {
        return Ok(m);
    }
    if s > 126 {
        return Err(Error::Overflow);
    }
    m.checked_mul(1i128 << s).ok_or(Error::Overflow)
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let sign = self.mantissa.signum().cmp(&other.mantissa.signum());
        if sign != Ordering::Equal || self.mantissa == 0 {
            return sign;
        }
        // Same nonzero sign: decide by leading-bit position when possible.
        let (oa, ob) = (self.magnitude_order(), other.magnitude_order());
        if oa != ob {
            return if self.mantissa > 0 { oa.cmp(&ob) } else { ob.cmp(&oa) };
        }
        // Equal leading-bit positions bound the exponent gap by 127, so the
        // aligned mantissas still fit in i128.
        let e = self.exponent.max(other.exponent);
        let a = self.mantissa << (e - self.exponent);
        let b = other.mantissa << (e - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        self.try_add(rhs).expect("dyadic addition overflowed the mantissa budget")
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self.try_sub(rhs).expect("dyadic subtraction overflowed the mantissa budget")
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        self.try_mul(rhs).expect("dyadic multiplication overflowed the mantissa budget")
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        self.try_neg().expect("dyadic negation overflowed the mantissa budget")
    }
}

// Mixed-operand forms so closed-form expressions read close to how they are
// written on paper: `3 * Dyadic::pow2(-n) + 1` and similar.
impl Add<i128> for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: i128) -> Dyadic {
        self + Dyadic::integer(rhs)
    }
}

impl Add<Dyadic> for i128 {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        Dyadic::integer(self) + rhs
    }
}

impl Sub<i128> for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: i128) -> Dyadic {
        self - Dyadic::integer(rhs)
    }
}

impl Sub<Dyadic> for i128 {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        Dyadic::integer(self) - rhs
    }
}

impl Mul<i128> for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: i128) -> Dyadic {
        self * Dyadic::integer(rhs)
    }
}

impl Mul<Dyadic> for i128 {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::integer(self) * rhs
    }
}

impl From<i128> for Dyadic {
    fn from(v: i128) -> Dyadic {
        Dyadic::integer(v)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Dyadic {
        Dyadic::integer(v as i128)
    }
}

impl From<i32> for Dyadic {
    fn from(v: i32) -> Dyadic {
        Dyadic::integer(v as i128)
    }
}

impl fmt::Display for Dyadic {
    /// Canonical exact form `mantissa/2^exponent`, e.g. `43/2^2` for 10.75.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(Dyadic::new(12, 2), Dyadic::integer(3));
        assert_eq!(Dyadic::new(12, 1), Dyadic::integer(6));
        assert_eq!(Dyadic::new(-8, 3), Dyadic::integer(-1));
        assert_eq!(Dyadic::new(0, 17), Dyadic::ZERO);
        // Integers keep exponent 0 even when the mantissa is even.
        assert_eq!(Dyadic::integer(6).exponent(), 0);
        assert_eq!(Dyadic::integer(6).mantissa(), 6);
    }

    #[test]
    fn adds_exactly() {
        // 3/8 + 5/8 = 1
        assert_eq!(Dyadic::new(3, 3) + Dyadic::new(5, 3), Dyadic::ONE);
        let one = Dyadic::new(3, 3) + Dyadic::new(5, 3);
        assert_eq!((one.mantissa(), one.exponent()), (1, 0));
        // 1/2 + 1/4 = 3/4
        assert_eq!(Dyadic::pow2(-1) + Dyadic::pow2(-2), Dyadic::new(3, 2));
    }

    #[test]
    fn subtracts_exactly() {
        // 1/2 - 3/4 = -1/4
        assert_eq!(Dyadic::pow2(-1) - Dyadic::new(3, 2), Dyadic::new(-1, 2));
        assert_eq!(Dyadic::integer(5) - Dyadic::integer(5), Dyadic::ZERO);
    }

    #[test]
    fn multiplies_exactly() {
        // 3/2 * 5/4 = 15/8
        assert_eq!(Dyadic::new(3, 1) * Dyadic::new(5, 2), Dyadic::new(15, 3));
        assert_eq!(Dyadic::new(3, 1) * Dyadic::integer(0), Dyadic::ZERO);
    }

    #[test]
    fn pow2_covers_both_signs() {
        assert_eq!(Dyadic::pow2(4), Dyadic::integer(16));
        assert_eq!(Dyadic::pow2(0), Dyadic::ONE);
        assert_eq!(Dyadic::pow2(-3), Dyadic::new(1, 3));
    }

    #[test]
    fn mixed_integer_operands() {
        assert_eq!(3 * Dyadic::pow2(-2), Dyadic::new(3, 2));
        assert_eq!(Dyadic::pow2(-2) + 1, Dyadic::new(5, 2));
        assert_eq!(2 - Dyadic::pow2(-1), Dyadic::new(3, 1));
    }

    #[test]
    fn orders_values() {
        assert!(Dyadic::pow2(-3) < Dyadic::pow2(-2));
        assert!(Dyadic::integer(-1) < Dyadic::pow2(-5));
        assert!(Dyadic::new(43, 2) > Dyadic::integer(10));
        // Large magnitude gap: must not overflow inside cmp.
        assert!(Dyadic::ONE > Dyadic::new(1, 120));
        assert!(Dyadic::new(-1, 120) > Dyadic::integer(-1));
        assert_eq!(Dyadic::new(6, 1), Dyadic::integer(3));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(Dyadic::new(43, 2).to_string(), "43/2^2");
        assert_eq!(Dyadic::new(-1, 2).to_string(), "-1/2^2");
        assert_eq!(Dyadic::integer(16).to_string(), "16/2^0");
        assert_eq!(Dyadic::ZERO.to_string(), "0/2^0");
    }

    #[test]
    fn converts_to_f64_for_display() {
        assert_eq!(Dyadic::new(43, 2).to_f64(), 10.75);
        assert_eq!(Dyadic::integer(-3).to_f64(), -3.0);
        // Far below f64's subnormal range: rounds cleanly to zero.
        assert_eq!(Dyadic::new(1, 5000).to_f64(), 0.0);
    }

    #[test]
    fn reports_overflow_instead_of_wrapping() {
        let huge = Dyadic::integer(i128::MAX);
        assert_eq!(huge.try_add(Dyadic::ONE), Err(Error::Overflow));
        assert_eq!(huge.try_mul(Dyadic::integer(2)), Err(Error::Overflow));
        assert_eq!(Dyadic::integer(i128::MIN).try_neg(), Err(Error::Overflow));
        // Aligning 1/2^0 against 1/2^126 still fits; against 2^127 it cannot.
        assert!(Dyadic::ONE.try_add(Dyadic::new(1, 126)).is_ok());
        assert_eq!(Dyadic::ONE.try_add(Dyadic::new(1, 127)), Err(Error::Overflow));
    }

    fn small() -> impl Strategy<Value = Dyadic> {
        let mantissa = -(1i128 << 40)..(1i128 << 40);
        (mantissa, 0u32..40).prop_map(|(m, e)| Dyadic::new(m, e))
    }

    proptest! {
        #[test]
        fn add_commutes(a in small(), b in small()) {
            prop_assert_eq!(a + b, b + a);
        }

        #[test]
        fn add_associates(a in small(), b in small(), c in small()) {
            prop_assert_eq!((a + b) + c, a + (b + c));
        }

        #[test]
        fn mul_distributes(a in small(), b in small(), c in small()) {
            prop_assert_eq!(a * (b + c), a * b + a * c);
        }

        #[test]
        fn sub_then_add_round_trips(a in small(), b in small()) {
            prop_assert_eq!(a - b + b, a);
        }

        #[test]
        fn identities_hold(a in small()) {
            prop_assert_eq!(a + Dyadic::ZERO, a);
            prop_assert_eq!(a * Dyadic::ONE, a);
            prop_assert_eq!(a - a, Dyadic::ZERO);
        }

        #[test]
        fn normalization_is_canonical(m in -(1i128 << 40)..(1i128 << 40), e in 0u32..40) {
            let v = Dyadic::new(m, e);
            // Re-normalizing the stored parts changes nothing.
            prop_assert_eq!(Dyadic::new(v.mantissa(), v.exponent()), v);
            // Scaling numerator and denominator together changes nothing.
            prop_assert_eq!(Dyadic::new(m * 8, e + 3), v);
            // Lowest terms: odd mantissa, or integer, or canonical zero.
            prop_assert!(
                v.mantissa() % 2 != 0
                    || v.exponent() == 0
                    && (v.mantissa() != 0 || v.exponent() == 0)
            );
        }

        #[test]
        fn cmp_matches_sign_of_difference(a in small(), b in small()) {
            let diff = a - b;
            let expected = if diff.is_zero() {
                Ordering::Equal
            } else if diff.is_negative() {
                Ordering::Less
            } else {
                Ordering::Greater
            };
            prop_assert_eq!(a.cmp(&b), expected);
        }

        #[test]
        fn pow2_is_multiplicative(a in -40i32..40, b in -40i32..40) {
            prop_assert_eq!(Dyadic::pow2(a) * Dyadic::pow2(b), Dyadic::pow2(a + b));
        }
    }
}
