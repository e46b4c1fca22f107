use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rational, ScalarError, Sign};

pub type Rational = BigRational;

/// An element `a + b·√D` of a real quadratic field.
///
/// Always kept canonical: `D` is square-free and greater than one whenever
/// `b ≠ 0`, and `D = 0` whenever `b = 0`. Structural equality is therefore
/// numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    radicand: u64,
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational, radicand: u64) -> Self {
        if b.is_zero() || radicand == 0 {
            return Self::rational(a);
        }
        let (square, free) = rational::split_square(radicand);
        let b = b * Rational::from_integer(BigInt::from(square));
        if free == 1 {
            return Self::rational(a + b);
        }
        QuadScalar { a, b, radicand: free }
    }

    pub fn rational(a: Rational) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            radicand: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√n` for a nonnegative integer `n`.
    pub fn sqrt_int(n: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Square-free radicand, `0` for rational values.
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a − b√D`.
    pub fn conjugate(&self) -> Self {
        QuadScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            radicand: self.radicand,
        }
    }

    /// Field norm `a² − D·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.radicand))
    }

    /// Radicand shared by two values, if any.
    pub fn common_radicand(&self, other: &Self) -> Result<u64, ScalarError> {
        match (self.radicand, other.radicand) {
            (0, d) | (d, 0) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(ScalarError::IncompatibleRadicands(d, e)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.common_radicand(other)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        let inv = other.inverse()?;
        self.try_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        Ok(QuadScalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
            radicand: self.radicand,
        })
    }

    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        if sb == Sign::Zero {
            return sa;
        }
        if sa == Sign::Zero || sa == sb {
            return sb;
        }
        // opposite signs: the larger square wins
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(BigInt::from(self.radicand));
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, ScalarError> {
        Ok(self.try_sub(other)?.sign().into())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            return self.a.to_f64().unwrap_or(f64::NAN);
        }
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let s = self.b.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt();
        if (a > 0.0) != (s > 0.0) {
            // a + s = (a² − s²)/(a − s) avoids cancellation
            self.norm().to_f64().unwrap_or(f64::NAN) / (a - s)
        } else {
            a + s
        }
    }

    /// Largest integer `n` with `n ≤ self`, computed exactly.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        let approx = self.to_f64();
        let mut guess = if approx.is_finite() {
            BigInt::from(approx.floor() as i128)
        } else {
            BigInt::zero()
        };
        let slack = BigInt::from(
            ((approx.abs() * 2f64.powi(-40)).max(1.0) as u128).saturating_add(1),
        );
        let le = |n: &BigInt| {
            let n = QuadScalar::rational(Rational::from_integer(n.clone()));
            !(self - &n).is_negative()
        };
        let mut lo = &guess - &slack;
        while !le(&lo) {
            lo -= &slack * BigInt::from(2);
        }
        let mut hi = &guess + &slack;
        while le(&hi) {
            hi += &slack * BigInt::from(2);
        }
        // invariant: lo ≤ self < hi
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            if le(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        guess = lo;
        guess
    }

    pub fn ceil(&self) -> BigInt {
        -(-self.clone()).floor()
    }

    /// Exact value as a nonnegative integer, if it is one.
    pub fn to_nonneg_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        (r.is_integer() && !r.is_negative()).then(|| r.to_integer())
    }
}

impl Sign {
    pub(crate) fn of_rational(r: &Rational) -> Sign {
        match r.numer().sign() {
            BigSign::Minus => Sign::Negative,
            BigSign::NoSign => Sign::Zero,
            BigSign::Plus => Sign::Positive,
        }
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl From<Rational> for QuadScalar {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<&BigInt> for QuadScalar {
    fn from(n: &BigInt) -> Self {
        Self::rational(Rational::from_integer(n.clone()))
    }
}

// Operator impls panic on incompatible radicands; the checked `try_*`
// methods are the fallible surface. Every validated object lives in one
// field, so algorithm code uses the operators.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            radicand: self.radicand,
        }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}

impl std::iter::Sum for QuadScalar {
    fn sum<I: Iterator<Item = QuadScalar>>(iter: I) -> Self {
        iter.fold(QuadScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a QuadScalar> for QuadScalar {
    fn sum<I: Iterator<Item = &'a QuadScalar>>(iter: I) -> Self {
        iter.fold(QuadScalar::zero(), |acc, x| acc + x)
    }
}

/// Canonical literal: `p`, `p/q`, or `(p±r*sqrt(D))/q`.
impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return if self.a.is_integer() {
                write!(f, "{}", self.a.numer())
            } else {
                write!(f, "{}/{}", self.a.numer(), self.a.denom())
            };
        }
        let den = self.a.denom().lcm(self.b.denom());
        let p = self.a.numer() * (&den / self.a.denom());
        let r = self.b.numer() * (&den / self.b.denom());
        let op = if r.is_negative() { '-' } else { '+' };
        write!(f, "({p}{op}{}*sqrt({}))/{den}", r.abs(), self.radicand)
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64), d: u64) -> QuadScalar {
        QuadScalar::new(
            Rational::new(a.0.into(), a.1.into()),
            Rational::new(b.0.into(), b.1.into()),
            d,
        )
    }

    #[test]
    fn golden_ratio_squares_to_itself_plus_one() {
        let phi = q((1, 2), (1, 2), 5);
        assert_eq!(&phi * &phi, q((3, 2), (1, 2), 5));
        assert_eq!(&phi * &phi, &phi + QuadScalar::one());
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = q((2, 1), (1, 1), 3);
        let y = q((2, 1), (-1, 1), 3);
        assert_eq!(&x * &y, QuadScalar::one());
        assert_eq!(x.norm(), Rational::one());
    }

    #[test]
    fn additive_identity() {
        let x = q((7, 3), (-2, 5), 13);
        assert_eq!(&x + QuadScalar::zero(), x);
    }

    #[test]
    fn signs_decided_exactly() {
        assert_eq!(q((3, 1), (-1, 1), 5).sign(), Sign::Positive);
        assert_eq!(QuadScalar::zero().sign(), Sign::Zero);
        assert_eq!(q((1, 1), (-1, 1), 2).sign(), Sign::Negative);
        assert_eq!(q((-7, 1), (3, 1), 5).sign(), Sign::Negative);
        assert_eq!(q((-6, 1), (3, 1), 5).sign(), Sign::Positive);
    }

    #[test]
    fn canonical_radicand_reduction() {
        // 2·√12 = 4√3 and √4 = 2
        assert_eq!(q((0, 1), (2, 1), 12), q((0, 1), (4, 1), 3));
        assert_eq!(QuadScalar::sqrt_int(4), QuadScalar::from_int(2));
        assert!(q((5, 1), (0, 1), 7).is_rational());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let x = QuadScalar::sqrt_int(2);
        let y = QuadScalar::sqrt_int(3);
        assert_eq!(
            x.try_add(&y),
            Err(ScalarError::IncompatibleRadicands(2, 3))
        );
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(
            QuadScalar::one().try_div(&QuadScalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn exact_floor() {
        assert_eq!(q((2, 1), (1, 1), 3).floor(), BigInt::from(3));
        assert_eq!(q((1, 1), (-1, 1), 2).floor(), BigInt::from(-1));
        let big = q((0, 1), (1, 1), 2) * QuadScalar::rational(Rational::from_integer(BigInt::from(1u128 << 80)));
        let f = big.floor();
        let fr = QuadScalar::from(&f);
        assert!(fr <= big && big < fr + QuadScalar::one());
    }

    #[test]
    fn display_is_the_parenthesized_form() {
        assert_eq!(q((2, 1), (1, 1), 3).to_string(), "(2+1*sqrt(3))/1");
        assert_eq!(q((3, 2), (-1, 2), 5).to_string(), "(3-1*sqrt(5))/2");
        assert_eq!(QuadScalar::from_ratio(-3, 4).to_string(), "-3/4");
    }
}
