//! Small number-theoretic helpers on integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Writes `n = s²·f` with `f` square-free; returns `(s, f)`. `f = 0` iff `n = 0`.
pub fn split_square(n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (square, free * rest)
}

/// Square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a nonnegative rational, if it is rational.
pub fn exact_rational_sqrt(r: &BigRational) -> Option<BigRational> {
    Some(BigRational::new(
        exact_isqrt(r.numer())?,
        exact_isqrt(r.denom())?,
    ))
}

/// The rational of smallest denominator in the closed interval `[lo, hi]`.
///
/// Stern–Brocot descent via continued fractions; used to recognise exact
/// values from certified enclosures.
pub fn simplest_in(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        BigRational::zero()
    }
}

fn simplest_positive(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl < hi.floor() || hi.is_integer() && fl + BigRational::one() == *hi {
        return lo.floor() + BigRational::one();
    }
    // both in (k, k+1): recurse on reciprocals of fractional parts
    let k = lo.floor();
    let lo_frac = lo - &k;
    let hi_frac = hi - &k;
    let inner = simplest_positive(&hi_frac.recip(), &lo_frac.recip());
    k + inner.recip()
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `10^-digits` as a rational.
pub fn ten_pow_neg(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(digits))
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
