//! Exact scalars: rationals, elements of a real quadratic field `Q(√D)`, and
//! certified rational enclosures of real algebraic numbers.
//!
//! Every sign and equality decision elsewhere in the crate goes through this
//! module. Quadratic scalars decide exactly; interval scalars refine their
//! enclosure until the sign is settled or a configured width floor is hit,
//! at which point they fail instead of guessing.

mod interval;
mod parse;
pub mod poly;
mod quad;
pub mod rational;
mod roots;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

pub use interval::{IntervalScalar, RootRefiner};
pub use parse::parse_scalar;
pub use poly::{RationalPoly, RootInterval};
pub use quad::{QuadScalar, Rational};
pub use roots::RootFailure;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum ScalarError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("radicand sqrt({found}) does not match the declared field sqrt({expected})")]
    RadicandMismatch { found: u64, expected: u64 },
    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible quadratic fields sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(u64, u64),
    #[error("sign undecidable: enclosure reached the precision floor {width:e}")]
    PrecisionFloor { width: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl From<Sign> for Ordering {
    fn from(s: Sign) -> Ordering {
        match s {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Minimum enclosure width below which interval sign queries give up.
#[derive(Clone, Debug, PartialEq)]
pub struct PrecisionFloor(BigRational);

impl PrecisionFloor {
    pub const ENV_VAR: &'static str = "HYPERFUSE_PRECISION_FLOOR";

    pub fn new(width: BigRational) -> Self {
        assert!(width.is_positive(), "precision floor must be positive");
        PrecisionFloor(width)
    }

    pub fn width(&self) -> &BigRational {
        &self.0
    }

    /// Accepts `1e-40` style powers of ten or any positive scalar literal.
    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        let t = text.trim();
        if let Some(exp) = t.strip_prefix("1e-").or_else(|| t.strip_prefix("1E-")) {
            let digits: u32 = exp.parse().map_err(|_| ScalarError::Syntax {
                position: 3,
                message: "expected exponent digits".into(),
            })?;
            return Ok(PrecisionFloor(rational::ten_pow_neg(digits)));
        }
        let q = parse_scalar(t, None)?;
        match q.as_rational() {
            Some(r) if r.is_positive() => Ok(PrecisionFloor(r.clone())),
            _ => Err(ScalarError::Syntax {
                position: 0,
                message: "precision floor must be a positive rational".into(),
            }),
        }
    }

    /// Reads `HYPERFUSE_PRECISION_FLOOR`, falling back to the default.
    pub fn from_env() -> Result<Self, ScalarError> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::default()),
        }
    }
}

impl Default for PrecisionFloor {
    /// `10^-60`.
    fn default() -> Self {
        PrecisionFloor(rational::ten_pow_neg(60))
    }
}

/// A structure constant, weight or dimension: exact quadratic or certified
/// enclosure.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(QuadScalar),
    Interval(IntervalScalar),
}

impl Scalar {
    pub fn sign(&self, floor: &PrecisionFloor) -> Result<Sign, ScalarError> {
        match self {
            Scalar::Exact(q) => Ok(q.sign()),
            Scalar::Interval(i) => i.sign(floor),
        }
    }

    pub fn as_exact(&self) -> Option<&QuadScalar> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Interval(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Enclosure of the value of width at most `width`.
    pub fn enclose(&self, width: &BigRational) -> IntervalScalar {
        match self {
            Scalar::Exact(q) => IntervalScalar::from_quad(q, width),
            Scalar::Interval(i) => i.refine_to(width),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64(),
            Scalar::Interval(i) => i.refine_to(&rational::ten_pow_neg(20)).midpoint_f64(),
        }
    }

    pub fn try_add(&self, other: &Self, floor: &PrecisionFloor) -> Result<Self, ScalarError> {
        self.combine(other, floor, QuadScalar::try_add, |a, b| Ok(a.add(b)))
    }

    pub fn try_sub(&self, other: &Self, floor: &PrecisionFloor) -> Result<Self, ScalarError> {
        self.combine(other, floor, QuadScalar::try_sub, |a, b| Ok(a.sub(b)))
    }

    pub fn try_mul(&self, other: &Self, floor: &PrecisionFloor) -> Result<Self, ScalarError> {
        self.combine(other, floor, QuadScalar::try_mul, |a, b| Ok(a.mul(b)))
    }

    pub fn try_div(&self, other: &Self, floor: &PrecisionFloor) -> Result<Self, ScalarError> {
        if let Scalar::Interval(_) = other {
            if other.sign(floor)? == Sign::Zero {
                return Err(ScalarError::DivisionByZero);
            }
        }
        self.combine(other, floor, QuadScalar::try_div, IntervalScalar::div)
    }

    fn combine(
        &self,
        other: &Self,
        floor: &PrecisionFloor,
        exact: impl Fn(&QuadScalar, &QuadScalar) -> Result<QuadScalar, ScalarError>,
        approx: impl Fn(&IntervalScalar, &IntervalScalar) -> Result<IntervalScalar, ScalarError>,
    ) -> Result<Self, ScalarError> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => exact(a, b).map(Scalar::Exact),
            _ => {
                let mut a = self.enclose(floor.width());
                let mut b = other.enclose(floor.width());
                // refine a divisor off zero before dividing
                while b.contains_zero() && b.is_refinable() && !b.is_exact() {
                    b = b.refine();
                }
                if a.is_refinable() {
                    a = a.refine_to(floor.width());
                }
                approx(&a, &b).map(Scalar::Interval)
            }
        }
    }
}

impl From<QuadScalar> for Scalar {
    fn from(q: QuadScalar) -> Self {
        Scalar::Exact(q)
    }
}

impl From<IntervalScalar> for Scalar {
    fn from(i: IntervalScalar) -> Self {
        Scalar::Interval(i)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Interval(i) => write!(f, "{i}"),
        }
    }
}

/// Common field of a collection of quadratic scalars.
pub fn common_radicand<'a>(
    values: impl IntoIterator<Item = &'a QuadScalar>,
) -> Result<u64, ScalarError> {
    let mut d = 0;
    for v in values {
        match (d, v.radicand()) {
            (_, 0) => {}
            (0, e) => d = e,
            (x, e) if x == e => {}
            (x, e) => return Err(ScalarError::IncompatibleRadicands(x, e)),
        }
    }
    Ok(d)
}

/// Decimal rendering to a fixed number of places.
pub fn approx_string(x: &Scalar, places: usize) -> String {
    format!("{:.places$}", x.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_quad(d: u64) -> impl Strategy<Value = QuadScalar> {
        (arb_rational(), arb_rational()).prop_map(move |(a, b)| QuadScalar::new(a, b, d))
    }

    fn arb_any() -> impl Strategy<Value = QuadScalar> {
        prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(13), Just(12)]
            .prop_flat_map(arb_quad)
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_quad(5), y in arb_quad(5), z in arb_quad(5)) {
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * x.inverse().unwrap(), QuadScalar::from_int(1));
            }
            prop_assert_eq!(&x - &x, QuadScalar::zero());
        }

        #[test]
        fn nonzero_squares_are_positive(x in arb_any()) {
            if !x.is_zero() {
                prop_assert_eq!((&x * &x).sign(), Sign::Positive);
            }
        }

        #[test]
        fn print_then_parse_is_identity(x in arb_any()) {
            let text = x.to_string();
            let back = parse_scalar(&text, None).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn sign_agrees_with_enclosure(x in arb_any()) {
            let floor = PrecisionFloor::default();
            let enc = IntervalScalar::from_quad(&x, floor.width());
            prop_assert_eq!(enc.sign(&floor).unwrap(), x.sign());
        }
    }

    #[test]
    fn precision_floor_parsing() {
        assert_eq!(PrecisionFloor::parse("1e-30").unwrap().width(), &rational::ten_pow_neg(30));
        assert!(PrecisionFloor::parse("-1/2").is_err());
        assert_eq!(PrecisionFloor::default().width(), &rational::ten_pow_neg(60));
    }

    #[test]
    fn mixed_scalar_arithmetic_falls_back_to_intervals() {
        let floor = PrecisionFloor::default();
        let p = RationalPoly::from_ints(&[-2, 0, 1]);
        let root = p.isolate_real_roots().pop().unwrap();
        let s2 = Scalar::Interval(IntervalScalar::root_of(p, root));
        let sq = s2.try_mul(&s2, &floor).unwrap();
        let enc = sq.enclose(floor.width());
        assert!(enc.contains(&rational::big(2)));
        let half = Scalar::Exact(QuadScalar::from_ratio(1, 2));
        assert_eq!(sq.try_mul(&half, &floor).unwrap().sign(&floor), Ok(Sign::Positive));
    }
}
