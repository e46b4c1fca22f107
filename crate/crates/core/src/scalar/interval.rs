use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{RationalPoly, RootInterval};
use super::{PrecisionFloor, QuadScalar, ScalarError, Sign};

/// Replayable refinement: the unique root of a square-free polynomial inside
/// the current enclosure.
#[derive(Debug)]
pub struct RootRefiner {
    poly: RationalPoly,
}

impl RootRefiner {
    pub fn poly(&self) -> &RationalPoly {
        &self.poly
    }
}

/// A certified enclosure `[lo, hi]` of a real number.
#[derive(Clone)]
pub struct IntervalScalar {
    lo: BigRational,
    hi: BigRational,
    refiner: Option<Arc<RootRefiner>>,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

impl IntervalScalar {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        IntervalScalar {
            lo,
            hi,
            refiner: None,
        }
    }

    pub fn point(x: BigRational) -> Self {
        Self::new(x.clone(), x)
    }

    /// The root of square-free `poly` isolated in `(root.lo, root.hi]`.
    pub fn root_of(poly: RationalPoly, root: RootInterval) -> Self {
        let mut out = IntervalScalar {
            lo: root.lo,
            hi: root.hi,
            refiner: None,
        };
        if out.lo != out.hi {
            if poly.sign_at(&out.hi) == Sign::Zero {
                out.lo = out.hi.clone();
            } else {
                out.refiner = Some(Arc::new(RootRefiner { poly }));
                out.clear_left_root();
            }
        }
        out
    }

    /// Shrinks `lo` off a root of the polynomial so that the endpoint signs
    /// bracket the enclosed root.
    fn clear_left_root(&mut self) {
        let Some(refiner) = self.refiner.clone() else {
            return;
        };
        let p = &refiner.poly;
        if p.sign_at(&self.lo) != Sign::Zero {
            return;
        }
        let sturm = p.sturm_sequence();
        while p.sign_at(&self.lo) == Sign::Zero {
            let mid = (&self.lo + &self.hi) / two();
            if p.sign_at(&mid) == Sign::Zero {
                self.lo = mid.clone();
                self.hi = mid;
                self.refiner = None;
                return;
            }
            if sturm.count_in(&self.lo, &mid) == 0 {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    /// Encloses an exact quadratic value within `width`.
    pub fn from_quad(x: &QuadScalar, width: &BigRational) -> Self {
        if x.is_rational() {
            return Self::point(x.a().clone());
        }
        // √D ∈ [s/2^k, (s+1)/2^k] with s = ⌊√(D·4^k)⌋
        let mut k = 8u32;
        loop {
            let scale = BigInt::one() << k;
            let s = (BigInt::from(x.radicand()) * &scale * &scale).sqrt();
            let lo_root = BigRational::new(s.clone(), scale.clone());
            let hi_root = BigRational::new(s + 1, scale);
            let (p, q) = (x.b() * &lo_root, x.b() * &hi_root);
            let (l, h) = if p <= q { (p, q) } else { (q, p) };
            if &h - &l <= *width || k > 4096 {
                return Self::new(x.a() + l, x.a() + h);
            }
            k *= 2;
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn refiner(&self) -> Option<&RootRefiner> {
        self.refiner.as_deref()
    }

    pub fn is_refinable(&self) -> bool {
        self.refiner.is_some()
    }

    /// One bisection step. Returns a strictly narrower enclosure, or an
    /// exact point when the midpoint hits the root.
    pub fn refine(&self) -> Self {
        let Some(refiner) = &self.refiner else {
            return self.clone();
        };
        let p = &refiner.poly;
        let mid = (&self.lo + &self.hi) / two();
        let sm = p.sign_at(&mid);
        if sm == Sign::Zero {
            return Self::point(mid);
        }
        let slo = p.sign_at(&self.lo);
        let (lo, hi) = if slo != sm {
            (self.lo.clone(), mid)
        } else {
            (mid, self.hi.clone())
        };
        IntervalScalar {
            lo,
            hi,
            refiner: Some(refiner.clone()),
        }
    }

    /// Refines until the width is at most `width` (or the value is exact).
    pub fn refine_to(&self, width: &BigRational) -> Self {
        let mut cur = self.clone();
        while cur.refiner.is_some() && cur.width() > *width {
            cur = cur.refine();
        }
        cur
    }

    fn sign_now(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    /// Decides the sign, refining as far as the floor allows.
    pub fn sign(&self, floor: &PrecisionFloor) -> Result<Sign, ScalarError> {
        let mut cur = self.clone();
        loop {
            if let Some(s) = cur.sign_now() {
                return Ok(s);
            }
            if cur.refiner.is_none() || cur.width() <= *floor.width() {
                return Err(ScalarError::PrecisionFloor {
                    width: floor.width().to_f64().unwrap_or(0.0),
                });
            }
            cur = cur.refine();
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.contains_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let inv = Self::new(other.hi.recip(), other.lo.recip());
        Ok(self.mul(&inv))
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / two()).to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for IntervalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "~{:.15}", self.midpoint_f64())
    }
}

impl fmt::Debug for IntervalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)?;
        if let Some(r) = &self.refiner {
            write!(f, " root of {}", r.poly)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sqrt2() -> IntervalScalar {
        let p = RationalPoly::from_ints(&[-2, 0, 1]);
        let root = p.isolate_real_roots().pop().unwrap();
        IntervalScalar::root_of(p, root)
    }

    #[test]
    fn refinement_shrinks_strictly() {
        let x = sqrt2();
        let y = x.refine();
        assert!(y.width() < x.width());
        let z = x.refine_to(&r(1, 1_000_000));
        assert!(z.width() <= r(1, 1_000_000));
        assert!((z.midpoint_f64() - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn sign_after_refinement() {
        // √2 − 1.41 is positive but the coarse enclosure straddles zero
        let x = sqrt2().sub(&IntervalScalar::point(r(141, 100)));
        let floor = PrecisionFloor::default();
        // derived intervals cannot refine further
        if !x.lo().is_positive() {
            assert!(x.sign(&floor).is_err());
        }
        let tight = sqrt2()
            .refine_to(&r(1, 10_000))
            .sub(&IntervalScalar::point(r(141, 100)));
        assert_eq!(tight.sign(&floor), Ok(Sign::Positive));
        assert_eq!(sqrt2().sign(&floor), Ok(Sign::Positive));
    }

    #[test]
    fn undecidable_zero_fails_loudly() {
        let x = sqrt2();
        let diff = x.sub(&x);
        let floor = PrecisionFloor::default();
        assert!(matches!(diff.sign(&floor), Err(ScalarError::PrecisionFloor { .. })));
    }

    #[test]
    fn exact_roots_become_points() {
        let p = RationalPoly::from_ints(&[-4, 0, 1]);
        let roots = p.isolate_real_roots();
        let two = IntervalScalar::root_of(p.clone(), roots[1].clone()).refine_to(&r(1, 1 << 20));
        assert!(two.contains(&r(2, 1)));
    }

    #[test]
    fn quad_enclosure() {
        let phi: QuadScalar = "(1+1*sqrt(5))/2".parse().unwrap();
        let x = IntervalScalar::from_quad(&phi, &r(1, 1_000_000_000));
        assert!(x.width() <= r(1, 1_000_000_000));
        assert!((x.midpoint_f64() - 1.618_033_988_75).abs() < 1e-9);
    }
}
