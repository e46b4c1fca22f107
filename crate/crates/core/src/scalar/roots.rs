//! Recognition of rational and quadratic real roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntervalScalar, QuadScalar, RationalPoly, RootInterval};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootFailure {
    /// Fewer real roots than the degree.
    NonReal,
    /// Some real root is neither rational nor quadratic.
    HigherDegree,
}

fn round(x: &IntervalScalar) -> BigRational {
    ((x.lo() + x.hi()) / BigRational::from_integer(BigInt::from(2))).round()
}

impl RationalPoly {
    /// `a^n p(y/a)` for the monic form `p`, with `a` the least common
    /// multiple of its denominators; the result is monic with integer
    /// coefficients and its roots are `a` times those of `self`.
    pub fn integral_scaling(&self) -> (RationalPoly, BigInt) {
        let m = self.monic();
        let a = m
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let n = m.coeffs().len().saturating_sub(1);
        let ar = BigRational::from_integer(a.clone());
        let mut scale = BigRational::one();
        let mut out = vec![BigRational::zero(); n + 1];
        for k in (0..=n).rev() {
            out[k] = &m.coeffs()[k] * &scale;
            scale = &scale * &ar;
        }
        (RationalPoly::new(out), a)
    }

    /// Root `roots[index]` of this monic integer polynomial as an exact
    /// value when it is rational or quadratic over the rationals.
    pub fn recognize_root(&self, roots: &[RootInterval], index: usize) -> Option<QuadScalar> {
        let r = &roots[index];
        if r.lo == r.hi {
            return Some(QuadScalar::rational(r.hi.clone()));
        }
        // enough to round sums and products of roots to the nearest integer
        let probe = BigRational::new(BigInt::one(), BigInt::from(1u64 << 24))
            / (self.root_bound() + BigRational::one());
        let x = IntervalScalar::root_of(self.clone(), r.clone()).refine_to(&probe);
        if x.is_exact() {
            return Some(QuadScalar::rational(x.lo().clone()));
        }
        // rational roots of a monic integer polynomial are integers
        let candidate = round(&x);
        if self.eval(&candidate).is_zero() {
            return Some(QuadScalar::rational(candidate));
        }
        let inside = |v: &QuadScalar| {
            QuadScalar::rational(r.lo.clone()) < *v && *v <= QuadScalar::rational(r.hi.clone())
        };
        for (j, other) in roots.iter().enumerate() {
            if j == index {
                continue;
            }
            let y = IntervalScalar::root_of(self.clone(), other.clone()).refine_to(&probe);
            let s = round(&x.add(&y));
            let t = round(&x.mul(&y));
            let quadratic = RationalPoly::new(vec![t.clone(), -s.clone(), BigRational::one()]);
            if !self.div_rem(&quadratic).1.is_zero() {
                continue;
            }
            let disc = &s * &s - BigRational::from_integer(BigInt::from(4)) * &t;
            if disc <= BigRational::zero() {
                continue;
            }
            let Ok(disc) = u64::try_from(disc.to_integer()) else {
                continue;
            };
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            for sign in [half.clone(), -half.clone()] {
                let value = QuadScalar::new(&s * &half, sign, disc);
                if inside(&value) && self.eval_quad(&value).is_zero() {
                    return Some(value);
                }
            }
        }
        None
    }

    /// Every real root of a square-free polynomial as an exact rational or
    /// quadratic value, increasing. Roots may lie in different fields.
    pub fn exact_real_roots(&self) -> Result<Vec<QuadScalar>, RootFailure> {
        let Some(n) = self.degree() else {
            return Ok(vec![]);
        };
        let (q, a) = self.integral_scaling();
        let roots = q.isolate_real_roots();
        if roots.len() < n {
            return Err(RootFailure::NonReal);
        }
        let a = QuadScalar::rational(BigRational::from_integer(a));
        (0..roots.len())
            .map(|i| {
                q.recognize_root(&roots, i)
                    .map(|y| &y / &a)
                    .ok_or(RootFailure::HigherDegree)
            })
            .collect()
    }
}
