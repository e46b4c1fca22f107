use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FusionError, FusionRing};
use crate::linalg::charpoly;
use crate::scalar::{
    common_radicand, IntervalScalar, PrecisionFloor, QuadScalar, RationalPoly,
    Scalar,
};

/// Perron–Frobenius dimensions `d_i` and the global dimension `Σ d_i²`.
#[derive(Clone, Debug)]
pub struct DimensionVector {
    pub dims: Vec<Scalar>,
    pub global: Scalar,
}

impl DimensionVector {
    /// The dimensions as exact values of one common quadratic field, or the
    /// first index that prevents it.
    pub fn exact_field_values(&self) -> Result<Vec<QuadScalar>, (usize, String)> {
        let mut out = Vec::with_capacity(self.dims.len());
        for (i, d) in self.dims.iter().enumerate() {
            match d {
                Scalar::Exact(q) => out.push(q.clone()),
                Scalar::Interval(x) => {
                    let poly = x
                        .refiner()
                        .map(|r| r.poly().to_string())
                        .unwrap_or_else(|| "unknown".into());
                    return Err((i, format!("minimal polynomial divides {poly}")));
                }
            }
        }
        common_radicand(&out).map_err(|e| {
            let i = (0..out.len()).rev().find(|&i| out[i].radicand() != 0).unwrap_or(0);
            (i, e.to_string())
        })?;
        Ok(out)
    }

    pub fn is_exact(&self) -> bool {
        self.exact_field_values().is_ok()
    }
}

/// [`fp_dimension_with`] at the precision floor taken from the environment.
pub fn fp_dimension(ring: &FusionRing) -> Result<DimensionVector, FusionError> {
    fp_dimension_with(ring, &PrecisionFloor::from_env()?)
}

/// `d_i` = largest real root of `det(x − L_i)`. Exact when that root is
/// rational or quadratic; otherwise a refinable enclosure. The character
/// property `d_i d_j = Σ_k N_ij^k d_k` is then certified.
pub fn fp_dimension_with(
    ring: &FusionRing,
    floor: &PrecisionFloor,
) -> Result<DimensionVector, FusionError> {
    let n = ring.size();
    let mut dims: Vec<Option<Scalar>> = vec![None; n];
    for i in 0..n {
        if dims[i].is_some() {
            continue;
        }
        let p = RationalPoly::new(charpoly(&ring.left_multiplication(i))).square_free();
        let d = largest_root(&p);
        dims[ring.dual(i)] = Some(d.clone());
        dims[i] = Some(d);
    }
    let dims: Vec<Scalar> = dims.into_iter().map(Option::unwrap).collect();

    let exact = DimensionVector {
        dims: dims.clone(),
        global: Scalar::Exact(QuadScalar::zero()),
    }
    .exact_field_values();
    let global = match &exact {
        Ok(d) => {
            certify_exact(ring, d)?;
            if !d[0].is_one() || d.iter().any(|x| *x < QuadScalar::one()) {
                return Err(FusionError::Internal("dimension below one".into()));
            }
            Scalar::Exact(d.iter().map(QuadScalar::square).sum())
        }
        Err(_) => certify_interval(ring, &dims, floor)?,
    };
    Ok(DimensionVector { dims, global })
}

fn certify_exact(ring: &FusionRing, d: &[QuadScalar]) -> Result<(), FusionError> {
    let n = ring.size();
    for i in 0..n {
        for j in 0..n {
            let rhs: QuadScalar = (0..n)
                .filter(|&k| ring.constant(i, j, k) > 0)
                .map(|k| &d[k] * QuadScalar::from(ring.constant(i, j, k) as i64))
                .sum();
            if &d[i] * &d[j] != rhs {
                return Err(FusionError::Internal(format!(
                    "character property fails at ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

fn certify_interval(
    ring: &FusionRing,
    dims: &[Scalar],
    floor: &PrecisionFloor,
) -> Result<Scalar, FusionError> {
    let n = ring.size();
    let width = floor.width() / BigRational::from_integer(BigInt::from(16 * (n as i64 + 1)));
    let enc: Vec<IntervalScalar> = dims.iter().map(|d| d.enclose(&width)).collect();
    let one = BigRational::one();
    for (i, e) in enc.iter().enumerate() {
        if e.hi() < &one {
            return Err(FusionError::Internal(format!("d_{i} < 1")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut residual = enc[i].mul(&enc[j]);
            for k in 0..n {
                let m = ring.constant(i, j, k);
                if m > 0 {
                    let scale = IntervalScalar::point(BigRational::from_integer(BigInt::from(m)));
                    residual = residual.sub(&scale.mul(&enc[k]));
                }
            }
            if !residual.contains_zero() {
                return Err(FusionError::Internal(format!(
                    "character property fails at ({i}, {j})"
                )));
            }
        }
    }
    let global = enc
        .iter()
        .map(|e| e.mul(e))
        .reduce(|a, b| a.add(&b))
        .expect("nonempty ring");
    Ok(Scalar::Interval(global))
}

/// Largest real root of a square-free rational polynomial, recognised
/// exactly when it is rational or has a real quadratic minimal polynomial.
fn largest_root(p: &RationalPoly) -> Scalar {
    let roots = p.isolate_real_roots();
    let top = (0..roots.len())
        .max_by(|&a, &b| roots[a].hi.cmp(&roots[b].hi))
        .expect("characteristic polynomial of a nonnegative matrix has a real root");
    if let Some(exact) = p.recognize_root(&roots, top) {
        return Scalar::Exact(exact);
    }
    let probe = BigRational::new(BigInt::one(), BigInt::from(1u64 << 24)) / (p.root_bound() + BigRational::one());
    Scalar::Interval(IntervalScalar::root_of(p.clone(), roots[top].clone()).refine_to(&probe))
}
