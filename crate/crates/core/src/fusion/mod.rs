//! Fusion rings, Perron–Frobenius dimensions and the passage between
//! fusion rings and hypergroups.

pub mod catalog;
mod dimension;
mod group;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::hypergroup::{Hypergroup, HypergroupError, ValidationReport, Violation};
use crate::linalg::Matrix;
use crate::scalar::rational::{exact_isqrt, exact_rational_sqrt};
use crate::scalar::{PrecisionFloor, QuadScalar, Rational, Scalar, ScalarError, Sign};

pub use catalog::{catalog, CatalogObject, CatalogParams};
pub use dimension::{fp_dimension, fp_dimension_with, DimensionVector};
pub use group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum FusionError {
    #[error("invalid fusion ring: {0}")]
    Invalid(ValidationReport),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dimension of `{element}` is not in a single quadratic field ({detail})")]
    UnsupportedField { element: String, detail: String },
    #[error("{0} must be positive")]
    Nonpositive(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// A validated fusion ring basis with integer constants `N_ij^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    involution: Vec<usize>,
    constants: Vec<u64>,
}

impl FusionRing {
    /// Validates `table[i][j][k] = N_ij^k`.
    pub fn new(
        labels: Vec<String>,
        involution: Vec<usize>,
        table: Vec<Vec<Vec<i64>>>,
    ) -> Result<Self, FusionError> {
        let constants = check_ring(&labels, &involution, &table)
            .map_err(|violations| FusionError::Invalid(ValidationReport { violations }))?;
        Ok(FusionRing {
            labels,
            involution,
            constants,
        })
    }

    pub fn from_fn(
        labels: Vec<String>,
        involution: Vec<usize>,
        mut f: impl FnMut(usize, usize, usize) -> i64,
    ) -> Result<Self, FusionError> {
        let n = labels.len();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| f(i, j, k)).collect()).collect())
            .collect();
        Self::new(labels, involution, table)
    }

    /// The group ring `ℤG`.
    pub fn group_ring(g: &FiniteGroup) -> Self {
        let n = g.order();
        let involution = (0..n).map(|a| g.inverse(a)).collect();
        Self::from_fn(g.labels().to_vec(), involution, |a, b, c| {
            i64::from(g.mul(a, b) == c)
        })
        .expect("group ring")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn dual(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u64 {
        let n = self.size();
        self.constants[(i * n + j) * n + k]
    }

    pub fn table(&self) -> Vec<Vec<Vec<u64>>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.constant(i, j, k)).collect()).collect())
            .collect()
    }

    /// `(L_i)_{kj} = N_ij^k` over the rationals.
    pub fn left_multiplication(&self, i: usize) -> Matrix<Rational> {
        let n = self.size();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| Rational::from_integer(BigInt::from(self.constant(i, j, k))))
                    .collect()
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }

    /// `c_i c_j` as `"N·label + …"`.
    pub fn format_product(&self, i: usize, j: usize) -> String {
        let terms: Vec<String> = (0..self.size())
            .filter(|&k| self.constant(i, j, k) > 0)
            .map(|k| match self.constant(i, j, k) {
                1 => self.labels[k].clone(),
                m => format!("{m}{}", self.labels[k]),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FusionRing {:?}", self.labels)?;
        for i in 0..self.size() {
            for j in 0..self.size() {
                writeln!(f, "  {} * {} = {}", self.labels[i], self.labels[j], self.format_product(i, j))?;
            }
        }
        Ok(())
    }
}

fn check_ring(
    labels: &[String],
    involution: &[usize],
    table: &[Vec<Vec<i64>>],
) -> Result<Vec<u64>, Vec<Violation>> {
    let n = labels.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Violation::Shape {
            message: "at least the identity element is required".into(),
        });
    }
    if involution.len() != n {
        out.push(Violation::Shape {
            message: format!("involution has {} entries for {n} elements", involution.len()),
        });
    }
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
        out.push(Violation::Shape {
            message: format!("constant table is not {n}x{n}x{n}"),
        });
    }
    if !out.is_empty() {
        return Err(out);
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            out.push(Violation::DuplicateLabel { label: l.clone() });
        }
    }
    let mut involution_ok = true;
    for (i, &ib) in involution.iter().enumerate() {
        if ib >= n || involution[ib] != i || (i == 0 && ib != 0) {
            out.push(Violation::InvolutionFailure { index: i });
            involution_ok = false;
        }
    }
    let c = |i: usize, j: usize, k: usize| table[i][j][k];
    let mut negative = false;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c(i, j, k) < 0 {
                    out.push(Violation::NegativeConstant { i, j, k });
                    negative = true;
                }
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            let delta = i64::from(j == k);
            if c(0, j, k) != delta {
                out.push(Violation::UnitFailure { i: 0, j, k });
            }
            if j != 0 && c(j, 0, k) != delta {
                out.push(Violation::UnitFailure { i: j, j: 0, k });
            }
        }
    }
    if involution_ok {
        let inv = involution;
        for i in 0..n {
            for j in 0..n {
                if c(i, j, 0) != i64::from(j == inv[i]) {
                    out.push(Violation::IdentityCoefficientViolation { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = c(i, j, k);
                    if c(k, inv[j], i) != v || c(inv[i], k, j) != v || c(j, inv[k], inv[i]) != v {
                        out.push(Violation::ReciprocityFailure { i, j, k });
                    }
                }
            }
        }
    }
    // integer associativity (i128 so that large entries cannot overflow)
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for k in 0..n {
                    let left: i128 = (0..n).map(|m| c(i, j, m) as i128 * c(m, l, k) as i128).sum();
                    let right: i128 = (0..n).map(|m| c(j, l, m) as i128 * c(i, m, k) as i128).sum();
                    if left != right {
                        out.push(Violation::AssociativityFailure { i, j, l, k });
                    }
                }
            }
        }
    }
    if !out.is_empty() || negative {
        return Err(out);
    }
    Ok(table.iter().flatten().flatten().map(|&v| v as u64).collect())
}

/// `K_F`: constants `C_ij^k = d_k/(d_i d_j) N_ij^k` and weights `w_i = d_i²`.
/// Requires every Perron–Frobenius dimension to lie in one quadratic field.
pub fn to_hypergroup(ring: &FusionRing) -> Result<Hypergroup, FusionError> {
    let dims = fp_dimension(ring)?;
    to_hypergroup_with(ring, &dims)
}

pub fn to_hypergroup_with(ring: &FusionRing, dims: &DimensionVector) -> Result<Hypergroup, FusionError> {
    let d = dims.exact_field_values().map_err(|(i, detail)| FusionError::UnsupportedField {
        element: ring.label(i).to_string(),
        detail,
    })?;
    let k = Hypergroup::from_fn(ring.labels().to_vec(), ring.involution().to_vec(), |i, j, k| {
        let nk = ring.constant(i, j, k);
        if nk == 0 {
            QuadScalar::zero()
        } else {
            &d[k] * QuadScalar::from(nk as i64) / (&d[i] * &d[j])
        }
    })?;
    let total = k.total_weight();
    if Some(&total) != dims.global.as_exact() {
        return Err(FusionError::Internal(format!(
            "D(K_F) = {total} differs from D(F) = {}",
            dims.global
        )));
    }
    for (i, di) in d.iter().enumerate() {
        if *k.weight(i) != di.square() {
            return Err(FusionError::Internal(format!("w_{i} != d_{i}^2")));
        }
    }
    Ok(k)
}

/// The first coefficient whose rescaling `√(w_i w_j / w_k)·C_ij^k` is not a
/// nonnegative integer, with the square of that rescaled value.
#[derive(Clone, Debug, PartialEq)]
pub struct RescaleWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub square: QuadScalar,
}

impl RescaleWitness {
    /// The rescaled value itself, e.g. `sqrt(2)`.
    pub fn value(&self) -> String {
        if let Some(r) = self.square.as_rational() {
            if let Some(s) = exact_rational_sqrt(r) {
                return QuadScalar::rational(s).to_string();
            }
            return format!("sqrt({r})");
        }
        format!("sqrt({})", self.square)
    }
}

/// Outcome of [`fusion_ring_test`].
#[derive(Clone, Debug, PartialEq)]
pub struct RingTest {
    pub rescaled: Option<FusionRing>,
    pub witness: Option<RescaleWitness>,
}

impl RingTest {
    pub fn passes(&self) -> bool {
        self.rescaled.is_some()
    }
}

/// Decides whether `K` comes from a fusion ring. Exact: `v = √(w_i w_j/w_k)·C`
/// is a nonnegative integer iff `v² = (w_i w_j/w_k)·C²` is the square of one.
pub fn fusion_ring_test(k: &Hypergroup) -> RingTest {
    let n = k.size();
    let mut table = vec![vec![vec![0i64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let c = k.constant(i, j, m);
                if c.is_zero() {
                    continue;
                }
                let square = k.weight(i) * k.weight(j) / k.weight(m) * c.square();
                let root = square
                    .to_nonneg_integer()
                    .and_then(|s| exact_isqrt(&s))
                    .and_then(|r| r.to_i64());
                match root {
                    Some(v) => table[i][j][m] = v,
                    None => {
                        return RingTest {
                            rescaled: None,
                            witness: Some(RescaleWitness { i, j, k: m, square }),
                        }
                    }
                }
            }
        }
    }
    let ring = FusionRing::new(k.labels().to_vec(), k.involution().to_vec(), table)
        .expect("an integral rescaling of a hypergroup is a fusion ring");
    RingTest {
        rescaled: Some(ring),
        witness: None,
    }
}

/// `[B : B^{K//H}] = D(K)/D(H)` and `μ(B^K) = μ(B)·D(K)²`.
#[derive(Clone, Debug)]
pub struct IndexFormulas {
    pub subnet_index: Scalar,
    pub mu_index: Scalar,
}

pub fn index_formulas(
    dk: &Scalar,
    dh: &Scalar,
    mu: &Scalar,
    floor: &PrecisionFloor,
) -> Result<IndexFormulas, FusionError> {
    for (name, x) in [("D(K)", dk), ("D(H)", dh), ("mu", mu)] {
        if x.sign(floor)? != Sign::Positive {
            return Err(FusionError::Nonpositive(name.into()));
        }
    }
    Ok(IndexFormulas {
        subnet_index: dk.try_div(dh, floor)?,
        mu_index: mu.try_mul(&dk.try_mul(dk, floor)?, floor)?,
    })
}
