//! Finite hypergroups with exact structure constants.
//!
//! A hypergroup is a basis `c_0, …, c_n` of a unital ∗-algebra with
//! `c_i c_j = Σ_k C_ij^k c_k`, where the constants are nonnegative, each
//! product sums to one, and `c_0` appears in `c_i c_j` exactly when
//! `j = ī`. Construction validates every axiom, associativity included,
//! so everything downstream may assume them.

mod validate;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalar::QuadScalar;

pub use validate::{ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum HypergroupError {
    #[error("invalid hypergroup: {0}")]
    Invalid(ValidationReport),
    #[error("algebra elements belong to different hypergroups")]
    ParentMismatch,
    #[error("coefficient vector has length {found}, expected {expected}")]
    Length { found: usize, expected: usize },
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("coefficients outside the hypergroup's field: {0}")]
    Field(#[from] crate::scalar::ScalarError),
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// A validated finite hypergroup. Immutable; clones share the identity used
/// to match algebra elements to their parent.
#[derive(Clone)]
pub struct Hypergroup {
    id: u64,
    labels: Vec<String>,
    involution: Vec<usize>,
    constants: Vec<QuadScalar>,
    radicand: u64,
    weights: Vec<QuadScalar>,
}

/// Weights `w_i = 1 / C_{iī}^0` and their total `D(K)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightData {
    pub weights: Vec<QuadScalar>,
    pub total: QuadScalar,
}

/// A vector of `ℂK` in the basis `c_0..c_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    parent: u64,
    coeffs: Vec<QuadScalar>,
}

impl AlgebraElement {
    pub fn coeffs(&self) -> &[QuadScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &QuadScalar {
        &self.coeffs[k]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&k| self.coeffs[k].is_positive() || self.coeffs[k].is_negative())
            .collect()
    }

    /// Membership in `Conv(K)`: nonnegative coefficients summing to one.
    pub fn is_convex(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
            && self.coeffs.iter().sum::<QuadScalar>().is_one()
    }

    pub fn scale(&self, s: &QuadScalar) -> AlgebraElement {
        AlgebraElement {
            parent: self.parent,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, HypergroupError> {
        if self.parent != other.parent {
            return Err(HypergroupError::ParentMismatch);
        }
        Ok(AlgebraElement {
            parent: self.parent,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.try_add(b))
                .collect::<Result<_, _>>()?,
        })
    }
}

impl Hypergroup {
    /// Validates and builds a hypergroup from `table[i][j][k] = C_ij^k`.
    pub fn new(
        labels: Vec<String>,
        involution: Vec<usize>,
        table: Vec<Vec<Vec<QuadScalar>>>,
    ) -> Result<Self, HypergroupError> {
        let checked = validate::check_axioms(&labels, &involution, &table)
            .map_err(HypergroupError::Invalid)?;
        let n = labels.len();
        let weights: Vec<QuadScalar> = (0..n)
            .map(|i| {
                checked.flat[(i * n + involution[i]) * n]
                    .inverse()
                    .expect("identity coefficient of c_i c_ī is positive")
            })
            .collect();
        for i in 0..n {
            assert!(weights[i] >= QuadScalar::one(), "weight below one at {i}");
            assert_eq!(weights[i], weights[involution[i]], "weight duality at {i}");
        }
        Ok(Hypergroup {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            labels,
            involution,
            constants: checked.flat,
            radicand: checked.radicand,
            weights,
        })
    }

    /// Builds from a constant function `C(i, j, k)`.
    pub fn from_fn(
        labels: Vec<String>,
        involution: Vec<usize>,
        mut f: impl FnMut(usize, usize, usize) -> QuadScalar,
    ) -> Result<Self, HypergroupError> {
        let n = labels.len();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| f(i, j, k)).collect()).collect())
            .collect();
        Self::new(labels, involution, table)
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

    /// Square-free radicand of the field holding every constant (0 = `Q`).
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// `C_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &QuadScalar {
        let n = self.size();
        &self.constants[(i * n + j) * n + k]
    }

    /// Nested copy of the constant table.
    pub fn table(&self) -> Vec<Vec<Vec<QuadScalar>>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.product_coeffs(i, j).to_vec()).collect())
            .collect()
    }

    fn product_coeffs(&self, i: usize, j: usize) -> &[QuadScalar] {
        let n = self.size();
        &self.constants[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Indices `k` with `C_ij^k > 0`.
    pub fn product_support(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&k| self.constant(i, j, k).is_positive())
            .collect()
    }

    pub fn weight(&self, i: usize) -> &QuadScalar {
        &self.weights[i]
    }

    pub fn weights(&self) -> WeightData {
        WeightData {
            weights: self.weights.clone(),
            total: self.weights.iter().sum(),
        }
    }

    /// `D(K) = Σ w_i`.
    pub fn total_weight(&self) -> QuadScalar {
        self.weights.iter().sum()
    }

    pub fn basis(&self, k: usize) -> AlgebraElement {
        let mut coeffs = vec![QuadScalar::zero(); self.size()];
        coeffs[k] = QuadScalar::one();
        AlgebraElement {
            parent: self.id,
            coeffs,
        }
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement {
            parent: self.id,
            coeffs: vec![QuadScalar::zero(); self.size()],
        }
    }

    pub fn element(&self, coeffs: Vec<QuadScalar>) -> Result<AlgebraElement, HypergroupError> {
        if coeffs.len() != self.size() {
            return Err(HypergroupError::Length {
                found: coeffs.len(),
                expected: self.size(),
            });
        }
        if let Some(c) = coeffs
            .iter()
            .find(|c| c.radicand() != 0 && c.radicand() != self.radicand)
        {
            return Err(crate::scalar::ScalarError::IncompatibleRadicands(
                self.radicand,
                c.radicand(),
            )
            .into());
        }
        Ok(AlgebraElement {
            parent: self.id,
            coeffs,
        })
    }

    fn owns(&self, x: &AlgebraElement) -> Result<(), HypergroupError> {
        if x.parent != self.id {
            return Err(HypergroupError::ParentMismatch);
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, HypergroupError> {
        self.owns(x)?;
        self.owns(y)?;
        let n = self.size();
        let mut out = vec![QuadScalar::zero(); n];
        for (i, xi) in x.coeffs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coeffs.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.try_mul(yj)?;
                for (k, c) in self.product_coeffs(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].try_add(&s.try_mul(c)?)?;
                    }
                }
            }
        }
        Ok(AlgebraElement {
            parent: self.id,
            coeffs: out,
        })
    }

    /// `Σ λ_k c_k ↦ Σ λ_k c_k̄`; coefficients are real.
    pub fn star(&self, x: &AlgebraElement) -> Result<AlgebraElement, HypergroupError> {
        self.owns(x)?;
        let mut coeffs = vec![QuadScalar::zero(); self.size()];
        for (k, c) in x.coeffs.iter().enumerate() {
            coeffs[self.involution[k]] = c.clone();
        }
        Ok(AlgebraElement {
            parent: self.id,
            coeffs,
        })
    }

    /// Normalized trace `tr(c_k) = δ_k0`.
    pub fn trace(&self, x: &AlgebraElement) -> Result<QuadScalar, HypergroupError> {
        self.owns(x)?;
        Ok(x.coeffs[0].clone())
    }

    /// `e_K = (1/D) Σ w_k c_k`. Asserts `e² = e = e*` and that `e` absorbs
    /// every basis element from both sides.
    pub fn haar_element(&self) -> AlgebraElement {
        let d = self.total_weight();
        let e = AlgebraElement {
            parent: self.id,
            coeffs: self.weights.iter().map(|w| w / &d).collect(),
        };
        assert_eq!(self.multiply(&e, &e).unwrap(), e, "Haar element is not idempotent");
        assert_eq!(self.star(&e).unwrap(), e, "Haar element is not self-adjoint");
        for k in 0..self.size() {
            let c = self.basis(k);
            assert_eq!(self.multiply(&c, &e).unwrap(), e, "c_{k} e != e");
            assert_eq!(self.multiply(&e, &c).unwrap(), e, "e c_{k} != e");
        }
        e
    }

    /// True iff every weight is one.
    pub fn is_group(&self) -> bool {
        self.weights.iter().all(One::is_one)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (i + 1..n).all(|j| self.product_coeffs(i, j) == self.product_coeffs(j, i)))
    }

    /// Checks `C_ij^k = (w_k/w_i) C_{k j̄}^i = (w_k/w_j) C_{ī k}^j = (w_k/w_i) C_{j k̄}^{ī}`.
    pub fn frobenius_check(&self) -> FrobeniusReport {
        frobenius_scan(&self.involution, &self.weights, |i, j, k| self.constant(i, j, k))
    }

    /// Matrix of `x ↦ c_i x` in the basis: entry `[k][j] = C_ij^k`.
    pub fn left_multiplication(&self, i: usize) -> Matrix<QuadScalar> {
        let n = self.size();
        (0..n)
            .map(|k| (0..n).map(|j| self.constant(i, j, k).clone()).collect())
            .collect()
    }

    /// The hypergroup on `members` (sorted, containing 0), re-indexed in
    /// order and validated again. `members` must be closed under products
    /// and the involution.
    pub fn restrict(&self, members: &[usize]) -> Result<Hypergroup, HypergroupError> {
        let mut pos = vec![usize::MAX; self.size()];
        for (new, &old) in members.iter().enumerate() {
            pos[old] = new;
        }
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let involution = members
            .iter()
            .map(|&m| pos[self.involution[m]])
            .collect::<Vec<_>>();
        let table = members
            .iter()
            .map(|&i| {
                members
                    .iter()
                    .map(|&j| members.iter().map(|&k| self.constant(i, j, k).clone()).collect())
                    .collect()
            })
            .collect();
        Hypergroup::new(labels, involution, table)
    }

    /// Relabeled copy; the table is unchanged.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Hypergroup, HypergroupError> {
        Hypergroup::new(labels, self.involution.clone(), self.table())
    }

    /// A bijection `π` with `π(0) = 0` and `C_ij^k = C'_{π(i)π(j)}^{π(k)}`,
    /// if one exists. Backtracking over weight-preserving assignments.
    pub fn isomorphism_to(&self, other: &Hypergroup) -> Option<Vec<usize>> {
        let n = self.size();
        if n != other.size() {
            return None;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        perm[0] = 0;
        used[0] = true;
        self.extend_isomorphism(other, &mut perm, &mut used, 1)
            .then_some(perm)
    }

    fn extend_isomorphism(
        &self,
        other: &Hypergroup,
        perm: &mut [usize],
        used: &mut [bool],
        next: usize,
    ) -> bool {
        let n = self.size();
        if next == n {
            return true;
        }
        for t in 0..n {
            if used[t] || self.weights[next] != other.weights[t] {
                continue;
            }
            perm[next] = t;
            used[t] = true;
            if self.partial_map_consistent(other, perm, next)
                && self.extend_isomorphism(other, perm, used, next + 1)
            {
                return true;
            }
            used[t] = false;
            perm[next] = usize::MAX;
        }
        false
    }

    /// Checks every triple among `0..=last` that involves `last`.
    fn partial_map_consistent(&self, other: &Hypergroup, perm: &[usize], last: usize) -> bool {
        let inv_ok = (0..=last).all(|i| {
            let d = self.involution[i];
            d > last || perm[d] == other.involution[perm[i]]
        });
        inv_ok
            && (0..=last).all(|i| {
                (0..=last).all(|j| {
                    (0..=last).all(|k| {
                        (i != last && j != last && k != last)
                            || self.constant(i, j, k) == other.constant(perm[i], perm[j], perm[k])
                    })
                })
            })
    }

    pub fn is_isomorphic(&self, other: &Hypergroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// Renders an element as `λ c_k + …` using labels.
    pub fn format_element(&self, x: &AlgebraElement) -> String {
        let terms: Vec<String> = x
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                if c.is_one() {
                    self.labels[k].clone()
                } else {
                    format!("{c} {}", self.labels[k])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl PartialEq for Hypergroup {
    /// Same labels, involution and constants.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.involution == other.involution
            && self.constants == other.constants
    }
}

impl fmt::Debug for Hypergroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergroup")
            .field("labels", &self.labels)
            .field("involution", &self.involution)
            .field("radicand", &self.radicand)
            .field("weights", &self.weights)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Which of the three identities (1-based) failed.
    pub identity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub violation: Option<FrobeniusViolation>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks the Frobenius identities on an unvalidated table with given
/// weights; used to locate corruptions.
pub fn frobenius_check_table(
    involution: &[usize],
    weights: &[QuadScalar],
    table: &[Vec<Vec<QuadScalar>>],
) -> FrobeniusReport {
    frobenius_scan(involution, weights, |i, j, k| &table[i][j][k])
}

fn frobenius_scan<'a>(
    inv: &[usize],
    w: &[QuadScalar],
    c: impl Fn(usize, usize, usize) -> &'a QuadScalar,
) -> FrobeniusReport {
    let n = inv.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = c(i, j, k);
                let forms = [
                    &w[k] / &w[i] * c(k, inv[j], i),
                    &w[k] / &w[j] * c(inv[i], k, j),
                    &w[k] / &w[i] * c(j, inv[k], inv[i]),
                ];
                if let Some(identity) = forms.iter().position(|rhs| lhs != rhs) {
                    return FrobeniusReport {
                        violation: Some(FrobeniusViolation {
                            i,
                            j,
                            k,
                            identity: identity + 1,
                        }),
                    };
                }
            }
        }
    }
    FrobeniusReport { violation: None }
}

#[cfg(test)]
mod tests;
