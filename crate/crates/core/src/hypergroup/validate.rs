use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{common_radicand, QuadScalar, ScalarError};

/// One violated hypergroup axiom, with the offending indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// Table, label or involution lengths disagree.
    Shape { message: String },
    DuplicateLabel { label: String },
    /// Constants from two different quadratic fields.
    MixedField { first: u64, second: u64 },
    /// `ī̄ ≠ i`, `ī` out of range, or `0̄ ≠ 0`.
    InvolutionFailure { index: usize },
    NegativeConstant { i: usize, j: usize, k: usize },
    RowSumNotOne { i: usize, j: usize },
    /// `C_ij^0 > 0` does not coincide with `j = ī`.
    IdentitySupportViolation { i: usize, j: usize },
    /// `C_ij^0 ≠ C_ji^0` (reported once, with `i < j`).
    IdentityAsymmetry { i: usize, j: usize },
    /// `C_0j^k` or `C_j0^k` differs from `δ_jk`; the triple names the entry.
    UnitFailure { i: usize, j: usize, k: usize },
    /// `C_ij^k ≠ C_{j̄ ī}^{k̄}`.
    StarFailure { i: usize, j: usize, k: usize },
    /// Coefficient of `c_k` differs between `(c_i c_j) c_l` and `c_i (c_j c_l)`.
    AssociativityFailure { i: usize, j: usize, l: usize, k: usize },
    /// Fusion rings: `N_ij^0 ≠ δ_{j,ī}`.
    IdentityCoefficientViolation { i: usize, j: usize },
    /// Fusion rings: `N_ij^k`, `N_{k j̄}^i`, `N_{ī k}^j`, `N_{j k̄}^{ī}` disagree.
    ReciprocityFailure { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Shape { message } => write!(f, "shape: {message}"),
            DuplicateLabel { label } => write!(f, "duplicate label `{label}`"),
            MixedField { first, second } => {
                write!(f, "constants mix sqrt({first}) and sqrt({second})")
            }
            InvolutionFailure { index } => write!(f, "involution fails at element {index}"),
            NegativeConstant { i, j, k } => write!(f, "C[{i}][{j}][{k}] is negative"),
            RowSumNotOne { i, j } => write!(f, "coefficients of c{i}*c{j} do not sum to 1"),
            IdentitySupportViolation { i, j } => {
                write!(f, "identity coefficient of c{i}*c{j} is positive iff j is the dual of i fails")
            }
            IdentityAsymmetry { i, j } => write!(f, "C[{i}][{j}][0] != C[{j}][{i}][0]"),
            UnitFailure { i, j, k } => write!(f, "unit law fails at C[{i}][{j}][{k}]"),
            StarFailure { i, j, k } => write!(f, "star compatibility fails at C[{i}][{j}][{k}]"),
            AssociativityFailure { i, j, l, k } => {
                write!(f, "associativity fails for (c{i} c{j}) c{l} at coefficient {k}")
            }
            IdentityCoefficientViolation { i, j } => {
                write!(f, "N[{i}][{j}][0] must be 1 if j is the dual of i and 0 otherwise")
            }
            ReciprocityFailure { i, j, k } => {
                write!(f, "Frobenius reciprocity fails at N[{i}][{j}][{k}]")
            }
        }
    }
}

/// Every axiom violated by a candidate table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn as_set(&self) -> BTreeSet<Violation> {
        self.violations.iter().cloned().collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.violations.len();
        write!(f, "{n} violation{}", if n == 1 { "" } else { "s" })?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {v}")?;
        }
        if n > 8 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

pub(crate) struct Checked {
    pub radicand: u64,
    pub flat: Vec<QuadScalar>,
}

/// Checks every axiom on a raw `table[i][j][k]`; returns the flattened table
/// on success.
pub(crate) fn check_axioms(
    labels: &[String],
    involution: &[usize],
    table: &[Vec<Vec<QuadScalar>>],
) -> Result<Checked, ValidationReport> {
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
    let shape_ok = table.len() == n
        && table
            .iter()
            .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
    if !shape_ok {
        out.push(Violation::Shape {
            message: format!("constant table is not {n}x{n}x{n}"),
        });
    }
    if !out.is_empty() {
        return Err(ValidationReport { violations: out });
    }

    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            out.push(Violation::DuplicateLabel { label: l.clone() });
        }
    }

    let flat: Vec<QuadScalar> = table.iter().flatten().flatten().cloned().collect();
    let radicand = match common_radicand(&flat) {
        Ok(d) => d,
        Err(ScalarError::IncompatibleRadicands(a, b)) => {
            out.push(Violation::MixedField { first: a, second: b });
            return Err(ValidationReport { violations: out });
        }
        Err(_) => unreachable!("common_radicand only reports field clashes"),
    };
    let c = |i: usize, j: usize, k: usize| &flat[(i * n + j) * n + k];

    let mut involution_ok = true;
    for (i, &ib) in involution.iter().enumerate() {
        if ib >= n || involution[ib] != i || (i == 0 && ib != 0) {
            out.push(Violation::InvolutionFailure { index: i });
            involution_ok = false;
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c(i, j, k).is_negative() {
                    out.push(Violation::NegativeConstant { i, j, k });
                }
            }
            let sum: QuadScalar = (0..n).map(|k| c(i, j, k)).sum();
            if !sum.is_one() {
                out.push(Violation::RowSumNotOne { i, j });
            }
        }
    }

    for j in 0..n {
        for k in 0..n {
            let delta = if j == k { QuadScalar::one() } else { QuadScalar::zero() };
            if *c(0, j, k) != delta {
                out.push(Violation::UnitFailure { i: 0, j, k });
            }
            if j != 0 && *c(j, 0, k) != delta {
                out.push(Violation::UnitFailure { i: j, j: 0, k });
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            if involution_ok && c(i, j, 0).is_positive() != (j == involution[i]) {
                out.push(Violation::IdentitySupportViolation { i, j });
            }
            if i < j && c(i, j, 0) != c(j, i, 0) {
                out.push(Violation::IdentityAsymmetry { i, j });
            }
        }
    }

    if involution_ok {
        let inv = involution;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c(i, j, k) != c(inv[j], inv[i], inv[k]) {
                        out.push(Violation::StarFailure { i, j, k });
                    }
                }
            }
        }
    }

    // sparse rows: support of c_i c_j
    let support: Vec<Vec<(usize, &QuadScalar)>> = (0..n * n)
        .map(|ij| {
            (0..n)
                .filter_map(|m| {
                    let v = &flat[ij * n + m];
                    (!v.is_zero()).then_some((m, v))
                })
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let mut left = vec![QuadScalar::zero(); n];
                for &(m, a) in &support[i * n + j] {
                    for &(k, b) in &support[m * n + l] {
                        left[k] = &left[k] + a * b;
                    }
                }
                let mut right = vec![QuadScalar::zero(); n];
                for &(m, a) in &support[j * n + l] {
                    for &(k, b) in &support[i * n + m] {
                        right[k] = &right[k] + a * b;
                    }
                }
                for k in 0..n {
                    if left[k] != right[k] {
                        out.push(Violation::AssociativityFailure { i, j, l, k });
                    }
                }
            }
        }
    }

    if out.is_empty() {
        Ok(Checked { radicand, flat })
    } else {
        Err(ValidationReport { violations: out })
    }
}
