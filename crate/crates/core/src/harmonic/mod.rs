//! Characters and dual hypergroups of commutative hypergroups, and the
//! Markov chains defined by multiplication.
//!
//! Character values are exact. A commutative hypergroup whose characters
//! are nonreal, or lie outside a single real quadratic field, is reported
//! as unsupported.

mod markov;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::hypergroup::{Hypergroup, HypergroupError, Violation};
use crate::linalg::{charpoly, nullspace, Matrix};
use crate::scalar::{QuadScalar, RationalPoly, RootFailure};

pub use markov::{
    simulate_walk, simulate_walks, stationary_distribution, transition_matrix, tv_distance,
    MarkovChain, WalkResult, WalkSampler,
};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum HarmonicError {
    #[error("hypergroup is not commutative")]
    NotCommutative,
    #[error("unsupported characters: {0}")]
    Unsupported(String),
    #[error("probe is not a convex combination of basis elements")]
    NotConvex,
    #[error("chain is reducible; closed classes {classes:?}")]
    Reducible { classes: Vec<Vec<usize>> },
    #[error("steps must be at least 1")]
    NoSteps,
    #[error("state {0} out of range")]
    OutOfRange(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// `table[m][i] = χ^m(c_i)`; row 0 is the trivial character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    parent: Hypergroup,
    table: Vec<Vec<QuadScalar>>,
}

impl CharacterTable {
    pub fn parent(&self) -> &Hypergroup {
        &self.parent
    }

    pub fn table(&self) -> &[Vec<QuadScalar>] {
        &self.table
    }

    pub fn value(&self, m: usize, i: usize) -> &QuadScalar {
        &self.table[m][i]
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `Σ_i w_i χ^a_i χ^b_i`.
    pub fn pairing(&self, a: usize, b: usize) -> QuadScalar {
        (0..self.parent.size())
            .map(|i| self.parent.weight(i) * &self.table[a][i] * &self.table[b][i])
            .sum()
    }

    /// Multiplicativity and weighted orthogonality, checked exactly.
    pub fn check(&self) -> Result<(), HarmonicError> {
        let k = &self.parent;
        let n = k.size();
        for (m, chi) in self.table.iter().enumerate() {
            if !chi[0].is_one() {
                return Err(HarmonicError::Internal(format!("χ^{m}(c0) ≠ 1")));
            }
            for i in 0..n {
                for j in 0..n {
                    let rhs: QuadScalar = (0..n).map(|l| k.constant(i, j, l) * &chi[l]).sum();
                    if &chi[i] * &chi[j] != rhs {
                        return Err(HarmonicError::Internal(format!(
                            "χ^{m} is not multiplicative at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if !self.pairing(a, b).is_zero() {
                    return Err(HarmonicError::Internal(format!("χ^{a} and χ^{b} are not orthogonal")));
                }
            }
        }
        Ok(())
    }
}

fn poly_eval(coeffs: &[QuadScalar], x: &QuadScalar) -> Option<QuadScalar> {
    let mut acc = QuadScalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc.try_mul(x).ok()?.try_add(c).ok()?;
    }
    Some(acc)
}

fn rational_poly(coeffs: &[QuadScalar]) -> RationalPoly {
    RationalPoly::new(coeffs.iter().map(|c| c.a().clone()).collect())
}

/// `p · p̄`, whose rational coefficients cover the roots of `p`.
fn norm_poly(coeffs: &[QuadScalar]) -> RationalPoly {
    let n = coeffs.len();
    let mut out = vec![QuadScalar::zero(); 2 * n - 1];
    for (i, a) in coeffs.iter().enumerate() {
        for (j, b) in coeffs.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * &b.conjugate());
        }
    }
    rational_poly(&out)
}

/// Distinct roots of `p` (coefficients in `Q(√D)`) that are real and lie in
/// a common quadratic field.
fn field_roots(coeffs: &[QuadScalar], radicand: u64) -> Result<Vec<QuadScalar>, String> {
    let rational = radicand <= 1;
    let shadow = if rational { rational_poly(coeffs) } else { norm_poly(coeffs) };
    let roots = shadow.square_free().exact_real_roots().map_err(|f| match (f, rational) {
        (RootFailure::NonReal, true) => "characters take nonreal values".to_string(),
        (RootFailure::NonReal, false) => "characters are nonreal or lie outside the base field".to_string(),
        (RootFailure::HigherDegree, _) => "character values are not quadratic irrationals".to_string(),
    })?;
    Ok(roots
        .into_iter()
        .filter(|r| poly_eval(coeffs, r).is_some_and(|v| v.is_zero()))
        .collect())
}

/// Simultaneous eigenvalues of the commuting operators `L_i`, one row per
/// character, trivial first and the rest ordered by their values.
pub fn character_table(k: &Hypergroup) -> Result<CharacterTable, HarmonicError> {
    if !k.is_commutative() {
        return Err(HarmonicError::NotCommutative);
    }
    let n = k.size();
    let ops: Vec<Matrix<QuadScalar>> = (0..n).map(|i| k.left_multiplication(i)).collect();
    let mut reason = String::from("no separating element found");
    // x = Σ s^i c_i separates characters for all but finitely many s
    for s in 2..(2 + 4 * n as i64 + 8) {
        let mut weight = QuadScalar::one();
        let mut lx = vec![vec![QuadScalar::zero(); n]; n];
        for op in &ops {
            for r in 0..n {
                for c in 0..n {
                    lx[r][c] = &lx[r][c] + &(&weight * &op[r][c]);
                }
            }
            weight = &weight * &QuadScalar::from_int(s);
        }
        let p = charpoly(&lx);
        let roots = match field_roots(&p, k.radicand()) {
            Ok(r) => r,
            Err(e) => {
                reason = e;
                continue;
            }
        };
        if roots.len() < n {
            reason = if k.radicand() > 1 {
                "characters are nonreal or lie outside the base field".into()
            } else {
                "no element with distinct character values found".into()
            };
            continue;
        }
        if crate::scalar::common_radicand(roots.iter()).is_err() {
            return Err(HarmonicError::Unsupported(
                "character values span several quadratic fields".into(),
            ));
        }
        let mut table = Vec::with_capacity(n);
        for lambda in &roots {
            // χ is a left eigenvector: L_xᵀ χ = λ χ
            let shifted: Matrix<QuadScalar> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if r == c { &lx[c][r] - lambda } else { lx[c][r].clone() })
                        .collect()
                })
                .collect();
            let space = nullspace(&shifted);
            if space.len() != 1 || space[0][0].is_zero() {
                return Err(HarmonicError::Internal("eigenspace of a simple eigenvalue".into()));
            }
            let scale = space[0][0].clone();
            table.push(space[0].iter().map(|v| v / &scale).collect::<Vec<_>>());
        }
        sort_rows(&mut table);
        let out = CharacterTable {
            parent: k.clone(),
            table,
        };
        out.check()?;
        return Ok(out);
    }
    Err(HarmonicError::Unsupported(reason))
}

fn sort_rows(table: &mut [Vec<QuadScalar>]) {
    table.sort_by(|a, b| {
        let trivial = |r: &[QuadScalar]| r.iter().all(|v| v.is_one());
        trivial(b).cmp(&trivial(a)).then_with(|| {
            b.iter()
                .zip(a)
                .map(|(x, y)| x.partial_cmp(y).unwrap())
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
}

/// Result of expanding character products in the character basis.
#[derive(Clone, Debug)]
pub enum DualOutcome {
    Hypergroup(Hypergroup),
    /// `χ^a χ^b` has coefficient `value < 0` on `χ^m`.
    NegativeConstant {
        a: usize,
        b: usize,
        m: usize,
        value: QuadScalar,
    },
    /// Nonnegative constants that still violate an axiom.
    Invalid(Vec<Violation>),
}

impl DualOutcome {
    pub fn hypergroup(&self) -> Option<&Hypergroup> {
        match self {
            DualOutcome::Hypergroup(h) => Some(h),
            _ => None,
        }
    }
}

/// Structure constants `Ĉ_ab^m = ⟨χ^a χ^b, χ^m⟩ / ⟨χ^m, χ^m⟩` of the
/// characters under pointwise multiplication.
pub fn dual_hypergroup(t: &CharacterTable) -> DualOutcome {
    let k = t.parent();
    let n = t.len();
    let norms: Vec<QuadScalar> = (0..n).map(|m| t.pairing(m, m)).collect();
    let mut constants = vec![vec![vec![QuadScalar::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for m in 0..n {
                let num: QuadScalar = (0..k.size())
                    .map(|i| k.weight(i) * &t.table[a][i] * &t.table[b][i] * &t.table[m][i])
                    .sum();
                let value = num / &norms[m];
                if value.is_negative() {
                    return DualOutcome::NegativeConstant { a, b, m, value };
                }
                constants[a][b][m] = value;
            }
        }
    }
    let labels = (0..n).map(|m| format!("chi{m}")).collect();
    // real characters are self-conjugate
    match Hypergroup::new(labels, (0..n).collect(), constants) {
        Ok(h) => DualOutcome::Hypergroup(h),
        Err(HypergroupError::Invalid(report)) => DualOutcome::Invalid(report.violations),
        Err(e) => DualOutcome::Invalid(vec![Violation::Shape { message: e.to_string() }]),
    }
}

/// Whether the dual exists and is isomorphic to `k`.
pub fn is_self_dual(k: &Hypergroup) -> Result<bool, HarmonicError> {
    let t = character_table(k)?;
    Ok(dual_hypergroup(&t).hypergroup().is_some_and(|d| d.is_isomorphic(k)))
}

#[cfg(test)]
mod tests;
