//! Subhypergroups, double cosets and quotient hypergroups `K//L`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::hypergroup::{AlgebraElement, Hypergroup, HypergroupError};
use crate::scalar::QuadScalar;

/// Default limit on non-identity elements for [`find_subhypergroups`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum QuotientError {
    #[error("element index {0} out of range")]
    OutOfRange(usize),
    #[error("{0:?} is not a subhypergroup")]
    NotSubhypergroup(Vec<usize>),
    #[error("{size} non-identity elements exceed the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("quotient extraction failed: {0}")]
    Extraction(String),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// A subset `L ⊆ K` with `c_0 ∈ L`, `L* = L` and `LL ⊆ ℂL`.
#[derive(Clone, Debug)]
pub struct Subhypergroup {
    parent: Hypergroup,
    members: Vec<usize>,
}

impl PartialEq for Subhypergroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.parent == other.parent
    }
}

impl Subhypergroup {
    /// Checks the subset and wraps it; `members` need not be sorted.
    pub fn new(parent: &Hypergroup, members: &[usize]) -> Result<Self, QuotientError> {
        let sorted = normalize(parent, members)?;
        if !closed(parent, &sorted) {
            return Err(QuotientError::NotSubhypergroup(sorted));
        }
        Ok(Subhypergroup {
            parent: parent.clone(),
            members: sorted,
        })
    }

    /// `{c_0}`.
    pub fn trivial(parent: &Hypergroup) -> Self {
        Subhypergroup {
            parent: parent.clone(),
            members: vec![0],
        }
    }

    pub fn whole(parent: &Hypergroup) -> Self {
        Subhypergroup {
            parent: parent.clone(),
            members: (0..parent.size()).collect(),
        }
    }

    pub fn parent(&self) -> &Hypergroup {
        &self.parent
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&m| self.parent.label(m)).collect()
    }

    /// `L` as a hypergroup in its own right.
    pub fn hypergroup(&self) -> Hypergroup {
        self.parent
            .restrict(&self.members)
            .expect("a subhypergroup restricts to a hypergroup")
    }

    /// `D(L)`; weights of `L` agree with those in `K`.
    pub fn total_weight(&self) -> QuadScalar {
        self.members.iter().map(|&m| self.parent.weight(m)).sum()
    }

    /// `e_L = (1/D(L)) Σ_{l∈L} w_l c_l` as an element of `ℂK`.
    pub fn haar_element(&self) -> AlgebraElement {
        let d = self.total_weight();
        let mut coeffs = vec![QuadScalar::zero(); self.parent.size()];
        for &m in &self.members {
            coeffs[m] = self.parent.weight(m) / &d;
        }
        self.parent.element(coeffs).expect("weights lie in the parent's field")
    }
}

fn normalize(k: &Hypergroup, subset: &[usize]) -> Result<Vec<usize>, QuotientError> {
    if let Some(&bad) = subset.iter().find(|&&i| i >= k.size()) {
        return Err(QuotientError::OutOfRange(bad));
    }
    let set: BTreeSet<usize> = subset.iter().copied().collect();
    Ok(set.into_iter().collect())
}

fn closed(k: &Hypergroup, sorted: &[usize]) -> bool {
    let has = |x: usize| sorted.binary_search(&x).is_ok();
    has(0)
        && sorted.iter().all(|&i| has(k.dual(i)))
        && sorted
            .iter()
            .all(|&i| sorted.iter().all(|&j| k.product_support(i, j).into_iter().all(has)))
}

/// True iff `subset` contains `c_0` and is closed under the involution and
/// products.
pub fn is_subhypergroup(k: &Hypergroup, subset: &[usize]) -> Result<bool, QuotientError> {
    Ok(closed(k, &normalize(k, subset)?))
}

/// The smallest subhypergroup containing `seed`.
pub fn generated_subhypergroup(k: &Hypergroup, seed: &[usize]) -> Result<Subhypergroup, QuotientError> {
    let mut set: BTreeSet<usize> = normalize(k, seed)?.into_iter().collect();
    set.insert(0);
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &i in &current {
            set.insert(k.dual(i));
            for &j in &current {
                set.extend(k.product_support(i, j));
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(Subhypergroup {
        parent: k.clone(),
        members: set.into_iter().collect(),
    })
}

/// Every subhypergroup, sorted by `(size, members)`, with the default bound.
pub fn find_subhypergroups(k: &Hypergroup) -> Result<Vec<Subhypergroup>, QuotientError> {
    find_subhypergroups_with_bound(k, DEFAULT_ENUMERATION_BOUND)
}

/// Joins of singly generated subhypergroups, closed under pairwise
/// generation. Every subhypergroup is the join of the cyclic ones it
/// contains, so the list is complete.
pub fn find_subhypergroups_with_bound(
    k: &Hypergroup,
    bound: usize,
) -> Result<Vec<Subhypergroup>, QuotientError> {
    let n = k.size();
    if n - 1 > bound {
        return Err(QuotientError::BoundExceeded { size: n - 1, bound });
    }
    let cyclic: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| generated_subhypergroup(k, &[i]).map(|s| s.members))
        .collect::<Result<_, _>>()?;
    let mut found: BTreeSet<Vec<usize>> = cyclic.into_iter().collect();
    let mut frontier: Vec<Vec<usize>> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let all: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &all {
                let union: Vec<usize> = a.iter().chain(b).copied().collect();
                let joined = generated_subhypergroup(k, &union)?.members;
                if !found.contains(&joined) {
                    found.insert(joined.clone());
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out
        .into_iter()
        .map(|members| Subhypergroup {
            parent: k.clone(),
            members,
        })
        .collect())
}

/// `L\K/M`: indices grouped by the exact value of `e_L c_k e_M`.
#[derive(Clone, Debug)]
pub struct DoubleCosetSpace {
    pub left: Subhypergroup,
    pub right: Subhypergroup,
    /// Classes ordered by their least member, which is the representative.
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    /// `e_L c_r e_M` for each representative `r`.
    pub coset_elements: Vec<AlgebraElement>,
    /// Class index of every element of `K`.
    pub class_of: Vec<usize>,
}

pub fn double_cosets(
    k: &Hypergroup,
    left: &Subhypergroup,
    right: &Subhypergroup,
) -> Result<DoubleCosetSpace, QuotientError> {
    if left.parent != *k || right.parent != *k {
        return Err(HypergroupError::ParentMismatch.into());
    }
    let el = left.haar_element();
    let em = right.haar_element();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut elements: Vec<AlgebraElement> = Vec::new();
    let mut class_of = vec![0; k.size()];
    for c in 0..k.size() {
        let x = k.multiply(&k.multiply(&el, &k.basis(c))?, &em)?;
        match elements.iter().position(|e| *e == x) {
            Some(idx) => {
                classes[idx].push(c);
                class_of[c] = idx;
            }
            None => {
                class_of[c] = classes.len();
                classes.push(vec![c]);
                elements.push(x);
            }
        }
    }
    Ok(DoubleCosetSpace {
        left: left.clone(),
        right: right.clone(),
        representatives: classes.iter().map(|c| c[0]).collect(),
        classes,
        coset_elements: elements,
        class_of,
    })
}

/// `K//L` together with the data of the projection `K → K//L`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub hypergroup: Hypergroup,
    pub cosets: DoubleCosetSpace,
}

impl Quotient {
    /// Class of `c_k` in `K//L`.
    pub fn project(&self, k: usize) -> usize {
        self.cosets.class_of[k]
    }

    /// The projection `c_k ↦ c̃_[k]` as images in `ℂ(K//L)`.
    pub fn map(&self) -> Vec<AlgebraElement> {
        self.cosets
            .class_of
            .iter()
            .map(|&c| self.hypergroup.basis(c))
            .collect()
    }
}

/// `K//L` with `c̃_[k] c̃_[l] = Σ_[m] C̃ c̃_[m]`, read off from
/// `e_L c_k e_L c_l e_L = Σ_m (c_k e_L c_l)_m e_L c_m e_L`. Weights come from
/// the new constants, and `D(K) = D(L)·D(K//L)` is checked.
pub fn quotient_hypergroup(k: &Hypergroup, l: &Subhypergroup) -> Result<Quotient, QuotientError> {
    let cosets = double_cosets(k, l, l)?;
    let q = cosets.classes.len();
    for (idx, x) in cosets.coset_elements.iter().enumerate() {
        if x.support() != cosets.classes[idx] {
            return Err(QuotientError::Extraction(format!(
                "support of e_L c_{} e_L is not its class",
                cosets.representatives[idx]
            )));
        }
    }
    let e = l.haar_element();
    let mut table = vec![vec![vec![QuadScalar::zero(); q]; q]; q];
    for a in 0..q {
        let left = k.multiply(&k.basis(cosets.representatives[a]), &e)?;
        for b in 0..q {
            let y = k.multiply(&left, &k.basis(cosets.representatives[b]))?;
            for (m, coeff) in y.coeffs().iter().enumerate() {
                let cell = &mut table[a][b][cosets.class_of[m]];
                *cell = &*cell + coeff;
            }
            let mut recombined = k.zero_element();
            for (m, c) in table[a][b].iter().enumerate() {
                recombined = recombined.add(&cosets.coset_elements[m].scale(c))?;
            }
            let direct = k.multiply(&cosets.coset_elements[a], &cosets.coset_elements[b])?;
            if recombined != direct {
                return Err(QuotientError::Extraction(format!(
                    "product of classes {a} and {b} does not re-expand"
                )));
            }
        }
    }
    let labels = cosets
        .representatives
        .iter()
        .map(|&r| k.label(r).to_string())
        .collect();
    let involution = cosets
        .representatives
        .iter()
        .map(|&r| cosets.class_of[k.dual(r)])
        .collect();
    let hypergroup = Hypergroup::new(labels, involution, table)?;
    let lhs = k.total_weight();
    let rhs = l.total_weight() * hypergroup.total_weight();
    if lhs != rhs {
        return Err(QuotientError::Extraction(format!(
            "D(K) = {lhs} but D(L)·D(K//L) = {rhs}"
        )));
    }
    Ok(Quotient { hypergroup, cosets })
}

/// Outcome of [`morphism_check`].
#[derive(Clone, Debug)]
pub struct MorphismReport {
    /// First basis pair `(i, j)` with `φ(c_i)φ(c_j) ≠ φ(c_i c_j)`.
    pub product_failure: Option<(usize, usize)>,
    /// First `k` with `φ(c_k̄) ≠ φ(c_k)*`.
    pub star_failure: Option<usize>,
    pub unital: bool,
    /// `{c_k : φ(c_k) = c_0}`.
    pub kernel: Vec<usize>,
    /// Generated by the supports of all images.
    pub image: Subhypergroup,
}

impl MorphismReport {
    pub fn valid(&self) -> bool {
        self.unital && self.product_failure.is_none() && self.star_failure.is_none()
    }
}

/// Checks that `c_k ↦ map[k]` extends to a unital ∗-homomorphism `ℂK → ℂT`.
pub fn morphism_check(
    k: &Hypergroup,
    target: &Hypergroup,
    map: &[AlgebraElement],
) -> Result<MorphismReport, QuotientError> {
    if map.len() != k.size() {
        return Err(HypergroupError::Length {
            found: map.len(),
            expected: k.size(),
        }
        .into());
    }
    let n = k.size();
    let apply = |x: &AlgebraElement| -> Result<AlgebraElement, QuotientError> {
        let mut out = target.zero_element();
        for (i, c) in x.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&map[i].scale(c))?;
            }
        }
        Ok(out)
    };
    let unital = map[0] == target.basis(0);
    let mut product_failure = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = target.multiply(&map[i], &map[j])?;
            let rhs = apply(&k.multiply(&k.basis(i), &k.basis(j))?)?;
            if lhs != rhs {
                product_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    let mut star_failure = None;
    for i in 0..n {
        if map[k.dual(i)] != target.star(&map[i])? {
            star_failure = Some(i);
            break;
        }
    }
    let one = target.basis(0);
    let kernel = (0..n).filter(|&i| map[i] == one).collect();
    let support: Vec<usize> = map.iter().flat_map(|x| x.support()).collect();
    let image = generated_subhypergroup(target, &support)?;
    Ok(MorphismReport {
        product_failure,
        star_failure,
        unital,
        kernel,
        image,
    })
}

/// The subhypergroup lattice with inclusion covers and quotient data.
#[derive(Clone, Debug)]
pub struct SubhypergroupLattice {
    pub members: Vec<Subhypergroup>,
    /// `(a, b)` when `members[a] ⊂ members[b]` with nothing strictly between.
    pub covers: Vec<(usize, usize)>,
    /// `D(K//L)` for each member.
    pub quotient_weights: Vec<QuadScalar>,
}

pub fn lattice(k: &Hypergroup) -> Result<SubhypergroupLattice, QuotientError> {
    let members = find_subhypergroups(k)?;
    let subset = |a: &Subhypergroup, b: &Subhypergroup| {
        a.members.iter().all(|&m| b.contains(m)) && a.size() < b.size()
    };
    let mut covers = Vec::new();
    for (a, sa) in members.iter().enumerate() {
        for (b, sb) in members.iter().enumerate() {
            if subset(sa, sb)
                && !members
                    .iter()
                    .any(|sc| subset(sa, sc) && subset(sc, sb))
            {
                covers.push((a, b));
            }
        }
    }
    let quotient_weights = members
        .iter()
        .map(|l| Ok(quotient_hypergroup(k, l)?.hypergroup.total_weight()))
        .collect::<Result<_, QuotientError>>()?;
    Ok(SubhypergroupLattice {
        members,
        covers,
        quotient_weights,
    })
}

/// Parses `"e,g"`-style lists of labels (or indices) into element indices.
pub fn parse_subset(k: &Hypergroup, text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            k.index_of(s)
                .or_else(|| s.parse::<usize>().ok().filter(|&i| i < k.size()))
                .ok_or_else(|| format!("unknown element `{s}`"))
        })
        .collect()
}

/// `e_K` pushed through the projection equals `e_{K//L}`.
pub fn haar_coherent(k: &Hypergroup, q: &Quotient) -> bool {
    let d = k.total_weight();
    let mut image = vec![QuadScalar::zero(); q.hypergroup.size()];
    for i in 0..k.size() {
        let c = &mut image[q.project(i)];
        *c = &*c + k.weight(i) / &d;
    }
    q.hypergroup.element(image).ok() == Some(q.hypergroup.haar_element())
        && QuadScalar::one() == q.hypergroup.haar_element().coeffs().iter().sum()
}

#[cfg(test)]
mod tests;
