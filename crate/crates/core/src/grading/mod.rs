//! Adjoint subhypergroup, universal grading, the derived chain and the
//! maximal subgroup.

use num_traits::One;
use thiserror::Error;

use crate::hypergroup::Hypergroup;
use crate::quotient::{
    find_subhypergroups, generated_subhypergroup, quotient_hypergroup, QuotientError, Subhypergroup,
};
use crate::scalar::QuadScalar;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GradingError {
    #[error("{0} is not a group")]
    NotAGroup(String),
    #[error("grading law fails for c{i} c{j}")]
    GradingLaw { i: usize, j: usize },
    #[error("weight identity fails: {0}")]
    WeightIdentity(String),
    #[error("grading by {0} is not refined by the universal grading")]
    NotRefined(String),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

/// `K_ad`: generated by the supports of every `c_k c_k̄`.
pub fn adjoint_subhypergroup(k: &Hypergroup) -> Subhypergroup {
    let seed: Vec<usize> = (0..k.size())
        .flat_map(|i| k.product_support(i, k.dual(i)))
        .collect();
    generated_subhypergroup(k, &seed).expect("indices are in range")
}

/// The universal grading `K = ⋃_g K_g` by `G_K = K//K_ad`.
#[derive(Clone, Debug)]
pub struct GradingData {
    pub adjoint: Subhypergroup,
    pub universal_group: Hypergroup,
    /// Element index of `G_K` for each element of `K`.
    pub assignment: Vec<usize>,
}

impl GradingData {
    /// `K_g` for every `g`, in the order of `G_K`'s elements.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.universal_group.size()];
        for (k, &g) in self.assignment.iter().enumerate() {
            out[g].push(k);
        }
        out
    }
}

/// Product in a group hypergroup.
fn group_product(g: &Hypergroup, a: usize, b: usize) -> usize {
    (0..g.size())
        .find(|&c| g.constant(a, b, c).is_one())
        .expect("group products are basis elements")
}

fn check_grading(k: &Hypergroup, group: &Hypergroup, assignment: &[usize]) -> Result<(), GradingError> {
    for i in 0..k.size() {
        for j in 0..k.size() {
            let target = group_product(group, assignment[i], assignment[j]);
            if k.product_support(i, j).iter().any(|&m| assignment[m] != target) {
                return Err(GradingError::GradingLaw { i, j });
            }
        }
    }
    if (0..group.size()).any(|g| !assignment.contains(&g)) {
        return Err(GradingError::NotAGroup("grading is not faithful".into()));
    }
    Ok(())
}

pub fn universal_grading(k: &Hypergroup) -> Result<GradingData, GradingError> {
    let adjoint = adjoint_subhypergroup(k);
    let q = quotient_hypergroup(k, &adjoint)?;
    if !q.hypergroup.is_group() {
        return Err(GradingError::NotAGroup(format!("K//K_ad of {}", k.labels().join(","))));
    }
    let assignment = q.cosets.class_of.clone();
    check_grading(k, &q.hypergroup, &assignment)?;
    Ok(GradingData {
        adjoint,
        universal_group: q.hypergroup,
        assignment,
    })
}

/// Compares the universal grading with every grading `K//L` that is a
/// group for `K_ad ⊆ L`; each must be coarser. Returns how many were
/// compared.
pub fn check_universality(k: &Hypergroup) -> Result<usize, GradingError> {
    let universal = universal_grading(k)?;
    let mut compared = 0;
    for l in find_subhypergroups(k)? {
        if !universal.adjoint.members().iter().all(|&m| l.contains(m)) {
            continue;
        }
        let q = quotient_hypergroup(k, &l)?;
        if !q.hypergroup.is_group() {
            continue;
        }
        check_grading(k, &q.hypergroup, &q.cosets.class_of)?;
        // refinement: equal universal degree forces equal coarse degree
        for a in 0..k.size() {
            for b in 0..k.size() {
                if universal.assignment[a] == universal.assignment[b] && q.project(a) != q.project(b) {
                    return Err(GradingError::NotRefined(format!("{:?}", l.labels())));
                }
            }
        }
        compared += 1;
    }
    Ok(compared)
}

/// `K = K_0 ⊋ K_1 ⊋ … ⊋ K_N` with `K_{i+1} = (K_i)_ad`, and the groups
/// `G_i = K_{i−1}//K_i`.
#[derive(Clone, Debug)]
pub struct DerivedChain {
    /// Each `K_i` as element indices of the original `K`.
    pub chain: Vec<Vec<usize>>,
    pub groups: Vec<Hypergroup>,
    /// `K_N = {c_0}`.
    pub nilpotent: bool,
    /// `D(K_N)`.
    pub terminal_weight: QuadScalar,
}

pub fn derived_chain(k: &Hypergroup) -> Result<DerivedChain, GradingError> {
    let mut chain = vec![(0..k.size()).collect::<Vec<usize>>()];
    let mut groups = Vec::new();
    let mut current = k.clone();
    loop {
        let ad = adjoint_subhypergroup(&current);
        if ad.size() == current.size() {
            break;
        }
        let g = quotient_hypergroup(&current, &ad)?.hypergroup;
        if !g.is_group() {
            return Err(GradingError::NotAGroup(format!("step {}", groups.len() + 1)));
        }
        groups.push(g);
        let prev = chain.last().unwrap();
        chain.push(ad.members().iter().map(|&m| prev[m]).collect());
        current = ad.hypergroup();
    }
    let terminal_weight = current.total_weight();
    let product: QuadScalar = groups
        .iter()
        .map(|g| QuadScalar::from(g.size() as i64))
        .fold(QuadScalar::one(), |a, b| a * b);
    if k.total_weight() != &product * &terminal_weight {
        return Err(GradingError::WeightIdentity(format!(
            "D(K) = {} but the chain gives {}",
            k.total_weight(),
            &product * &terminal_weight
        )));
    }
    Ok(DerivedChain {
        nilpotent: current.size() == 1,
        chain,
        groups,
        terminal_weight,
    })
}

/// `K^× = {c_k : w_k = 1}` and the quotient `K//K^×`.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub subgroup: Subhypergroup,
    pub quotient: Hypergroup,
}

pub fn maximal_subgroup(k: &Hypergroup) -> Result<MaximalSubgroup, GradingError> {
    let units: Vec<usize> = (0..k.size()).filter(|&i| k.weight(i).is_one()).collect();
    let subgroup = Subhypergroup::new(k, &units)?;
    if !subgroup.hypergroup().is_group() {
        return Err(GradingError::NotAGroup("the weight-one elements".into()));
    }
    let quotient = quotient_hypergroup(k, &subgroup)?.hypergroup;
    Ok(MaximalSubgroup { subgroup, quotient })
}
