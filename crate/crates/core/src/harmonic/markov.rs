use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::HarmonicError;
use crate::hypergroup::{AlgebraElement, Hypergroup};
use crate::linalg::{solve, Matrix};
use crate::scalar::QuadScalar;

/// The walk `c_k ↦ c_k · probe`: `transition[k][m]` is the coefficient of
/// `c_m` in `c_k · probe`.
#[derive(Clone, Debug)]
pub struct MarkovChain {
    pub parent: Hypergroup,
    pub probe: AlgebraElement,
    pub transition: Matrix<QuadScalar>,
}

impl MarkovChain {
    pub fn size(&self) -> usize {
        self.transition.len()
    }

    /// `π_k = w_k / D`.
    pub fn haar_distribution(&self) -> Vec<QuadScalar> {
        let d = self.parent.total_weight();
        (0..self.size()).map(|k| self.parent.weight(k) / &d).collect()
    }

    /// `x T` for a row vector `x`.
    pub fn apply(&self, x: &[QuadScalar]) -> Vec<QuadScalar> {
        (0..self.size())
            .map(|m| (0..self.size()).map(|k| &x[k] * &self.transition[k][m]).sum())
            .collect()
    }

    /// Closed communicating classes of the support graph.
    pub fn closed_classes(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut reach = vec![vec![false; n]; n];
        for (s, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![s];
            row[s] = true;
            while let Some(k) = stack.pop() {
                for m in 0..n {
                    if !row[m] && !self.transition[k][m].is_zero() {
                        row[m] = true;
                        stack.push(m);
                    }
                }
            }
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            let class: Vec<usize> = (0..n).filter(|&m| reach[s][m] && reach[m][s]).collect();
            let closed = (0..n).all(|m| !reach[s][m] || class.contains(&m));
            if closed && class[0] == s {
                out.push(class);
            }
        }
        out
    }

    pub fn is_irreducible(&self) -> bool {
        let classes = self.closed_classes();
        classes.len() == 1 && classes[0].len() == self.size()
    }
}

pub fn transition_matrix(k: &Hypergroup, probe: &AlgebraElement) -> Result<MarkovChain, HarmonicError> {
    if !probe.is_convex() {
        return Err(HarmonicError::NotConvex);
    }
    let transition: Matrix<QuadScalar> = (0..k.size())
        .map(|i| Ok(k.multiply(&k.basis(i), probe)?.coeffs().to_vec()))
        .collect::<Result<_, HarmonicError>>()?;
    let chain = MarkovChain {
        parent: k.clone(),
        probe: probe.clone(),
        transition,
    };
    for (i, row) in chain.transition.iter().enumerate() {
        if row.iter().any(|v| v.is_negative()) || !row.iter().sum::<QuadScalar>().is_one() {
            return Err(HarmonicError::Internal(format!("row {i} is not stochastic")));
        }
    }
    let pi = chain.haar_distribution();
    if chain.apply(&pi) != pi {
        return Err(HarmonicError::Internal("Haar distribution is not stationary".into()));
    }
    Ok(chain)
}

/// Solves `π T = π`, `Σ π = 1` exactly for an irreducible chain.
pub fn stationary_distribution(m: &MarkovChain) -> Result<Vec<QuadScalar>, HarmonicError> {
    if !m.is_irreducible() {
        return Err(HarmonicError::Reducible {
            classes: m.closed_classes(),
        });
    }
    let n = m.size();
    let mut a: Matrix<QuadScalar> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let t = m.transition[c][r].clone();
                    if r == c { t - QuadScalar::one() } else { t }
                })
                .collect()
        })
        .collect();
    a.push(vec![QuadScalar::one(); n]);
    let mut b = vec![QuadScalar::zero(); n];
    b.push(QuadScalar::one());
    let pi = solve(&a, &b).ok_or_else(|| HarmonicError::Internal("balance equations are singular".into()))?;
    if pi != m.haar_distribution() {
        return Err(HarmonicError::Internal("stationary distribution differs from Haar".into()));
    }
    Ok(pi)
}

/// Exact cut points: from state `k` the next state is the first `m` with
/// `r < cut[k][m]`, where `r` is a uniform 64-bit integer and
/// `cut[k][m] = ⌈2⁶⁴ Σ_{j≤m} T[k][j]⌉`.
#[derive(Clone, Debug)]
pub struct WalkSampler {
    cuts: Vec<Vec<u128>>,
}

impl WalkSampler {
    pub fn new(m: &MarkovChain) -> Self {
        let scale = QuadScalar::rational(BigRational::from_integer(BigInt::one() << 64));
        let cuts = m
            .transition
            .iter()
            .map(|row| {
                let mut acc = QuadScalar::zero();
                row.iter()
                    .map(|t| {
                        acc = &acc + t;
                        (&acc * &scale).ceil().to_u128().expect("cumulative sums are at most 1")
                    })
                    .collect()
            })
            .collect();
        WalkSampler { cuts }
    }

    pub fn step(&self, state: usize, rng: &mut impl RngCore) -> usize {
        let r = u128::from(rng.next_u64());
        let row = &self.cuts[state];
        row.iter().position(|&c| r < c).unwrap_or(row.len() - 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkResult {
    pub seed: u64,
    /// States at steps `0..=steps`, starting with the initial state.
    pub trajectory: Vec<usize>,
    /// Occupation frequencies over steps `1..=steps`.
    pub empirical: Vec<f64>,
    pub tv_distance: f64,
}

/// `½ Σ |p_k − q_k|`.
pub fn tv_distance(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

pub fn simulate_walk(m: &MarkovChain, start: usize, steps: usize, seed: u64) -> Result<WalkResult, HarmonicError> {
    simulate_with(m, &WalkSampler::new(m), start, steps, seed)
}

fn simulate_with(
    m: &MarkovChain,
    sampler: &WalkSampler,
    start: usize,
    steps: usize,
    seed: u64,
) -> Result<WalkResult, HarmonicError> {
    if steps == 0 {
        return Err(HarmonicError::NoSteps);
    }
    if start >= m.size() {
        return Err(HarmonicError::OutOfRange(start));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trajectory = Vec::with_capacity(steps + 1);
    trajectory.push(start);
    let mut counts = vec![0usize; m.size()];
    let mut state = start;
    for _ in 0..steps {
        state = sampler.step(state, &mut rng);
        counts[state] += 1;
        trajectory.push(state);
    }
    let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / steps as f64).collect();
    let haar: Vec<f64> = m.haar_distribution().iter().map(QuadScalar::to_f64).collect();
    Ok(WalkResult {
        seed,
        tv_distance: tv_distance(&empirical, &haar),
        trajectory,
        empirical,
    })
}

/// Independent walks, one per seed, run in parallel and returned in seed
/// order.
pub fn simulate_walks(
    m: &MarkovChain,
    start: usize,
    steps: usize,
    seeds: &[u64],
) -> Result<Vec<WalkResult>, HarmonicError> {
    let sampler = WalkSampler::new(m);
    seeds
        .par_iter()
        .map(|&s| simulate_with(m, &sampler, start, steps, s))
        .collect()
}
