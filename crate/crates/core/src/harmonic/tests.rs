use super::*;
use crate::fusion::catalog::{fibonacci, sample_instances, tambara_yamagami, two_element};
use crate::fusion::{to_hypergroup, FiniteGroup, FusionRing};
use crate::hypergroup::AlgebraElement;
use crate::linalg::mat_mul;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn qs(t: &str) -> QuadScalar {
    t.parse().unwrap()
}

fn group(name: &str) -> Hypergroup {
    to_hypergroup(&FusionRing::group_ring(&FiniteGroup::parse(name).unwrap())).unwrap()
}

fn ising() -> Hypergroup {
    to_hypergroup(&tambara_yamagami(&FiniteGroup::cyclic(2)).unwrap()).unwrap()
}

fn q(n: i64, d: i64) -> QuadScalar {
    QuadScalar::from_ratio(n, d)
}

#[test]
fn two_element_tables() {
    for d in ["2", "(2+1*sqrt(3))/1", "(3+1*sqrt(5))/2", "(5+2*sqrt(6))/1"] {
        let d = qs(d);
        let t = character_table(&two_element(&d).unwrap()).unwrap();
        let expected = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), -d.inverse().unwrap()]];
        assert_eq!(t.table(), expected.as_slice(), "d = {d}");
        assert!(t.pairing(0, 1).is_zero());
    }
}

#[test]
fn group_and_fibonacci_tables() {
    let t = character_table(&group("Z2")).unwrap();
    assert_eq!(t.table(), &[vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]]);
    let fib = to_hypergroup(&fibonacci()).unwrap();
    let t = character_table(&fib).unwrap();
    // −1/φ² with φ = (1+√5)/2
    let phi = qs("(1+1*sqrt(5))/2");
    assert_eq!(t.value(1, 1), &-(&phi * &phi).inverse().unwrap());
}

#[test]
fn ising_characters_and_dual() {
    let k = ising();
    let t = character_table(&k).unwrap();
    assert_eq!(
        t.table(),
        &[
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(-1, 1)],
            vec![q(1, 1), q(-1, 1), q(0, 1)],
        ]
    );
    let dual = dual_hypergroup(&t);
    assert!(dual.hypergroup().unwrap().is_isomorphic(&k));
}

#[test]
fn unsupported_and_noncommutative() {
    assert!(matches!(character_table(&group("S3")), Err(HarmonicError::NotCommutative)));
    assert!(matches!(character_table(&group("Z3")), Err(HarmonicError::Unsupported(_))));
    assert!(matches!(character_table(&group("Z4")), Err(HarmonicError::Unsupported(_))));
}

#[test]
fn self_duality() {
    for d in ["2", "3", "(2+1*sqrt(3))/1", "(3+1*sqrt(5))/2"] {
        assert!(is_self_dual(&two_element(&qs(d)).unwrap()).unwrap(), "{d}");
    }
    assert!(is_self_dual(&group("Z2xZ2")).unwrap());
    assert!(is_self_dual(&to_hypergroup(&fibonacci()).unwrap()).unwrap());
}

#[test]
fn catalog_characters() {
    let mut covered = 0;
    for (name, obj) in sample_instances() {
        let k = obj.hypergroup().unwrap();
        let t = match character_table(&k) {
            Ok(t) => t,
            Err(HarmonicError::NotCommutative | HarmonicError::Unsupported(_)) => continue,
            Err(e) => panic!("{name}: {e}"),
        };
        covered += 1;
        assert_eq!(t.len(), k.size());
        assert!(t.table()[0].iter().all(|v| v.is_one()));
        for row in &t.table()[1..] {
            let below = row.iter().any(|v| !v.is_positive() || v.abs() < QuadScalar::one());
            assert!(below, "{name}");
        }
        // dual is either a hypergroup or a reported negative constant
        match dual_hypergroup(&t) {
            DualOutcome::Hypergroup(h) => assert_eq!(h.size(), k.size()),
            DualOutcome::NegativeConstant { value, .. } => assert!(value.is_negative()),
            DualOutcome::Invalid(v) => panic!("{name}: {v:?}"),
        }
    }
    assert!(covered >= 10, "{covered}");
}

#[test]
fn k2_chain() {
    let k = two_element(&q(2, 1)).unwrap();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    assert_eq!(m.transition, vec![vec![q(0, 1), q(1, 1)], vec![q(1, 2), q(1, 2)]]);
    assert_eq!(stationary_distribution(&m).unwrap(), vec![q(1, 3), q(2, 3)]);
}

#[test]
fn general_two_element_stationary() {
    let d = qs("(2+1*sqrt(3))/1");
    let k = two_element(&d).unwrap();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    let one = QuadScalar::one();
    let expected = vec![(&one + &d).inverse().unwrap(), &d / &(&one + &d)];
    assert_eq!(stationary_distribution(&m).unwrap(), expected);
}

#[test]
fn identity_and_haar_probes() {
    let k = ising();
    let m = transition_matrix(&k, &k.basis(0)).unwrap();
    assert_eq!(m.transition, crate::linalg::identity(3));
    assert_eq!(
        stationary_distribution(&m),
        Err(HarmonicError::Reducible {
            classes: vec![vec![0], vec![1], vec![2]]
        })
    );
    let m = transition_matrix(&k, &k.haar_element()).unwrap();
    assert!(m.transition.iter().all(|row| *row == m.haar_distribution()));
}

#[test]
fn ising_mixed_probe() {
    let k = ising();
    let probe = k.element(vec![q(0, 1), q(1, 2), q(1, 2)]).unwrap();
    let m = transition_matrix(&k, &probe).unwrap();
    assert_eq!(stationary_distribution(&m).unwrap(), vec![q(1, 4), q(1, 4), q(1, 2)]);
}

#[test]
fn reducible_classes() {
    // walking by c_g on Ising never leaves {e, g} or {rho}
    let k = ising();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    assert_eq!(m.closed_classes(), vec![vec![0, 1], vec![2]]);
    assert!(!m.is_irreducible());
}

#[test]
fn probe_must_be_convex() {
    let k = ising();
    let x = k.element(vec![q(2, 1), q(-1, 1), q(0, 1)]).unwrap();
    assert!(matches!(transition_matrix(&k, &x), Err(HarmonicError::NotConvex)));
}

#[test]
fn walk_converges_and_is_deterministic() {
    let k = two_element(&q(2, 1)).unwrap();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    let a = simulate_walk(&m, 0, 100_000, 42).unwrap();
    assert!(a.tv_distance < 0.02, "{}", a.tv_distance);
    assert_eq!(a.trajectory.len(), 100_001);
    assert_eq!(a, simulate_walk(&m, 0, 100_000, 42).unwrap());
    assert!(matches!(simulate_walk(&m, 0, 0, 1), Err(HarmonicError::NoSteps)));
    assert!(matches!(simulate_walk(&m, 5, 1, 1), Err(HarmonicError::OutOfRange(5))));
    let many = simulate_walks(&m, 1, 1000, &[3, 1, 2]).unwrap();
    assert_eq!(many[1], simulate_walk(&m, 1, 1000, 1).unwrap());
    assert_eq!(many.iter().map(|w| w.seed).collect::<Vec<_>>(), vec![3, 1, 2]);
}

#[test]
fn sampler_respects_zero_probability() {
    let k = two_element(&q(2, 1)).unwrap();
    let m = transition_matrix(&k, &k.basis(1)).unwrap();
    let s = WalkSampler::new(&m);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!((0..1000).all(|_| s.step(0, &mut rng) == 1));
}

#[test]
fn haar_probe_chi_square() {
    let chi = |k: &Hypergroup, start: usize| {
        let m = transition_matrix(k, &k.haar_element()).unwrap();
        let s = WalkSampler::new(&m);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let trials = 100_000;
        let mut counts = vec![0f64; k.size()];
        for _ in 0..trials {
            counts[s.step(start, &mut rng)] += 1.0;
        }
        let stat: f64 = m
            .haar_distribution()
            .iter()
            .zip(&counts)
            .map(|(p, o)| {
                let e = p.to_f64() * trials as f64;
                (o - e).powi(2) / e
            })
            .sum();
        let limit = ChiSquared::new((k.size() - 1) as f64).unwrap().inverse_cdf(0.999);
        assert!(stat < limit, "{stat} ≥ {limit}");
    };
    chi(&to_hypergroup(&fibonacci()).unwrap(), 1);
    chi(&ising(), 2);
    chi(&group("S3"), 3);
}

fn convex(k: &Hypergroup, raw: &[u8]) -> AlgebraElement {
    let n = k.size();
    let mut v: Vec<i64> = (0..n).map(|i| i64::from(raw[i % raw.len()])).collect();
    if v.iter().all(|&x| x == 0) {
        v[n - 1] = 1;
    }
    let total: i64 = v.iter().sum();
    k.element(v.iter().map(|&x| q(x, total)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn haar_is_stationary_and_steps_compose(
        pick in 0usize..64,
        a in proptest::collection::vec(0u8..5, 1..8),
        b in proptest::collection::vec(0u8..5, 1..8),
    ) {
        let instances = sample_instances();
        let k = instances[pick % instances.len()].1.hypergroup().unwrap();
        let x = convex(&k, &a);
        let y = convex(&k, &b);
        let tx = transition_matrix(&k, &x).unwrap();
        let ty = transition_matrix(&k, &y).unwrap();
        let pi = tx.haar_distribution();
        prop_assert_eq!(tx.apply(&pi), pi);
        // stepping by x then by y is the walk by x·y
        let txy = transition_matrix(&k, &k.multiply(&x, &y).unwrap()).unwrap();
        prop_assert_eq!(txy.transition, mat_mul(&tx.transition, &ty.transition));
    }
}
