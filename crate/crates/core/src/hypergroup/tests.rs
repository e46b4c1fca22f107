use super::*;
use crate::fusion::catalog::{sample_instances, two_element};
use crate::fusion::{FiniteGroup, FusionRing};
use crate::fusion::to_hypergroup;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> QuadScalar {
    QuadScalar::from_ratio(n, d)
}

fn k_of(d: i64) -> Hypergroup {
    two_element(&QuadScalar::from_int(d)).unwrap()
}

fn group(name: &str) -> Hypergroup {
    to_hypergroup(&FusionRing::group_ring(&FiniteGroup::parse(name).unwrap())).unwrap()
}

fn raw_two_element(c110: QuadScalar, c111: QuadScalar) -> Vec<Vec<Vec<QuadScalar>>> {
    let z = QuadScalar::zero;
    let o = QuadScalar::one;
    vec![
        vec![vec![o(), z()], vec![z(), o()]],
        vec![vec![z(), o()], vec![c110, c111]],
    ]
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("c{i}")).collect()
}

#[test]
fn two_element_weights() {
    let k = k_of(2);
    assert_eq!(k.weights().weights, vec![q(1, 1), q(2, 1)]);
    assert_eq!(k.total_weight(), q(3, 1));
    assert!(k.is_commutative());
    assert!(!k.is_group());
}

#[test]
fn trivial_hypergroup() {
    let k = Hypergroup::new(vec!["e".into()], vec![0], vec![vec![vec![q(1, 1)]]]).unwrap();
    assert_eq!(k.total_weight(), q(1, 1));
    assert!(k.is_group());
    assert_eq!(k.haar_element().coeffs(), &[q(1, 1)]);
}

#[test]
fn row_sum_violation_reported() {
    let err = Hypergroup::new(labels(2), vec![0, 1], raw_two_element(q(1, 3), q(1, 3))).unwrap_err();
    let HypergroupError::Invalid(report) = err else {
        panic!("expected a validation report");
    };
    assert_eq!(report.violations, vec![Violation::RowSumNotOne { i: 1, j: 1 }]);
}

#[test]
fn negative_and_identity_violations() {
    let err = Hypergroup::new(labels(2), vec![0, 1], raw_two_element(q(0, 1), q(1, 1))).unwrap_err();
    let HypergroupError::Invalid(report) = err else {
        panic!()
    };
    assert!(report.as_set().contains(&Violation::IdentitySupportViolation { i: 1, j: 1 }));

    let err = Hypergroup::new(labels(2), vec![0, 1], raw_two_element(q(3, 2), q(-1, 2))).unwrap_err();
    let HypergroupError::Invalid(report) = err else {
        panic!()
    };
    assert!(report.as_set().contains(&Violation::NegativeConstant { i: 1, j: 1, k: 1 }));
}

#[test]
fn mixed_fields_rejected() {
    let table = raw_two_element(QuadScalar::sqrt_int(2) - q(1, 1), QuadScalar::sqrt_int(3));
    let HypergroupError::Invalid(report) = Hypergroup::new(labels(2), vec![0, 1], table).unwrap_err() else {
        panic!()
    };
    assert!(matches!(report.violations[0], Violation::MixedField { .. }));
}

#[test]
fn group_weights_are_one() {
    for name in ["Z2", "Z3", "Z2xZ2", "S3"] {
        let g = group(name);
        assert!(g.is_group());
        assert_eq!(g.total_weight(), QuadScalar::from(g.size() as i64));
    }
    assert!(group("Z3").is_commutative());
    assert!(!group("S3").is_commutative());
}

#[test]
fn haar_element_of_k2() {
    let e = k_of(2).haar_element();
    assert_eq!(e.coeffs(), &[q(1, 3), q(2, 3)]);
}

#[test]
fn products_and_trace() {
    let d = "(2+1*sqrt(3))/1".parse::<QuadScalar>().unwrap();
    let k = two_element(&d).unwrap();
    let c1 = k.basis(1);
    let sq = k.multiply(&c1, &c1).unwrap();
    assert_eq!(sq.coeff(0), &d.inverse().unwrap());
    assert_eq!(sq.coeff(1), &(QuadScalar::one() - d.inverse().unwrap()));
    assert_eq!(k.multiply(&k.basis(0), &c1).unwrap(), c1);
    for inst in sample_instances() {
        let k = inst.1.hypergroup().unwrap();
        for i in 0..k.size() {
            let p = k.multiply(&k.basis(i), &k.basis(k.dual(i))).unwrap();
            assert_eq!(k.trace(&p).unwrap(), k.weight(i).inverse().unwrap(), "{}", inst.0);
        }
    }
}

#[test]
fn frobenius_holds_on_catalog() {
    for (name, obj) in sample_instances() {
        let k = obj.hypergroup().unwrap();
        assert!(k.frobenius_check().holds(), "{name}");
        k.haar_element();
    }
}

#[test]
fn frobenius_locates_corruption() {
    let k = k_of(3);
    let mut table = k.table();
    table[1][1][0] = q(1, 2);
    let weights = k.weights().weights;
    let report = frobenius_check_table(k.involution(), &weights, &table);
    let v = report.violation.expect("corruption found");
    assert!(v.i == 1 || v.j == 1 || v.k == 1);
}

#[test]
fn isomorphism_detection() {
    let a = group("Z4");
    let b = group("Z2xZ2");
    assert!(!a.is_isomorphic(&b));
    assert!(a.is_isomorphic(&a.with_labels(vec!["1".into(), "x".into(), "y".into(), "z".into()]).unwrap()));
    let perm = a.isomorphism_to(&a).unwrap();
    assert_eq!(perm[0], 0);
}

#[test]
fn restriction_to_subgroup() {
    let g = group("Z4");
    let h = g.restrict(&[0, 2]).unwrap();
    assert_eq!(h.size(), 2);
    assert!(h.is_group());
    assert!(g.restrict(&[0, 1]).is_err());
}

#[test]
fn parent_mismatch() {
    let a = k_of(2);
    let b = k_of(2);
    assert_eq!(
        a.multiply(&a.basis(1), &b.basis(1)).unwrap_err(),
        HypergroupError::ParentMismatch
    );
}

fn arb_convex(n: usize) -> impl Strategy<Value = Vec<QuadScalar>> {
    proptest::collection::vec(0i64..6, n).prop_map(|v| {
        let total: i64 = v.iter().sum::<i64>().max(1);
        let mut out: Vec<QuadScalar> = v.iter().map(|&x| QuadScalar::from_ratio(x, total)).collect();
        if v.iter().all(|&x| x == 0) {
            out[0] = QuadScalar::one();
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_convex(
        pick in 0usize..29,
        a in arb_convex(6), b in arb_convex(6), c in arb_convex(6),
    ) {
        let instances = sample_instances();
        let k = instances[pick % instances.len()].1.hypergroup().unwrap();
        let n = k.size();
        let elem = |v: &[QuadScalar]| {
            let mut coeffs: Vec<QuadScalar> = v.iter().take(n).cloned().collect();
            coeffs.resize(n, QuadScalar::zero());
            let s: QuadScalar = coeffs.iter().sum();
            if s.is_zero() {
                coeffs[0] = QuadScalar::one();
            } else {
                coeffs = coeffs.iter().map(|x| x / &s).collect();
            }
            k.element(coeffs).unwrap()
        };
        let (x, y, z) = (elem(&a), elem(&b), elem(&c));
        let xy_z = k.multiply(&k.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = k.multiply(&x, &k.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&xy_z, &x_yz);
        prop_assert!(xy_z.is_convex());
        prop_assert_eq!(k.multiply(&k.basis(0), &x).unwrap(), x.clone());
        let star_xy = k.star(&k.multiply(&x, &y).unwrap()).unwrap();
        let ystar_xstar = k.multiply(&k.star(&y).unwrap(), &k.star(&x).unwrap()).unwrap();
        prop_assert_eq!(star_xy, ystar_xstar);
    }
}
