use super::*;
use crate::fusion::catalog::{near_group, sample_instances, tambara_yamagami, two_element, haagerup_izumi};
use crate::fusion::{to_hypergroup, FiniteGroup, FusionRing};
use crate::scalar::rational::big;

fn qs(t: &str) -> QuadScalar {
    t.parse().unwrap()
}

fn ising() -> Hypergroup {
    to_hypergroup(&tambara_yamagami(&FiniteGroup::cyclic(2)).unwrap()).unwrap()
}

fn group(name: &str) -> Hypergroup {
    to_hypergroup(&FusionRing::group_ring(&FiniteGroup::parse(name).unwrap())).unwrap()
}

#[test]
fn subhypergroup_membership() {
    let k = ising();
    assert!(is_subhypergroup(&k, &[0, 1]).unwrap());
    assert!(!is_subhypergroup(&k, &[0, 2]).unwrap());
    assert!(is_subhypergroup(&k, &[0]).unwrap());
    assert!(matches!(is_subhypergroup(&k, &[7]), Err(QuotientError::OutOfRange(7))));
}

#[test]
fn generation() {
    let k = ising();
    assert_eq!(generated_subhypergroup(&k, &[2]).unwrap().members(), &[0, 1, 2]);
    assert_eq!(generated_subhypergroup(&k, &[]).unwrap().members(), &[0]);
    let kd = two_element(&QuadScalar::from_int(3)).unwrap();
    assert_eq!(generated_subhypergroup(&kd, &[1]).unwrap().size(), 2);
}

#[test]
fn enumeration() {
    let kd = two_element(&QuadScalar::from_int(3)).unwrap();
    let subs = find_subhypergroups(&kd).unwrap();
    assert_eq!(subs.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![0, 1]]);
    assert_eq!(find_subhypergroups(&ising()).unwrap().len(), 3);
    assert_eq!(find_subhypergroups(&group("Z2xZ2")).unwrap().len(), 5);
    // S3: trivial, three of order 2, one of order 3, whole
    assert_eq!(find_subhypergroups(&group("S3")).unwrap().len(), 6);
    assert!(matches!(
        find_subhypergroups_with_bound(&group("Z4"), 2),
        Err(QuotientError::BoundExceeded { size: 3, bound: 2 })
    ));
}

#[test]
fn double_coset_extremes() {
    let k = ising();
    let trivial = Subhypergroup::trivial(&k);
    let whole = Subhypergroup::whole(&k);
    let dc = double_cosets(&k, &trivial, &trivial).unwrap();
    assert_eq!(dc.classes, vec![vec![0], vec![1], vec![2]]);
    let dc = double_cosets(&k, &whole, &whole).unwrap();
    assert_eq!(dc.classes, vec![vec![0, 1, 2]]);
    let z2 = Subhypergroup::new(&k, &[0, 1]).unwrap();
    let dc = double_cosets(&k, &z2, &z2).unwrap();
    assert_eq!(dc.classes, vec![vec![0, 1], vec![2]]);
    assert_eq!(dc.coset_elements[1], k.basis(2));
}

#[test]
fn ising_quotient_is_z2() {
    let k = ising();
    let l = Subhypergroup::new(&k, &[0, 1]).unwrap();
    let q = quotient_hypergroup(&k, &l).unwrap();
    assert!(q.hypergroup.is_group());
    assert_eq!(q.hypergroup.total_weight(), QuadScalar::from_int(2));
    assert_eq!(q.hypergroup.labels(), &["e", "rho"]);
}

#[test]
fn near_group_quotient_matches_closed_form() {
    let k = to_hypergroup(&near_group(&FiniteGroup::cyclic(2), 2).unwrap()).unwrap();
    let l = Subhypergroup::new(&k, &[0, 1]).unwrap();
    let q = quotient_hypergroup(&k, &l).unwrap().hypergroup;
    assert_eq!(q.constant(1, 1, 0), &qs("(2-1*sqrt(3))/1"));
    assert_eq!(q.constant(1, 1, 1), &qs("(-1+1*sqrt(3))/1"));
    assert_eq!(q.weight(1), &qs("(2+1*sqrt(3))/1"));
}

#[test]
fn haagerup_izumi_z3_quotient() {
    let k = to_hypergroup(&haagerup_izumi(&FiniteGroup::cyclic(3)).unwrap()).unwrap();
    let l = Subhypergroup::new(&k, &[0, 1, 2]).unwrap();
    let q = quotient_hypergroup(&k, &l).unwrap().hypergroup;
    assert_eq!(q.size(), 2);
    assert_eq!(q.weight(1), &QuadScalar::new(big(11) / big(2), big(3) / big(2), 13));
}

#[test]
fn weight_factorization_everywhere() {
    for (name, obj) in sample_instances() {
        let k = obj.hypergroup().unwrap();
        for l in find_subhypergroups(&k).unwrap() {
            let q = quotient_hypergroup(&k, &l).unwrap();
            assert_eq!(k.total_weight(), l.total_weight() * q.hypergroup.total_weight(), "{name}");
            assert!(haar_coherent(&k, &q), "{name} / {:?}", l.members());
        }
    }
}

#[test]
fn identity_and_trivial_maps() {
    let k = ising();
    let id: Vec<AlgebraElement> = (0..3).map(|i| k.basis(i)).collect();
    let r = morphism_check(&k, &k, &id).unwrap();
    assert!(r.valid());
    assert_eq!(r.kernel, vec![0]);
    assert_eq!(r.image.size(), 3);

    let one = Hypergroup::new(vec!["e".into()], vec![0], vec![vec![vec![QuadScalar::one()]]]).unwrap();
    let triv: Vec<AlgebraElement> = (0..3).map(|_| one.basis(0)).collect();
    let r = morphism_check(&k, &one, &triv).unwrap();
    assert!(r.valid());
    assert_eq!(r.kernel, vec![0, 1, 2]);
}

#[test]
fn quotient_map_kernel_is_subgroup() {
    let k = ising();
    let l = Subhypergroup::new(&k, &[0, 1]).unwrap();
    let q = quotient_hypergroup(&k, &l).unwrap();
    let r = morphism_check(&k, &q.hypergroup, &q.map()).unwrap();
    assert!(r.valid());
    assert_eq!(r.kernel, l.members());
}

#[test]
fn non_normal_subgroup_breaks_multiplicativity() {
    // {e, (12)} is not normal in S3, so c ↦ e_L c e_L is not multiplicative
    let k = group("S3");
    let l = find_subhypergroups(&k).unwrap().into_iter().find(|s| s.size() == 2).unwrap();
    let q = quotient_hypergroup(&k, &l).unwrap();
    let r = morphism_check(&k, &q.hypergroup, &q.map()).unwrap();
    assert!(r.product_failure.is_some());
    assert_eq!(r.kernel, l.members());
}

#[test]
fn lattice_of_z2xz2() {
    let lat = lattice(&group("Z2xZ2")).unwrap();
    assert_eq!(lat.members.len(), 5);
    // trivial below each order-2 subgroup, each below the whole group
    assert_eq!(lat.covers.len(), 6);
    assert_eq!(lat.quotient_weights[0], QuadScalar::from_int(4));
    assert_eq!(lat.quotient_weights[4], QuadScalar::from_int(1));
}

#[test]
fn subset_parsing() {
    let k = ising();
    assert_eq!(parse_subset(&k, "e,g").unwrap(), vec![0, 1]);
    assert_eq!(parse_subset(&k, " e , 2 ").unwrap(), vec![0, 2]);
    assert!(parse_subset(&k, "e,x").is_err());
}
