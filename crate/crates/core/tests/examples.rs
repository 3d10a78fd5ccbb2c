use std::collections::BTreeMap;

use shifted_crystal::crystal::CrystalWord;
use shifted_crystal::expansions::{self, CoefficientRequest, Method};
use shifted_crystal::shapes::{self, Partition, StrictPartition};
use shifted_crystal::ssdt;

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

fn pp(s: &str) -> Partition {
    s.parse().unwrap()
}

fn table(entries: &[(&str, u64)]) -> BTreeMap<Partition, u64> {
    entries.iter().map(|&(k, v)| (pp(k), v)).collect()
}

fn every_method(req: &CoefficientRequest, want: &BTreeMap<Partition, u64>) {
    for m in req.methods() {
        assert_eq!(&req.expand(m).unwrap(), want, "{} via {m}", req.family());
    }
}

#[test]
fn highest_and_lowest_tableaux_of_431() {
    let h = ssdt::highest_tableau(&sp("4,3,1"), 4).unwrap();
    assert_eq!(h.rows(), &[vec![3, 2, 2, 1], vec![2, 1, 1], vec![1]]);
    let l = ssdt::lowest_tableau(&sp("4,3,1"), 4).unwrap();
    assert_eq!(l.rows(), &[vec![4, 4, 4, 4], vec![3, 3, 3], vec![2]]);
    assert!(ssdt::is_ssdt(&h).unwrap() && ssdt::is_ssdt(&l).unwrap());
}

#[test]
fn tableau_counts() {
    assert_eq!(ssdt::enumerate_straight(&sp("3,1"), 3).len(), 24);
    // P_2(x1, x2) = x1^2 + 2 x1 x2 + x2^2
    assert_eq!(ssdt::enumerate_straight(&sp("2"), 2).len(), 4);
    assert!(ssdt::enumerate_straight(&sp("3,2,1"), 2).is_empty());
}

#[test]
fn lowering_a_small_word() {
    let w = CrystalWord::parse(3, "1 2 1 1").unwrap();
    assert_eq!(w.f(1).unwrap().unwrap().to_string(), "1 2 2 1");
}

#[test]
fn schur_expansion_of_p31() {
    let req = CoefficientRequest::SchurExpansion { lambda: sp("3,1") };
    every_method(&req, &table(&[("3,1", 1), ("2,2", 1), ("2,1,1", 1)]));
}

#[test]
fn staircase_skew_schur_55431() {
    let req = CoefficientRequest::SkewSchurStaircase { lambda: pp("5,5,4,3,1"), r: 4 };
    every_method(&req, &table(&[("4,3,1", 2), ("5,2,1", 1), ("5,3", 1)]));
}

#[test]
fn complement_in_the_staircase_rectangle() {
    assert_eq!(shapes::complement_in_rectangle(&pp("5,5,4,3,1"), 4).unwrap(), pp("4,2,1"));
}

// The printed P-coefficients 2,6,6,8 carry a factor 2^(l(mu)+l(nu)-l(lambda)).
#[test]
fn shifted_lr_for_6521_over_42() {
    let (lambda, mu) = (sp("6,5,2,1"), sp("4,2"));
    for (nu, f, printed) in [("6,2", 2, 2), ("5,3", 6, 6), ("5,2,1", 3, 6), ("4,3,1", 4, 8)] {
        let nu = sp(nu);
        for m in Method::ALL {
            assert_eq!(expansions::shifted_lr(&lambda, &mu, &nu, m).unwrap(), f, "{nu} via {m}");
        }
        assert_eq!(f << (mu.len() + nu.len() - lambda.len()), printed);
    }
}

#[test]
fn skew_decomposition_for_6521_over_42() {
    let req = CoefficientRequest::SkewSsdt { lambda: sp("6,5,2,1"), mu: sp("4,2") };
    every_method(&req, &table(&[("6,2", 2), ("5,3", 3), ("5,2,1", 3), ("4,3,1", 3)]));
}
