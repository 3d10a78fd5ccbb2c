use proptest::prelude::*;
use shifted_crystal::crystal::{tensor_rule, CrystalWord};
use shifted_crystal::oracle::{self, Basis};
use shifted_crystal::shapes::{SkewShape, StrictPartition};
use shifted_crystal::ssdt::{self, DecompTableau};
use shifted_crystal::words::{self, PrimedLetter, PrimedWord};

fn word() -> impl Strategy<Value = CrystalWord> {
    (2..=5usize).prop_flat_map(|n| {
        prop::collection::vec(1..=n as u8, 0..=8).prop_map(move |l| CrystalWord::new(n, l).unwrap())
    })
}

fn primed_word(max_value: u32, max_len: usize) -> impl Strategy<Value = PrimedWord> {
    prop::collection::vec(1..=2 * max_value, 0..=max_len)
        .prop_map(|keys| PrimedWord(keys.into_iter().map(PrimedLetter::from_key).collect()))
}

/// Weakly decreasing run followed by a strictly increasing run.
fn hook_word(len: usize) -> impl Strategy<Value = Vec<u32>> {
    (prop::collection::vec(1..=4u32, len), 1..=len).prop_map(move |(raw, d)| {
        let mut down = raw[..d].to_vec();
        down.sort_unstable_by(|x, y| y.cmp(x));
        let mut last = down[d - 1];
        for &x in &raw[d..] {
            last += 1 + x % 2;
            down.push(last);
        }
        down
    })
}

fn sp(s: &str) -> StrictPartition {
    s.parse().unwrap()
}

/// A permutation of `1..=n` with `i ↦ 1`, `i+1 ↦ 2`; the rest ascending or
/// descending.
fn perm_for(n: usize, i: usize, descending: bool) -> Vec<usize> {
    let mut rest: Vec<usize> = (3..=n).collect();
    if descending {
        rest.reverse();
    }
    let mut it = rest.into_iter();
    (1..=n)
        .map(|k| match k {
            _ if k == i => 1,
            _ if k == i + 1 => 2,
            _ => it.next().unwrap(),
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn raising_and_lowering_are_partial_inverses(w in word()) {
        for i in 1..w.n() {
            if let Some(v) = w.f(i).unwrap() {
                prop_assert_eq!(v.e(i).unwrap(), Some(w.clone()));
            }
            if let Some(v) = w.e(i).unwrap() {
                prop_assert_eq!(v.f(i).unwrap(), Some(w.clone()));
            }
        }
        if let Some(v) = w.f_1bar() {
            prop_assert_eq!(v.e_1bar(), Some(w.clone()));
        }
    }

    #[test]
    fn signature_rule_matches_literal_tensor_rule(w in word()) {
        for i in 1..w.n() {
            prop_assert_eq!(w.f(i).unwrap().map(|v| v.letters().to_vec()), tensor_rule::f(w.letters(), i));
            prop_assert_eq!(w.e(i).unwrap().map(|v| v.letters().to_vec()), tensor_rule::e(w.letters(), i));
        }
        prop_assert_eq!(w.f_1bar().map(|v| v.letters().to_vec()), tensor_rule::f_1bar(w.letters()));
        prop_assert_eq!(w.e_1bar().map(|v| v.letters().to_vec()), tensor_rule::e_1bar(w.letters()));
    }

    #[test]
    fn phi_minus_epsilon_is_the_weight_pairing(w in word()) {
        let wt = w.weight();
        for i in 1..w.n() {
            let d = w.phi(i).unwrap() as i64 - w.epsilon(i).unwrap() as i64;
            prop_assert_eq!(d, wt[i - 1] as i64 - wt[i] as i64);
        }
    }

    #[test]
    fn suffix_lowest_test_matches_definition(w in word()) {
        prop_assert_eq!(w.is_q_lowest(), w.is_q_lowest_definitional());
    }

    #[test]
    fn conjugated_bar_operator_ignores_the_chosen_permutation(w in word()) {
        let n = w.n();
        for i in 1..n {
            let direct = w.f_ibar(i).unwrap();
            for desc in [false, true] {
                prop_assert_eq!(&w.f_ibar_via(i, &perm_for(n, i, desc)).unwrap(), &direct);
            }
            let up = w.e_ibar(i).unwrap();
            prop_assert_eq!(&w.e_ibar_via(i, &perm_for(n, i, true)).unwrap(), &up);
        }
    }

    #[test]
    fn letter_shift_commutes_with_operators(w in word(), t in 1..=3usize) {
        let s = w.psi_shift(t).unwrap();
        for i in 1..w.n() {
            prop_assert_eq!(w.f(i).unwrap().map(|v| v.psi_shift(t).unwrap()), s.f(i + t).unwrap());
            prop_assert_eq!(w.e(i).unwrap().map(|v| v.psi_shift(t).unwrap()), s.e(i + t).unwrap());
        }
        prop_assert_eq!(w.f_1bar().map(|v| v.psi_shift(t).unwrap()), s.f_ibar(1 + t).unwrap());
        prop_assert_eq!(w.q_lowest_shape(), s.q_lowest_shape());
    }

    #[test]
    fn star_labels_of_each_value_are_consecutive(w in primed_word(3, 9)) {
        let star = words::star_labeling(&w);
        let content = words::content(&w);
        for (k, &m) in content.iter().enumerate() {
            let mut labels: Vec<usize> = star.entries.iter().filter(|e| e.0 == k as u32 + 1).map(|e| e.1).collect();
            labels.sort_unstable();
            prop_assert_eq!(labels, (1..=m).collect::<Vec<_>>());
        }
    }

    #[test]
    fn pair_condition_forms_agree((upper, lower) in (2..=5usize).prop_flat_map(|k| (hook_word(k), (1..k).prop_flat_map(hook_word)))) {
        prop_assert!(ssdt::is_hook_word(&upper) && ssdt::is_hook_word(&lower));
        prop_assert_eq!(!ssdt::has_forbidden_pattern(&upper, &lower), ssdt::satisfies_pair_implications(&upper, &lower));
    }

    #[test]
    fn skew_rule_matches_joined_straight_rule(
        shape_idx in 0..SKEWS.len(),
        fill in prop::collection::vec(1..=3u32, 8),
    ) {
        let (outer, inner) = SKEWS[shape_idx];
        let shape = SkewShape::shifted(&sp(outer), &sp(inner)).unwrap();
        let mut it = fill.into_iter().cycle();
        let rows: Vec<Vec<u32>> = (1..=shape.num_rows()).map(|r| (0..shape.row_len(r)).map(|_| it.next().unwrap()).collect()).collect();
        let t = DecompTableau::new(shape, rows).unwrap();
        let m = 3 + sp(inner).len() as u32 + 1;
        prop_assert_eq!(ssdt::is_skew_ssdt(&t).unwrap(), ssdt::is_ssdt(&ssdt::join_lowest(&t, m).unwrap()).unwrap());
    }

    #[test]
    fn p_basis_expansion_round_trips(a in 0..STRICT.len(), b in 0..STRICT.len()) {
        let n = 3;
        let (mu, nu) = (sp(STRICT[a]), sp(STRICT[b]));
        let prod = oracle::schur_p_poly(&mu, n).unwrap().multiply(&oracle::schur_p_poly(&nu, n).unwrap()).unwrap();
        prop_assert!(prod.is_symmetric());
        let coeffs = oracle::expand_in_basis(&prod, Basis::SchurP).unwrap();
        prop_assert_eq!(oracle::combine(&coeffs, Basis::SchurP, n).unwrap(), prod);
    }
}

const SKEWS: [(&str, &str); 6] = [
    ("3,1", "1"),
    ("4,2", "1"),
    ("4,2,1", "2"),
    ("4,3,1", "2,1"),
    ("5,3,1", "3"),
    ("5,4,2", "3,1"),
];

const STRICT: [&str; 6] = ["1", "2", "2,1", "3", "3,1", "4"];

#[test]
fn every_enumerated_skew_tableau_joins_to_a_straight_one() {
    for (outer, inner) in SKEWS {
        let shape = SkewShape::shifted(&sp(outer), &sp(inner)).unwrap();
        for t in ssdt::enumerate_ssdt(&shape, 3).unwrap() {
            let joined = ssdt::join_lowest(&t, 3 + sp(inner).len() as u32 + 1).unwrap();
            assert!(ssdt::is_ssdt(&joined).unwrap(), "{outer}/{inner}: {:?}", t.rows());
        }
    }
}
