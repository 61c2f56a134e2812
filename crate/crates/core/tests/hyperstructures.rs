//! Carrier parsing, set closure and hyperstructure checks on small examples.

use std::path::PathBuf;

use hyperkit::carrier::{canonical_subset, closure_under, SubsetVal};
use hyperkit::families::{krasner, signs, viro_multigroup};
use hyperkit::hsf::{parse_structure, Structure};
use hyperkit::hyper::{
    check_double_distributivity, check_hypergroup, check_hyperring, check_regular_hypergroup,
    check_reversibility_equivalence, is_hyperring, prime_field, quotient_hyperring,
};
use hyperkit::iso::find_hyper_isomorphism;
use hyperkit::table::HyperTable;
use hyperkit::Error;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/hsf").join(name)
}

fn hyper(name: &str) -> HyperTable {
    match parse_structure(&data(name)).unwrap() {
        Structure::Hyper(h) => h,
        Structure::System(_) => panic!("expected a hyper table"),
    }
}

fn set(ids: &[usize]) -> SubsetVal {
    ids.iter().copied().collect()
}

fn trivial() -> HyperTable {
    hyper("trivial.json")
}

#[test]
fn parse_krasner_file() {
    let h = hyper("krasner.json");
    assert_eq!(h.n(), 2);
    assert_eq!(h.add(1, 1), &set(&[0, 1]));
    assert_eq!(h.name, "krasner");
}

#[test]
fn parse_trivial_ring() {
    let h = trivial();
    assert_eq!(h.n(), 1);
    assert_eq!(h.add(0, 0), &set(&[0]));
}

#[test]
fn parse_rejects_non_involutive_negation() {
    match parse_structure(&data("bad-negation.json")) {
        Err(Error::Validation { axiom, witness }) => {
            assert_eq!(axiom, "neg-involution");
            assert!(witness.contains('3'));
        }
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn parse_reports_line_of_syntax_error() {
    match parse_structure(&data("bad-syntax.json")) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn canonical_subset_sorts_and_deduplicates() {
    let s = canonical_subset(&[2, 0, 2, 1], 3).unwrap();
    assert_eq!(s.members(), &[0, 1, 2]);
    assert_eq!(canonical_subset(s.members(), 3).unwrap(), s);
    assert!(canonical_subset(&[], 3).unwrap().is_empty());
    assert!(matches!(canonical_subset(&[5], 3), Err(Error::Domain(_))));
}

fn singleton_closure(h: &HyperTable) -> Vec<SubsetVal> {
    let seed: Vec<SubsetVal> = (0..h.n()).map(SubsetVal::singleton).collect();
    closure_under(&seed, |s, t| h.add_sets(s, t), 1000).unwrap()
}

#[test]
fn krasner_closure_has_three_sets() {
    let mut c = singleton_closure(&krasner());
    c.sort();
    assert_eq!(c, vec![set(&[0]), set(&[0, 1]), set(&[1])]);
}

#[test]
fn signs_closure_has_four_sets() {
    let h = signs();
    let c = singleton_closure(&h);
    assert_eq!(c.len(), 4);
    assert!(c.contains(&set(&[0, 1, 2])));
}

#[test]
fn closure_of_zero_is_itself() {
    let h = krasner();
    let c = closure_under(&[set(&[0])], |s, t| h.add_sets(s, t), 10).unwrap();
    assert_eq!(c, vec![set(&[0])]);
}

#[test]
fn closure_over_cap_carries_partial_result() {
    let h = signs();
    let seed: Vec<SubsetVal> = (0..3).map(SubsetVal::singleton).collect();
    match closure_under(&seed, |s, t| h.add_sets(s, t), 3) {
        Err(Error::CapExceeded { cap, partial }) => {
            assert_eq!(cap, 3);
            assert_eq!(partial.len(), 3);
        }
        other => panic!("expected the cap to be exceeded, got {other:?}"),
    }
}

const HYPERGROUP: [&str; 4] = ["associativity", "neutral-zero", "unique-hypernegative", "reversibility"];

#[test]
fn krasner_is_a_hypergroup() {
    assert!(check_hypergroup(&krasner()).all_pass_of(&HYPERGROUP));
}

#[test]
fn viro_multigroup_fails_reversibility_only() {
    let h = viro_multigroup();
    let r = check_hypergroup(&h);
    let rev = r.get("reversibility").unwrap();
    assert!(!rev.pass);
    assert_eq!(rev.witness.as_ref().map(|w| w.len()), Some(3));
    assert!(r.axioms.iter().filter(|a| a.name != "reversibility").all(|a| a.pass));
}

#[test]
fn trivial_ring_is_a_hypergroup() {
    assert!(check_hypergroup(&trivial()).all_pass());
}

#[test]
fn signs_and_krasner_are_hyperfields() {
    for h in [signs(), krasner()] {
        let r = check_hyperring(&h);
        assert!(is_hyperring(&r), "{}", h.name);
        assert!(r.passed("hyperfield"), "{}", h.name);
    }
}

#[test]
fn non_absorbing_zero_is_reported() {
    let mut h = krasner();
    h.mul.as_mut().unwrap()[1] = Some(1);
    let r = check_hyperring(&h);
    let a = r.get("absorbing-zero").unwrap();
    assert!(!a.pass);
    assert_eq!(a.witness, Some(vec!["0".to_string(), "1".to_string()]));
}

#[test]
fn double_distributivity_on_small_hyperfields() {
    assert!(check_double_distributivity(&krasner()).pass);
    assert!(check_double_distributivity(&signs()).pass);
}

#[test]
fn f5_mod_sign_double_distributivity_is_frozen() {
    let h = quotient_hyperring(&prime_field(5), &[1, 4]).unwrap();
    let d = check_double_distributivity(&h);
    // Cosets [0] = {0}, [1] = {1,4}, [2] = {2,3}, by hand:
    // [1] ⊞ [1] = {[0],[2]}, so ([1] ⊞ [1])² = {[0],[1]},
    // while [1] ⊞ [1] ⊞ [1] ⊞ [1] = {[0],[1],[2]}.
    assert!(!d.pass);
    let w: Vec<String> = ["1", "1", "1", "1", "{0,1}", "{0,1,2}"].map(String::from).to_vec();
    assert_eq!(d.witness, Some(w));
}

#[test]
fn reversibility_equivalence() {
    for h in [krasner(), signs()] {
        let v = check_reversibility_equivalence(&h).unwrap();
        assert!(v.iter().all(|a| a.pass), "{}: {v:?}", h.name);
    }
    let v = check_reversibility_equivalence(&viro_multigroup()).unwrap();
    assert!(!v[0].pass && !v[1].pass && v[2].pass);
}

#[test]
fn f11_mod_sign_cosets() {
    let h = quotient_hyperring(&prime_field(11), &[1, 10]).unwrap();
    assert_eq!(h.labels, ["0", "1", "2", "3", "4", "5"]);
    assert_eq!(h.add(1, 1), &set(&[0, 2]));
    assert_eq!(h.add(2, 3), &set(&[1, 5]));
    assert!(is_hyperring(&check_hyperring(&h)));
}

#[test]
fn f3_mod_units_is_krasner() {
    let h = quotient_hyperring(&prime_field(3), &[1, 2]).unwrap();
    assert!(find_hyper_isomorphism(&h, &krasner()).is_some());
}

#[test]
fn trivial_subgroup_recovers_the_field() {
    let p = 7;
    let h = quotient_hyperring(&prime_field(p), &[1]).unwrap();
    for a in 0..p {
        for b in 0..p {
            assert_eq!(h.add(a, b), &set(&[(a + b) % p]));
            assert_eq!(h.mul(a, b), Some(a * b % p));
        }
    }
}

#[test]
fn non_subgroup_is_rejected() {
    assert!(matches!(
        quotient_hyperring(&prime_field(5), &[1, 2]),
        Err(Error::Domain(_))
    ));
}

#[test]
fn regularity() {
    assert!(check_regular_hypergroup(&signs()).unwrap().pass);
    let k = check_regular_hypergroup(&krasner()).unwrap();
    assert!(!k.pass);
    assert_eq!(k.witness.as_ref().unwrap()[0], "1");
    assert!(check_regular_hypergroup(&trivial()).unwrap().pass);
}
