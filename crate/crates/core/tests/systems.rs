//! Triples, surpassing relations, balancing and classification.

use hyperkit::bridge::{check_assumption_hyper1_rel, hypersystem_of, null_or_large};
use hyperkit::carrier::SubsetVal;
use hyperkit::constructions::{direct_sum, semidirect_naturals, symmetrize_bipotent, SumOption};
use hyperkit::families::{
    boolean, grades, krasner, q, sign_semiring, signs, system_from_fn, MaxPlus, Supertropical, SymMaxPlus,
};
use hyperkit::hyper::{prime_field, quotient_hyperring};
use hyperkit::systems::{
    balances, check_fuzzy_ring, check_surpassing_axioms, check_triple, classify, height, heights, irreducible_core,
    is_triple, null_set, preorder_leq, preunit_induced_mul, quasi_zeros, surpasses, uniform_presentation,
    BalanceContext, Kind, Presentation,
};
use hyperkit::table::{SurpassSpec, SystemTable};
use hyperkit::Error;

fn ids(s: &SystemTable, labels: &[&str]) -> SubsetVal {
    labels
        .iter()
        .map(|l| s.index_of(l).unwrap_or_else(|| panic!("no {l} in {}", s.name)))
        .collect()
}

fn id(s: &SystemTable, label: &str) -> usize {
    s.index_of(label).unwrap_or_else(|| panic!("no {label} in {}", s.name))
}

/// `{0, 1}` with `1 + 1 = 0`: the field with two elements as a system.
fn f2() -> SystemTable {
    system_from_fn(
        "f2",
        vec!["0".into(), "1".into()],
        0,
        Some(1),
        vec![1],
        vec![0, 1],
        |a, b| Some(a ^ b),
        |a, b| Some(a & b),
        SurpassSpec::Circ,
    )
}

fn zero_system() -> SystemTable {
    direct_sum(&[], SumOption::Diagonal).unwrap()
}

#[test]
fn supertropical_quasi_zeros_are_the_ghosts() {
    let s = Supertropical::table(&grades(0, 1));
    assert_eq!(quasi_zeros(&s), ids(&s, &["-inf", "0v", "1v"]));
}

#[test]
fn symmetrized_quasi_zeros_are_diagonal() {
    let s = SymMaxPlus::table(&grades(0, 1));
    assert_eq!(quasi_zeros(&s), ids(&s, &["-inf", "0o", "1o"]));
    let b = symmetrize_bipotent(&MaxPlus::table(&grades(0, 1))).unwrap();
    assert_eq!(quasi_zeros(&b), ids(&b, &["(-inf,-inf)", "(0,0)", "(1,1)"]));
}

#[test]
fn zero_module_quasi_zeros() {
    let z = zero_system();
    assert_eq!(z.n(), 1);
    assert_eq!(quasi_zeros(&z), SubsetVal::singleton(z.zero));
}

#[test]
fn triples() {
    assert!(is_triple(&Supertropical::table(&grades(-1, 1))));
    assert!(is_triple(&sign_semiring()));
    let mp = check_triple(&MaxPlus::table(&grades(-1, 1)));
    let d = mp.get("tangible-quasizero-disjoint").unwrap();
    assert!(!d.pass);
    assert!(mp.axioms.iter().filter(|a| a.name != d.name).all(|a| a.pass));
}

#[test]
fn surpassing_examples() {
    let s = Supertropical::table(&grades(0, 1));
    let (a, av) = (id(&s, "1"), id(&s, "1v"));
    assert!(surpasses(&s, &SurpassSpec::Circ, a, av).unwrap());
    assert!(!surpasses(&s, &SurpassSpec::Circ, av, a).unwrap());
    for b in 0..s.n() {
        assert!(surpasses(&s, &SurpassSpec::Circ, b, b).unwrap());
    }
    let h = hypersystem_of(&signs(), false).unwrap();
    assert!(h.leq(id(&h, "1"), id(&h, "{0,1,-1}")));
    assert!(!h.leq(id(&h, "{0,1,-1}"), id(&h, "1")));
}

#[test]
fn surpassing_axioms_supertropical_and_hypersystem() {
    let s = Supertropical::table(&grades(-1, 1));
    let r = check_surpassing_axioms(&s, &s.leq);
    assert!(r.all_pass(), "{r:?}");
    let h = hypersystem_of(&signs(), false).unwrap();
    let r = check_surpassing_axioms(&h, &h.leq);
    assert!(r.passed("strong"));
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn semidirect_first_variant_separates_layers_one_and_two() {
    let s = semidirect_naturals(5, &grades(0, 1), 1).unwrap();
    for g in ["0", "1"] {
        let (one, two) = (id(&s, &format!("1@{g}")), id(&s, &format!("2@{g}")));
        assert!(!s.leq(one, two));
    }
    let r = check_assumption_hyper1_rel(&s, &s.leq).unwrap();
    let ne = r.get("hyper1-nonempty").unwrap();
    assert!(!ne.pass);
    assert_eq!(ne.witness, Some(vec!["1@0".to_string(), "1@0".to_string()]));
}

#[test]
fn null_sets() {
    let s = Supertropical::table(&grades(0, 1));
    assert_eq!(null_set(&s), ids(&s, &["-inf", "0v", "1v"]));
    let k = hypersystem_of(&krasner(), false).unwrap();
    assert_eq!(null_set(&k), ids(&k, &["0", "{0,1}"]));
    assert_eq!(null_set(&zero_system()).len(), 1);
}

#[test]
fn balancing() {
    let s = Supertropical::table(&grades(-1, 1));
    let ctx = BalanceContext::new(&s);
    for a in 0..s.n() {
        assert_eq!(balances(&ctx, &s, a, a), Some(true));
    }
    let t = s.tangibles();
    for &a in &t {
        for &b in &t {
            assert_eq!(balances(&ctx, &s, a, b), Some(a == b));
        }
    }
    let f = hypersystem_of(&quotient_hyperring(&prime_field(11), &[1, 10]).unwrap(), true).unwrap();
    let ctx = null_or_large(&f, 4).unwrap();
    let (b1, b2) = (id(&f, "{0,2}"), id(&f, "{1,5}"));
    assert_eq!(f.label(f.add(b1, b2).unwrap()), "{1,3,4,5}");
    assert_eq!(ctx.balances(&f, b1, b2), Some(true));
}

#[test]
fn heights_in_supertropical() {
    let s = Supertropical::table(&grades(0, 1));
    assert_eq!(height(&s, id(&s, "1")).unwrap(), 1);
    assert_eq!(height(&s, id(&s, "1v")).unwrap(), 2);
    for w in [grades(-1, 1), grades(-2, 2)] {
        let s = Supertropical::table(&w);
        assert!(heights(&s).iter().all(|h| h.is_some_and(|h| h <= 3)));
    }
}

#[test]
fn classification() {
    let s = Supertropical::table(&grades(-1, 1));
    let p = classify(&s);
    assert_eq!(p.kind, Kind::First);
    assert!(p.strongly_bipotent.value && p.shallow.value);

    let b = symmetrize_bipotent(&boolean()).unwrap();
    let p = classify(&b);
    assert_eq!(p.kind, Kind::Second);
    assert!(p.bipotent.value && p.shallow.value);

    let h = hypersystem_of(&signs(), false).unwrap();
    let p = classify(&h);
    assert!(p.geometric.value && p.regular.value);
}

#[test]
fn uniform_presentations() {
    let s = Supertropical::table(&grades(0, 1));
    let a = id(&s, "1");
    assert_eq!(
        uniform_presentation(&s, id(&s, "1v")).unwrap(),
        Presentation::Multiple { m: 2, base: a }
    );
    assert_eq!(
        uniform_presentation(&s, a).unwrap(),
        Presentation::Multiple { m: 1, base: a }
    );

    let m = SymMaxPlus::table(&grades(0, 2));
    for g in ["0", "1", "2"] {
        let p = uniform_presentation(&m, id(&m, &format!("{g}o"))).unwrap();
        assert_eq!(p, Presentation::Circ { base: id(&m, g) });
    }
    let f5 = hypersystem_of(&quotient_hyperring(&prime_field(5), &[1, 4]).unwrap(), true).unwrap();
    assert!(matches!(
        uniform_presentation(&f5, id(&f5, "1")),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn preorder() {
    let s = Supertropical::table(&grades(-1, 1));
    for c in 0..s.n() {
        assert!(preorder_leq(&s, c, c));
    }
    assert!(preorder_leq(&s, id(&s, "1"), id(&s, "1v")));
    for w in [Supertropical::table(&grades(-1, 1)), SymMaxPlus::table(&grades(-1, 1))] {
        for c in 0..w.n() {
            for d in 0..w.n() {
                assert!(
                    preorder_leq(&w, c, d) || preorder_leq(&w, d, c),
                    "{} {} {}",
                    w.name,
                    w.label(c),
                    w.label(d)
                );
            }
        }
    }
}

#[test]
fn irreducible_cores() {
    let s = Supertropical::table(&grades(-1, 1));
    let c = irreducible_core(&s, false).unwrap();
    assert_eq!(c.labels, s.labels);
    assert_eq!(c.tangibles().len(), s.tangibles().len());
    assert!(classify(&c).geometric.value);

    let l = sign_semiring();
    let d = direct_sum(&[l.clone(), l], SumOption::Product).unwrap();
    let c = irreducible_core(&d, false).unwrap();
    assert_eq!(d.tangibles().len(), 8);
    assert_eq!(c.tangibles().len(), 4);
}

#[test]
fn fuzzy_ring_on_supertropical() {
    let s = Supertropical::table(&grades(-1, 1));
    let one = s.one.unwrap();
    let r = check_fuzzy_ring(&s, one, &null_set(&s)).unwrap();
    assert!(r.all_pass(), "{r:?}");
    let k0 = null_set(&s).union(&SubsetVal::singleton(one));
    assert!(matches!(check_fuzzy_ring(&s, one, &k0), Err(Error::Precondition(_))));
}

#[test]
fn fuzzy_axiom_three_on_signs() {
    let l = sign_semiring();
    let k0 = ids(&l, &["0", "inf"]);
    let good = check_fuzzy_ring(&l, id(&l, "-1"), &k0).unwrap();
    assert!(good.all_pass(), "{good:?}");
    // ε = 1: a₁ = a₃ = 1, a₂ = a₄ = −1 gives 1 + 1·(−1)(−1) = 1 ∉ K₀.
    let bad = check_fuzzy_ring(&l, id(&l, "1"), &k0).unwrap();
    let f3 = bad.get("fuzzy-3").unwrap();
    assert!(!f3.pass);
    let w = f3.witness.as_ref().unwrap();
    assert_eq!(w.len(), 4);
}

#[test]
fn preunit_of_a_semiring_is_its_product() {
    for s in [sign_semiring(), Supertropical::table(&[q(0)])] {
        let m = preunit_induced_mul(&s, s.one.unwrap()).unwrap();
        let stored: Vec<usize> = s.mul.iter().map(|x| x.unwrap()).collect();
        assert_eq!(m, stored, "{}", s.name);
    }
}

#[test]
fn preunit_on_one_generator() {
    let s = f2();
    assert_eq!(preunit_induced_mul(&s, 1).unwrap(), vec![0, 0, 0, 1]);
}

#[test]
fn classical_two_element_window_satisfies_hyper1() {
    let s = f2();
    assert!(is_triple(&s));
    let r = check_assumption_hyper1_rel(&s, &s.leq).unwrap();
    assert!(r.all_pass(), "{r:?}");
}
