//! Passing between hyperrings and systems.

use hyperkit::bridge::{
    boxplus_nabla, boxplus_order, check_assumption_hyper1, elimination_profile, hypersystem_of, recover_hyperring,
    retraction_suite, table_difference,
};
use hyperkit::families::{grades, krasner, sign_semiring, signs, tropical_hyperfield, Integers, Supertropical};
use hyperkit::hyper::{prime_field, quotient_hyperring};
use hyperkit::iso::find_hyper_isomorphism;
use hyperkit::systems::BalanceContext;
use hyperkit::table::{set_label, SystemTable};

fn profile_head(s: &SystemTable) -> (bool, bool) {
    let p = elimination_profile(s, &BalanceContext::new(s));
    (p.tangibly_balanced.value, p.balance_elimination.value)
}

#[test]
fn hypersystem_sizes() {
    assert_eq!(hypersystem_of(&krasner(), false).unwrap().n(), 3);
    assert_eq!(hypersystem_of(&signs(), false).unwrap().n(), 4);
    let f11 = quotient_hyperring(&prime_field(11), &[1, 10]).unwrap();
    assert_eq!(hypersystem_of(&f11, true).unwrap().n(), 53);
}

#[test]
fn hypersystems_are_multiring_ready() {
    for h in [krasner(), signs()] {
        assert_eq!(
            profile_head(&hypersystem_of(&h, true).unwrap()),
            (true, true),
            "{}",
            h.name
        );
    }
    for s in [Supertropical::table(&grades(-1, 2)), sign_semiring()] {
        assert_eq!(profile_head(&s), (true, true), "{}", s.name);
    }
}

#[test]
fn integers_are_not_tangibly_balanced() {
    let z = Integers { bound: 4 }.table();
    let p = elimination_profile(&z, &BalanceContext::new(&z));
    assert!(!p.tangibly_balanced.value);
    assert_eq!(
        p.tangibly_balanced.witness,
        Some(vec!["2".to_string(), "2".to_string()])
    );
}

#[test]
fn supertropical_boxplus() {
    let s = Supertropical::table(&grades(-1, 2));
    let ctx = BalanceContext::new(&s);
    let a = s.index_of("1").unwrap();
    assert_eq!(
        set_label(&boxplus_nabla(&s, &ctx, &[a, a]).unwrap(), &s.labels),
        "{-inf,-1,0,1}"
    );
    assert_eq!(
        set_label(&boxplus_order(&s, &s.leq, &[a, a], false).unwrap(), &s.labels),
        "{-1,0,1}"
    );
    let b = s.index_of("2").unwrap();
    assert_eq!(set_label(&boxplus_nabla(&s, &ctx, &[a, b]).unwrap(), &s.labels), "2");
}

#[test]
fn sign_boxplus_of_opposites() {
    let l = sign_semiring();
    let ctx = BalanceContext::new(&l);
    let (one, minus) = (l.index_of("1").unwrap(), l.index_of("-1").unwrap());
    assert_eq!(boxplus_nabla(&l, &ctx, &[one, minus]).unwrap().len(), 3);
    for a in [one, minus] {
        let z = boxplus_nabla(&l, &ctx, &[a, l.zero]).unwrap();
        assert_eq!(z.members(), &[a]);
    }
}

#[test]
fn krasner_and_signs_are_recovered() {
    for h in [krasner(), signs()] {
        let s = hypersystem_of(&h, true).unwrap();
        let back = recover_hyperring(&s, &BalanceContext::new(&s)).unwrap();
        assert_eq!(table_difference(&h, &back), None, "{}", h.name);
    }
}

#[test]
fn sign_semiring_recovers_the_sign_hyperfield() {
    let l = sign_semiring();
    let r = recover_hyperring(&l, &BalanceContext::new(&l)).unwrap();
    assert!(find_hyper_isomorphism(&r, &signs()).is_some());
    assert_eq!(table_difference(&signs(), &r), None);
}

#[test]
fn supertropical_window_recovers_tropical_hyperfield() {
    let w = grades(-1, 2);
    let s = Supertropical::table(&w);
    let r = recover_hyperring(&s, &BalanceContext::new(&s)).unwrap();
    assert_eq!(r.labels, ["-inf", "-1", "0", "1", "2"]);
    // sums stay inside the window; products may leave it
    let t = tropical_hyperfield(&w);
    for a in 0..r.n() {
        for b in 0..r.n() {
            assert_eq!(r.add(a, b), t.add(a, b), "{} + {}", r.labels[a], r.labels[b]);
        }
    }
}

#[test]
fn hyper1_on_hypersystems() {
    for h in [krasner(), signs()] {
        let s = hypersystem_of(&h, false).unwrap();
        let r = check_assumption_hyper1(&s, &BalanceContext::new(&s).ideal).unwrap();
        assert!(r.all_pass(), "{r:?}");
    }
}

#[test]
fn retraction_on_small_quotients() {
    // 1 and {0,1} balance exactly the same tangibles
    let k = retraction_suite(&krasner()).unwrap();
    assert!(k.passed("retraction"));
    let f = k.get("faithfully-balanced").unwrap();
    assert!(!f.pass);
    assert_eq!(f.witness, Some(vec!["1".to_string(), "{0,1}".to_string()]));
    let s = retraction_suite(&signs()).unwrap();
    assert!(s.passed("retraction") && s.passed("hypersystem-regular"), "{s:?}");
    for p in [2usize, 3, 5, 7] {
        let f = prime_field(p);
        for g in (1..p).filter(|d| (p - 1) % d == 0) {
            let sub: Vec<usize> = (1..p)
                .filter(|&x| (0..p).any(|y| y > 0 && pow_mod(y, (p - 1) / g, p) == x))
                .collect();
            let h = quotient_hyperring(&f, &sub).unwrap();
            let r = retraction_suite(&h).unwrap();
            assert!(r.passed("retraction"), "F{p}/{sub:?}: {r:?}");
        }
    }
}

fn pow_mod(b: usize, e: usize, p: usize) -> usize {
    (0..e).fold(1, |acc, _| acc * b % p)
}
