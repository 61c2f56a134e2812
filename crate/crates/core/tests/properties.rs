//! Invariants over generated inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hyperkit::bridge::retraction_suite;
use hyperkit::carrier::SubsetVal;
use hyperkit::constructions::Layered;
use hyperkit::families::{q, qf, sign_semiring, St, Supertropical, SymMaxPlus, Q};
use hyperkit::hsf::{parse_str, to_hsf, Structure};
use hyperkit::hyper::{check_hyperring, is_hyperring, prime_field, quotient_hyperring};
use hyperkit::iso::{find_hyper_isomorphism, isomorphic};
use hyperkit::lemmas::{run_lemma, LEMMAS};
use hyperkit::matroid::{bases, check_exchange, check_gp, minors_gp_map, neg_valuation, rational_minor, scale};
use hyperkit::table::{HyperTable, SystemTable};

const PRIMES: [usize; 5] = [2, 3, 5, 7, 11];

/// The subgroup of `F_p^×` generated by `g`.
fn generated(p: usize, g: usize) -> Vec<usize> {
    let mut out = vec![1];
    let mut x = g % p;
    while x != 1 {
        out.push(x);
        x = x * g % p;
    }
    out.sort();
    out
}

fn quotient() -> impl Strategy<Value = HyperTable> {
    (0..PRIMES.len(), 1usize..11).prop_map(|(i, g)| {
        let p = PRIMES[i];
        quotient_hyperring(&prime_field(p), &generated(p, 1 + g % (p - 1))).unwrap()
    })
}

/// A sorted window of distinct grades in halves.
fn window() -> impl Strategy<Value = Vec<Q>> {
    prop::collection::btree_set(-4i64..=4, 1..4).prop_map(|s| s.into_iter().map(|h| qf(h, 2)).collect())
}

fn system() -> impl Strategy<Value = SystemTable> {
    (window(), 0..3u8).prop_map(|(w, k)| match k {
        0 => Supertropical::table(&w),
        1 => SymMaxPlus::table(&w),
        _ => Layered::new(sign_semiring(), true).table(&w),
    })
}

/// Moves element `perm[i]` of `h` to position `i`.
fn relabel(h: &HyperTable, perm: &[usize]) -> HyperTable {
    let n = h.n();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let set = |s: &SubsetVal| s.members().iter().map(|&x| inv[x]).collect::<SubsetVal>();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = h.mul.as_ref().map(|_| Vec::with_capacity(n * n));
    for &a in perm {
        for &b in perm {
            add.push(set(h.add(a, b)));
            if let Some(m) = mul.as_mut() {
                m.push(h.mul(a, b).map(|c| inv[c]));
            }
        }
    }
    HyperTable {
        name: h.name.clone(),
        labels: perm.iter().map(|&p| h.labels[p].clone()).collect(),
        zero: inv[h.zero],
        one: h.one.map(|o| inv[o]),
        neg: perm.iter().map(|&p| inv[h.neg[p]]).collect(),
        add,
        mul,
    }
}

fn verdicts(h: &HyperTable) -> Vec<(String, bool)> {
    check_hyperring(h)
        .axioms
        .into_iter()
        .map(|a| (a.name, a.pass))
        .collect()
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn valued(x: &BigRational) -> St {
    neg_valuation(x, 2).map_or(St::Zero, |v| St::Tan(q(v)))
}

fn tangible_grid() -> impl Strategy<Value = Vec<Vec<St>>> {
    prop::collection::vec(prop::collection::vec((-3i64..=3).prop_map(|x| St::Tan(q(x))), 4), 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hsf_round_trip_of_quotients(h in quotient()) {
        let text = to_hsf(&Structure::Hyper(h.clone()));
        match parse_str(&text, &h.name).unwrap() {
            Structure::Hyper(back) => prop_assert_eq!(back, h),
            Structure::System(_) => prop_assert!(false, "kind changed"),
        }
    }

    #[test]
    fn hsf_round_trip_of_systems(s in system()) {
        let text = to_hsf(&Structure::System(s.clone()));
        match parse_str(&text, &s.name).unwrap() {
            Structure::System(back) => prop_assert!(isomorphic(&back, &s) && back.labels == s.labels),
            Structure::Hyper(_) => prop_assert!(false, "kind changed"),
        }
    }

    #[test]
    fn quotients_are_hyperrings_that_retract(h in quotient()) {
        prop_assert!(is_hyperring(&check_hyperring(&h)));
        prop_assert!(retraction_suite(&h).unwrap().passed("retraction"));
    }

    #[test]
    fn relabelling_preserves_verdicts(h in quotient(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..h.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let g = relabel(&h, &perm);
        prop_assert!(find_hyper_isomorphism(&h, &g).is_some());
        prop_assert_eq!(verdicts(&h), verdicts(&g));
    }

    #[test]
    fn gp_verdicts_are_scale_invariant(grid in tangible_grid(), t in -3i64..=3) {
        let b = minors_gp_map(&Supertropical, &grid).unwrap();
        let c = scale(&Supertropical, &b, &St::Tan(q(t))).unwrap();
        let flags = |m| check_gp(&Supertropical, m, false).unwrap().report.axioms.iter().map(|a| a.pass).collect::<Vec<_>>();
        prop_assert_eq!(flags(&b), flags(&c));
        prop_assert_eq!(bases(&Supertropical, &b), bases(&Supertropical, &c));
        let ex = |m| check_exchange(&Supertropical, m).unwrap().outcome.pass;
        prop_assert_eq!(ex(&b), ex(&c));
    }

    #[test]
    fn supertropical_minors_bound_the_valuation(
        grid in prop::collection::vec(prop::collection::vec(rational(), 3), 2)
    ) {
        let image: Vec<Vec<St>> = grid.iter().map(|r| r.iter().map(valued).collect()).collect();
        for cols in [[0, 1], [0, 2], [1, 2]] {
            let exact = valued(&rational_minor(&grid, &cols));
            let sub: Vec<Vec<St>> = image.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
            let det = hyperkit::matroid::signed_det(&Supertropical, &sub).unwrap();
            match (&det, &exact) {
                (St::Tan(v), _) => prop_assert_eq!(&exact, &St::Tan(*v)),
                (St::Zero, _) => prop_assert_eq!(&exact, &St::Zero),
                (St::Ghost(v), St::Tan(w)) => prop_assert!(w <= v),
                (St::Ghost(_), _) => {}
            }
        }
    }
}

macro_rules! lemma_property {
    ($($test:ident => $name:literal),* $(,)?) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]
            $(
                #[test]
                fn $test(s in system()) {
                    let o = run_lemma($name, &s).unwrap();
                    prop_assert!(o.holds(), "{} on {}: {:?}", $name, s.name, o.violations);
                }
            )*
        }
    };
}

lemma_property! {
    lemma_nab4 => "nab4",
    lemma_nablprec => "nablprec",
    lemma_newsys => "newsys",
    lemma_biphom1 => "biphom1",
    lemma_ht2 => "ht2",
    lemma_neg3 => "neg3",
    lemma_leq_order0 => "leq-order0",
    lemma_hyp0 => "hyp0",
    lemma_rev122_iii => "rev122-iii",
    lemma_geom1 => "geom1",
}

#[test]
fn every_lemma_has_a_property() {
    assert_eq!(LEMMAS.len(), 10);
}
