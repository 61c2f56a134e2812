//! Symmetrization, layering, truncation, direct sums, polynomials and matrices.

use hyperkit::algebra::Algebra;
use hyperkit::bridge::hypersystem_of;
use hyperkit::carrier::SubsetVal;
use hyperkit::constructions::{
    direct_sum, layered_hyper, naturals, symmetrize, symmetrize_bipotent, truncate_naturals, LayerElem, Layered,
    MatrixSystem, PolySystem, SumOption,
};
use hyperkit::families::{
    boolean, grades, krasner, q, sign_semiring, signs, tropical_hyperfield, weak_phase, MaxPlus, Supertropical,
    SymMaxPlus,
};
use hyperkit::hyper::{check_hypergroup, check_hyperring, is_hyperring};
use hyperkit::iso::{find_hyper_isomorphism, isomorphic};
use hyperkit::systems::check_triple;
use hyperkit::table::SystemTable;

fn id(s: &SystemTable, label: &str) -> usize {
    s.index_of(label).unwrap_or_else(|| panic!("no {label} in {}", s.name))
}

#[test]
fn symmetrized_boolean() {
    assert_eq!(symmetrize(&boolean()).n(), 4);
    assert!(isomorphic(&symmetrize_bipotent(&boolean()).unwrap(), &sign_semiring()));
}

#[test]
fn symmetrized_naturals_product_law() {
    let bound = 4;
    let s = symmetrize(&naturals(bound));
    for m1 in 0..=bound {
        for n1 in 0..=bound {
            for m2 in 0..=bound {
                for n2 in 0..=bound {
                    let (p, r) = (m1 * m2 + n1 * n2, m1 * n2 + n1 * m2);
                    if p > bound || r > bound {
                        continue;
                    }
                    let a = id(&s, &format!("({m1},{n1})"));
                    let b = id(&s, &format!("({m2},{n2})"));
                    assert_eq!(s.mul(a, b), Some(id(&s, &format!("({p},{r})"))));
                }
            }
        }
    }
}

#[test]
fn symmetrized_zero_is_self_negated() {
    let s = symmetrize(&boolean());
    let z = id(&s, "(0,0)");
    assert_eq!(s.neg(z), z);
}

#[test]
fn bipotent_symmetrization_of_max_plus() {
    let w = grades(-1, 1);
    let s = symmetrize_bipotent(&MaxPlus::table(&w)).unwrap();
    assert!(isomorphic(&s, &SymMaxPlus::table(&w)));
    let (a, na) = (id(&s, "(1,-inf)"), id(&s, "(-inf,1)"));
    assert_eq!(s.add(a, na), Some(id(&s, "(1,1)")));
    assert_eq!(s.add(a, id(&s, "(0,0)")), Some(a));
}

#[test]
fn layered_krasner_and_signs() {
    let w = grades(-1, 1);
    let k = hypersystem_of(&krasner(), false).unwrap();
    assert!(isomorphic(&Layered::new(k, true).table(&w), &Supertropical::table(&w)));
    assert!(isomorphic(
        &Layered::new(sign_semiring(), true).table(&w),
        &SymMaxPlus::table(&w)
    ));
}

#[test]
fn layered_sum_takes_higher_grade() {
    let l = sign_semiring();
    let (one, minus) = (id(&l, "1"), id(&l, "-1"));
    let lay = Layered::new(l, true);
    let hi = LayerElem::At(minus, q(2));
    let lo = LayerElem::At(one, q(1));
    assert_eq!(lay.add(&hi, &lo), Some(hi.clone()));
    assert_eq!(lay.add(&lo, &hi), Some(hi));
}

#[test]
fn layered_krasner_hyperfield_is_tropical() {
    let w = grades(-1, 1);
    let h = layered_hyper(&krasner(), &w, true).unwrap();
    assert!(find_hyper_isomorphism(&h, &tropical_hyperfield(&w)).is_some());
}

#[test]
fn layered_weak_phase() {
    // a single grade keeps products inside the window
    let h = layered_hyper(&weak_phase(4), &[q(0)], true).unwrap();
    assert!(is_hyperring(&check_hyperring(&h)));
    let wide = layered_hyper(&weak_phase(4), &grades(-1, 1), true).unwrap();
    assert!(check_hypergroup(&wide).all_pass());
}

#[test]
fn layered_equal_grade_sum() {
    let h = layered_hyper(&signs(), &grades(0, 1), true).unwrap();
    let one = h.index_of("1@0").unwrap();
    assert_eq!(h.add(one, one), &SubsetVal::singleton(one));
}

#[test]
fn truncated_naturals() {
    let t2 = truncate_naturals(2).unwrap();
    assert_eq!(t2.add(1, 1), Some(2));
    assert_eq!(t2.add(2, 1), Some(2));
    let t1 = truncate_naturals(1).unwrap();
    assert_eq!(t1.add(1, 1), Some(1));
    for m in 1..5 {
        let t = truncate_naturals(m).unwrap();
        for a in 0..t.n() {
            assert_eq!(t.add(t.zero, a), Some(a));
        }
    }
}

#[test]
fn direct_sum_generation() {
    let k = hypersystem_of(&krasner(), false).unwrap();
    let parts = [k.clone(), k];
    let gen = |o| check_triple(&direct_sum(&parts, SumOption::from_number(o).unwrap()).unwrap()).passed("generation");
    assert!(gen(2));
    assert!(!gen(1));
    let z = direct_sum(&[], SumOption::Diagonal).unwrap();
    assert_eq!(z.n(), 1);
}

#[test]
fn polynomial_with_cancelling_coefficient() {
    let l = sign_semiring();
    let (one, minus, inf) = (id(&l, "1"), id(&l, "-1"), id(&l, "inf"));
    let p = PolySystem::new(l, 1, 2);
    let m = |c, e| p.monomial(c, &[e]).unwrap();
    let f = p.add(&m(one, 0), &m(one, 1)).unwrap();
    let g = p.add(&m(one, 0), &m(minus, 1)).unwrap();
    let fg = p.try_mul(&f, &g).unwrap();
    assert_eq!(fg[1], inf);
    assert!(!p.is_tangible(&fg));
    assert_eq!(p.format(&fg), "1 + inf*x0 + -1*x0^2");
}

#[test]
fn constant_polynomials_embed_the_base() {
    let l = sign_semiring();
    let p = PolySystem::new(l.clone(), 2, 1);
    let c = |a| p.monomial(a, &[0, 0]).unwrap();
    for a in 0..l.n() {
        for b in 0..l.n() {
            assert_eq!(p.add(&c(a), &c(b)), Some(c(l.add(a, b).unwrap())));
            assert_eq!(p.mul(&c(a), &c(b)), Some(c(l.mul(a, b).unwrap())));
        }
    }
}

#[test]
fn tangible_monomials_multiply_to_tangible_monomials() {
    let s = Supertropical::table(&grades(-1, 1));
    let p = PolySystem::new(s.clone(), 1, 2);
    let t = s.tangibles();
    for &a in &t {
        for &b in &t {
            for e in 0..=2 {
                for f in 0..=2 - e {
                    let x = p.monomial(a, &[e]).unwrap();
                    let y = p.monomial(b, &[f]).unwrap();
                    let Some(c) = s.mul(a, b) else { continue };
                    let xy = p.try_mul(&x, &y).unwrap();
                    assert!(p.is_tangible(&xy));
                    assert_eq!(xy, p.monomial(c, &[e + f]).unwrap());
                }
            }
        }
    }
}

#[test]
fn matrix_product_of_unit_entries() {
    let l = sign_semiring();
    let (one, minus) = (id(&l, "1"), id(&l, "-1"));
    let m = MatrixSystem::new(l.clone(), 2);
    for (a1, a2) in [(one, one), (one, minus), (minus, minus)] {
        let x = m.add(&m.unit_entry(0, 0, a1), &m.unit_entry(0, 1, one)).unwrap();
        let y = m.add(&m.unit_entry(0, 1, one), &m.unit_entry(1, 1, a2)).unwrap();
        assert_eq!(m.mul(&x, &y), Some(m.unit_entry(0, 1, l.add(a1, a2).unwrap())));
    }
}

#[test]
fn one_by_one_matrices_are_the_base() {
    let l = sign_semiring();
    assert!(isomorphic(&MatrixSystem::new(l.clone(), 1).table().unwrap(), &l));
}

#[test]
fn supertropical_matrices_are_not_cancellative() {
    let m = MatrixSystem::new(Supertropical::table(&[q(0)]), 2);
    let [a, c1, c2] = m.noncancellative_witness().unwrap().expect("a witness exists");
    assert!(m.is_tangible(&a));
    assert_ne!(c1, c2);
    assert_eq!(m.mul(&a, &c1), m.mul(&a, &c2));
}
