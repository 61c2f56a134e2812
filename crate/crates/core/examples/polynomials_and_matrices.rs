//! Polynomial and matrix systems over the sign semiring.

use hyperkit::algebra::Algebra;
use hyperkit::constructions::{MatrixSystem, PolySystem};
use hyperkit::families::{q, sign_semiring, Supertropical};

fn main() -> hyperkit::Result<()> {
    let l = sign_semiring();
    let (one, minus) = (l.index_of("1").unwrap(), l.index_of("-1").unwrap());
    let p = PolySystem::new(l.clone(), 1, 2);
    let f = p
        .add(&p.monomial(one, &[0]).unwrap(), &p.monomial(one, &[1]).unwrap())
        .unwrap();
    let g = p
        .add(&p.monomial(one, &[0]).unwrap(), &p.monomial(minus, &[1]).unwrap())
        .unwrap();
    println!(
        "({}) ({}) = {}",
        p.format(&f),
        p.format(&g),
        p.format(&p.try_mul(&f, &g)?)
    );

    let m = MatrixSystem::new(Supertropical::table(&[q(0)]), 2);
    match m.noncancellative_witness()? {
        Some([a, c1, c2]) => println!("{} {} = {} {}", m.label(&a), m.label(&c1), m.label(&a), m.label(&c2)),
        None => println!("cancellative"),
    }
    Ok(())
}
