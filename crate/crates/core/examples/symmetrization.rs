//! Symmetrized semirings and the bipotent variant.

use hyperkit::constructions::{naturals, symmetrize, symmetrize_bipotent};
use hyperkit::families::{boolean, sign_semiring};
use hyperkit::iso::isomorphic;

fn main() -> hyperkit::Result<()> {
    let n = symmetrize(&naturals(3));
    let (a, b) = (n.index_of("(1,2)").unwrap(), n.index_of("(1,0)").unwrap());
    println!("(1,2) + (1,0) = {:?}", n.add(a, b).map(|c| n.label(c)));
    println!("(1,2) * (1,0) = {:?}", n.mul(a, b).map(|c| n.label(c)));
    let b = symmetrize_bipotent(&boolean())?;
    println!("bipotent symmetrization of the Boolean semiring: {:?}", b.labels);
    println!("isomorphic to the sign semiring: {}", isomorphic(&b, &sign_semiring()));
    Ok(())
}
