//! Layered systems and layered hyperrings over integer grades.

use hyperkit::bridge::hypersystem_of;
use hyperkit::constructions::{layered_hyper, Layered};
use hyperkit::families::{grades, krasner, sign_semiring, tropical_hyperfield, Supertropical, SymMaxPlus};
use hyperkit::iso::{find_hyper_isomorphism, isomorphic};

fn main() -> hyperkit::Result<()> {
    let w = grades(-1, 1);
    let k = Layered::new(hypersystem_of(&krasner(), false)?, true).table(&w);
    println!(
        "layered Krasner ≅ supertropical: {}",
        isomorphic(&k, &Supertropical::table(&w))
    );
    let l = Layered::new(sign_semiring(), true).table(&w);
    println!(
        "layered signs ≅ symmetrized max-plus: {}",
        isomorphic(&l, &SymMaxPlus::table(&w))
    );
    let h = layered_hyper(&krasner(), &w, true)?;
    println!(
        "layered Krasner hyperfield ≅ tropical: {}",
        find_hyper_isomorphism(&h, &tropical_hyperfield(&w)).is_some()
    );
    Ok(())
}
