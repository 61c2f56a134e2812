//! Fuzzy-ring axioms on the sign semiring for both choices of `ε`.

use hyperkit::families::sign_semiring;
use hyperkit::systems::check_fuzzy_ring;

fn main() -> hyperkit::Result<()> {
    let l = sign_semiring();
    let k0 = [l.zero, l.index_of("inf").unwrap()].into_iter().collect();
    for eps in ["-1", "1"] {
        let r = check_fuzzy_ring(&l, l.index_of(eps).unwrap(), &k0)?;
        println!("ε = {eps}: {}", r.to_json());
    }
    Ok(())
}
