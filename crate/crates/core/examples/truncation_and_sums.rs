//! Truncated naturals, semidirect layering and direct sums.

use hyperkit::bridge::hypersystem_of;
use hyperkit::constructions::{direct_sum, semidirect_naturals, truncate_naturals, SumOption};
use hyperkit::families::{grades, krasner};
use hyperkit::systems::check_triple;

fn main() -> hyperkit::Result<()> {
    let t = truncate_naturals(3)?;
    let sums: Vec<String> = (0..t.n()).map(|a| t.label(t.add(a, 1).unwrap()).to_string()).collect();
    println!("{}: a + 1 = {sums:?}", t.name);
    let s = semidirect_naturals(4, &grades(0, 1), 1)?;
    println!("{}: {} elements", s.name, s.n());
    let k = hypersystem_of(&krasner(), false)?;
    for o in [1, 2] {
        let d = direct_sum(&[k.clone(), k.clone()], SumOption::from_number(o)?)?;
        println!(
            "option {o}: {} elements, generation {:?}",
            d.n(),
            check_triple(&d).get("generation")
        );
    }
    Ok(())
}
