//! Quotients `F_p / G` by subgroups of units, with their retraction test.

use hyperkit::bridge::retraction_suite;
use hyperkit::hyper::{check_hyperring, is_hyperring, prime_field, quotient_hyperring};

fn main() -> hyperkit::Result<()> {
    for (p, g) in [(3, vec![1, 2]), (5, vec![1, 4]), (7, vec![1, 2, 4]), (11, vec![1, 10])] {
        let h = quotient_hyperring(&prime_field(p), &g)?;
        let ring = is_hyperring(&check_hyperring(&h));
        let back = retraction_suite(&h)?.passed("retraction");
        println!("{:<12} size {:>2}  hyperring {ring}  retraction {back}", h.name, h.n());
        println!("  1 + 1 = {}", h.set_label(h.add(1, 1)));
    }
    Ok(())
}
