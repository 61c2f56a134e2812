//! Elimination profile of the F11 hypersystem with a size ideal.

use hyperkit::bridge::{elimination_profile, hypersystem_of, null_or_large};
use hyperkit::hyper::{prime_field, quotient_hyperring};

fn main() -> hyperkit::Result<()> {
    let h = quotient_hyperring(&prime_field(11), &[1, 10])?;
    let s = hypersystem_of(&h, true)?;
    println!("{} elements", s.n());
    let ctx = null_or_large(&s, 4)?;
    println!("{}", elimination_profile(&s, &ctx).to_report(&s).to_json());
    Ok(())
}
