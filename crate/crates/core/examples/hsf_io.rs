//! Writes a structure as HSF and reads it back.

use hyperkit::hsf::{parse_str, to_hsf, Structure};
use hyperkit::hyper::{prime_field, quotient_hyperring};

fn main() -> hyperkit::Result<()> {
    let h = quotient_hyperring(&prime_field(5), &[1, 4])?;
    let text = to_hsf(&Structure::Hyper(h.clone()));
    println!("{text}");
    match parse_str(&text, &h.name)? {
        Structure::Hyper(back) => println!("round trip equal: {}", back == h),
        Structure::System(_) => println!("unexpected system"),
    }
    Ok(())
}
