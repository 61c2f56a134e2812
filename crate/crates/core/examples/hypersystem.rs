//! The hypersystem of a hyperring: closure of singletons under setwise sums.

use hyperkit::bridge::hypersystem_of;
use hyperkit::families::signs;
use hyperkit::systems::classify;

fn main() -> hyperkit::Result<()> {
    let s = hypersystem_of(&signs(), false)?;
    println!("elements: {:?}", s.labels);
    for a in 0..s.n() {
        for b in a..s.n() {
            let sum = s
                .add(a, b)
                .map(|c| s.label(c).to_string())
                .unwrap_or_else(|| "-".into());
            println!("  {} + {} = {sum}", s.label(a), s.label(b));
        }
    }
    println!("{}", classify(&s).to_report(&s).to_json());
    Ok(())
}
