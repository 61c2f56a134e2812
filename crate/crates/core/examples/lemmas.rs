//! Runs every lemma check on a few systems.

use hyperkit::families::{grades, sign_semiring, Supertropical, SymMaxPlus};
use hyperkit::lemmas::run_all;

fn main() {
    let w = grades(-1, 1);
    for s in [Supertropical::table(&w), SymMaxPlus::table(&w), sign_semiring()] {
        for o in run_all(&s) {
            let state = match &o.vacuous {
                Some(why) => format!("vacuous: {why}"),
                None if o.holds() => "holds".into(),
                None => format!("violated at {:?}", o.violations[0]),
            };
            println!(
                "{:<20} {:<11} {:>6} instances, {state}",
                o.structure, o.lemma, o.checked
            );
        }
    }
}
