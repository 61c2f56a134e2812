//! Triple axioms, surpassing axioms and quasi-zeros of symbolic windows.

use hyperkit::families::{grades, MaxPlus, Supertropical, SymMaxPlus};
use hyperkit::systems::{check_surpassing_axioms, check_triple, quasi_zeros};
use hyperkit::table::set_label;

fn main() {
    let w = grades(-1, 1);
    for s in [Supertropical::table(&w), SymMaxPlus::table(&w), MaxPlus::table(&w)] {
        let t = check_triple(&s);
        let failing: Vec<&str> = t.axioms.iter().filter(|a| !a.pass).map(|a| a.name.as_str()).collect();
        println!(
            "{}: quasi-zeros {}, failing triple axioms {failing:?}",
            s.name,
            set_label(&quasi_zeros(&s), &s.labels)
        );
        println!(
            "  surpassing axioms hold: {}",
            check_surpassing_axioms(&s, &s.leq).all_pass()
        );
    }
}
