//! Lists the catalog and checks every entry against its expected verdicts.

use hyperkit::catalog::{catalog_list, mismatches, run_suite, Suite};

fn main() -> hyperkit::Result<()> {
    for e in catalog_list()? {
        let r = run_suite(&e.structure, Suite::All)?;
        let bad = mismatches(&e, &r);
        let tag = if e.negative_fixture() {
            " (negative fixture)"
        } else {
            ""
        };
        println!("{:<24} {:>3} axioms, mismatches {:?}{tag}", e.name, r.axioms.len(), bad);
    }
    Ok(())
}
