//! Grassmann–Plücker maps from the minors of a matrix, and the exchange property.

use hyperkit::families::{q, St, Supertropical};
use hyperkit::matroid::{check_exchange, check_gp, minors_gp_map};

fn main() -> hyperkit::Result<()> {
    let rows = [[0, 1, 3, 0], [2, 0, 1, 4]];
    let grid: Vec<Vec<St>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| St::Tan(q(x))).collect())
        .collect();
    let b = minors_gp_map(&Supertropical, &grid)?;
    let r = check_gp(&Supertropical, &b, false)?;
    println!("{}", r.report.to_json());
    println!("bases: {:?}", r.bases);
    let ex = check_exchange(&Supertropical, &b)?;
    println!(
        "exchange {} over {} premises, first index found {:?}",
        ex.outcome.pass, ex.premises, ex.found
    );
    Ok(())
}
