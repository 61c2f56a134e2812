//! Hypergroup and hyperring checks on the Krasner, sign and Viro tables.

use hyperkit::families::{krasner, signs, viro_multigroup};
use hyperkit::hyper::{check_double_distributivity, check_hypergroup, check_hyperring};

fn main() {
    for h in [krasner(), signs()] {
        println!("{}", check_hyperring(&h).to_json());
        println!("double distributivity: {:?}", check_double_distributivity(&h).pass);
    }
    let r = check_hypergroup(&viro_multigroup());
    println!("viro reversibility: {:?}", r.get("reversibility"));
}
