//! Recovers a hyperring from a system through the balance relation.

use hyperkit::bridge::{elimination_profile, recover_hyperring, table_difference};
use hyperkit::families::{grades, sign_semiring, signs, tropical_hyperfield, Supertropical};
use hyperkit::systems::BalanceContext;

fn main() -> hyperkit::Result<()> {
    let l = sign_semiring();
    let r = recover_hyperring(&l, &BalanceContext::new(&l))?;
    println!(
        "from the sign semiring: differs from signs at {:?}",
        table_difference(&signs(), &r)
    );

    let w = grades(-1, 2);
    let s = Supertropical::table(&w);
    let ctx = BalanceContext::new(&s);
    println!("{}", elimination_profile(&s, &ctx).to_report(&s).to_json());
    let t = recover_hyperring(&s, &ctx)?;
    // products leave the window, so only sums are compared
    let tropical = tropical_hyperfield(&w);
    let same = (0..t.n()).all(|a| (0..t.n()).all(|b| t.add(a, b) == tropical.add(a, b)));
    println!("supertropical window recovers tropical sums: {same}");
    Ok(())
}
