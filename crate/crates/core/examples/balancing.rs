//! The balance relation and the sum `⊞_∇` on the supertropical window.

use hyperkit::bridge::{boxplus_nabla, boxplus_order};
use hyperkit::families::{grades, Supertropical};
use hyperkit::systems::BalanceContext;
use hyperkit::table::set_label;

fn main() -> hyperkit::Result<()> {
    let s = Supertropical::table(&grades(-1, 2));
    let ctx = BalanceContext::new(&s);
    let t = s.tangibles();
    for &a in &t {
        let row: Vec<&str> = t
            .iter()
            .filter(|&&b| ctx.balances(&s, a, b) == Some(true))
            .map(|&b| s.label(b))
            .collect();
        println!("{} balances {row:?}", s.label(a));
    }
    let one = s.index_of("1").unwrap();
    println!(
        "1 ⊞ 1 by balance: {}",
        set_label(&boxplus_nabla(&s, &ctx, &[one, one])?, &s.labels)
    );
    println!(
        "1 ⊞ 1 by order:   {}",
        set_label(&boxplus_order(&s, &s.leq, &[one, one], false)?, &s.labels)
    );
    Ok(())
}
