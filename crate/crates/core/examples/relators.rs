//! Defining relators of M_k VT_n and of its two kernel subgroups.

use mvtwin::presentations::presentation;
use mvtwin::words::{Family, GroupCtx};

fn main() -> mvtwin::Result<()> {
    for family in [Family::Mvt, Family::Mvpt, Family::Mvht] {
        let ctx = GroupCtx::new(3, 2, family)?;
        let pres = presentation(&ctx)?;
        println!("{family} (n=3, k=2): {} generators, {} relators", pres.generators.len(), pres.relators.len());
        for r in pres.relators.iter().take(4) {
            println!("  {:<24} {}", r.tag, r.word);
        }
    }
    Ok(())
}
