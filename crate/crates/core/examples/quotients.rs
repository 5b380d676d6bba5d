//! The quotient maps phi and psi onto S_n, and the section of phi.

use mvtwin::perm::{phi, psi, section_theta, Permutation};
use mvtwin::words::{parse_word, GroupCtx};

fn main() -> mvtwin::Result<()> {
    let ctx = GroupCtx::mvt(4, 2)?;
    for text in ["s1 s2", "p1.0 s1", "s1 p2.1 s3 p2.0", "s1 s1"] {
        let w = parse_word(text, &ctx)?;
        println!("{text:<18} phi = {:<10} psi = {}", phi(&w)?.to_string(), psi(&w)?);
    }
    let p = Permutation::from_cycles(4, &[&[1, 3, 4]])?;
    let w = section_theta(&p, 2)?;
    println!("section of {p}: {w} (phi = {})", phi(&w)?);
    Ok(())
}
