//! Searches short words for kernel elements of a representation.

use mvtwin::reps::{build_rep, kernel_search, RepFamily, RepParams};
use mvtwin::Scalar;

fn main() -> mvtwin::Result<()> {
    let rep = build_rep(RepFamily::Z6, &RepParams::from_ints(&[2]).with_z(Scalar::int(1)), 3, 1)?;
    let found = kernel_search(&rep, 8, 50_000)?;
    println!("explored {} words (truncated: {})", found.explored, found.truncated);
    for (w, map) in found.certified.iter().take(5) {
        println!("  certified by {}: {w}", map.name());
    }
    for w in found.unresolved.iter().take(5) {
        println!("  unresolved: {w}");
    }
    Ok(())
}
