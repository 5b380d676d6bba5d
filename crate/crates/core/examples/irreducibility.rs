//! Burnside span dimension next to the closed-form reducibility verdict.

use mvtwin::reps::{build_rep, named_invariant, thm43_predicate, verify_named_invariant, RepFamily, RepParams};
use mvtwin::Scalar;

fn main() -> mvtwin::Result<()> {
    let n = 3;
    let cases = [
        (RepFamily::Z2, RepParams::from_ints(&[2, 2])),
        (RepFamily::Z2, RepParams::from_ints(&[2, 5])),
        (RepFamily::Z3, RepParams::from_ints(&[2, 2])),
        (RepFamily::Z6, RepParams::from_ints(&[2, 2]).with_z(Scalar::int(3))),
        // y z = 2 is reducible although the closed form says otherwise
        (RepFamily::Z6, RepParams::from_ints(&[2, 2]).with_z(Scalar::int(1))),
        (RepFamily::Z8, RepParams::from_ints(&[2, 2]).with_ab(Scalar::int(3), Scalar::int(8))),
        (RepFamily::Z8, RepParams::from_ints(&[2, 2]).with_ab(Scalar::int(3), Scalar::int(5))),
    ];
    for (family, params) in cases {
        let rep = build_rep(family, &params, n, 2)?;
        let dim = rep.span_dimension()?;
        let reducible = thm43_predicate(family, &params)?;
        print!("{family} y={:?}: span {dim}/{}, predicate reducible = {reducible}", params.y, n * n);
        if let Some(inv) = named_invariant(family, &params, n)? {
            print!(", all-ones {:?} vector invariant = {}", inv.kind, verify_named_invariant(&rep, &inv)?);
        }
        println!();
    }
    Ok(())
}
