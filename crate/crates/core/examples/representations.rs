//! Builds each 2-local family and checks every defining relator.

use mvtwin::reps::{build_rep, verify_relations, verify_system, RepFamily, RepParams};
use mvtwin::Scalar;

fn main() -> mvtwin::Result<()> {
    let y = vec![Scalar::frac(3, 2), Scalar::int(-2)];
    for family in RepFamily::ALL {
        let params = RepParams::new(y.clone())
            .with_z(Scalar::frac(5, 7))
            .with_ab(Scalar::frac(1, 3), Scalar::int(4));
        let rep = build_rep(family, &params, 4, 2)?;
        let checks = verify_relations(&rep)?;
        let passed = checks.iter().filter(|c| c.pass).count();
        println!(
            "{family}: {passed}/{} relators map to I, system {}",
            checks.len(),
            verify_system(family, &params)?
        );
    }
    let rep = build_rep(RepFamily::Z8, &RepParams::from_ints(&[1]).with_ab(Scalar::int(2), Scalar::int(3)), 3, 1)?;
    println!("z8 image of s1:\n{}", rep.image(mvtwin::GenSym::S(1)).unwrap());
    Ok(())
}
