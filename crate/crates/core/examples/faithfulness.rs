//! Kernel elements that show the families are not faithful.

use mvtwin::reps::{faithfulness_witnesses, RepFamily, RepParams};
use mvtwin::Scalar;

fn main() -> mvtwin::Result<()> {
    let params = RepParams::from_ints(&[3, 5]).with_z(Scalar::int(2));
    for family in [RepFamily::Z1, RepFamily::Z3, RepFamily::Z6, RepFamily::Z7] {
        for w in faithfulness_witnesses(family, &params, 4, 2)?.iter().take(2) {
            println!("{family}: {} -> I, certified by {:?}", w.word, w.certificate());
        }
    }
    let z8 = RepParams::from_ints(&[3, 5]).with_ab(Scalar::int(0), Scalar::int(2));
    let ws = faithfulness_witnesses(RepFamily::Z8, &z8, 3, 2)?;
    println!("z8 a=0: {} (psi = {})", ws[0].word, ws[0].psi);
    Ok(())
}
