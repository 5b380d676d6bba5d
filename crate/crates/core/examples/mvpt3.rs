//! The three parameter cases for M_2 VPT_3 and their irreducibility.

use mvtwin::exact::{algebra_span_dimension, verify_invariant_line};
use mvtwin::reps::{mvpt3_rep, mvpt3_source, restrict_rep, Mvpt3Case};
use mvtwin::{Family, Scalar};

fn main() -> mvtwin::Result<()> {
    let (y0, y1) = (Scalar::int(2), Scalar::int(3));
    let cases = [
        Mvpt3Case::Diagonal { eps: 1, delta: 1 },
        Mvpt3Case::Triangular { t: -1, z: Scalar::frac(1, 2) },
        Mvpt3Case::Generic { a: Scalar::int(0), b: Scalar::int(1) },
        Mvpt3Case::Generic { a: Scalar::int(1), b: Scalar::int(1) },
    ];
    for case in cases {
        let printed = mvpt3_rep(&case, &y0, &y1)?;
        let restricted = restrict_rep(&mvpt3_source(&case, &y0, &y1)?, Family::Mvpt)?;
        let same = printed.iter().all(|(g, m)| restricted.get(g) == Some(m));
        let mats: Vec<_> = printed.values().cloned().collect();
        println!("{case:?}: matches restriction {same}, span {}", algebra_span_dimension(&mats)?);
    }
    let equal = mvpt3_rep(&Mvpt3Case::Diagonal { eps: 1, delta: 1 }, &y0, &y0)?;
    let mats: Vec<_> = equal.values().cloned().collect();
    let v = [Scalar::int(1), Scalar::int(2), Scalar::int(4)];
    println!("y0 = y1 = 2: (1,2,4) invariant {}", verify_invariant_line(&v, &mats)?);
    Ok(())
}
