//! Schreier generators of the pure subgroup and the rewriting process.

use std::collections::BTreeSet;

use mvtwin::perm::QuotientMap;
use mvtwin::schreier::{expand, lemma31_action, SchreierContext};
use mvtwin::words::{parse_word, GenSym};

fn main() -> mvtwin::Result<()> {
    let sc = SchreierContext::new(3, 2, QuotientMap::Phi)?;
    for (p, w) in sc.transversal() {
        println!("transversal {p:<8} {w}");
    }
    let gens = sc.schreier_generators()?;
    let labels: BTreeSet<String> = gens.iter().map(|g| g.label.sym.to_string()).collect();
    println!("{} Schreier words, labels {labels:?}", gens.len());

    let w = parse_word("p2.0 s1 p2.1 p1.0 s2 s1 p1.0 p2.1", &sc.ambient())?;
    let w = w.concat(&sc.coset_rep(&w)?.invert())?;
    println!("tau({w}) = {}", sc.rewrite_tau(&w)?);
    let l13 = expand(GenSym::LambdaP(1, 3, 1), sc.ctx())?;
    println!("tau({l13}) = {}", sc.rewrite_tau(&l13)?);
    let a = parse_word("p1.0", &sc.ambient())?;
    println!("p1.0^-1 L1.2.0 p1.0 = {}", lemma31_action(&a, GenSym::LambdaP(1, 2, 0))?);
    Ok(())
}
