//! Reidemeister–Schreier machinery for the kernels of `phi` and `psi`.
//!
//! The transversal is `Lambda_n`, the products `m_{2,j_2} m_{3,j_3} .. m_{n,j_n}`
//! with `m_{k,l} = rho_{k-1} rho_{k-2} .. rho_l` (and `m_{k,k}` empty), all on
//! layer 0. Two `rho^0` words with the same `phi` image are equal in the group,
//! so a transversal word is determined by its permutation.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{phi, Permutation, QuotientMap};
use crate::presentations::{presentation, relators_mvt, Presentation};
use crate::reps::Battery;
use crate::words::{Family, GenSym, GroupCtx, Letter, Word};

const MAX_TRANSVERSAL_N: usize = 6;
const MAX_PRESENTATION_N: usize = 5;

/// `rho_from rho_{from-1} .. rho_{down_to}`; empty when `from < down_to`.
fn rho0_run(from: usize, down_to: usize) -> Vec<Letter> {
    (down_to..=from).rev().map(|i| Letter::new(GenSym::Rho(i, 0))).collect()
}

/// Ambient word for a subgroup generator.
pub fn expand(sym: GenSym, ctx: &GroupCtx) -> Result<Word> {
    let amb = ctx.with_family(Family::Mvt);
    sym.validate(amb.n(), amb.k())?;
    let (i, j, b) = sym
        .indices()
        .ok_or_else(|| Error::Alphabet(format!("{sym} is not a subgroup generator")))?;
    let s = |i| Letter::new(GenSym::S(i));
    let r = |i| Letter::new(GenSym::Rho(i, 0));
    let rb = |i| Letter::new(GenSym::Rho(i, b));
    let pure = matches!(sym, GenSym::LambdaP(..));
    let (lo, hi) = (i.min(j), i.max(j));
    let base: Vec<Letter> = match (pure, b, i < j) {
        (_, 1.., _) => vec![r(lo), rb(lo)],
        (true, 0, true) => vec![r(lo), s(lo)],
        (true, 0, false) => vec![s(lo), r(lo)],
        (false, 0, true) => vec![s(lo)],
        (false, 0, false) => vec![r(lo), s(lo), r(lo)],
    };
    // conjugate by rho_{hi-1} .. rho_{lo+1}
    let outer = rho0_run(hi - 1, lo + 1);
    let mut letters = outer.clone();
    letters.extend(base);
    letters.extend(outer.into_iter().rev());
    Word::new(amb, letters)
}

/// Expansion of a signed subgroup letter.
pub fn expand_letter(l: Letter, ctx: &GroupCtx) -> Result<Word> {
    let w = expand(l.sym, ctx)?;
    Ok(if l.exp > 0 { w } else { w.invert() })
}

/// Ambient word of a subgroup word, letter by letter.
pub fn expand_word(w: &Word) -> Result<Word> {
    let amb = w.ctx().with_family(Family::Mvt);
    let mut letters = Vec::new();
    for &l in w.letters() {
        match l.sym {
            GenSym::S(_) | GenSym::Rho(..) => letters.push(l),
            _ => letters.extend_from_slice(expand_letter(l, &amb)?.letters()),
        }
    }
    Word::new(amb, letters)
}

/// Transversal, coset representatives and labels for one quotient map.
#[derive(Debug, Clone)]
pub struct SchreierContext {
    ctx: GroupCtx,
    map: QuotientMap,
    transversal: BTreeMap<Permutation, Word>,
}

impl SchreierContext {
    pub fn new(n: usize, k: usize, map: QuotientMap) -> Result<SchreierContext> {
        if n > MAX_TRANSVERSAL_N {
            return Err(Error::Scale(format!(
                "the transversal has n! entries; n is capped at {MAX_TRANSVERSAL_N}"
            )));
        }
        let amb = GroupCtx::mvt(n, k)?;
        let mut transversal = BTreeMap::new();
        for w in lambda_words(amb) {
            let p = phi(&w)?;
            if transversal.insert(p, w).is_some() {
                return Err(Error::Domain("transversal words share a permutation".into()));
            }
        }
        debug_assert_eq!(transversal.len(), (1..=n).product::<usize>());
        Ok(SchreierContext {
            ctx: amb.with_family(map.kernel_family()),
            map,
            transversal,
        })
    }

    /// Context of the subgroup words this context produces.
    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn ambient(&self) -> GroupCtx {
        self.ctx.with_family(Family::Mvt)
    }

    pub fn map(&self) -> QuotientMap {
        self.map
    }

    pub fn family(&self) -> Family {
        self.ctx.family()
    }

    pub fn transversal(&self) -> &BTreeMap<Permutation, Word> {
        &self.transversal
    }

    pub fn rep_of(&self, p: &Permutation) -> Result<&Word> {
        self.transversal
            .get(p)
            .ok_or_else(|| Error::Dimension(format!("no representative for {p}")))
    }

    /// Transversal word of the coset containing `w`.
    pub fn coset_rep(&self, w: &Word) -> Result<Word> {
        Ok(self.rep_of(&self.map.image(w)?)?.clone())
    }

    /// Label of `s_{lambda,a}` for the representative with image `pi`.
    pub fn label_at(&self, pi: &Permutation, a: GenSym) -> Result<Letter> {
        let (i, layer, is_s) = match a {
            GenSym::S(i) => (i, 0, true),
            GenSym::Rho(i, b) => (i, b, false),
            _ => return Err(Error::Alphabet(format!("{a} is not an ambient generator"))),
        };
        a.validate(self.ctx.n(), self.ctx.k())?;
        let (pi_i, pi_next) = (pi.apply(i), pi.apply(i + 1));
        let fam = self.family();
        match (self.map, is_s, layer) {
            (_, false, 0) => Err(Error::TrivialGenerator),
            (QuotientMap::Phi, true, _) => Ok(Letter::subgroup(fam, pi_next, pi_i, 0)),
            (QuotientMap::Psi, true, _) => Ok(Letter::subgroup(fam, pi_i, pi_next, 0)),
            // s_{lambda, rho^b} = lambda (x^b_{i,i+1})^{-1} lambda^{-1}
            (_, false, b) => Ok(Letter::subgroup(fam, pi_next, pi_i, b)),
        }
    }

    /// Label of `s_{lambda,a}` where `lambda` is a transversal word.
    pub fn lemma31_label(&self, lambda: &Word, a: GenSym) -> Result<Letter> {
        let pi = phi(lambda)?;
        if self.rep_of(&pi)? != lambda {
            return Err(Error::Domain(format!("{lambda} is not a transversal word")));
        }
        self.label_at(&pi, a)
    }

    /// `lambda a (rep of lambda a)^{-1}`, freely reduced.
    pub fn schreier_word(&self, lambda: &Word, a: GenSym) -> Result<Word> {
        let amb = self.ambient();
        let la = lambda.concat(&Word::from_syms(amb, &[a])?)?;
        Ok(la.concat(&self.coset_rep(&la)?.invert())?.free_reduce())
    }

    /// Every nontrivial Schreier generator with its label, in transversal
    /// order then generator order. Generators `s_{lambda, rho^0}` are trivial
    /// and omitted.
    pub fn schreier_generators(&self) -> Result<Vec<SchreierGenerator>> {
        let mut out = Vec::new();
        for (pi, lambda) in &self.transversal {
            for a in self.ambient().ambient_generators() {
                let label = match self.label_at(pi, a) {
                    Err(Error::TrivialGenerator) => continue,
                    other => other?,
                };
                out.push(SchreierGenerator {
                    lambda: lambda.clone(),
                    generator: a,
                    word: self.schreier_word(lambda, a)?,
                    label,
                });
            }
        }
        Ok(out)
    }

    /// The rewriting process without any reduction of the output.
    pub fn rewrite_tau_raw(&self, w: &Word) -> Result<Word> {
        if w.ctx().family() != Family::Mvt || (w.ctx().n(), w.ctx().k()) != (self.ctx.n(), self.ctx.k()) {
            return Err(Error::Context("rewriting needs an ambient word of the same (n, k)".into()));
        }
        if !self.map.in_kernel(w)? {
            return Err(Error::NotInKernel(self.map.name().into()));
        }
        let mut prefix = Permutation::identity(self.ctx.n());
        let mut out = Vec::new();
        for &l in w.letters() {
            let step = self.map.image(&Word::new(self.ambient(), vec![Letter::new(l.sym)])?)?;
            let after = prefix.compose(&step)?;
            // k_j: rep of the (j-1)-th prefix for exponent +1, of the j-th for -1
            let key = if l.exp > 0 { &prefix } else { &after };
            match self.label_at(key, l.sym) {
                Err(Error::TrivialGenerator) => {}
                Err(e) => return Err(e),
                Ok(label) => out.push(if l.exp > 0 { label } else { label.inv() }),
            }
            prefix = after;
        }
        Word::new(self.ctx, out)
    }

    /// The rewriting process, followed by free reduction and cancellation
    /// of layer-0 pairs that are inverse in the group: `lambda^0_{i,j}
    /// lambda^0_{j,i}` in the pure case, `kappa^0_{i,j} kappa^0_{i,j}` in the
    /// semi-pure case.
    pub fn rewrite_tau(&self, w: &Word) -> Result<Word> {
        Ok(reduce_subgroup_word(&self.rewrite_tau_raw(w)?))
    }

    /// Schreier generators, printed relators, and the rewritten conjugated
    /// ambient relators checked against the battery.
    pub fn subgroup_presentation(&self) -> Result<SubgroupPresentation> {
        if self.ctx.n() > MAX_PRESENTATION_N {
            return Err(Error::Scale(format!(
                "subgroup presentations are capped at n = {MAX_PRESENTATION_N}"
            )));
        }
        let mut generators: BTreeMap<GenSym, Word> = BTreeMap::new();
        for g in self.schreier_generators()? {
            generators
                .entry(g.label.sym)
                .or_insert_with(|| expand(g.label.sym, &self.ctx).expect("valid label"));
        }
        let printed = presentation(&self.ctx)?;
        let battery = Battery::standard(self.ctx.n(), self.ctx.k())?;
        let ambient = relators_mvt(self.ctx.n(), self.ctx.k())?;
        let mut rewritten = Vec::new();
        for lambda in self.transversal.values() {
            for r in &ambient.relators {
                let conj = lambda.concat(&r.word)?.concat(&lambda.invert())?;
                let word = self.rewrite_tau(&conj)?;
                let battery_pass = battery.is_trivial(&expand_word(&word)?)?;
                rewritten.push(RewrittenRelator {
                    lambda: lambda.clone(),
                    tag: r.tag,
                    relator: r.word.clone(),
                    word,
                    battery_pass,
                });
            }
        }
        Ok(SubgroupPresentation {
            generators: generators.into_iter().collect(),
            printed,
            rewritten,
        })
    }
}

fn lambda_words(amb: GroupCtx) -> Vec<Word> {
    let mut words = vec![Vec::new()];
    for k in 2..=amb.n() {
        let mut next = Vec::new();
        for w in &words {
            for l in 1..=k {
                let mut v: Vec<Letter> = w.clone();
                v.extend(rho0_run(k - 1, l));
                next.push(v);
            }
        }
        words = next;
    }
    words
        .into_iter()
        .map(|letters| Word::new(amb, letters).expect("rho^0 letters in range"))
        .collect()
}

fn layer0_inverse_pair(a: Letter, b: Letter) -> bool {
    match (a.sym, b.sym) {
        (GenSym::LambdaP(i, j, 0), GenSym::LambdaP(p, q, 0)) => (i, j) == (q, p),
        (GenSym::KappaS(i, j, 0), GenSym::KappaS(p, q, 0)) => (i, j) == (p, q),
        _ => false,
    }
}

/// Writes layer-0 letters with exponent +1 (`lambda^0_{i,j}^{-1}` becomes
/// `lambda^0_{j,i}`, `kappa^0` letters are involutions), then cancels
/// adjacent inverse pairs.
pub fn reduce_subgroup_word(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        let l = match l.sym {
            GenSym::LambdaP(i, j, 0) if l.exp < 0 => Letter::new(GenSym::LambdaP(j, i, 0)),
            GenSym::KappaS(_, _, 0) => Letter::new(l.sym),
            _ => l,
        };
        match stack.last() {
            Some(&top) if (top.sym == l.sym && top.exp == -l.exp) || layer0_inverse_pair(top, l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word::from_letters_unchecked(*w.ctx(), stack)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub lambda: Word,
    pub generator: GenSym,
    pub word: Word,
    pub label: Letter,
}

#[derive(Debug, Clone, Serialize)]
pub struct RewrittenRelator {
    #[serde(serialize_with = "as_string")]
    pub lambda: Word,
    pub tag: &'static str,
    #[serde(serialize_with = "as_string")]
    pub relator: Word,
    #[serde(serialize_with = "as_string")]
    pub word: Word,
    pub battery_pass: bool,
}

fn as_string<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

#[derive(Debug, Clone)]
pub struct SubgroupPresentation {
    /// Distinct labels with their ambient expansions.
    pub generators: Vec<(GenSym, Word)>,
    pub printed: Presentation,
    pub rewritten: Vec<RewrittenRelator>,
}

/// `a^{-1} x a` for a `rho^0` word `a`, as a signed subgroup letter.
pub fn lemma31_action(a: &Word, sym: GenSym) -> Result<Letter> {
    if let Some(bad) = a.letters().iter().find(|l| !matches!(l.sym, GenSym::Rho(_, 0))) {
        return Err(Error::Alphabet(format!("{} is not a rho^0 letter", bad.sym)));
    }
    sym.validate(a.ctx().n(), a.ctx().k())?;
    let (i, j, b) = sym
        .indices()
        .ok_or_else(|| Error::Alphabet(format!("{sym} is not a subgroup generator")))?;
    let sigma = phi(a)?.inverse();
    Ok(Letter::subgroup(sym.family(), sigma.apply(i), sigma.apply(j), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::psi;
    use crate::words::parse_word;

    fn amb(n: usize, k: usize) -> GroupCtx {
        GroupCtx::mvt(n, k).unwrap()
    }

    fn w(text: &str, n: usize, k: usize) -> Word {
        parse_word(text, &amb(n, k)).unwrap()
    }

    #[test]
    fn transversal_examples() {
        let sc = SchreierContext::new(2, 1, QuotientMap::Phi).unwrap();
        assert_eq!(sc.transversal().len(), 2);
        assert_eq!(sc.rep_of(&Permutation::identity(2)).unwrap().to_string(), "");
        assert_eq!(sc.rep_of(&Permutation::transposition(2, 1, 2)).unwrap().to_string(), "p1.0");
        let sc = SchreierContext::new(3, 1, QuotientMap::Phi).unwrap();
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(sc.rep_of(&c).unwrap().to_string(), "p1.0 p2.0");
        for n in 2..=5 {
            let sc = SchreierContext::new(n, 1, QuotientMap::Phi).unwrap();
            assert_eq!(sc.transversal().len(), (1..=n).product::<usize>());
            for (p, w) in sc.transversal() {
                assert_eq!(&phi(w).unwrap(), p);
            }
        }
        assert!(matches!(SchreierContext::new(7, 1, QuotientMap::Phi), Err(Error::Scale(_))));
    }

    #[test]
    fn transversal_is_prefix_closed() {
        let sc = SchreierContext::new(4, 1, QuotientMap::Phi).unwrap();
        for w in sc.transversal().values() {
            for cut in 0..w.len() {
                let prefix = Word::new(*w.ctx(), w.letters()[..cut].to_vec()).unwrap();
                assert_eq!(sc.coset_rep(&prefix).unwrap(), prefix);
            }
        }
    }

    #[test]
    fn coset_rep_examples() {
        let phi_sc = SchreierContext::new(3, 2, QuotientMap::Phi).unwrap();
        assert_eq!(phi_sc.coset_rep(&w("s1", 3, 2)).unwrap().to_string(), "p1.0");
        assert!(phi_sc.coset_rep(&w("p1.0 s1", 3, 2)).unwrap().is_empty());
        let psi_sc = SchreierContext::new(3, 2, QuotientMap::Psi).unwrap();
        assert!(psi_sc.coset_rep(&w("s1", 3, 2)).unwrap().is_empty());
    }

    #[test]
    fn expand_examples() {
        let ctx = amb(3, 2);
        assert_eq!(expand(GenSym::LambdaP(1, 3, 0), &ctx).unwrap().to_string(), "p2.0 p1.0 s1 p2.0");
        assert_eq!(expand(GenSym::KappaS(1, 2, 0), &ctx).unwrap().to_string(), "s1");
        assert_eq!(expand(GenSym::LambdaP(2, 3, 1), &ctx).unwrap().to_string(), "p2.0 p2.1");
        assert_eq!(expand(GenSym::LambdaP(2, 1, 0), &ctx).unwrap().to_string(), "s1 p1.0");
        assert_eq!(expand(GenSym::KappaS(2, 1, 0), &ctx).unwrap().to_string(), "p1.0 s1 p1.0");
        assert!(expand(GenSym::LambdaP(3, 1, 1), &ctx).is_err());
        assert!(expand(GenSym::S(1), &ctx).is_err());
    }

    #[test]
    fn expansions_lie_in_kernels() {
        for (n, k) in [(3, 1), (4, 3), (5, 2)] {
            let ctx = amb(n, k);
            for f in [Family::Mvpt, Family::Mvht] {
                let map = QuotientMap::for_kernel(f).unwrap();
                for g in ctx.subgroup_generators(f) {
                    assert!(map.in_kernel(&expand(g, &ctx).unwrap()).unwrap(), "{g}");
                }
            }
        }
    }

    #[test]
    fn schreier_generator_examples() {
        let sc = SchreierContext::new(3, 2, QuotientMap::Phi).unwrap();
        let e = Word::empty(amb(3, 2));
        assert_eq!(sc.schreier_word(&e, GenSym::S(1)).unwrap().to_string(), "s1 p1.0");
        assert_eq!(sc.lemma31_label(&e, GenSym::S(1)).unwrap(), Letter::new(GenSym::LambdaP(2, 1, 0)));
        assert_eq!(
            sc.lemma31_label(&e, GenSym::Rho(1, 1)).unwrap(),
            Letter::inverse_of(GenSym::LambdaP(1, 2, 1))
        );
        assert_eq!(sc.lemma31_label(&e, GenSym::Rho(1, 0)), Err(Error::TrivialGenerator));
        let lam = w("p2.0", 3, 2);
        assert_eq!(sc.lemma31_label(&lam, GenSym::S(1)).unwrap(), Letter::new(GenSym::LambdaP(3, 1, 0)));
        let psi_sc = SchreierContext::new(3, 2, QuotientMap::Psi).unwrap();
        assert_eq!(psi_sc.lemma31_label(&e, GenSym::S(1)).unwrap(), Letter::new(GenSym::KappaS(1, 2, 0)));

        let gens = sc.schreier_generators().unwrap();
        let mut labels: Vec<GenSym> = gens.iter().map(|g| g.label.sym).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 9);
        assert_eq!(labels, amb(3, 2).subgroup_generators(Family::Mvpt).into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn rho0_schreier_words_are_trivial() {
        let sc = SchreierContext::new(4, 2, QuotientMap::Phi).unwrap();
        let battery = Battery::standard(4, 2).unwrap();
        for lambda in sc.transversal().values() {
            for i in 1..4 {
                let s = sc.schreier_word(lambda, GenSym::Rho(i, 0)).unwrap();
                assert!(battery.is_trivial(&s).unwrap());
            }
        }
    }

    #[test]
    fn labels_agree_with_schreier_words() {
        for map in [QuotientMap::Phi, QuotientMap::Psi] {
            let sc = SchreierContext::new(4, 2, map).unwrap();
            let battery = Battery::standard(4, 2).unwrap();
            for g in sc.schreier_generators().unwrap() {
                assert!(map.in_kernel(&g.word).unwrap());
                let via_label = expand_letter(g.label, &sc.ambient()).unwrap();
                assert!(battery.agree(&g.word, &via_label).unwrap(), "{} {}", g.lambda, g.generator);
            }
        }
    }

    #[test]
    fn rewrite_examples() {
        let sc = SchreierContext::new(3, 2, QuotientMap::Phi).unwrap();
        let out = sc.rewrite_tau(&w("p1.0 s1", 3, 2)).unwrap();
        assert_eq!(out.letters(), &[Letter::new(GenSym::LambdaP(1, 2, 0))]);
        assert!(sc.rewrite_tau(&w("s1 s1", 3, 2)).unwrap().is_empty());
        assert_eq!(sc.rewrite_tau_raw(&w("s1 s1", 3, 2)).unwrap().to_string(), "L2.1.0 L1.2.0");
        assert!(matches!(sc.rewrite_tau(&w("s1", 3, 2)), Err(Error::NotInKernel(_))));
        let psi_sc = SchreierContext::new(3, 2, QuotientMap::Psi).unwrap();
        assert!(psi_sc.rewrite_tau(&w("s1 s1", 3, 2)).unwrap().is_empty());
    }

    #[test]
    fn rewrite_round_trip() {
        for (n, k) in [(3, 1), (3, 2), (4, 2)] {
            for map in [QuotientMap::Phi, QuotientMap::Psi] {
                let sc = SchreierContext::new(n, k, map).unwrap();
                for g in sc.ctx().subgroup_generators(sc.family()) {
                    let back = sc.rewrite_tau(&expand(g, sc.ctx()).unwrap()).unwrap();
                    assert_eq!(back.letters(), &[Letter::new(g)], "{g}");
                }
            }
        }
    }

    #[test]
    fn rewrite_far_commute_gives_commutator() {
        let sc = SchreierContext::new(4, 1, QuotientMap::Phi).unwrap();
        let out = sc.rewrite_tau_raw(&w("s1 s3 s1 s3", 4, 1)).unwrap();
        assert_eq!(out.to_string(), "L2.1.0 L4.3.0 L1.2.0 L3.4.0");
    }

    #[test]
    fn rewrite_keeps_battery_images() {
        let sc = SchreierContext::new(3, 2, QuotientMap::Phi).unwrap();
        let battery = Battery::standard(3, 2).unwrap();
        let word = w("s1 p2.1 s2 p1.0 s1! p2.1 p2.0 s2 p1.0", 3, 2);
        let word = word.concat(&sc.coset_rep(&word).unwrap().invert()).unwrap();
        let tau = sc.rewrite_tau(&word).unwrap();
        assert!(battery.agree(&word, &expand_word(&tau).unwrap()).unwrap());
        assert!(psi(&expand_word(&tau).unwrap()).is_ok());
    }

    #[test]
    fn lemma31_examples() {
        let l12 = GenSym::LambdaP(1, 2, 0);
        assert_eq!(lemma31_action(&w("p1.0", 3, 2), l12).unwrap(), Letter::new(GenSym::LambdaP(2, 1, 0)));
        assert_eq!(lemma31_action(&w("p3.0", 4, 2), l12).unwrap(), Letter::new(l12));
        assert_eq!(lemma31_action(&w("", 3, 2), l12).unwrap(), Letter::new(l12));
        assert!(matches!(lemma31_action(&w("s1", 3, 2), l12), Err(Error::Alphabet(_))));
        assert_eq!(
            lemma31_action(&w("p1.0", 3, 2), GenSym::LambdaP(1, 2, 1)).unwrap(),
            Letter::inverse_of(GenSym::LambdaP(1, 2, 1))
        );
    }

    #[test]
    fn presentation_small() {
        let sc = SchreierContext::new(3, 2, QuotientMap::Phi).unwrap();
        let p = sc.subgroup_presentation().unwrap();
        assert_eq!(p.generators.len(), 9);
        assert_eq!(p.printed.relators.len(), 10);
        assert!(p.rewritten.iter().all(|r| r.battery_pass));
        let sc = SchreierContext::new(6, 1, QuotientMap::Phi).unwrap();
        assert!(matches!(sc.subgroup_presentation(), Err(Error::Scale(_))));
    }
}
