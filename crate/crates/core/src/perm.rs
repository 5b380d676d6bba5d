//! Symmetric-group arithmetic and the quotient maps `Phi` and `Psi`.
//!
//! Composition is right-to-left: `compose(p, q)(x) = p(q(x))`. A word is
//! mapped letter by letter and the images are composed with the leftmost
//! letter outermost.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Family, GenSym, GroupCtx, Letter, Word};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[x - 1] = p(x)
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Domain(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                if x == 0 || x > n || next == 0 || next > n {
                    return Err(Error::Domain(format!("cycle entry out of 1..={n}")));
                }
                images[x - 1] = next;
            }
        }
        Self::from_images(images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::Dimension(format!(
                "cannot compose permutations of degree {} and {}",
                self.degree(),
                q.degree()
            )));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length >= 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Every permutation of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientMap {
    /// Every generator maps to its adjacent transposition.
    Phi,
    /// `s_i` maps to the identity, `rho_i^a` to the adjacent transposition.
    Psi,
}

impl QuotientMap {
    pub fn name(self) -> &'static str {
        match self {
            QuotientMap::Phi => "phi",
            QuotientMap::Psi => "psi",
        }
    }

    /// The subgroup this map cuts out as its kernel.
    pub fn kernel_family(self) -> Family {
        match self {
            QuotientMap::Phi => Family::Mvpt,
            QuotientMap::Psi => Family::Mvht,
        }
    }

    pub fn for_kernel(family: Family) -> Option<QuotientMap> {
        match family {
            Family::Mvpt => Some(QuotientMap::Phi),
            Family::Mvht => Some(QuotientMap::Psi),
            Family::Mvt => None,
        }
    }

    /// Image of a single ambient letter; `None` for the identity.
    fn letter_image(self, sym: GenSym) -> Result<Option<usize>> {
        match (self, sym) {
            (QuotientMap::Phi, GenSym::S(i)) => Ok(Some(i)),
            (QuotientMap::Psi, GenSym::S(_)) => Ok(None),
            (_, GenSym::Rho(i, _)) => Ok(Some(i)),
            (_, other) => Err(Error::Alphabet(format!("{other} has no image under {}", self.name()))),
        }
    }

    pub fn image(self, w: &Word) -> Result<Permutation> {
        let n = w.ctx().n();
        // Applying letters right to left on the one-line array realises
        // t(x_1) o t(x_2) o ... o t(x_r).
        let mut images: Vec<usize> = (1..=n).collect();
        for l in w.letters().iter().rev() {
            if let Some(i) = self.letter_image(l.sym)? {
                // t_i o p swaps the values i and i+1
                for x in images.iter_mut() {
                    if *x == i {
                        *x = i + 1;
                    } else if *x == i + 1 {
                        *x = i;
                    }
                }
            }
        }
        Ok(Permutation { images })
    }

    pub fn in_kernel(self, w: &Word) -> Result<bool> {
        Ok(self.image(w)?.is_identity())
    }
}

pub fn phi(w: &Word) -> Result<Permutation> {
    QuotientMap::Phi.image(w)
}

pub fn psi(w: &Word) -> Result<Permutation> {
    QuotientMap::Psi.image(w)
}

pub fn in_kernel(w: &Word, map: QuotientMap) -> Result<bool> {
    map.in_kernel(w)
}

/// A word in the `rho^0` letters whose `Phi` image is `p`, built from the
/// adjacent swaps of an insertion sort of `p`'s one-line array.
pub fn section_theta(p: &Permutation, k: usize) -> Result<Word> {
    let n = p.degree();
    let ctx = GroupCtx::mvt(n, k)?;
    let mut arr = p.images.clone();
    let mut swaps = Vec::new();
    for end in 1..n {
        let mut pos = end;
        while pos > 0 && arr[pos - 1] > arr[pos] {
            arr.swap(pos - 1, pos);
            // positions pos, pos+1 in 1-based terms
            swaps.push(pos);
            pos -= 1;
        }
    }
    // p o t_{i_1} o ... o t_{i_m} = e, so p = t_{i_m} o ... o t_{i_1}.
    let letters = swaps
        .into_iter()
        .rev()
        .map(|i| Letter::new(GenSym::Rho(i, 0)))
        .collect();
    Ok(Word::from_letters_unchecked(ctx, letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn w(text: &str, n: usize, k: usize) -> Word {
        parse_word(text, &GroupCtx::mvt(n, k).unwrap()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let p = compose(&cyc(3, &[&[1, 2]]), &cyc(3, &[&[2, 3]])).unwrap();
        assert_eq!(p, cyc(3, &[&[1, 2, 3]]));
        assert_eq!(p.images(), &[2, 3, 1]);
        let q = cyc(4, &[&[1, 3, 4]]);
        assert_eq!(q.compose(&Permutation::identity(4)).unwrap(), q);
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        assert!(q.compose(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&w("s1", 3, 1)).unwrap(), cyc(3, &[&[1, 2]]));
        assert_eq!(phi(&w("s1 s2", 3, 1)).unwrap(), cyc(3, &[&[1, 2, 3]]));
        assert_eq!(phi(&w("s1 s2 s1 s2", 3, 1)).unwrap(), cyc(3, &[&[1, 3, 2]]));
    }

    #[test]
    fn psi_examples() {
        assert!(psi(&w("s1 s2", 3, 1)).unwrap().is_identity());
        assert_eq!(psi(&w("p1.0 p2.1", 3, 2)).unwrap(), cyc(3, &[&[1, 2, 3]]));
        assert_eq!(
            psi(&w("s1 p2.0 s1 p2.0 s1 p2.0", 3, 1)).unwrap(),
            cyc(3, &[&[2, 3]])
        );
    }

    #[test]
    fn kernel_membership() {
        assert!(in_kernel(&w("p1.0 s1", 3, 1), QuotientMap::Phi).unwrap());
        assert!(!in_kernel(&w("s1", 3, 1), QuotientMap::Phi).unwrap());
        assert!(in_kernel(&w("s1", 3, 1), QuotientMap::Psi).unwrap());
    }

    #[test]
    fn subgroup_letters_have_no_image() {
        let word = parse_word("L1.2.0", &GroupCtx::mvpt(3, 1).unwrap()).unwrap();
        assert!(matches!(phi(&word), Err(Error::Alphabet(_))));
    }

    #[test]
    fn section_examples() {
        assert!(section_theta(&Permutation::identity(3), 1).unwrap().is_empty());
        assert_eq!(section_theta(&cyc(3, &[&[1, 2]]), 1).unwrap().to_string(), "p1.0");
        assert_eq!(
            section_theta(&cyc(3, &[&[1, 2, 3]]), 1).unwrap().to_string(),
            "p1.0 p2.0"
        );
    }

    #[test]
    fn section_splits_phi_exhaustively() {
        for n in 2..=5 {
            let all = Permutation::all(n);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            for p in all {
                assert_eq!(phi(&section_theta(&p, 2).unwrap()).unwrap(), p);
            }
        }
    }

    #[test]
    fn cycle_display() {
        assert_eq!(cyc(4, &[&[1, 2], &[3, 4]]).to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "e");
    }

    fn word_strategy(n: usize, k: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(
            prop_oneof![
                (1..n).prop_map(GenSym::S),
                (1..n, 0..k).prop_map(|(i, a)| GenSym::Rho(i, a)),
            ],
            0..20,
        )
        .prop_map(move |syms| Word::from_syms(GroupCtx::mvt(n, k).unwrap(), &syms).unwrap())
    }

    proptest! {
        #[test]
        fn quotients_are_homomorphisms(u in word_strategy(5, 2), v in word_strategy(5, 2)) {
            let uv = u.concat(&v).unwrap();
            for map in [QuotientMap::Phi, QuotientMap::Psi] {
                prop_assert_eq!(
                    map.image(&uv).unwrap(),
                    map.image(&u).unwrap().compose(&map.image(&v).unwrap()).unwrap()
                );
            }
        }

        #[test]
        fn reduction_preserves_images(u in word_strategy(4, 3)) {
            prop_assert_eq!(phi(&u).unwrap(), phi(&u.free_reduce()).unwrap());
            prop_assert_eq!(psi(&u).unwrap(), psi(&u.free_reduce()).unwrap());
        }
    }
}
