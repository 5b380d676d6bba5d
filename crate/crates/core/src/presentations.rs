//! Defining relators of `M_k VT_n` and of its pure and semi-pure subgroups.
//!
//! Every relation `left = right` is stored as the relator `left * right^-1`.
//! Families are emitted in the order they are listed for each group, and
//! within a family in lexicographic order of the indices and layers.

use serde::Serialize;

use crate::error::Result;
use crate::words::{Family, GenSym, GroupCtx, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relator {
    /// Name of the relation family this relator belongs to.
    pub tag: &'static str,
    #[serde(serialize_with = "serialize_word")]
    pub word: Word,
}

fn serialize_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct Presentation {
    #[serde(skip)]
    pub ctx: GroupCtx,
    #[serde(serialize_with = "serialize_syms")]
    pub generators: Vec<GenSym>,
    pub relators: Vec<Relator>,
}

fn serialize_syms<S: serde::Serializer>(g: &[GenSym], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(g.iter().map(|x| x.to_string()))
}

impl Presentation {
    pub fn relator_words(&self) -> Vec<&Word> {
        self.relators.iter().map(|r| &r.word).collect()
    }

    pub fn with_tag(&self, tag: &str) -> Vec<&Word> {
        self.relators.iter().filter(|r| r.tag == tag).map(|r| &r.word).collect()
    }
}

pub fn presentation(ctx: &GroupCtx) -> Result<Presentation> {
    match ctx.family() {
        Family::Mvt => relators_mvt(ctx.n(), ctx.k()),
        Family::Mvpt => relators_mvpt(ctx.n(), ctx.k()),
        Family::Mvht => relators_mvht(ctx.n(), ctx.k()),
    }
}

struct Builder {
    ctx: GroupCtx,
    relators: Vec<Relator>,
}

impl Builder {
    fn new(ctx: GroupCtx) -> Self {
        Builder {
            ctx,
            relators: Vec::new(),
        }
    }

    /// Records `left * right^-1`.
    fn relation(&mut self, tag: &'static str, left: &[Letter], right: &[Letter]) {
        let mut letters = left.to_vec();
        letters.extend(right.iter().rev().map(|l| l.inv()));
        let word = Word::from_letters_unchecked(self.ctx, letters).normalize_involutions();
        self.relators.push(Relator { tag, word });
    }

    fn commutes(&mut self, tag: &'static str, a: Letter, b: Letter) {
        self.relation(tag, &[a, b], &[b, a]);
    }

    fn finish(self) -> Presentation {
        let generators = self.ctx.subgroup_generators(self.ctx.family());
        Presentation {
            ctx: self.ctx,
            generators,
            relators: self.relators,
        }
    }
}

fn s(i: usize) -> Letter {
    Letter::new(GenSym::S(i))
}

fn r(i: usize, a: usize) -> Letter {
    Letter::new(GenSym::Rho(i, a))
}

/// Relators of the ambient group.
pub fn relators_mvt(n: usize, k: usize) -> Result<Presentation> {
    let mut b = Builder::new(GroupCtx::mvt(n, k)?);
    let m = n - 1;
    for i in 1..=m {
        b.relation("s_involution", &[s(i), s(i)], &[]);
    }
    for i in 1..=m {
        for j in i + 2..=m {
            b.commutes("s_far_commute", s(i), s(j));
        }
    }
    for i in 1..=m {
        for a in 0..k {
            b.relation("rho_involution", &[r(i, a), r(i, a)], &[]);
        }
    }
    for i in 1..=m {
        for j in i + 2..=m {
            for a in 0..k {
                for c in 0..k {
                    b.commutes("rho_far_commute", r(i, a), r(j, c));
                }
            }
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) >= 2 {
                for a in 0..k {
                    b.commutes("rho_s_far_commute", r(i, a), s(j));
                }
            }
        }
    }
    for i in 1..m {
        for a in 0..k {
            b.relation(
                "rho_braid",
                &[r(i, a), r(i + 1, a), r(i, a)],
                &[r(i + 1, a), r(i, a), r(i + 1, a)],
            );
        }
    }
    for i in 1..m {
        for a in 0..k {
            for c in a + 1..k {
                b.relation(
                    "rho_mixed_braid",
                    &[r(i, a), r(i + 1, c), r(i, c)],
                    &[r(i + 1, c), r(i, c), r(i + 1, a)],
                );
            }
        }
    }
    for i in 1..m {
        for a in 0..k {
            for c in a + 1..k {
                b.relation(
                    "rho_mixed_braid_swapped",
                    &[r(i, a), r(i + 1, a), r(i, c)],
                    &[r(i + 1, c), r(i, a), r(i + 1, a)],
                );
            }
        }
    }
    for i in 1..m {
        for a in 0..k {
            b.relation(
                "rho_s_braid",
                &[r(i, a), r(i + 1, a), s(i)],
                &[s(i + 1), r(i, a), r(i + 1, a)],
            );
        }
    }
    Ok(b.finish())
}

fn distinct_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

fn distinct_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, j) in distinct_pairs(n) {
        for l in 1..=n {
            if l != i && l != j {
                out.push((i, j, l));
            }
        }
    }
    out
}

/// Relators shared by the two subgroups; they differ only in the symbol
/// alphabet and in the shape of the layer-0 triangle relation.
fn subgroup_relators(family: Family, n: usize, k: usize) -> Result<Presentation> {
    let ctx = GroupCtx::new(n, k, family)?;
    let mut b = Builder::new(ctx);
    let x = |i: usize, j: usize, layer: usize| Letter::subgroup(family, i, j, layer);

    if family == Family::Mvpt {
        for (i, j) in distinct_pairs(n) {
            for (p, q) in distinct_pairs(n) {
                if [p, q].iter().all(|v| *v != i && *v != j) && (i, j) < (p, q) {
                    b.commutes("layer0_commute", x(i, j, 0), x(p, q, 0));
                }
            }
        }
    }
    let canonical: Vec<(usize, usize)> = distinct_pairs(n).into_iter().filter(|(i, j)| i < j).collect();
    for &(i, j) in &canonical {
        for &(p, q) in &canonical {
            if p == i || p == j || q == i || q == j {
                continue;
            }
            for a in 1..k {
                for c in a..k {
                    if a == c && (i, j) >= (p, q) {
                        continue;
                    }
                    b.commutes("layer_commute", x(i, j, a), x(p, q, c));
                }
            }
        }
    }
    let increasing: Vec<(usize, usize, usize)> = distinct_triples(n)
        .into_iter()
        .filter(|&(i, j, l)| i < j && j < l)
        .collect();
    for &(i, j, l) in &increasing {
        for a in 1..k {
            b.relation(
                "triangle",
                &[x(i, j, a), x(i, l, a), x(j, l, a)],
                &[x(j, l, a), x(i, l, a), x(i, j, a)],
            );
        }
    }
    for &(i, j, l) in &increasing {
        for a in 1..k {
            for c in a + 1..k {
                b.relation(
                    "triangle_mixed",
                    &[x(i, j, a), x(i, l, c), x(j, l, c)],
                    &[x(j, l, c), x(i, l, c), x(i, j, a)],
                );
            }
        }
    }
    for &(i, j, l) in &increasing {
        for a in 1..k {
            for c in a + 1..k {
                b.relation(
                    "triangle_mixed_swapped",
                    &[x(i, j, a), x(i, l, a), x(j, l, c)],
                    &[x(j, l, c), x(i, l, a), x(i, j, a)],
                );
            }
        }
    }
    for (i, j, l) in distinct_triples(n) {
        for a in 1..k {
            match family {
                Family::Mvht => b.relation(
                    "triangle_layer0",
                    &[x(i, l, a), x(i, j, a), x(j, l, 0)],
                    &[x(j, l, 0), x(i, l, a), x(i, j, a)],
                ),
                _ => b.relation(
                    "triangle_layer0",
                    &[x(i, j, a), x(i, l, a), x(j, l, 0)],
                    &[x(j, l, 0), x(i, l, a), x(i, j, a)],
                ),
            }
        }
    }
    for (i, j, l) in distinct_triples(n) {
        if i < j {
            for a in 1..k {
                b.commutes("shared_target_commute", x(i, l, a), x(j, l, a));
            }
        }
    }
    Ok(b.finish())
}

/// Relators of the pure subgroup, the kernel of `Phi`.
pub fn relators_mvpt(n: usize, k: usize) -> Result<Presentation> {
    subgroup_relators(Family::Mvpt, n, k)
}

/// Relators of the semi-pure subgroup, the kernel of `Psi`.
pub fn relators_mvht(n: usize, k: usize) -> Result<Presentation> {
    subgroup_relators(Family::Mvht, n, k)
}
