//! The eight homogeneous 2-local representation families `z1`..`z8`.
//!
//! Each family sends `s_i` and `rho_i^a` to the identity matrix with a
//! fixed 2x2 block placed on rows and columns `i, i+1`. The `rho^a` block is
//! `antidiag(1/y_a, y_a)` for every family except `z1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    algebra_span_dimension, verify_invariant_covector, verify_invariant_line, Matrix, Scalar,
};
use crate::perm::{phi, psi, Permutation, QuotientMap};
use crate::presentations::relators_mvt;
use crate::schreier::{expand, expand_word};
use crate::words::{Family, GenSym, GroupCtx, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepFamily {
    Z1,
    Z2,
    Z3,
    Z4,
    Z5,
    Z6,
    Z7,
    Z8,
}

impl RepFamily {
    pub const ALL: [RepFamily; 8] = [
        RepFamily::Z1,
        RepFamily::Z2,
        RepFamily::Z3,
        RepFamily::Z4,
        RepFamily::Z5,
        RepFamily::Z6,
        RepFamily::Z7,
        RepFamily::Z8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RepFamily::Z1 => "z1",
            RepFamily::Z2 => "z2",
            RepFamily::Z3 => "z3",
            RepFamily::Z4 => "z4",
            RepFamily::Z5 => "z5",
            RepFamily::Z6 => "z6",
            RepFamily::Z7 => "z7",
            RepFamily::Z8 => "z8",
        }
    }

    pub fn needs_y(self) -> bool {
        self != RepFamily::Z1
    }

    pub fn needs_z(self) -> bool {
        matches!(self, RepFamily::Z6 | RepFamily::Z7)
    }

    pub fn needs_ab(self) -> bool {
        self == RepFamily::Z8
    }
}

impl fmt::Display for RepFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RepFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown family {s:?}, expected z1..z8")))
    }
}

/// Parameter values for a family. Unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RepParams {
    pub y: Vec<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Scalar>,
}

impl RepParams {
    pub fn new(y: Vec<Scalar>) -> Self {
        RepParams {
            y,
            ..RepParams::default()
        }
    }

    /// Integer `y` values; handy in tests and examples.
    pub fn from_ints(y: &[i64]) -> Self {
        RepParams::new(y.iter().map(|&v| Scalar::int(v)).collect())
    }

    pub fn with_z(mut self, z: Scalar) -> Self {
        self.z = Some(z);
        self
    }

    pub fn with_ab(mut self, a: Scalar, b: Scalar) -> Self {
        self.a = Some(a);
        self.b = Some(b);
        self
    }

    pub fn validate(&self, family: RepFamily, k: usize) -> Result<()> {
        if family.needs_y() {
            if self.y.len() != k {
                return Err(Error::Parameter(format!(
                    "{family} needs {k} y values, got {}",
                    self.y.len()
                )));
            }
            if self.y.iter().any(Scalar::is_zero) {
                return Err(Error::Parameter("y values must be nonzero".into()));
            }
        }
        if family.needs_z() {
            match &self.z {
                None => return Err(Error::Parameter(format!("{family} needs z"))),
                Some(z) if z.is_zero() => return Err(Error::Parameter("z must be nonzero".into())),
                _ => {}
            }
        }
        if family.needs_ab() {
            if self.a.is_none() {
                return Err(Error::Parameter("z8 needs a".into()));
            }
            match &self.b {
                None => return Err(Error::Parameter("z8 needs b".into())),
                Some(b) if b.is_zero() => return Err(Error::Parameter("b must be nonzero".into())),
                _ => {}
            }
        }
        Ok(())
    }

    /// The common value of all `y`, if they agree.
    pub fn common_y(&self) -> Option<&Scalar> {
        let first = self.y.first()?;
        self.y.iter().all(|v| v == first).then_some(first)
    }
}

fn block(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// The 2x2 block of `s_i`.
pub fn s_block(family: RepFamily, params: &RepParams) -> Result<Matrix> {
    let one = Scalar::one;
    let zero = Scalar::zero;
    let m1 = || Scalar::int(-1);
    let z = || params.z.clone().ok_or_else(|| Error::Parameter("missing z".into()));
    Ok(match family {
        RepFamily::Z1 | RepFamily::Z2 => Matrix::identity(2),
        RepFamily::Z3 => block(one(), zero(), zero(), m1()),
        RepFamily::Z4 => block(m1(), zero(), zero(), one()),
        RepFamily::Z5 => block(m1(), zero(), zero(), m1()),
        RepFamily::Z6 => block(one(), z()?, zero(), m1()),
        RepFamily::Z7 => block(m1(), z()?, zero(), one()),
        RepFamily::Z8 => {
            let a = params.a.clone().ok_or_else(|| Error::Parameter("missing a".into()))?;
            let b = params.b.clone().ok_or_else(|| Error::Parameter("missing b".into()))?;
            let top_right = -((&a * &a - Scalar::one()).checked_div(&b)?);
            block(-a.clone(), top_right, b, a)
        }
    })
}

/// The 2x2 block of `rho_i^layer`.
pub fn rho_block(family: RepFamily, params: &RepParams, layer: usize) -> Result<Matrix> {
    if family == RepFamily::Z1 {
        return Ok(Matrix::identity(2));
    }
    let y = params
        .y
        .get(layer)
        .ok_or_else(|| Error::Parameter(format!("missing y_{layer}")))?;
    Ok(block(Scalar::zero(), y.recip()?, y.clone(), Scalar::zero()))
}

/// A matrix representation of `M_k VT_n`, stored as generator images.
#[derive(Debug, Clone)]
pub struct RepInstance {
    family: Option<RepFamily>,
    ctx: GroupCtx,
    params: RepParams,
    table: BTreeMap<GenSym, Matrix>,
    inverses: BTreeMap<GenSym, Matrix>,
}

pub fn build_rep(family: RepFamily, params: &RepParams, n: usize, k: usize) -> Result<RepInstance> {
    if n < 3 {
        return Err(Error::Domain("the 2-local families are classified for n >= 3".into()));
    }
    GroupCtx::mvt(n, k)?;
    params.validate(family, k)?;
    let s = s_block(family, params)?;
    let rhos = (0..k)
        .map(|a| rho_block(family, params, a))
        .collect::<Result<Vec<_>>>()?;
    let mut rep = RepInstance::from_blocks(n, k, &s, &rhos)?;
    rep.family = Some(family);
    rep.params = params.clone();
    Ok(rep)
}

impl RepInstance {
    /// Homogeneous 2-local instance from an `s`-block and one block per layer.
    pub fn from_blocks(n: usize, k: usize, s: &Matrix, rhos: &[Matrix]) -> Result<RepInstance> {
        if rhos.len() != k {
            return Err(Error::Parameter(format!("need {k} rho blocks, got {}", rhos.len())));
        }
        let ctx = GroupCtx::mvt(n, k)?;
        let mut table = BTreeMap::new();
        for i in 1..n {
            table.insert(GenSym::S(i), Matrix::embed_block(n, s, i - 1)?);
            for (a, r) in rhos.iter().enumerate() {
                table.insert(GenSym::Rho(i, a), Matrix::embed_block(n, r, i - 1)?);
            }
        }
        Self::from_table(ctx, table)
    }

    /// Arbitrary images for every ambient generator.
    pub fn from_table(ctx: GroupCtx, table: BTreeMap<GenSym, Matrix>) -> Result<RepInstance> {
        let ctx = ctx.with_family(Family::Mvt);
        let mut inverses = BTreeMap::new();
        for g in ctx.ambient_generators() {
            let m = table
                .get(&g)
                .ok_or_else(|| Error::Parameter(format!("no image for {g}")))?;
            if m.rows() != ctx.n() || !m.is_square() {
                return Err(Error::Dimension(format!("image of {g} is not {0}x{0}", ctx.n())));
            }
            inverses.insert(g, m.inverse()?);
        }
        Ok(RepInstance {
            family: None,
            ctx,
            params: RepParams::default(),
            table,
            inverses,
        })
    }

    pub fn family(&self) -> Option<RepFamily> {
        self.family
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn params(&self) -> &RepParams {
        &self.params
    }

    pub fn image(&self, g: GenSym) -> Option<&Matrix> {
        self.table.get(&g)
    }

    pub fn table(&self) -> &BTreeMap<GenSym, Matrix> {
        &self.table
    }

    /// Generator images in `ambient_generators` order.
    pub fn generator_images(&self) -> Vec<Matrix> {
        self.ctx
            .ambient_generators()
            .iter()
            .map(|g| self.table[g].clone())
            .collect()
    }

    fn letter_image(&self, l: Letter) -> Result<Matrix> {
        match l.sym {
            GenSym::S(_) | GenSym::Rho(_, _) => {
                let src = if l.exp > 0 { &self.table } else { &self.inverses };
                src.get(&l.sym)
                    .cloned()
                    .ok_or_else(|| Error::Alphabet(l.sym.to_string()))
            }
            _ => {
                let m = self.eval(&expand(l.sym, &self.ctx)?)?;
                if l.exp > 0 {
                    Ok(m)
                } else {
                    m.inverse()
                }
            }
        }
    }

    /// Image of a word. Subgroup letters are evaluated through their
    /// ambient expansion.
    pub fn eval(&self, w: &Word) -> Result<Matrix> {
        if (w.ctx().n(), w.ctx().k()) != (self.ctx.n(), self.ctx.k()) {
            return Err(Error::Context(format!(
                "word over (n={}, k={}) evaluated in a representation of (n={}, k={})",
                w.ctx().n(),
                w.ctx().k(),
                self.ctx.n(),
                self.ctx.k()
            )));
        }
        let mut out = Matrix::identity(self.ctx.n());
        for &l in w.letters() {
            out = out.mul(&self.letter_image(l)?)?;
        }
        Ok(out)
    }

    /// `p^{-1} rep p`, an equivalent representation.
    pub fn conjugate(&self, p: &Matrix) -> Result<RepInstance> {
        let table = self
            .table
            .iter()
            .map(|(g, m)| Ok((*g, m.conjugate(p)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let mut out = RepInstance::from_table(self.ctx, table)?;
        out.family = self.family;
        out.params = self.params.clone();
        Ok(out)
    }

    /// Whether `p^{-1} self(g) p = other(g)` for every generator.
    pub fn equivalent_via(&self, other: &RepInstance, p: &Matrix) -> Result<bool> {
        for (g, m) in &self.table {
            match other.table.get(g) {
                Some(o) if m.conjugate(p)? == *o => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }

    pub fn span_dimension(&self) -> Result<usize> {
        algebra_span_dimension(&self.generator_images())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.span_dimension()? == self.n() * self.n())
    }
}

/// `diag(y^{1-n}, y^{2-n}, .., y^{-1}, 1)`.
pub fn diagonal_conjugator(y: &Scalar, n: usize) -> Result<Matrix> {
    let entries = (0..n)
        .map(|i| y.pow(i as i32 + 1 - n as i32))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::diag(&entries))
}

/// Whether a vector is acted on from the left (column) or the right (row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    Column,
    Row,
}

/// An invariant vector stated for the representation conjugated by
/// `diagonal_conjugator(y, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedInvariant {
    pub kind: VectorKind,
    pub conjugator: Matrix,
    pub vector: Vec<Scalar>,
}

/// The all-ones invariant vector for the reducible `z2`..`z5` and `z8`
/// cases. `None` when the parameters are not on a reducible branch.
pub fn named_invariant(family: RepFamily, params: &RepParams, n: usize) -> Result<Option<NamedInvariant>> {
    let Some(y) = params.common_y() else {
        return Ok(None);
    };
    let kind = match family {
        RepFamily::Z2 | RepFamily::Z3 | RepFamily::Z4 | RepFamily::Z5 => VectorKind::Column,
        RepFamily::Z8 => {
            let a = params.a.as_ref().ok_or_else(|| Error::Parameter("missing a".into()))?;
            let b = params.b.as_ref().ok_or_else(|| Error::Parameter("missing b".into()))?;
            let ratio = b.checked_div(y)?;
            if ratio == Scalar::one() - a {
                VectorKind::Column
            } else if ratio == Scalar::one() + a {
                VectorKind::Row
            } else {
                return Ok(None);
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(NamedInvariant {
        kind,
        conjugator: diagonal_conjugator(y, n)?,
        vector: vec![Scalar::one(); n],
    }))
}

/// Checks a named invariant vector against the conjugated images.
pub fn verify_named_invariant(rep: &RepInstance, inv: &NamedInvariant) -> Result<bool> {
    let images = rep.conjugate(&inv.conjugator)?.generator_images();
    match inv.kind {
        VectorKind::Column => verify_invariant_line(&inv.vector, &images),
        VectorKind::Row => verify_invariant_covector(&inv.vector, &images),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub tag: &'static str,
    pub word: String,
    pub pass: bool,
}

/// Evaluates every ambient relator.
pub fn verify_relations(rep: &RepInstance) -> Result<Vec<RelatorCheck>> {
    relators_mvt(rep.ctx.n(), rep.ctx.k())?
        .relators
        .into_iter()
        .map(|r| {
            Ok(RelatorCheck {
                tag: r.tag,
                pass: rep.eval(&r.word)?.is_identity(),
                word: r.word.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub name: String,
    pub pass: bool,
}

fn entries(m: &Matrix) -> [Scalar; 4] {
    [m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()]
}

/// Substitutes the blocks into the polynomial system that the images of
/// `s_1, rho_1^a, rho_2^a` must satisfy. The equations are transcribed
/// exactly as they appear in the source, including two rows whose sides
/// look transposed; the stray `y_i` on one row is read as `y_b`.
pub fn verify_system_blocks(s: &Matrix, rhos: &[Matrix]) -> Result<Vec<EquationCheck>> {
    if s.rows() != 2 || !s.is_square() || rhos.iter().any(|r| r.rows() != 2 || !r.is_square()) {
        return Err(Error::Dimension("system blocks must be 2x2".into()));
    }
    let mut out = Vec::new();
    let mut push = |name: String, lhs: Scalar, rhs: Scalar| out.push(EquationCheck { name, pass: lhs == rhs });
    let one = Scalar::one();
    let zero = Scalar::zero();
    let [a, b, c, d] = entries(s);

    push("s2.1".into(), &a * &a + &b * &c, one.clone());
    push("s2.2".into(), &a * &b + &b * &d, zero.clone());
    push("s2.3".into(), &a * &c + &c * &d, zero.clone());
    push("s2.4".into(), &d * &d + &b * &c, one.clone());

    for (be, rb) in rhos.iter().enumerate() {
        let [w, x, y, z] = entries(rb);
        let t = |name: &str| format!("{name}[b={be}]");
        push(t("rho2.1"), &w * &w + &x * &y, one.clone());
        push(t("rho2.2"), &w * &x + &x * &z, zero.clone());
        push(t("rho2.3"), &w * &y + &y * &z, zero.clone());
        push(t("rho2.4"), &z * &z + &x * &y, one.clone());

        push(t("braid.1"), &w * &w + &x * &y * &w, w.clone());
        push(t("braid.2"), &w * &x + &w * &x * &z, &w * &x);
        push(t("braid.3"), &w * &y + &w * &y * &z, &w * &y);
        push(t("braid.4"), &w * &z * &z + &x * &y, &z * &w * &w + &x * &y);
        push(t("braid.5"), &x * &z + &w * &x * &z, &x * &z);
        push(t("braid.6"), &y * &z + &w * &y * &z, &y * &z);
        push(t("braid.7"), &z * &z + &x * &y * &z, z.clone());

        push(t("s_mixed.1"), &a * &w + &c * &w * &x, w.clone());
        push(t("s_mixed.2"), &b * &w + &d * &w * &x, &w * &x);
        push(t("s_mixed.3"), &a * &y + &c * &w * &z, &a * &y);
        push(t("s_mixed.4"), &b * &y + &d * &w * &z, &b * &y + &a * &w * &z);
        push(t("s_mixed.5"), &b * &z + &a * &x * &z, &x * &z);
        push(t("s_mixed.6"), &d * &y + &c * &w * &z, &d * &y);
        push(t("s_mixed.7"), &d * &z + &c * &x * &z, z.clone());

        for (al, ra) in rhos.iter().enumerate().take(be) {
            let [wa, xa, ya, za] = entries(ra);
            let t = |name: &str| format!("{name}[a={al},b={be}]");
            push(t("mixed.1"), &w * &wa + &w * &y * &xa, w.clone());
            push(t("mixed.2"), &x * &wa + &w * &y * &xa, &x * &wa);
            push(t("mixed.3"), &w * &ya + &w * &y * &za, &w * &y);
            push(t("mixed.4"), &x * &ya + &w * &z * &za, &x * &ya + &w * &z * &wa);
            push(t("mixed.5"), &x * &za + &w * &z * &xa, &x * &za);
            push(t("mixed.6"), &z * &ya + &y * &z * &xa, &y * &z);
            push(t("mixed.7"), &z * &za + &y * &z * &xa, z.clone());

            push(t("swapped.1"), &w * &wa + &y * &wa * &xa, wa.clone());
            push(t("swapped.2"), &x * &wa + &z * &wa * &xa, &wa * &xa);
            push(t("swapped.3"), &w * &ya + &y * &wa * &za, &w * &ya);
            push(t("swapped.4"), &x * &ya + &z * &wa * &za, &x * &ya + &w * &wa * &za);
            push(t("swapped.5"), &x * &za + &w * &xa * &za, &z * &ya);
            push(t("swapped.6"), &z * &za + &y * &xa * &za, za.clone());
        }
    }
    Ok(out)
}

pub fn verify_system(family: RepFamily, params: &RepParams) -> Result<bool> {
    let k = params.y.len().max(1);
    params.validate(family, k)?;
    let s = s_block(family, params)?;
    let rhos = (0..k)
        .map(|a| rho_block(family, params, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(verify_system_blocks(&s, &rhos)?.iter().all(|e| e.pass))
}

/// A word claimed to lie in the kernel of a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub word: Word,
    pub maps_to_identity: bool,
    pub phi: Permutation,
    pub psi: Permutation,
}

impl Witness {
    pub fn new(rep: &RepInstance, word: Word) -> Result<Witness> {
        Ok(Witness {
            maps_to_identity: rep.eval(&word)?.is_identity(),
            phi: phi(&word)?,
            psi: psi(&word)?,
            word,
        })
    }

    /// The quotient showing the word is nontrivial; `Phi` is preferred.
    pub fn certificate(&self) -> Option<QuotientMap> {
        if !self.phi.is_identity() {
            Some(QuotientMap::Phi)
        } else if !self.psi.is_identity() {
            Some(QuotientMap::Psi)
        } else {
            None
        }
    }

    pub fn holds(&self) -> bool {
        self.maps_to_identity && self.certificate().is_some()
    }
}

/// Explicit nontrivial kernel elements for the unfaithful cases.
pub fn faithfulness_witnesses(
    family: RepFamily,
    params: &RepParams,
    n: usize,
    k: usize,
) -> Result<Vec<Witness>> {
    let rep = build_rep(family, params, n, k)?;
    let ctx = *rep.ctx();
    let word = |syms: &[GenSym], times: usize| -> Result<Word> {
        Ok(Word::from_syms(ctx, syms)?.pow(times))
    };
    let mut words = Vec::new();
    let per_layer = |words: &mut Vec<Word>, make: &dyn Fn(usize, usize) -> Vec<GenSym>, times| -> Result<()> {
        for i in 1..n - 1 {
            for a in 0..k {
                words.push(word(&make(i, a), times)?);
            }
        }
        Ok(())
    };
    let s_then_next = |i: usize, a: usize| vec![GenSym::S(i), GenSym::Rho(i + 1, a)];
    let next_then_rho = |i: usize, a: usize| vec![GenSym::S(i + 1), GenSym::Rho(i, a)];
    match family {
        RepFamily::Z1 | RepFamily::Z2 => {
            for i in 1..n {
                words.push(word(&[GenSym::S(i)], 1)?);
            }
        }
        RepFamily::Z3 | RepFamily::Z4 | RepFamily::Z5 => {
            for i in 1..n - 1 {
                words.push(word(&[GenSym::S(i), GenSym::S(i + 1)], 2)?);
            }
        }
        RepFamily::Z6 => per_layer(&mut words, &s_then_next, 4)?,
        RepFamily::Z7 => per_layer(&mut words, &next_then_rho, 4)?,
        RepFamily::Z8 => {
            let a = params.a.as_ref().expect("validated");
            if *a == Scalar::int(-1) {
                per_layer(&mut words, &s_then_next, 4)?;
            } else if a.is_zero() {
                per_layer(&mut words, &s_then_next, 3)?;
            } else if a.is_one() {
                per_layer(&mut words, &next_then_rho, 4)?;
            } else {
                return Err(Error::NotApplicable(format!(
                    "no kernel witness is known for z8 with a = {a}"
                )));
            }
        }
    }
    words.into_iter().map(|w| Witness::new(&rep, w)).collect()
}

/// Closed-form reducibility verdict; `true` means reducible.
pub fn thm43_predicate(family: RepFamily, params: &RepParams) -> Result<bool> {
    params.validate(family, params.y.len().max(1))?;
    Ok(match family {
        RepFamily::Z1 => true,
        RepFamily::Z2 | RepFamily::Z3 | RepFamily::Z4 | RepFamily::Z5 => params.common_y().is_some(),
        RepFamily::Z6 | RepFamily::Z7 => false,
        RepFamily::Z8 => match params.common_y() {
            None => false,
            Some(y) => {
                let a = params.a.as_ref().expect("validated");
                let ratio = params.b.as_ref().expect("validated").checked_div(y)?;
                ratio == Scalar::one() + a || ratio == Scalar::one() - a
            }
        },
    })
}

/// Whether every image is the identity outside its own 2x2 block, with
/// one shared block per generator kind.
pub fn is_2local(rep: &RepInstance) -> bool {
    let n = rep.n();
    let mut blocks: BTreeMap<Option<usize>, Matrix> = BTreeMap::new();
    for (g, m) in rep.table() {
        let (i, kind) = match *g {
            GenSym::S(i) => (i, None),
            GenSym::Rho(i, a) => (i, Some(a)),
            _ => return false,
        };
        let lo = i - 1;
        for r in 0..n {
            for c in 0..n {
                let inside = (lo..=lo + 1).contains(&r) && (lo..=lo + 1).contains(&c);
                if !inside && *m.get(r, c) != if r == c { Scalar::one() } else { Scalar::zero() } {
                    return false;
                }
            }
        }
        let blk = Matrix::from_rows(vec![
            vec![m.get(lo, lo).clone(), m.get(lo, lo + 1).clone()],
            vec![m.get(lo + 1, lo).clone(), m.get(lo + 1, lo + 1).clone()],
        ])
        .expect("2x2");
        match blocks.get(&kind) {
            Some(prev) if *prev != blk => return false,
            Some(_) => {}
            None => {
                blocks.insert(kind, blk);
            }
        }
    }
    true
}

/// Subgroup generator images obtained by evaluating expansions.
pub fn restrict_rep(rep: &RepInstance, family: Family) -> Result<BTreeMap<GenSym, Matrix>> {
    if family == Family::Mvt {
        return Err(Error::Parameter("restriction needs a subgroup".into()));
    }
    rep.ctx()
        .subgroup_generators(family)
        .into_iter()
        .map(|g| Ok((g, rep.eval(&expand(g, rep.ctx())?)?)))
        .collect()
}

/// The three parameter cases for representations of `M_2 VPT_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Mvpt3Case {
    /// `s`-block `diag(delta, eps)` with signs `eps, delta`.
    Diagonal { eps: i64, delta: i64 },
    /// `s`-block `[[t, z], [0, -t]]`, `t = ±1`.
    Triangular { t: i64, z: Scalar },
    /// The `z8` block.
    Generic { a: Scalar, b: Scalar },
}

fn unit_sign(v: i64, name: &str) -> Result<Scalar> {
    if v == 1 || v == -1 {
        Ok(Scalar::int(v))
    } else {
        Err(Error::Parameter(format!("{name} must be +1 or -1")))
    }
}

/// The `M_2 VT_3` representation that a case is derived from.
pub fn mvpt3_source(case: &Mvpt3Case, y0: &Scalar, y1: &Scalar) -> Result<RepInstance> {
    let y = vec![y0.clone(), y1.clone()];
    let (family, params) = match case {
        Mvpt3Case::Diagonal { eps, delta } => {
            let fam = match (unit_sign(*delta, "delta")?.is_one(), unit_sign(*eps, "eps")?.is_one()) {
                (true, true) => RepFamily::Z2,
                (true, false) => RepFamily::Z3,
                (false, true) => RepFamily::Z4,
                (false, false) => RepFamily::Z5,
            };
            (fam, RepParams::new(y))
        }
        Mvpt3Case::Triangular { t, z } => {
            let fam = if unit_sign(*t, "t")?.is_one() { RepFamily::Z6 } else { RepFamily::Z7 };
            (fam, RepParams::new(y).with_z(z.clone()))
        }
        Mvpt3Case::Generic { a, b } => (RepFamily::Z8, RepParams::new(y).with_ab(a.clone(), b.clone())),
    };
    build_rep(family, &params, 3, 2)
}

/// The six generator images listed for each case, entered directly.
pub fn mvpt3_rep(case: &Mvpt3Case, y0: &Scalar, y1: &Scalar) -> Result<BTreeMap<GenSym, Matrix>> {
    if y0.is_zero() || y1.is_zero() {
        return Err(Error::Parameter("y values must be nonzero".into()));
    }
    let o = Scalar::one;
    let z0 = Scalar::zero;
    let y0sq = y0 * y0;
    let m = |rows: [[Scalar; 3]; 3]| Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3");
    let r = y1.checked_div(y0)?;
    let ri = y0.checked_div(y1)?;

    let (l12, l23, l13) = match case {
        Mvpt3Case::Diagonal { eps, delta } => {
            let e = unit_sign(*eps, "eps")?;
            let d = unit_sign(*delta, "delta")?;
            let ey = e.checked_div(y0)?;
            let dy = &d * y0;
            (
                m([[z0(), ey.clone(), z0()], [dy.clone(), z0(), z0()], [z0(), z0(), o()]]),
                m([[o(), z0(), z0()], [z0(), z0(), ey], [z0(), dy, z0()]]),
                m([[z0(), z0(), e.checked_div(&y0sq)?], [z0(), o(), z0()], [&d * &y0sq, z0(), z0()]]),
            )
        }
        Mvpt3Case::Triangular { t, z } => {
            let t = unit_sign(*t, "t")?;
            let ty = -(t.checked_div(y0)?);
            let yz = y0 * z;
            (
                m([[z0(), ty.clone(), z0()], [&t * y0, yz.clone(), z0()], [z0(), z0(), o()]]),
                m([[o(), z0(), z0()], [z0(), z0(), ty], [z0(), &t * y0, yz.clone()]]),
                m([[z0(), z0(), -(t.checked_div(&y0sq)?)], [z0(), o(), z0()], [&t * &y0sq, z0(), yz]]),
            )
        }
        Mvpt3Case::Generic { a, b } => {
            if b.is_zero() {
                return Err(Error::Parameter("b must be nonzero".into()));
            }
            let by = b.checked_div(y0)?;
            let ay = a.checked_div(y0)?;
            let corner = ((Scalar::one() - a * a) * y0).checked_div(b)?;
            (
                m([[by.clone(), ay.clone(), z0()], [-(a * y0), corner.clone(), z0()], [z0(), z0(), o()]]),
                m([[o(), z0(), z0()], [z0(), by.clone(), ay], [z0(), -(a * y0), corner.clone()]]),
                m([[by, z0(), a.checked_div(&y0sq)?], [z0(), o(), z0()], [-(a * &y0sq), z0(), corner]]),
            )
        }
    };
    let mut out = BTreeMap::new();
    out.insert(GenSym::LambdaP(1, 2, 0), l12);
    out.insert(GenSym::LambdaP(2, 3, 0), l23);
    out.insert(GenSym::LambdaP(1, 3, 0), l13);
    out.insert(GenSym::LambdaP(1, 2, 1), Matrix::diag(&[r.clone(), ri.clone(), o()]));
    out.insert(GenSym::LambdaP(2, 3, 1), Matrix::diag(&[o(), r.clone(), ri.clone()]));
    out.insert(GenSym::LambdaP(1, 3, 1), Matrix::diag(&[r, o(), ri]));
    Ok(out)
}

#[derive(Debug, Clone, Default)]
pub struct KernelSearch {
    /// Words mapping to the identity with a nontrivial quotient image.
    pub certified: Vec<(Word, QuotientMap)>,
    /// Words mapping to the identity whose quotient images are trivial too.
    pub unresolved: Vec<Word>,
    pub explored: usize,
    /// Whether the beam cap dropped any candidates.
    pub truncated: bool,
}

/// Breadth-first search over words without adjacent repeated letters.
/// Each level keeps at most `beam` words; kernel hits are not extended.
pub fn kernel_search(rep: &RepInstance, max_len: usize, beam: usize) -> Result<KernelSearch> {
    let ctx = *rep.ctx();
    let gens = ctx.ambient_generators();
    let mut out = KernelSearch::default();
    let mut frontier: Vec<(Vec<GenSym>, Matrix)> = vec![(Vec::new(), Matrix::identity(rep.n()))];
    for _ in 0..max_len {
        let mut next = Vec::new();
        'outer: for (syms, m) in &frontier {
            for &g in &gens {
                if syms.last() == Some(&g) {
                    continue;
                }
                if next.len() >= beam {
                    out.truncated = true;
                    break 'outer;
                }
                let mut w = syms.clone();
                w.push(g);
                next.push((w, m.mul(&rep.table()[&g])?));
            }
        }
        out.explored += next.len();
        let mut keep = Vec::new();
        for (syms, m) in next {
            if m.is_identity() {
                let w = Word::from_syms(ctx, &syms)?;
                let cert = Witness {
                    maps_to_identity: true,
                    phi: phi(&w)?,
                    psi: psi(&w)?,
                    word: w.clone(),
                }
                .certificate();
                match cert {
                    Some(map) => out.certified.push((w, map)),
                    None => out.unresolved.push(w),
                }
            } else {
                keep.push((syms, m));
            }
        }
        frontier = keep;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// A fixed panel of representations plus both quotient maps, used to
/// compare group elements. Any disagreement proves two words differ;
/// agreement is evidence, not proof.
#[derive(Debug, Clone)]
pub struct Battery {
    ctx: GroupCtx,
    reps: Vec<RepInstance>,
}

impl Battery {
    pub fn standard(n: usize, k: usize) -> Result<Battery> {
        let ctx = GroupCtx::mvt(n, k)?;
        if n < 3 {
            return Ok(Battery { ctx, reps: Vec::new() });
        }
        let ys = |offset: i64| -> Vec<Scalar> {
            (0..k as i64).map(|a| Scalar::frac(2 * a + offset, a + 2)).collect()
        };
        let panel = [
            (RepFamily::Z2, RepParams::new(ys(3))),
            (RepFamily::Z3, RepParams::new(ys(5))),
            (RepFamily::Z6, RepParams::new(ys(7)).with_z(Scalar::frac(5, 3))),
            (RepFamily::Z7, RepParams::new(ys(4)).with_z(Scalar::int(-2))),
            (
                RepFamily::Z8,
                RepParams::new(ys(9)).with_ab(Scalar::frac(2, 3), Scalar::frac(7, 5)),
            ),
        ];
        let reps = panel
            .iter()
            .map(|(f, p)| build_rep(*f, p, n, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Battery { ctx, reps })
    }

    pub fn reps(&self) -> &[RepInstance] {
        &self.reps
    }

    fn quotients(&self, w: &Word) -> Result<Option<(Permutation, Permutation)>> {
        if w.letters().iter().all(|l| matches!(l.sym, GenSym::S(_) | GenSym::Rho(_, _))) {
            Ok(Some((phi(w)?, psi(w)?)))
        } else {
            Ok(None)
        }
    }

    /// Whether `u` and `v` agree on every panel member and both quotients.
    /// Subgroup words are compared through their expansions.
    pub fn agree(&self, u: &Word, v: &Word) -> Result<bool> {
        for w in [u, v] {
            if (w.ctx().n(), w.ctx().k()) != (self.ctx.n(), self.ctx.k()) {
                return Err(Error::Context("word does not match the battery".into()));
            }
        }
        let (eu, ev) = (expand_word(u)?, expand_word(v)?);
        if self.quotients(&eu)? != self.quotients(&ev)? {
            return Ok(false);
        }
        for rep in &self.reps {
            if rep.eval(&eu)? != rep.eval(&ev)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.agree(w, &Word::empty(*w.ctx()))
    }
}
