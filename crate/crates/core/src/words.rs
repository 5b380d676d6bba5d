//! Generator alphabets, words and the textual word format.
//!
//! Tokens are whitespace separated:
//!
//! | token        | generator              |
//! |--------------|------------------------|
//! | `s<i>`       | `s_i`                  |
//! | `p<i>.<a>`   | `rho_i^a`              |
//! | `L<i>.<j>.<b>` | `lambda_{i,j}^b`     |
//! | `K<i>.<j>.<b>` | `kappa_{i,j}^b`      |
//!
//! A trailing `!` marks exponent −1. Strand indices are 1-based, layer
//! indices 0-based.
//!
//! Subgroup symbols with layer `b >= 1` exist only for `i < j`. A reversed
//! token such as `L3.2.1` is read as the conjugate of `L2.3.1` by a word in
//! the `rho^0` letters acting as the transposition `(2 3)`, and that conjugate
//! equals the inverse of `L2.3.1`; the parser therefore stores it as
//! `L2.3.1!`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which group a word lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// The ambient group `M_k VT_n` (letters `s_i`, `rho_i^a`).
    Mvt,
    /// The pure subgroup `M_k VPT_n` (letters `lambda_{i,j}^b`).
    Mvpt,
    /// The semi-pure subgroup `M_k VHT_n` (letters `kappa_{i,j}^b`).
    Mvht,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Mvt => "mvt",
            Family::Mvpt => "mvpt",
            Family::Mvht => "mvht",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupCtx {
    n: usize,
    k: usize,
    family: Family,
}

impl GroupCtx {
    pub fn new(n: usize, k: usize, family: Family) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("n must be at least 2, got {n}")));
        }
        if k < 1 {
            return Err(Error::Domain(format!("k must be at least 1, got {k}")));
        }
        Ok(GroupCtx { n, k, family })
    }

    pub fn mvt(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Family::Mvt)
    }

    pub fn mvpt(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Family::Mvpt)
    }

    pub fn mvht(n: usize, k: usize) -> Result<Self> {
        Self::new(n, k, Family::Mvht)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Same `(n, k)` in another group of the family.
    pub fn with_family(&self, family: Family) -> Self {
        GroupCtx { family, ..*self }
    }

    /// Every ambient generator, ordered `s_1, rho_1^0, .., rho_1^{k-1}, s_2, ..`.
    pub fn ambient_generators(&self) -> Vec<GenSym> {
        let mut out = Vec::with_capacity((self.n - 1) * (self.k + 1));
        for i in 1..self.n {
            out.push(GenSym::S(i));
            for a in 0..self.k {
                out.push(GenSym::Rho(i, a));
            }
        }
        out
    }

    /// Generators of the pure or semi-pure subgroup: all `(i, j)` with
    /// `i != j` on layer 0, and `i < j` on layers `1..k`.
    pub fn subgroup_generators(&self, family: Family) -> Vec<GenSym> {
        let make = match family {
            Family::Mvpt => GenSym::LambdaP,
            Family::Mvht => GenSym::KappaS,
            Family::Mvt => return self.ambient_generators(),
        };
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    out.push(make(i, j, 0));
                }
            }
        }
        for b in 1..self.k {
            for i in 1..=self.n {
                for j in i + 1..=self.n {
                    out.push(make(i, j, b));
                }
            }
        }
        out
    }
}

/// A generator symbol of the ambient group or of one of the two subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GenSym {
    S(usize),
    Rho(usize, usize),
    LambdaP(usize, usize, usize),
    KappaS(usize, usize, usize),
}

impl GenSym {
    pub fn is_involutive(&self) -> bool {
        matches!(self, GenSym::S(_) | GenSym::Rho(..))
    }

    /// The group whose alphabet contains this symbol.
    pub fn family(&self) -> Family {
        match self {
            GenSym::S(_) | GenSym::Rho(..) => Family::Mvt,
            GenSym::LambdaP(..) => Family::Mvpt,
            GenSym::KappaS(..) => Family::Mvht,
        }
    }

    /// Strand position of an ambient symbol.
    pub fn position(&self) -> Option<usize> {
        match *self {
            GenSym::S(i) | GenSym::Rho(i, _) => Some(i),
            _ => None,
        }
    }

    /// `(i, j, layer)` of a subgroup symbol.
    pub fn indices(&self) -> Option<(usize, usize, usize)> {
        match *self {
            GenSym::LambdaP(i, j, b) | GenSym::KappaS(i, j, b) => Some((i, j, b)),
            _ => None,
        }
    }

    pub fn validate(&self, n: usize, k: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::IndexOutOfRange(format!("{self}: {msg}")));
        match *self {
            GenSym::S(i) | GenSym::Rho(i, _) if i == 0 || i >= n => {
                bad(format!("position must lie in 1..={}", n - 1))
            }
            GenSym::Rho(_, a) if a >= k => bad(format!("layer must lie in 0..={}", k - 1)),
            GenSym::LambdaP(i, j, b) | GenSym::KappaS(i, j, b) => {
                if i == 0 || j == 0 || i > n || j > n {
                    bad(format!("strands must lie in 1..={n}"))
                } else if i == j {
                    bad("strands must differ".into())
                } else if b >= k {
                    bad(format!("layer must lie in 0..={}", k - 1))
                } else if b >= 1 && i > j {
                    bad("layers >= 1 require i < j".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GenSym::S(i) => write!(f, "s{i}"),
            GenSym::Rho(i, a) => write!(f, "p{i}.{a}"),
            GenSym::LambdaP(i, j, b) => write!(f, "L{i}.{j}.{b}"),
            GenSym::KappaS(i, j, b) => write!(f, "K{i}.{j}.{b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub sym: GenSym,
    /// +1 or −1.
    pub exp: i8,
}

impl Letter {
    pub fn new(sym: GenSym) -> Self {
        Letter { sym, exp: 1 }
    }

    pub fn inverse_of(sym: GenSym) -> Self {
        Letter { sym, exp: -1 }
    }

    pub fn inv(self) -> Self {
        Letter {
            sym: self.sym,
            exp: -self.exp,
        }
    }

    /// Subgroup letter for `(i, j, layer)` in either orientation; reversed
    /// symbols on layers >= 1 become the inverse of the canonical one.
    pub fn subgroup(family: Family, i: usize, j: usize, layer: usize) -> Self {
        let make = match family {
            Family::Mvht => GenSym::KappaS,
            _ => GenSym::LambdaP,
        };
        if layer >= 1 && i > j {
            Letter::inverse_of(make(j, i, layer))
        } else {
            Letter::new(make(i, j, layer))
        }
    }

    fn normalized(self) -> Self {
        if self.sym.is_involutive() {
            Letter::new(self.sym)
        } else {
            self
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.sym == other.sym && (self.sym.is_involutive() || self.exp == -other.exp)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sym)?;
        if self.exp < 0 {
            f.write_str("!")?;
        }
        Ok(())
    }
}

/// A finite word over one alphabet, tagged with its group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    ctx: GroupCtx,
}

impl Word {
    pub fn empty(ctx: GroupCtx) -> Self {
        Word {
            letters: Vec::new(),
            ctx,
        }
    }

    pub fn new(ctx: GroupCtx, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            check_letter(l, &ctx)?;
        }
        Ok(Word { letters, ctx })
    }

    pub fn from_syms(ctx: GroupCtx, syms: &[GenSym]) -> Result<Self> {
        Self::new(ctx, syms.iter().copied().map(Letter::new).collect())
    }

    /// Caller guarantees every letter is valid for `ctx`.
    pub(crate) fn from_letters_unchecked(ctx: GroupCtx, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| check_letter(l, &ctx).is_ok()));
        Word { letters, ctx }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        check_letter(&letter, &self.ctx)?;
        self.letters.push(letter);
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.ctx != other.ctx {
            return Err(Error::Context(format!(
                "cannot concatenate a word of {:?} with one of {:?}",
                self.ctx, other.ctx
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters,
            ctx: self.ctx,
        })
    }

    /// Letters reversed with exponents negated.
    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
            ctx: self.ctx,
        }
    }

    /// Sets the exponent of every involutive letter to +1 without cancelling.
    pub fn normalize_involutions(&self) -> Word {
        Word {
            letters: self.letters.iter().map(|l| l.normalized()).collect(),
            ctx: self.ctx,
        }
    }

    /// Cancels adjacent inverse pairs (and adjacent equal involutions) until
    /// nothing changes.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.iter().map(|l| l.normalized()) {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word {
            letters: stack,
            ctx: self.ctx,
        }
    }

    /// Free reduction followed by stripping cancelling first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let mut letters = self.free_reduce().letters;
        while letters.len() >= 2 && letters[0].cancels(letters[letters.len() - 1]) {
            letters.pop();
            letters.remove(0);
        }
        Word {
            letters,
            ctx: self.ctx,
        }
    }

    /// Whether the two relators agree up to cyclic reduction, cyclic
    /// permutation and inversion.
    pub fn cyclically_equivalent(&self, other: &Word) -> bool {
        if self.ctx != other.ctx {
            return false;
        }
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let b_inv = b.invert().normalize_involutions();
        is_rotation(&a.letters, &b.letters) || is_rotation(&a.letters, &b_inv.letters)
    }

    pub fn pow(&self, e: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * e);
        for _ in 0..e {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            letters,
            ctx: self.ctx,
        }
    }

    /// Same letters viewed in another context with identical `(n, k)`.
    pub fn retag(&self, family: Family) -> Result<Word> {
        Word::new(self.ctx.with_family(family), self.letters.clone())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_word(self))
    }
}

fn is_rotation(a: &[Letter], b: &[Letter]) -> bool {
    (0..a.len()).any(|s| a[s..].iter().chain(&a[..s]).eq(b.iter()))
}

fn check_letter(l: &Letter, ctx: &GroupCtx) -> Result<()> {
    l.sym.validate(ctx.n, ctx.k)?;
    if l.sym.family() != ctx.family {
        return Err(Error::Alphabet(format!("{} in a word of {}", l.sym, ctx.family)));
    }
    if l.exp != 1 && l.exp != -1 {
        return Err(Error::Domain(format!("exponent {} is not ±1", l.exp)));
    }
    Ok(())
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

pub fn concat(u: &Word, v: &Word) -> Result<Word> {
    u.concat(v)
}

pub fn invert(w: &Word) -> Word {
    w.invert()
}

/// Renders a word in the token grammar; the empty word renders as `""`.
pub fn render_word(w: &Word) -> String {
    let mut out = String::new();
    for (idx, l) in w.letters.iter().enumerate() {
        if idx > 0 {
            out.push(' ');
        }
        out.push_str(&l.to_string());
    }
    out
}

/// Parses tokens without restricting the alphabet. Indices are checked
/// against `(n, k)`.
pub fn parse_letters(text: &str, n: usize, k: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        // split_whitespace yields subslices of `text`, so the offset is exact.
        let pos = token.as_ptr() as usize - text.as_ptr() as usize;
        out.push(parse_token(token, pos, n, k)?);
    }
    Ok(out)
}

/// Parses a word of the group described by `ctx`. Parsing never reduces.
pub fn parse_word(text: &str, ctx: &GroupCtx) -> Result<Word> {
    let letters = parse_letters(text, ctx.n, ctx.k)?;
    Word::new(*ctx, letters)
}

fn parse_token(token: &str, pos: usize, n: usize, k: usize) -> Result<Letter> {
    let err = |msg: &str| Error::Parse {
        pos,
        msg: format!("{msg} in token {token:?}"),
    };
    let (body, exp) = match token.strip_suffix('!') {
        Some(b) => (b, -1i8),
        None => (token, 1i8),
    };
    let mut chars = body.chars();
    let head = chars.next().ok_or_else(|| err("empty token"))?;
    let rest = chars.as_str();
    let nums: Vec<usize> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split('.')
            .map(|p| {
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    Err(err("expected a decimal index"))
                } else {
                    p.parse::<usize>().map_err(|_| err("index too large"))
                }
            })
            .collect::<Result<_>>()?
    };
    let arity = match head {
        's' => 1,
        'p' => 2,
        'L' | 'K' => 3,
        _ => return Err(err("unknown generator prefix")),
    };
    if nums.len() != arity {
        return Err(err(&format!("expected {arity} index field(s)")));
    }
    let strand_ok = |i: usize, max: usize| -> Result<()> {
        if i == 0 {
            Err(err("strand index must be at least 1"))
        } else if i > max {
            Err(err(&format!("strand index must be at most {max}")))
        } else {
            Ok(())
        }
    };
    let layer_ok = |a: usize| -> Result<()> {
        if a >= k {
            Err(err(&format!("layer index must be at most {}", k - 1)))
        } else {
            Ok(())
        }
    };
    let letter = match head {
        's' => {
            strand_ok(nums[0], n - 1)?;
            Letter::new(GenSym::S(nums[0]))
        }
        'p' => {
            strand_ok(nums[0], n - 1)?;
            layer_ok(nums[1])?;
            Letter::new(GenSym::Rho(nums[0], nums[1]))
        }
        _ => {
            let (i, j, b) = (nums[0], nums[1], nums[2]);
            strand_ok(i, n)?;
            strand_ok(j, n)?;
            layer_ok(b)?;
            if i == j {
                return Err(err("subgroup symbol needs two distinct strands"));
            }
            let family = if head == 'L' {
                Family::Mvpt
            } else {
                Family::Mvht
            };
            Letter::subgroup(family, i, j, b)
        }
    };
    Ok(if exp < 0 { letter.inv() } else { letter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mvt(n: usize, k: usize) -> GroupCtx {
        GroupCtx::mvt(n, k).unwrap()
    }

    fn w(text: &str, ctx: &GroupCtx) -> Word {
        parse_word(text, ctx).unwrap()
    }

    #[test]
    fn involution_cancels() {
        let c = mvt(3, 1);
        assert!(w("s1 s1", &c).free_reduce().is_empty());
        assert!(w("s1 s2 s2 s1", &c).free_reduce().is_empty());
    }

    #[test]
    fn involutive_inverse_normalizes() {
        let c = mvt(3, 1);
        assert_eq!(render_word(&w("p1.0!", &c).free_reduce()), "p1.0");
    }

    #[test]
    fn subgroup_letters_cancel_only_against_inverse() {
        let c = GroupCtx::mvpt(3, 2).unwrap();
        assert!(w("L1.2.0 L1.2.0!", &c).free_reduce().is_empty());
        assert_eq!(w("L1.2.0 L1.2.0", &c).free_reduce().len(), 2);
    }

    #[test]
    fn invert_and_concat() {
        let c = mvt(3, 2);
        let inv = w("s1 p2.1", &c).invert();
        assert_eq!(render_word(&inv), "p2.1! s1!");
        assert_eq!(render_word(&inv.free_reduce()), "p2.1 s1");
        let s1 = w("s1", &c);
        assert_eq!(s1.concat(&Word::empty(c)).unwrap(), s1);
        let p = GroupCtx::mvpt(3, 1).unwrap();
        assert_eq!(render_word(&w("L1.2.0", &p).invert()), "L1.2.0!");
    }

    #[test]
    fn concat_rejects_mismatched_ctx() {
        let a = w("s1", &mvt(3, 1));
        let b = w("s1", &mvt(4, 1));
        assert!(matches!(a.concat(&b), Err(Error::Context(_))));
    }

    #[test]
    fn parse_mixed_tokens() {
        let ls = parse_letters("s1 p2.0 L1.3.1!", 3, 2).unwrap();
        assert_eq!(ls.len(), 3);
        assert_eq!(ls[2], Letter::inverse_of(GenSym::LambdaP(1, 3, 1)));
        // a single alphabet is enforced by parse_word
        assert!(matches!(
            parse_word("s1 p2.0 L1.3.1!", &mvt(3, 2)),
            Err(Error::Alphabet(_))
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        let c = mvt(3, 1);
        assert!(matches!(parse_word("s0", &c), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_word("s1  s3", &c), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_word("p1", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("p1.1", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("x1", &c), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("s1.", &c), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_letters("L2.2.0", 3, 1),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parsing_does_not_reduce() {
        let c = mvt(2, 1);
        assert_eq!(render_word(&w("p1.0 p1.0", &c)), "p1.0 p1.0");
        assert!(w("", &c).is_empty());
    }

    #[test]
    fn reversed_high_layer_symbol_is_inverse_of_canonical() {
        let c = GroupCtx::mvpt(3, 2).unwrap();
        let rev = w("L3.2.1", &c);
        assert_eq!(rev.letters(), &[Letter::inverse_of(GenSym::LambdaP(2, 3, 1))]);
        assert_eq!(render_word(&w("L3.2.1!", &c)), "L2.3.1");
        // layer 0 keeps its orientation
        assert_eq!(render_word(&w("L3.2.0", &c)), "L3.2.0");
        assert!(GenSym::LambdaP(3, 2, 1).validate(3, 2).is_err());
    }

    #[test]
    fn cyclic_equivalence() {
        let c = GroupCtx::mvpt(3, 2).unwrap();
        let a = w("L1.2.1! L1.3.1! L1.2.1 L1.3.1", &c);
        let b = w("L1.2.1 L1.3.1 L1.2.1! L1.3.1!", &c);
        assert!(a.cyclically_equivalent(&b));
        assert!(a.cyclically_equivalent(&a.invert()));
        let d = w("L1.2.1 L1.3.1 L1.3.1! L1.2.1!", &c);
        assert!(!a.cyclically_equivalent(&d));
    }

    #[test]
    fn subgroup_generator_counts() {
        let c = mvt(3, 2);
        assert_eq!(c.subgroup_generators(Family::Mvpt).len(), 9);
        assert_eq!(c.ambient_generators().len(), 6);
    }

    fn letter_strategy(n: usize, k: usize) -> impl Strategy<Value = Letter> {
        prop_oneof![
            (1..n, any::<bool>()).prop_map(|(i, inv)| {
                let l = Letter::new(GenSym::S(i));
                if inv { l.inv() } else { l }
            }),
            (1..n, 0..k, any::<bool>()).prop_map(|(i, a, inv)| {
                let l = Letter::new(GenSym::Rho(i, a));
                if inv { l.inv() } else { l }
            }),
        ]
    }

    fn sub_letter_strategy(n: usize, k: usize) -> impl Strategy<Value = Letter> {
        (1..=n, 1..=n, 0..k, any::<bool>())
            .prop_filter("distinct strands", |(i, j, _, _)| i != j)
            .prop_map(|(i, j, b, inv)| {
                let l = Letter::subgroup(Family::Mvpt, i, j, b);
                if inv { l.inv() } else { l }
            })
    }

    proptest! {
        #[test]
        fn free_reduce_is_idempotent(ls in prop::collection::vec(letter_strategy(4, 3), 0..30)) {
            let word = Word::new(mvt(4, 3), ls).unwrap();
            let once = word.free_reduce();
            prop_assert_eq!(once.free_reduce(), once);
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(ls in prop::collection::vec(letter_strategy(4, 2), 0..30)) {
            let word = Word::new(mvt(4, 2), ls).unwrap();
            prop_assert!(word.concat(&word.invert()).unwrap().free_reduce().is_empty());
        }

        #[test]
        fn subgroup_word_times_inverse_reduces(ls in prop::collection::vec(sub_letter_strategy(4, 3), 0..20)) {
            let word = Word::new(GroupCtx::mvpt(4, 3).unwrap(), ls).unwrap();
            prop_assert!(word.concat(&word.invert()).unwrap().free_reduce().is_empty());
            prop_assert_eq!(word.invert().invert(), word);
        }

        #[test]
        fn parse_render_round_trip(ls in prop::collection::vec(letter_strategy(5, 3), 0..25)) {
            let word = Word::new(mvt(5, 3), ls).unwrap();
            prop_assert_eq!(parse_word(&render_word(&word), &mvt(5, 3)).unwrap(), word);
        }

        #[test]
        fn parse_render_round_trip_subgroup(ls in prop::collection::vec(sub_letter_strategy(4, 3), 0..25)) {
            let ctx = GroupCtx::mvpt(4, 3).unwrap();
            let word = Word::new(ctx, ls).unwrap();
            prop_assert_eq!(parse_word(&render_word(&word), &ctx).unwrap(), word);
        }
    }
}
