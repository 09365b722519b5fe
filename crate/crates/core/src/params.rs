//! Characters of `ℂ^×`, Langlands parameters, and unitary building blocks.
//!
//! Every exponent is stored in the `s` slot of `κ_{m,s}(z) = (z/|z|)^m |z|^{2s}`.
//! A character `(det/|det|)^k |det|^u` of `GL_n(ℂ)` has parameter
//! `{κ_{k,(u+n+1-2i)/2} : i = 1..n}`, so `|det|^u` moves the slot by `u/2`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{GaussianRational, Rational};
use crate::Error;

/// The character `κ_{m,s}: z ↦ (z/|z|)^m |z|^{2s}` of `ℂ^×`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacterCx {
    pub m: i64,
    pub s: GaussianRational,
}

impl CharacterCx {
    pub fn new(m: i64, s: GaussianRational) -> Self {
        CharacterCx { m, s }
    }

    /// `κ_{m,s}` with a real rational slot.
    pub fn real(m: i64, s: Rational) -> Self {
        CharacterCx { m, s: GaussianRational::real(s) }
    }

    pub fn trivial() -> Self {
        Self::real(0, Rational::zero())
    }

    /// `z ↦ λ(z̄)^{-1}`. Conjugating the argument flips `m`, inverting flips
    /// both `m` and `s`, so the result is `κ_{m,-s}`.
    pub fn conj_inverse(&self) -> Self {
        CharacterCx { m: self.m, s: -&self.s }
    }

    /// `κ_{m,s}(-1) = (-1)^m`.
    pub fn value_at_minus_one(&self) -> i32 {
        if self.m.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// Pointwise product `κ_{m₁+m₂, s₁+s₂}`.
    pub fn product(&self, other: &Self) -> Self {
        CharacterCx { m: self.m + other.m, s: &self.s + &other.s }
    }

    pub fn is_unitary(&self) -> bool {
        self.s.re.is_zero()
    }

    /// The normal-form order: `m` ascending, then `Re s` and `Im s` descending.
    pub fn normal_cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| other.s.re.cmp(&self.s.re))
            .then_with(|| other.s.im.cmp(&self.s.im))
    }
}

impl fmt::Display for CharacterCx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "κ[{},{}]", self.m, self.s)
    }
}

impl fmt::Debug for CharacterCx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Langlands parameter: a multiset of characters kept in normal form.
///
/// Equality is multiset equality because the storage order is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<CharacterCx>", into = "Vec<CharacterCx>")]
pub struct LanglandsParameter {
    chars: Vec<CharacterCx>,
}

impl LanglandsParameter {
    pub fn new(mut chars: Vec<CharacterCx>) -> Self {
        chars.sort_by(CharacterCx::normal_cmp);
        LanglandsParameter { chars }
    }

    pub fn chars(&self) -> &[CharacterCx] {
        &self.chars
    }

    pub fn n(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn multiplicity(&self, c: &CharacterCx) -> usize {
        self.chars.iter().filter(|x| *x == c).count()
    }

    /// Distinct characters with their multiplicities, in normal order.
    pub fn counted(&self) -> Vec<(&CharacterCx, usize)> {
        let mut out: Vec<(&CharacterCx, usize)> = Vec::new();
        for c in &self.chars {
            match out.last_mut() {
                Some((last, k)) if *last == c => *k += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }

    /// The m-exponents in normal order (ascending).
    pub fn m_vector(&self) -> Vec<i64> {
        self.chars.iter().map(|c| c.m).collect()
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.chars.iter().chain(&other.chars).cloned().collect())
    }

    /// Replace every `κ_{m,s}` by `κ_{m,-s}`.
    pub fn conj_inverse(&self) -> Self {
        Self::new(self.chars.iter().map(CharacterCx::conj_inverse).collect())
    }
}

impl From<Vec<CharacterCx>> for LanglandsParameter {
    fn from(chars: Vec<CharacterCx>) -> Self {
        Self::new(chars)
    }
}

impl From<LanglandsParameter> for Vec<CharacterCx> {
    fn from(p: LanglandsParameter) -> Self {
        p.chars
    }
}

impl fmt::Debug for LanglandsParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.chars).finish()
    }
}

/// Two parameters describe the same representation iff they agree as multisets.
pub fn param_equivalent(a: &LanglandsParameter, b: &LanglandsParameter) -> bool {
    a == b
}

/// A unitary building block.
///
/// `Char` is `(det/|det|)^k |det|^u` on `GL_n(ℂ)`; `Comp` is the complementary
/// series `(det/|det|)^k |det|^u ⊗ (|det|^t × |det|^{-t})` on `GL_{2m}(ℂ)`.
/// In both, `u` is purely imaginary.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", try_from = "RawBlock")]
pub enum UnitaryBlock {
    #[serde(rename = "char")]
    Char { n: u32, k: i64, u: GaussianRational },
    #[serde(rename = "comp")]
    Comp { m: u32, k: i64, u: GaussianRational, t: Rational },
}

#[derive(Deserialize)]
#[serde(tag = "kind")]
enum RawBlock {
    #[serde(rename = "char")]
    Char { n: u32, k: i64, u: GaussianRational },
    #[serde(rename = "comp")]
    Comp { m: u32, k: i64, u: GaussianRational, t: Rational },
}

impl TryFrom<RawBlock> for UnitaryBlock {
    type Error = Error;
    fn try_from(raw: RawBlock) -> Result<Self, Error> {
        match raw {
            RawBlock::Char { n, k, u } => UnitaryBlock::char(n, k, u),
            RawBlock::Comp { m, k, u, t } => UnitaryBlock::comp(m, k, u, t),
        }
    }
}

impl UnitaryBlock {
    pub fn char(n: u32, k: i64, u: GaussianRational) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Precondition("character block needs n >= 1".into()));
        }
        if !u.is_imaginary() {
            return Err(Error::Precondition(format!("character block exponent u = {u} is not imaginary")));
        }
        Ok(UnitaryBlock::Char { n, k, u })
    }

    pub fn comp(m: u32, k: i64, u: GaussianRational, t: Rational) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Precondition("complementary series needs m >= 1".into()));
        }
        if !u.is_imaginary() {
            return Err(Error::Precondition(format!("complementary series exponent u = {u} is not imaginary")));
        }
        if t.signum() <= 0 || t >= Rational::one() {
            return Err(Error::Precondition(format!("complementary series needs 0 < t < 1, got t = {t}")));
        }
        Ok(UnitaryBlock::Comp { m, k, u, t })
    }

    /// The rank of the general linear group the block lives on.
    pub fn size(&self) -> usize {
        match self {
            UnitaryBlock::Char { n, .. } => *n as usize,
            UnitaryBlock::Comp { m, .. } => 2 * *m as usize,
        }
    }

    /// The same block with `u ↦ -u`.
    pub fn negated(&self) -> Self {
        match self {
            UnitaryBlock::Char { n, k, u } => UnitaryBlock::Char { n: *n, k: *k, u: -u },
            UnitaryBlock::Comp { m, k, u, t } => UnitaryBlock::Comp { m: *m, k: *k, u: -u, t: t.clone() },
        }
    }

    pub fn u(&self) -> &GaussianRational {
        match self {
            UnitaryBlock::Char { u, .. } | UnitaryBlock::Comp { u, .. } => u,
        }
    }

    /// The block's own parameter, in block order (not normalized).
    pub fn characters(&self) -> Vec<CharacterCx> {
        let mut out = Vec::with_capacity(self.size());
        self.push_characters(&mut out);
        out
    }

    fn push_characters(&self, out: &mut Vec<CharacterCx>) {
        match self {
            UnitaryBlock::Char { n, k, u } => push_det_character(out, *n, *k, u),
            UnitaryBlock::Comp { m, k, u, t } => {
                let t = GaussianRational::real(t.clone());
                push_det_character(out, *m, *k, &(u + &t));
                push_det_character(out, *m, *k, &(u - &t));
            }
        }
    }
}

/// Slots of `(det/|det|)^k |det|^u` on `GL_n(ℂ)`: `(u + n + 1 - 2i)/2`.
fn push_det_character(out: &mut Vec<CharacterCx>, n: u32, k: i64, u: &GaussianRational) {
    let u_half = u.halve();
    for i in 1..=n as i64 {
        let shift = Rational::from_int(n as i64 + 1 - 2 * i).halve();
        out.push(CharacterCx::new(k, GaussianRational::new(&u_half.re + &shift, u_half.im.clone())));
    }
}

/// An irreducible unitary representation written as a product of blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<UnitaryBlock>", into = "Vec<UnitaryBlock>")]
pub struct UnitaryRep {
    blocks: Vec<UnitaryBlock>,
}

impl UnitaryRep {
    pub fn new(blocks: Vec<UnitaryBlock>) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a unitary representation needs at least one block".into()));
        }
        Ok(UnitaryRep { blocks })
    }

    pub fn blocks(&self) -> &[UnitaryBlock] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(UnitaryBlock::size).sum()
    }

    pub fn multiplicity(&self, b: &UnitaryBlock) -> usize {
        self.blocks.iter().filter(|x| *x == b).count()
    }

    /// The Langlands parameter of the product of the blocks.
    pub fn to_langlands(&self) -> LanglandsParameter {
        let mut chars = Vec::with_capacity(self.n());
        for b in &self.blocks {
            b.push_characters(&mut chars);
        }
        LanglandsParameter::new(chars)
    }
}

impl TryFrom<Vec<UnitaryBlock>> for UnitaryRep {
    type Error = Error;
    fn try_from(blocks: Vec<UnitaryBlock>) -> Result<Self, Error> {
        UnitaryRep::new(blocks)
    }
}

impl From<UnitaryRep> for Vec<UnitaryBlock> {
    fn from(r: UnitaryRep) -> Self {
        r.blocks
    }
}

/// Convenience wrapper for [`UnitaryRep::to_langlands`].
pub fn to_langlands(rep: &UnitaryRep) -> LanglandsParameter {
    rep.to_langlands()
}

/// The on-disk parameter description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum ParameterFile {
    #[serde(rename = "langlands")]
    Langlands { characters: LanglandsParameter },
    #[serde(rename = "unitary")]
    Unitary { blocks: UnitaryRep },
}

impl ParameterFile {
    pub fn langlands(&self) -> LanglandsParameter {
        match self {
            ParameterFile::Langlands { characters } => characters.clone(),
            ParameterFile::Unitary { blocks } => blocks.to_langlands(),
        }
    }

    pub fn unitary(&self) -> Option<&UnitaryRep> {
        match self {
            ParameterFile::Unitary { blocks } => Some(blocks),
            ParameterFile::Langlands { .. } => None,
        }
    }
}
