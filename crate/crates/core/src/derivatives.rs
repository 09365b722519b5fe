//! Highest derivatives of products of characters, and the necessity test
//! built on them: if `π` satisfies condition (i) but some iterated highest
//! derivative does not, `π` is not distinguished.

use serde::{Deserialize, Serialize};

use crate::distinction::check_condition_i;
use crate::exactnum::{GaussianRational, Rational};
use crate::params::{CharacterCx, LanglandsParameter, UnitaryBlock, UnitaryRep};
use crate::Error;

/// The character `(det/|det|)^k |det|^{2s}` of `GL_size(ℂ)`.
///
/// `s` is in the character slot convention, so the block's parameter is
/// `{κ_{k, s + (size+1-2i)/2} : i = 1..size}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialBlock {
    pub k: i64,
    pub s: GaussianRational,
    pub size: u32,
}

/// A product `χ_1 × ⋯ × χ_d` of characters of `GL_{n_i}(ℂ)`; its depth is `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<MonomialBlock>", into = "Vec<MonomialBlock>")]
pub struct MonomialRep {
    blocks: Vec<MonomialBlock>,
}

impl MonomialRep {
    pub fn new(blocks: Vec<MonomialBlock>) -> Result<Self, Error> {
        if let Some(b) = blocks.iter().find(|b| b.size == 0) {
            return Err(Error::Precondition(format!("block of size 0 (k = {})", b.k)));
        }
        Ok(MonomialRep { blocks })
    }

    /// The representation on `GL_0`.
    pub fn empty() -> Self {
        MonomialRep { blocks: Vec::new() }
    }

    /// Character blocks of a unitary product; complementary series are not monomial.
    pub fn from_unitary(rep: &UnitaryRep) -> Result<Self, Error> {
        let half = Rational::frac(1, 2);
        rep.blocks()
            .iter()
            .map(|b| match b {
                UnitaryBlock::Char { n, k, u } => Ok(MonomialBlock { k: *k, s: u.scale(&half), size: *n }),
                UnitaryBlock::Comp { .. } => {
                    Err(Error::Precondition("complementary series blocks are not characters".into()))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|blocks| MonomialRep { blocks })
    }

    pub fn blocks(&self) -> &[MonomialBlock] {
        &self.blocks
    }

    pub fn depth(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.size as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn to_langlands(&self) -> LanglandsParameter {
        let mut chars = Vec::with_capacity(self.n());
        for b in &self.blocks {
            for i in 1..=b.size as i64 {
                let shift = GaussianRational::real(Rational::frac(b.size as i64 + 1 - 2 * i, 2));
                chars.push(CharacterCx::new(b.k, &b.s + &shift));
            }
        }
        LanglandsParameter::new(chars)
    }
}

impl TryFrom<Vec<MonomialBlock>> for MonomialRep {
    type Error = Error;
    fn try_from(blocks: Vec<MonomialBlock>) -> Result<Self, Error> {
        MonomialRep::new(blocks)
    }
}

impl From<MonomialRep> for Vec<MonomialBlock> {
    fn from(m: MonomialRep) -> Self {
        m.blocks
    }
}

/// `χ_1|_{G_{n_1-1}} × ⋯ × χ_d|_{G_{n_d-1}}`: every block shrinks by one and
/// blocks of size one disappear.
pub fn highest_derivative(m: &MonomialRep) -> Result<MonomialRep, Error> {
    if m.is_empty() {
        return Err(Error::EmptyMonomial);
    }
    let blocks = m
        .blocks
        .iter()
        .filter(|b| b.size > 1)
        .map(|b| MonomialBlock { size: b.size - 1, ..b.clone() })
        .collect();
    Ok(MonomialRep { blocks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityOutcome {
    pub passes: bool,
    /// Number of derivatives taken when condition (i) first failed.
    pub failing_stage: Option<usize>,
    /// The representations scanned, stage 0 first.
    pub stages: Vec<MonomialRep>,
}

/// Scans `m, m⁻, m⁻⁻, …` down to the empty representation and checks
/// condition (i) at every stage, stage 0 included.
///
/// A failure certifies non-distinction for unitary `m` that satisfy
/// condition (i) at stage 0; passing certifies nothing.
pub fn derivative_necessity_test(m: &MonomialRep) -> NecessityOutcome {
    let mut stages = vec![m.clone()];
    let mut current = m.clone();
    while !current.is_empty() {
        current = highest_derivative(&current).expect("non-empty");
        stages.push(current.clone());
    }
    let failing_stage = stages.iter().position(|st| !check_condition_i(&st.to_langlands()).0);
    NecessityOutcome { passes: failing_stage.is_none(), failing_stage, stages }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(k: i64, size: u32) -> MonomialBlock {
        MonomialBlock { k, s: GaussianRational::zero(), size }
    }

    fn mono(v: Vec<MonomialBlock>) -> MonomialRep {
        MonomialRep::new(v).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let sgn3 = mono(vec![block(1, 2); 3]);
        assert_eq!(highest_derivative(&sgn3).unwrap(), mono(vec![block(1, 1); 3]));
        assert_eq!(highest_derivative(&mono(vec![block(0, 1)])).unwrap(), MonomialRep::empty());
        assert_eq!(highest_derivative(&mono(vec![block(1, 3), block(1, 1)])).unwrap(), mono(vec![block(1, 2)]));
        assert_eq!(highest_derivative(&MonomialRep::empty()), Err(Error::EmptyMonomial));
    }

    #[test]
    fn necessity_examples() {
        let out = derivative_necessity_test(&mono(vec![block(1, 2); 3]));
        assert!(!out.passes);
        assert_eq!(out.failing_stage, Some(1));

        let out = derivative_necessity_test(&mono(vec![block(1, 2); 2]));
        assert!(out.passes);
        assert_eq!(out.stages.len(), 3);

        assert!(derivative_necessity_test(&mono(vec![block(0, 5)])).passes);
    }

    #[test]
    fn iterating_max_size_times_empties() {
        let m = mono(vec![block(1, 4), block(2, 2), block(-1, 1)]);
        let mut cur = m.clone();
        for _ in 0..4 {
            cur = highest_derivative(&cur).unwrap();
        }
        assert!(cur.is_empty());
    }

    #[test]
    fn parameter_matches_unitary_blocks() {
        let rep = UnitaryRep::new(vec![UnitaryBlock::char(3, 1, GaussianRational::imag(Rational::one())).unwrap()]).unwrap();
        let m = MonomialRep::from_unitary(&rep).unwrap();
        assert_eq!(m.to_langlands(), rep.to_langlands());
        assert_eq!(m.depth(), 1);
    }

    #[test]
    fn size_zero_rejected() {
        assert!(MonomialRep::new(vec![block(0, 0)]).is_err());
    }
}
