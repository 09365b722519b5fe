//! Distinction criteria for generic and unitary representations.
//!
//! Condition (i) asks for an involution `w` with `λ_j = conj(λ_{w(j)})^{-1}`
//! and `λ_j(-1) = 1` at fixed points. Since `conj(κ_{m,s})^{-1} = κ_{m,-s}`,
//! it is a counting condition: `κ_{m,s}` and `κ_{m,-s}` occur equally often,
//! and `κ_{m,0}` with `m` odd occurs an even number of times.
//!
//! Condition (ii) asks that every `κ_{m,s}` with `m` odd and `2s ∈ ℤ` occur
//! an even number of times.

use serde::{Deserialize, Serialize};

use crate::params::{CharacterCx, LanglandsParameter, UnitaryBlock, UnitaryRep};

/// An involution on `{1..n}` certifying condition (i); indices are 1-based
/// positions in the parameter's normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionWitness {
    pub pairs: Vec<(usize, usize)>,
    pub fixed: Vec<usize>,
}

impl InvolutionWitness {
    /// Re-checks the witness against `p`: pairs and fixed points partition
    /// `{1..n}`, paired characters are conjugate-inverse, fixed ones are
    /// `κ_{m,0}` with `m` even.
    pub fn validate(&self, p: &LanglandsParameter) -> bool {
        let n = p.n();
        let chars = p.chars();
        let mut seen = vec![false; n + 1];
        let mut mark = |j: usize| -> bool {
            if j == 0 || j > n || seen[j] {
                return false;
            }
            seen[j] = true;
            true
        };
        for &(a, b) in &self.pairs {
            if a == b || !mark(a) || !mark(b) {
                return false;
            }
            if chars[a - 1] != chars[b - 1].conj_inverse() {
                return false;
            }
        }
        for &j in &self.fixed {
            if !mark(j) {
                return false;
            }
            let c = &chars[j - 1];
            if !c.s.is_zero() || c.value_at_minus_one() != 1 {
                return false;
            }
        }
        seen[1..].iter().all(|&x| x)
    }

    /// The involution in one-line notation (1-based images).
    pub fn one_line(&self, n: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=n).collect();
        for &(a, b) in &self.pairs {
            w[a - 1] = b;
            w[b - 1] = a;
        }
        w
    }
}

/// Characters that obstruct condition (i), in normal order (distinct).
pub fn condition_i_offenders(p: &LanglandsParameter) -> Vec<CharacterCx> {
    let counted = p.counted();
    let mut out = Vec::new();
    for &(c, k) in &counted {
        let ok = if c.s.is_zero() {
            c.value_at_minus_one() == 1 || k % 2 == 0
        } else {
            let partner = c.conj_inverse();
            let found = counted.binary_search_by(|(x, _)| x.normal_cmp(&partner));
            found.is_ok_and(|i| counted[i].1 == k)
        };
        if !ok {
            out.push(c.clone());
        }
    }
    out
}

/// Condition (i), with a deterministic witness when it holds.
///
/// Indices are scanned in normal order; each unused index is fixed if its
/// character is `κ_{even,0}`, and otherwise paired with the first unused
/// later index carrying the conjugate-inverse character.
pub fn check_condition_i(p: &LanglandsParameter) -> (bool, Option<InvolutionWitness>) {
    if !condition_i_offenders(p).is_empty() {
        return (false, None);
    }
    (true, Some(witness_for(p)))
}

fn witness_for(p: &LanglandsParameter) -> InvolutionWitness {
    let chars = p.chars();
    let n = chars.len();
    let mut used = vec![false; n];
    let mut pairs = Vec::new();
    let mut fixed = Vec::new();
    for j in 0..n {
        if used[j] {
            continue;
        }
        used[j] = true;
        let c = &chars[j];
        if c.s.is_zero() && c.value_at_minus_one() == 1 {
            fixed.push(j + 1);
            continue;
        }
        let target = c.conj_inverse();
        let l = (j + 1..n).find(|&l| !used[l] && chars[l] == target).expect("condition (i) holds");
        used[l] = true;
        pairs.push((j + 1, l + 1));
    }
    InvolutionWitness { pairs, fixed }
}

/// Condition (ii) and the characters violating it.
pub fn check_condition_ii(p: &LanglandsParameter) -> (bool, Vec<CharacterCx>) {
    let failing: Vec<CharacterCx> = p
        .counted()
        .into_iter()
        .filter(|(c, k)| c.value_at_minus_one() == -1 && k % 2 == 1 && c.s.im.is_zero() && c.s.re.is_half_integer())
        .map(|(c, _)| c.clone())
        .collect();
    (failing.is_empty(), failing)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctionVerdict {
    pub distinguished: bool,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub witness: Option<InvolutionWitness>,
    pub failing_characters: Vec<CharacterCx>,
    /// Offending blocks, for verdicts computed from the block form.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failing_blocks: Vec<UnitaryBlock>,
}

/// The criterion for irreducible generic representations: condition (i) alone.
///
/// Genericity (irreducibility of the standard module) is the caller's claim.
pub fn is_distinguished_generic(p: &LanglandsParameter) -> DistinctionVerdict {
    let offenders = condition_i_offenders(p);
    let ci = offenders.is_empty();
    let (cii, _) = check_condition_ii(p);
    DistinctionVerdict {
        distinguished: ci,
        condition_i: ci,
        condition_ii: cii,
        witness: ci.then(|| witness_for(p)),
        failing_characters: offenders,
        failing_blocks: Vec::new(),
    }
}

/// Whether a generic `π` occurs in the restriction of
/// `Ind_{GL_n(ℝ)×GL_n(ℝ)}^{GL_{2n}(ℝ)}(1⊠1)` to `GL_n(ℂ)`. Same test as
/// [`is_distinguished_generic`].
pub fn appears_in_branching(p: &LanglandsParameter) -> bool {
    check_condition_i(p).0
}

/// The criterion for irreducible unitary representations: (i) and (ii).
pub fn is_distinguished_unitary(p: &LanglandsParameter) -> DistinctionVerdict {
    let mut failing = condition_i_offenders(p);
    let ci = failing.is_empty();
    let (cii, failing_ii) = check_condition_ii(p);
    if !failing_ii.is_empty() {
        failing.extend(failing_ii);
        failing.sort_by(CharacterCx::normal_cmp);
        failing.dedup();
    }
    DistinctionVerdict {
        distinguished: ci && cii,
        condition_i: ci,
        condition_ii: cii,
        witness: ci.then(|| witness_for(p)),
        failing_characters: failing,
        failing_blocks: Vec::new(),
    }
}

/// The block form of the unitary criterion.
///
/// (ia) character blocks with `u ≠ 0` pair with the `-u` block of the same
/// `(n, k)`; (ib) likewise for complementary series with the same `(m, k, t)`;
/// (ii) character blocks with `u = 0` and `k` odd have even multiplicity.
/// On failure the offending blocks are listed in `failing_blocks`; the
/// witness is only computed for distinguished input.
pub fn is_distinguished_blocks(rep: &UnitaryRep) -> DistinctionVerdict {
    let blocks = rep.blocks();
    let mut ci = true;
    let mut cii = true;
    let mut offending: Vec<UnitaryBlock> = Vec::new();
    for (idx, b) in blocks.iter().enumerate() {
        // Only the first occurrence of each block needs checking.
        if blocks[..idx].contains(b) {
            continue;
        }
        let mult = rep.multiplicity(b);
        if b.u().is_zero() {
            if let UnitaryBlock::Char { k, .. } = b {
                if k.rem_euclid(2) == 1 && mult % 2 == 1 {
                    cii = false;
                    offending.push(b.clone());
                }
            }
        } else if rep.multiplicity(&b.negated()) != mult {
            ci = false;
            offending.push(b.clone());
        }
    }
    let distinguished = ci && cii;
    let witness = if distinguished { check_condition_i(&rep.to_langlands()).1 } else { None };
    DistinctionVerdict {
        distinguished,
        condition_i: ci,
        condition_ii: cii,
        witness,
        failing_characters: Vec::new(),
        failing_blocks: offending,
    }
}

/// Whether the product contains `(det/|det|)^k` on `GL_n(ℂ)` with `k` odd and
/// `n ≥ 2`, i.e. parameter entries `κ_{odd, s}` with `2s ∈ ℤ∖{0}`. For these
/// the non-vanishing guarantee on the distinguished minimal K-type is not
/// available.
pub fn has_exceptional_factor(rep: &UnitaryRep) -> bool {
    rep.blocks().iter().any(|b| {
        matches!(b, UnitaryBlock::Char { n, k, u } if *n >= 2 && k.rem_euclid(2) == 1 && u.is_zero())
    })
}
