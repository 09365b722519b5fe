//! Involutions of `S_n` and the double cosets `P\GL_n(ℂ)/GL_n(ℝ)`.
//!
//! Borel orbits on `GL_n(ℂ)/GL_n(ℝ)` are indexed by involutions `w`, with
//! representative `g_w`. A standard parabolic `P` of type `(n_1,…,n_k)` merges
//! the involutions lying in one double coset `Y w Y` of the Young subgroup
//! `Y = S_{n_1} × ⋯ × S_{n_k}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{real_rank, ExactMatrix, GaussianRational};
use crate::Error;

pub const MAX_ENUMERATION_N: usize = 10;
pub const MAX_CLASSES_N: usize = 8;

/// A self-inverse permutation of `{1..n}`, kept in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    pub fn from_one_line(perm: Vec<usize>) -> Result<Self, Error> {
        let n = perm.len();
        for (j, &w) in perm.iter().enumerate() {
            if w == 0 || w > n {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation of 1..{n}")));
            }
            if perm[w - 1] != j + 1 {
                return Err(Error::Precondition(format!("{perm:?} is not an involution")));
            }
        }
        Ok(Involution { perm })
    }

    pub fn identity(n: usize) -> Self {
        Involution { perm: (1..=n).collect() }
    }

    /// Product of disjoint transpositions on `{1..n}`.
    pub fn from_transpositions(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut perm: Vec<usize> = (1..=n).collect();
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > n || b > n || a == b || perm[a - 1] != a || perm[b - 1] != b {
                return Err(Error::Precondition(format!("transpositions {pairs:?} are not disjoint in 1..{n}")));
            }
            perm[a - 1] = b;
            perm[b - 1] = a;
        }
        Ok(Involution { perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.perm
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.perm[j - 1]
    }

    /// The 2-cycles `(k, l)` with `k < l`, ordered by `k`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).filter(|&k| self.apply(k) > k).map(|k| (k, self.apply(k))).collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&k| self.apply(k) == k).collect()
    }
}

impl TryFrom<Vec<usize>> for Involution {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Involution::from_one_line(v)
    }
}

impl From<Involution> for Vec<usize> {
    fn from(w: Involution) -> Self {
        w.perm
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.transpositions();
        if t.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in t {
            write!(f, "({k} {l})")?;
        }
        Ok(())
    }
}

/// Block sizes `(n_1,…,n_k)` of a standard parabolic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition(format!("{parts:?} is not a composition")));
        }
        Ok(Composition { parts })
    }

    /// The Borel type `(1,…,1)`.
    pub fn borel(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block index of each position `0..n`.
    fn block_of(&self) -> Vec<usize> {
        self.parts.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat(b).take(len)).collect()
    }

    fn check(&self, n: usize) -> Result<(), Error> {
        if self.total() != n {
            return Err(Error::DimensionMismatch(format!("composition {:?} does not sum to {n}", self.parts)));
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// All involutions of `{1..n}` in lexicographic order of their one-line form.
pub fn enumerate_involutions(n: usize) -> Result<Vec<Involution>, Error> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n} (supported: 1..={MAX_ENUMERATION_N})")));
    }
    let mut out = Vec::new();
    let mut perm = vec![0usize; n];
    fill_involutions(&mut perm, &mut out);
    out.sort();
    Ok(out)
}

fn fill_involutions(perm: &mut Vec<usize>, out: &mut Vec<Involution>) {
    let Some(first) = perm.iter().position(|&x| x == 0) else {
        out.push(Involution { perm: perm.clone() });
        return;
    };
    perm[first] = first + 1;
    fill_involutions(perm, out);
    for j in first + 1..perm.len() {
        if perm[j] == 0 {
            perm[first] = j + 1;
            perm[j] = first + 1;
            fill_involutions(perm, out);
            perm[j] = 0;
        }
    }
    perm[first] = 0;
}

/// `g_w`: the identity with `(k,k) = (l,l) = 1` and `(k,l) = (l,k) = i` for
/// every transposition `(k,l)` of `w`.
pub fn representative(w: &Involution) -> ExactMatrix {
    let mut g = ExactMatrix::identity(w.n());
    for (k, l) in w.transpositions() {
        g[(k - 1, l - 1)] = GaussianRational::i();
        g[(l - 1, k - 1)] = GaussianRational::i();
    }
    g
}

/// Checks that `g_w · conj(g_w)^{-1}` lies in `wT`: its non-zero entries sit
/// exactly at the positions `(j, w(j))`.
pub fn verify_representative(w: &Involution) -> bool {
    let g = representative(w);
    let Ok(inv) = g.conj().inverse() else {
        return false;
    };
    let Ok(x) = g.mul(&inv) else {
        return false;
    };
    let n = w.n();
    (0..n).all(|i| (0..n).all(|j| x[(i, j)].is_zero() != (w.apply(j + 1) == i + 1)))
}

/// `M[a][b] = #{j in block b : w(j) in block a}`; two involutions lie in
/// the same `Y`-double coset iff these matrices agree.
fn block_matrix(w: &Involution, block_of: &[usize], blocks: usize) -> Vec<Vec<usize>> {
    let mut m = vec![vec![0; blocks]; blocks];
    for j in 0..w.n() {
        m[block_of[w.apply(j + 1) - 1]][block_of[j]] += 1;
    }
    m
}

/// The involutions of `{1..n}` grouped by `Y`-double coset, each class
/// sorted, classes ordered by their least member.
pub fn parabolic_class_members(n: usize, comp: &Composition) -> Result<Vec<Vec<Involution>>, Error> {
    if n > MAX_CLASSES_N {
        return Err(Error::OutOfRange(format!("n = {n} (supported: 1..={MAX_CLASSES_N})")));
    }
    comp.check(n)?;
    let block_of = comp.block_of();
    let mut classes: BTreeMap<Vec<Vec<usize>>, Vec<Involution>> = BTreeMap::new();
    for w in enumerate_involutions(n)? {
        classes.entry(block_matrix(&w, &block_of, comp.parts.len())).or_default().push(w);
    }
    let mut out: Vec<Vec<Involution>> = classes.into_values().collect();
    out.sort_by(|a, b| a[0].cmp(&b[0]));
    Ok(out)
}

/// One representative per class: its lexicographically least involution.
pub fn parabolic_classes(n: usize, comp: &Composition) -> Result<Vec<Involution>, Error> {
    Ok(parabolic_class_members(n, comp)?.into_iter().map(|c| c[0].clone()).collect())
}

/// Real dimension of the orbit `P g_w H`, computed as the real rank of
/// `𝔭 + Ad(g_w) 𝔤𝔩_n(ℝ)`.
pub fn orbit_dimension(w: &Involution, comp: &Composition) -> Result<usize, Error> {
    let n = w.n();
    comp.check(n)?;
    let block_of = comp.block_of();
    let g = representative(w);
    let g_inv = g.inverse()?;
    let mut span = Vec::with_capacity(3 * n * n);
    for i in 0..n {
        for j in 0..n {
            if block_of[i] <= block_of[j] {
                span.push(ExactMatrix::unit(n, i, j, GaussianRational::one()));
                span.push(ExactMatrix::unit(n, i, j, GaussianRational::i()));
            }
            let e = ExactMatrix::unit(n, i, j, GaussianRational::one());
            span.push(g.mul(&e)?.mul(&g_inv)?);
        }
    }
    real_rank(&span, n)
}

/// Whether `P g_w H` is open, i.e. of dimension `2n²`.
pub fn is_open_orbit(w: &Involution, comp: &Composition) -> Result<bool, Error> {
    Ok(orbit_dimension(w, comp)? == 2 * w.n() * w.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn inv(n: usize, pairs: &[(usize, usize)]) -> Involution {
        Involution::from_transpositions(n, pairs).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_involutions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
        let three = enumerate_involutions(3).unwrap();
        // Lexicographic in one-line notation: 123, 132, 213, 321.
        assert_eq!(three, vec![inv(3, &[]), inv(3, &[(2, 3)]), inv(3, &[(1, 2)]), inv(3, &[(1, 3)])]);
        assert!(enumerate_involutions(0).is_err());
        assert!(enumerate_involutions(11).is_err());
    }

    #[test]
    fn one_line_validation() {
        assert!(Involution::from_one_line(vec![2, 3, 1]).is_err());
        assert!(Involution::from_one_line(vec![2, 1, 4]).is_err());
        assert_eq!(Involution::from_one_line(vec![3, 2, 1]).unwrap(), inv(3, &[(1, 3)]));
        assert!(Involution::from_transpositions(3, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn representative_matrices() {
        assert_eq!(representative(&inv(3, &[])), ExactMatrix::identity(3));
        let g = representative(&inv(2, &[(1, 2)]));
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        assert_eq!(g, ExactMatrix::from_entries(2, 2, vec![one.clone(), i.clone(), i.clone(), one.clone()]).unwrap());
        let g4 = representative(&inv(4, &[(1, 2), (3, 4)]));
        let z = GaussianRational::zero();
        let expect = ExactMatrix::from_entries(
            4,
            4,
            vec![
                one.clone(), i.clone(), z.clone(), z.clone(),
                i.clone(), one.clone(), z.clone(), z.clone(),
                z.clone(), z.clone(), one.clone(), i.clone(),
                z.clone(), z.clone(), i.clone(), one.clone(),
            ],
        )
        .unwrap();
        assert_eq!(g4, expect);
    }

    #[test]
    fn twisted_product_of_swap() {
        let g = representative(&inv(2, &[(1, 2)]));
        let x = g.mul(&g.conj().inverse().unwrap()).unwrap();
        let i = GaussianRational::i();
        let z = GaussianRational::zero();
        assert_eq!(x, ExactMatrix::from_entries(2, 2, vec![z.clone(), i.clone(), i, z]).unwrap());
        assert!(verify_representative(&inv(2, &[(1, 2)])));
        assert!(verify_representative(&inv(3, &[(1, 3)])));
        assert!(verify_representative(&inv(1, &[])));
    }

    #[test]
    fn class_counts() {
        for n in 1..=5 {
            let all = enumerate_involutions(n).unwrap();
            assert_eq!(parabolic_classes(n, &Composition::borel(n)).unwrap(), all);
            assert_eq!(parabolic_classes(n, &comp(&[n])).unwrap(), vec![Involution::identity(n)]);
        }
        assert_eq!(parabolic_classes(4, &comp(&[2, 2])).unwrap().len(), 3);
        assert!(parabolic_classes(4, &comp(&[2, 1])).is_err());
        assert!(parabolic_classes(9, &comp(&[9])).is_err());
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dimension(&inv(2, &[]), &comp(&[1, 1])).unwrap(), 7);
        assert_eq!(orbit_dimension(&inv(2, &[(1, 2)]), &comp(&[1, 1])).unwrap(), 8);
        for w in enumerate_involutions(3).unwrap() {
            assert_eq!(orbit_dimension(&w, &comp(&[3])).unwrap(), 18);
        }
    }

    #[test]
    fn rank_uses_exact_entries() {
        // A non-integral scalar multiple spans the same real line.
        let e = ExactMatrix::unit(2, 0, 1, GaussianRational::real(Rational::frac(1, 3)));
        let f = ExactMatrix::unit(2, 0, 1, GaussianRational::one());
        assert_eq!(real_rank(&[e, f], 2).unwrap(), 1);
    }
}
