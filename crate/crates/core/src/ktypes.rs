//! Highest-weight combinatorics for `U(n)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::params::LanglandsParameter;
use crate::Error;

/// A dominant integral weight `μ_1 ≥ ⋯ ≥ μ_n` of `U(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(HighestWeight(entries))
    }

    /// Sorts the entries into dominant order.
    pub fn sorted(mut entries: Vec<i64>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        HighestWeight(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl TryFrom<Vec<i64>> for HighestWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self, Error> {
        HighestWeight::new(v)
    }
}

impl From<HighestWeight> for Vec<i64> {
    fn from(h: HighestWeight) -> Self {
        h.0
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A torus weight, in no particular order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        WeightVector(v)
    }
}

/// Whether the `U(n)`-type has an `O(n)`-fixed vector (all entries even).
pub fn is_o_distinguished(mu: &HighestWeight) -> bool {
    mu.0.iter().all(|x| x % 2 == 0)
}

pub fn concat_reorder(mu: &HighestWeight, gamma: &HighestWeight) -> HighestWeight {
    HighestWeight::sorted(mu.0.iter().chain(&gamma.0).copied().collect())
}

pub fn lowest_ktype(p: &LanglandsParameter) -> HighestWeight {
    HighestWeight::sorted(p.m_vector())
}

/// Replaces each run of `2j` copies of an odd value `k` by `j` copies of
/// `k+1` and `j` copies of `k-1`.
pub fn distinguished_minimal_ktype(p: &LanglandsParameter) -> Result<HighestWeight, Error> {
    let lowest = lowest_ktype(p);
    let mut out = Vec::with_capacity(lowest.len());
    let mut i = 0;
    let m = lowest.entries();
    while i < m.len() {
        let k = m[i];
        let run = m[i..].iter().take_while(|&&x| x == k).count();
        if k % 2 == 0 {
            out.extend(std::iter::repeat(k).take(run));
        } else if run % 2 == 1 {
            return Err(Error::NotDistinguished(format!("odd value {k} occurs {run} times in {lowest}")));
        } else {
            out.extend(std::iter::repeat(k + 1).take(run / 2));
            out.extend(std::iter::repeat(k - 1).take(run / 2));
        }
        i += run;
    }
    Ok(HighestWeight::sorted(out))
}

/// Number of ways to write `beta` as a non-negative integer combination of
/// the positive roots `e_i - e_j`, `i < j`.
fn kostant(beta: &[i64], memo: &mut HashMap<Vec<i64>, i128>) -> i128 {
    if beta.iter().sum::<i64>() != 0 {
        return 0;
    }
    let mut partial = 0;
    for &b in beta {
        partial += b;
        if partial < 0 {
            return 0;
        }
    }
    if beta.len() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(beta) {
        return v;
    }
    // Distribute beta[0] over the roots e_0 - e_j, then recurse on the tail.
    let mut total = 0;
    let mut tail = beta[1..].to_vec();
    distribute(beta[0], 0, &mut tail, memo, &mut total);
    memo.insert(beta.to_vec(), total);
    total
}

fn distribute(left: i64, j: usize, tail: &mut Vec<i64>, memo: &mut HashMap<Vec<i64>, i128>, total: &mut i128) {
    if j + 1 == tail.len() {
        tail[j] += left;
        *total += kostant(tail, memo);
        tail[j] -= left;
        return;
    }
    for c in 0..=left {
        tail[j] += c;
        distribute(left - c, j + 1, tail, memo, total);
        tail[j] -= c;
    }
}

/// All permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i32)>) {
        if rest.is_empty() {
            let inversions = (0..cur.len())
                .flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Dimension of the `ν`-weight space of the irreducible `U(n)`-module of
/// highest weight `μ` (Kostant's multiplicity formula).
pub fn weight_multiplicity(mu: &HighestWeight, nu: &WeightVector) -> Result<u64, Error> {
    let n = mu.len();
    if nu.0.len() != n {
        return Err(Error::DimensionMismatch(format!("weight of length {} for U({n})", nu.0.len())));
    }
    if mu.total() != nu.0.iter().sum::<i64>() {
        return Ok(0);
    }
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted: Vec<i64> = (0..n).map(|i| mu.0[i] + rho[i]).collect();
    let mut memo = HashMap::new();
    let mut acc: i128 = 0;
    for (w, sign) in permutations(n) {
        let beta: Vec<i64> = (0..n).map(|i| shifted[w[i]] - nu.0[i] - rho[i]).collect();
        acc += sign as i128 * kostant(&beta, &mut memo);
    }
    Ok(u64::try_from(acc).expect("weight multiplicity is non-negative"))
}

/// Dominant weights of length `n`, entries in `[lo, hi]`, with the given
/// total, in decreasing lexicographic order.
fn dominant_weights(n: usize, lo: i64, hi: i64, total: i64, filter: &dyn Fn(i64) -> bool) -> Vec<Vec<i64>> {
    fn rec(n: usize, lo: i64, cap: i64, total: i64, filter: &dyn Fn(i64) -> bool, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let k = n as i64;
        for x in (lo..=cap).rev() {
            // Remaining entries lie in [lo, x].
            if total < x + (k - 1) * lo || total > k * x {
                continue;
            }
            if !filter(x) {
                continue;
            }
            cur.push(x);
            rec(n - 1, lo, x, total - x, filter, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, lo, hi, total, filter, &mut Vec::new(), &mut out);
    out
}

/// Brute force over all even dominant weights of norm at most `radius` that
/// occur in the principal series with torus weight `m`; keeps those of least
/// norm.
pub fn minimal_distinguished_ktype_oracle(p: &LanglandsParameter, radius: i64) -> Result<Vec<HighestWeight>, Error> {
    let m = lowest_ktype(p);
    let max_abs = m.entries().iter().map(|x| x.abs()).max().unwrap_or(0);
    if radius < max_abs {
        return Err(Error::Precondition(format!("radius {radius} is below max |m_j| = {max_abs}")));
    }
    let nu = WeightVector(m.entries().to_vec());
    let mut best: Option<i64> = None;
    let mut found = Vec::new();
    for cand in dominant_weights(m.len(), -radius, radius, m.total(), &|x| x % 2 == 0) {
        let hw = HighestWeight(cand);
        let norm = hw.norm_sq();
        if norm > radius * radius || best.is_some_and(|b| norm > b) {
            continue;
        }
        if weight_multiplicity(&hw, &nu)? == 0 {
            continue;
        }
        if best.map_or(true, |b| norm < b) {
            best = Some(norm);
            found.clear();
        }
        found.push(hw);
    }
    if found.is_empty() {
        return Err(Error::RadiusExhausted(radius));
    }
    found.sort();
    Ok(found)
}

/// Multiplicity of `μ ⊠ γ` in the restriction of `σ` to `U(n) × U(m)`.
pub fn lr_restriction_multiplicity(sigma: &HighestWeight, mu: &HighestWeight, gamma: &HighestWeight) -> Result<u64, Error> {
    if sigma.len() != mu.len() + gamma.len() {
        return Err(Error::DimensionMismatch(format!(
            "U({}) does not restrict to U({}) x U({})",
            sigma.len(),
            mu.len(),
            gamma.len()
        )));
    }
    if sigma.total() != mu.total() + gamma.total() {
        return Ok(0);
    }
    let c = -[sigma, mu, gamma].iter().flat_map(|h| h.0.iter().copied()).min().unwrap_or(0).min(0);
    let lam: Vec<usize> = sigma.0.iter().map(|x| (x + c) as usize).collect();
    let inner: Vec<usize> = mu.0.iter().map(|x| (x + c) as usize).chain(std::iter::repeat(0)).take(lam.len()).collect();
    let content: Vec<usize> = gamma.0.iter().map(|x| (x + c) as usize).collect();
    Ok(lr_coefficient(&lam, &inner, &content))
}

/// Number of Littlewood–Richardson tableaux of shape `outer/inner` and
/// content `content`.
fn lr_coefficient(outer: &[usize], inner: &[usize], content: &[usize]) -> u64 {
    if outer.iter().zip(inner).any(|(o, i)| i > o) {
        return 0;
    }
    let cells: usize = outer.iter().zip(inner).map(|(o, i)| o - i).sum();
    if cells != content.iter().sum::<usize>() {
        return 0;
    }
    // Reading order: rows top to bottom, each right to left.
    let order: Vec<(usize, usize)> =
        (0..outer.len()).flat_map(|r| (inner[r]..outer[r]).rev().map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&o| vec![0; o]).collect();
    let mut counts = vec![0usize; content.len()];
    let mut total = 0u64;
    lr_fill(0, &order, inner, content, &mut grid, &mut counts, &mut total);
    total
}

fn lr_fill(
    idx: usize,
    order: &[(usize, usize)],
    inner: &[usize],
    content: &[usize],
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut u64,
) {
    if idx == order.len() {
        *total += 1;
        return;
    }
    let (r, c) = order[idx];
    // Letters are 1-based; rows weakly increase, columns strictly increase.
    let mut hi = content.len();
    if c + 1 < grid[r].len() {
        hi = hi.min(grid[r][c + 1]);
    }
    let mut lo = 1;
    if r > 0 && c >= inner[r - 1] && c < grid[r - 1].len() {
        lo = grid[r - 1][c] + 1;
    }
    for letter in lo..=hi {
        let j = letter - 1;
        if counts[j] >= content[j] || (j > 0 && counts[j] >= counts[j - 1]) {
            continue;
        }
        counts[j] += 1;
        grid[r][c] = letter;
        lr_fill(idx + 1, order, inner, content, grid, counts, total);
        counts[j] -= 1;
    }
    grid[r][c] = 0;
}
