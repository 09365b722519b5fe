use gldist::ktypes::*;
use gldist::*;
use proptest::prelude::*;

/// Number of Gelfand–Tsetlin patterns with top row `top` and weight `nu`
/// (row sums differences, bottom row first).
fn gt_count(top: &[i64], nu: &[i64]) -> u64 {
    let n = top.len();
    if n == 0 {
        return 1;
    }
    let row_sum: i64 = top.iter().sum();
    let below: i64 = row_sum - nu[n - 1];
    let mut count = 0;
    let mut row = vec![0i64; n - 1];
    fn interlace(top: &[i64], i: usize, row: &mut Vec<i64>, target: i64, nu: &[i64], count: &mut u64) {
        if i == row.len() {
            if row.iter().sum::<i64>() == target {
                *count += gt_count(row, &nu[..row.len()]);
            }
            return;
        }
        for x in top[i + 1]..=top[i] {
            row[i] = x;
            interlace(top, i + 1, row, target, nu, count);
        }
    }
    interlace(top, 0, &mut row, below, nu, &mut count);
    count
}

fn dominant(n: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = HighestWeight> {
    n.prop_flat_map(move |n| prop::collection::vec(lo..=hi, n)).prop_map(HighestWeight::sorted)
}

/// Signed permutations of `0..n` (sign by inversion count).
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == perm.len() {
            let inv = (0..perm.len())
                .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            out.push((perm.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

/// Branching `U(n+m) ↓ U(n) × U(m)` by inverting the Weyl character formula
/// of the Levi: `Σ_{w ∈ W_L} ε(w) m_σ(λ + ρ_L - wρ_L)`.
fn branching_oracle(sigma: &HighestWeight, mu: &HighestWeight, gamma: &HighestWeight) -> i64 {
    let rho = |k: usize| -> Vec<i64> { (0..k).map(|i| (k - 1 - i) as i64).collect() };
    let (rn, rm) = (rho(mu.len()), rho(gamma.len()));
    let mut total = 0;
    for (w1, e1) in signed_permutations(mu.len()) {
        for (w2, e2) in signed_permutations(gamma.len()) {
            let mut nu: Vec<i64> = (0..mu.len()).map(|i| mu.entries()[i] + rn[i] - rn[w1[i]]).collect();
            nu.extend((0..gamma.len()).map(|i| gamma.entries()[i] + rm[i] - rm[w2[i]]));
            total += e1 * e2 * gt_count(sigma.entries(), &nu) as i64;
        }
    }
    total
}

fn param(ms: &[i64]) -> LanglandsParameter {
    LanglandsParameter::new(ms.iter().map(|&m| CharacterCx::new(m, GaussianRational::zero())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weight_multiplicity_matches_patterns(mu in dominant(1..=4, -2, 3), seed in prop::collection::vec(-3i64..=3, 4)) {
        let n = mu.len();
        let mut nu: Vec<i64> = seed[..n].to_vec();
        // Shift one entry so the totals agree; patterns vanish otherwise anyway.
        nu[0] += mu.total() - nu.iter().sum::<i64>();
        let got = weight_multiplicity(&mu, &WeightVector(nu.clone())).unwrap();
        prop_assert_eq!(got, gt_count(mu.entries(), &nu));
    }

    #[test]
    fn weight_multiplicity_is_symmetric(mu in dominant(1..=4, -2, 3), seed in prop::collection::vec(-2i64..=3, 4), rot in 0usize..4) {
        let n = mu.len();
        let mut nu: Vec<i64> = seed[..n].to_vec();
        nu[0] += mu.total() - nu.iter().sum::<i64>();
        let mut rotated = nu.clone();
        rotated.rotate_left(rot % n);
        prop_assert_eq!(
            weight_multiplicity(&mu, &WeightVector(nu)).unwrap(),
            weight_multiplicity(&mu, &WeightVector(rotated)).unwrap()
        );
        prop_assert_eq!(weight_multiplicity(&mu, &WeightVector(mu.entries().to_vec())).unwrap(), 1);
    }

    #[test]
    fn restriction_matches_branching(mu in dominant(1..=2, -2, 2), gamma in dominant(1..=2, -2, 2), extra in prop::collection::vec(-1i64..=1, 4)) {
        let base = concat_reorder(&mu, &gamma);
        let mut bumped: Vec<i64> = base.entries().iter().zip(&extra).map(|(x, d)| x + d).collect();
        // Keep the total so the multiplicity can be non-zero.
        let drift: i64 = extra[..bumped.len()].iter().sum();
        bumped[0] -= drift;
        let sigma = HighestWeight::sorted(bumped);
        let got = lr_restriction_multiplicity(&sigma, &mu, &gamma).unwrap();
        prop_assert_eq!(got as i64, branching_oracle(&sigma, &mu, &gamma));
    }

    #[test]
    fn union_occurs_once(mu in dominant(1..=3, -2, 2), gamma in dominant(1..=3, -2, 2)) {
        let sigma = concat_reorder(&mu, &gamma);
        prop_assert_eq!(lr_restriction_multiplicity(&sigma, &mu, &gamma).unwrap(), 1);
    }

    #[test]
    fn distinguished_minimal_type_is_even(pairs in prop::collection::vec(-3i64..=3, 1..3), evens in prop::collection::vec(-2i64..=2, 0..3)) {
        let mut ms: Vec<i64> = pairs.iter().flat_map(|&k| [k, k]).collect();
        ms.extend(evens.iter().map(|x| 2 * x));
        let p = param(&ms);
        let dmk = distinguished_minimal_ktype(&p).unwrap();
        prop_assert!(is_o_distinguished(&dmk));
        prop_assert_eq!(dmk.total(), ms.iter().sum::<i64>());
        prop_assert_eq!(dmk.len(), ms.len());
        prop_assert!(weight_multiplicity(&dmk, &WeightVector(ms.clone())).unwrap() > 0);
    }

    #[test]
    fn odd_multiplicity_is_rejected(k in -2i64..=2, evens in prop::collection::vec(-2i64..=2, 0..3)) {
        let mut ms = vec![2 * k + 1];
        ms.extend(evens.iter().map(|x| 2 * x));
        prop_assert!(matches!(distinguished_minimal_ktype(&param(&ms)), Err(Error::NotDistinguished(_))));
    }

    #[test]
    fn highest_weight_serde(mu in dominant(1..=5, -4, 4)) {
        let json = serde_json::to_string(&mu).unwrap();
        prop_assert_eq!(serde_json::from_str::<HighestWeight>(&json).unwrap(), mu);
    }
}

#[test]
fn gt_oracle_dimensions() {
    // dim of (2,1,0) for U(3) is 8.
    let top = [2, 1, 0];
    let mut dim = 0;
    for a in 0..=3 {
        for b in 0..=3 - a {
            dim += gt_count(&top, &[a, b, 3 - a - b]);
        }
    }
    assert_eq!(dim, 8);
}

#[test]
fn increasing_weight_rejected() {
    assert!(serde_json::from_str::<HighestWeight>("[0, 1]").is_err());
}
