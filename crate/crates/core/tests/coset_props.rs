use std::collections::{BTreeSet, VecDeque};

use gldist::cosets::*;
use gldist::Error;
use proptest::prelude::*;

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j - 1]).collect()
}

/// Closure of `w` under left and right multiplication by the simple
/// transpositions inside the blocks of `comp`: the double coset `Y w Y`.
fn double_coset(w: &[usize], comp: &[usize]) -> BTreeSet<Vec<usize>> {
    let n = w.len();
    let mut gens = Vec::new();
    let mut start = 0;
    for &len in comp {
        for i in start..start + len - 1 {
            let mut s: Vec<usize> = (1..=n).collect();
            s.swap(i, i + 1);
            gens.push(s);
        }
        start += len;
    }
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            for y in [compose(s, &x), compose(&x, s)] {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn involution_counts_follow_recurrence() {
    let (mut a, mut b) = (1usize, 1usize);
    for n in 1..=10 {
        assert_eq!(enumerate_involutions(n).unwrap().len(), b, "n = {n}");
        (a, b) = (b, b + n * a);
    }
    assert!(matches!(enumerate_involutions(0), Err(Error::OutOfRange(_))));
    assert!(matches!(enumerate_involutions(11), Err(Error::OutOfRange(_))));
}

#[test]
fn classes_match_double_coset_closure() {
    for n in 1..=5 {
        let all = enumerate_involutions(n).unwrap();
        for comp in compositions(n) {
            let classes = parabolic_class_members(n, &Composition::new(comp.clone()).unwrap()).unwrap();
            let mut expected: Vec<Vec<Involution>> = Vec::new();
            let mut placed = BTreeSet::new();
            for w in &all {
                if placed.contains(w) {
                    continue;
                }
                let coset = double_coset(w.one_line(), &comp);
                let members: Vec<Involution> = all.iter().filter(|v| coset.contains(v.one_line())).cloned().collect();
                placed.extend(members.iter().cloned());
                expected.push(members);
            }
            assert_eq!(classes, expected, "n = {n}, composition {comp:?}");
        }
    }
}

#[test]
fn orbit_dimension_is_a_class_invariant() {
    for n in 1..=4 {
        for comp in compositions(n) {
            let comp = Composition::new(comp).unwrap();
            let classes = parabolic_class_members(n, &comp).unwrap();
            let mut open = 0;
            for class in &classes {
                let dims: BTreeSet<usize> = class.iter().map(|w| orbit_dimension(w, &comp).unwrap()).collect();
                assert_eq!(dims.len(), 1, "{class:?} under {comp:?}");
                let d = *dims.first().unwrap();
                assert!(d <= 2 * n * n);
                open += (d == 2 * n * n) as usize;
            }
            assert_eq!(open, 1, "exactly one open orbit under {comp:?}");
        }
    }
}

#[test]
fn representatives_verify() {
    for n in 1..=6 {
        for w in enumerate_involutions(n).unwrap() {
            assert!(verify_representative(&w), "{w:?}");
        }
    }
}

#[test]
fn mismatched_composition_rejected() {
    let w = Involution::identity(3);
    let comp = Composition::new(vec![1, 1]).unwrap();
    assert!(matches!(orbit_dimension(&w, &comp), Err(Error::DimensionMismatch(_))));
    assert!(parabolic_classes(9, &Composition::borel(9)).is_err());
}

proptest! {
    #[test]
    fn involution_serde(pairs in prop::collection::btree_set(0usize..8, 0..8), n in 8usize..=9) {
        let v: Vec<usize> = pairs.into_iter().collect();
        let pairs: Vec<(usize, usize)> = v.chunks_exact(2).map(|c| (c[0] + 1, c[1] + 1)).collect();
        let w = Involution::from_transpositions(n, &pairs).unwrap();
        prop_assert_eq!(w.transpositions().len(), pairs.len());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Involution>(&json).unwrap(), w);
    }
}

#[test]
fn non_involution_rejected() {
    assert!(serde_json::from_str::<Involution>("[2, 3, 1]").is_err());
    assert!(serde_json::from_str::<Involution>("[1, 4]").is_err());
}
