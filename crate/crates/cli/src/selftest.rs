//! Quick invariant suites over the library, small enough to run on demand.

use gldist::cosets::{self, Composition};
use gldist::derivatives::{derivative_necessity_test, MonomialBlock, MonomialRep};
use gldist::distinction::{self, check_condition_i};
use gldist::factors::{self, AdditiveCharacterSpec};
use gldist::kernelnum::{self, QuadratureConfig};
use gldist::ktypes::{self, HighestWeight};
use gldist::{CharacterCx, GaussianRational, LanglandsParameter, Rational, UnitaryBlock, UnitaryRep};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

pub fn run_suites() -> Vec<SuiteResult> {
    let suites: [(&str, fn() -> Outcome); 8] = [
        ("worked examples", worked_examples),
        ("block and parameter criteria", block_agreement),
        ("derivative necessity", derivative_necessity),
        ("epsilon triviality", epsilon_triviality),
        ("K-type oracle", ktype_oracle),
        ("cosets", coset_counts),
        ("special functions", special_functions),
        ("kernel integrals", kernel_integrals),
    ];
    suites
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SuiteResult { name: name.to_string(), passed, detail }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn hw(v: &[i64]) -> HighestWeight {
    HighestWeight::new(v.to_vec()).expect("decreasing")
}

fn worked_examples() -> Outcome {
    let sgn = UnitaryBlock::char(2, 1, GaussianRational::zero()).expect("valid block");
    let cubed = UnitaryRep::new(vec![sgn.clone(); 3]).expect("non-empty");
    let v = distinction::is_distinguished_unitary(&cubed.to_langlands());
    ensure(!v.distinguished && v.condition_i && !v.condition_ii, || format!("sgn^3: {v:?}"))?;
    let squared = UnitaryRep::new(vec![sgn; 2]).expect("non-empty");
    ensure(distinction::is_distinguished_blocks(&squared).distinguished, || "sgn^2 not distinguished".into())?;
    let g4 = LanglandsParameter::new(vec![
        CharacterCx::real(1, q(0, 1)),
        CharacterCx::real(1, q(0, 1)),
        CharacterCx::real(1, q(1, 4)),
        CharacterCx::real(1, q(-1, 4)),
    ]);
    let dmk = ktypes::distinguished_minimal_ktype(&g4).map_err(|e| e.to_string())?;
    ensure(dmk == hw(&[2, 2, 0, 0]), || format!("G_4 example gave {dmk}"))?;
    Ok("sgn^3 fails condition (ii); sgn^2 distinguished; (1,1,1,1) -> (2,2,0,0)".into())
}

/// Multisets of `items` with total size at most `budget`.
fn multisets<T: Clone>(items: &[(T, usize)], budget: usize, visit: &mut impl FnMut(&[T])) {
    fn rec<T: Clone>(items: &[(T, usize)], start: usize, left: usize, cur: &mut Vec<T>, visit: &mut impl FnMut(&[T])) {
        if !cur.is_empty() {
            visit(cur);
        }
        for i in start..items.len() {
            if items[i].1 <= left {
                cur.push(items[i].0.clone());
                rec(items, i, left - items[i].1, cur, visit);
                cur.pop();
            }
        }
    }
    rec(items, 0, budget, &mut Vec::new(), visit);
}

fn small_unitary_blocks() -> Vec<(UnitaryBlock, usize)> {
    let us = [GaussianRational::zero(), GaussianRational::i(), -GaussianRational::i()];
    let mut blocks = Vec::new();
    for k in -1..=1 {
        for u in &us {
            for n in 1..=4 {
                blocks.push((UnitaryBlock::char(n, k, u.clone()).expect("valid block"), n as usize));
            }
            for t in [q(1, 4), q(1, 2)] {
                blocks.push((UnitaryBlock::comp(1, k, u.clone(), t).expect("valid block"), 2));
            }
        }
    }
    blocks
}

fn block_agreement() -> Outcome {
    let mut count = 0;
    let mut bad = None;
    multisets(&small_unitary_blocks(), 4, &mut |bs| {
        let rep = UnitaryRep::new(bs.to_vec()).expect("non-empty");
        let p = rep.to_langlands();
        let a = distinction::is_distinguished_blocks(&rep);
        let b = distinction::is_distinguished_unitary(&p);
        let witness_ok = b.witness.as_ref().map_or(true, |w| w.validate(&p));
        if a.distinguished != b.distinguished || !witness_ok {
            bad.get_or_insert_with(|| format!("{rep:?}"));
        }
        count += 1;
    });
    match bad {
        Some(r) => Err(format!("disagreement at {r}")),
        None => Ok(format!("{count} representations of size <= 4")),
    }
}

fn derivative_necessity() -> Outcome {
    let mut blocks = Vec::new();
    for k in -2..=2 {
        for size in 1..=4u32 {
            blocks.push((MonomialBlock { k, s: GaussianRational::zero(), size }, size as usize));
        }
    }
    let mut checked = 0;
    let mut bad = None;
    multisets(&blocks, 5, &mut |bs| {
        let m = MonomialRep::new(bs.to_vec()).expect("positive sizes");
        let p = m.to_langlands();
        if !check_condition_i(&p).0 {
            return;
        }
        checked += 1;
        if derivative_necessity_test(&m).passes != distinction::check_condition_ii(&p).0 {
            bad.get_or_insert_with(|| format!("{m:?}"));
        }
    });
    match bad {
        Some(m) => Err(format!("derivative test and condition (ii) differ at {m}")),
        None => Ok(format!("{checked} monomials of size <= 5 satisfying condition (i)")),
    }
}

fn epsilon_triviality() -> Outcome {
    let psis: Vec<AdditiveCharacterSpec> = [1, 2]
        .iter()
        .map(|&b| AdditiveCharacterSpec::imaginary(Rational::from_int(b)).expect("b != 0"))
        .collect();
    let half = GaussianRational::real(q(1, 2));
    let mut checked = 0;
    let mut bad = None;
    multisets(&small_unitary_blocks(), 4, &mut |bs| {
        let rep = UnitaryRep::new(bs.to_vec()).expect("non-empty");
        if !distinction::is_distinguished_blocks(&rep).distinguished {
            return;
        }
        let p = rep.to_langlands();
        for psi in &psis {
            if !factors::eps_rep(&p, psi, &half).is_one() {
                bad.get_or_insert_with(|| format!("{rep:?} with b = {}", psi.b()));
            }
        }
        checked += 1;
    });
    let g4 = LanglandsParameter::new(vec![CharacterCx::real(1, q(1, 4)), CharacterCx::real(1, q(-1, 4))]);
    for psi in &psis {
        if !factors::eps_pair(&g4, &g4.conj_inverse(), psi).is_one() {
            bad.get_or_insert_with(|| format!("pair factor with b = {}", psi.b()));
        }
    }
    match bad {
        Some(r) => Err(format!("epsilon is not 1 for {r}")),
        None => Ok(format!("{checked} distinguished representations, b in {{i, 2i}}")),
    }
}

fn ktype_oracle() -> Outcome {
    let slots = [q(0, 1), q(1, 4), q(-1, 4)];
    let mut checked = 0;
    for n in 1..=2usize {
        let chars: Vec<CharacterCx> =
            (-2..=2).flat_map(|m| slots.iter().map(move |s| CharacterCx::real(m, s.clone()))).collect();
        let mut idx = vec![0usize; n];
        loop {
            let p = LanglandsParameter::new(idx.iter().map(|&i| chars[i].clone()).collect());
            if check_condition_i(&p).0 {
                let dmk = ktypes::distinguished_minimal_ktype(&p).map_err(|e| e.to_string())?;
                let oracle = ktypes::minimal_distinguished_ktype_oracle(&p, 6).map_err(|e| e.to_string())?;
                ensure(oracle == [dmk.clone()], || format!("{p:?}: oracle {oracle:?}, formula {dmk}"))?;
                checked += 1;
            }
            // Next non-decreasing index tuple.
            let Some(pos) = (0..n).rev().find(|&j| idx[j] + 1 < chars.len()) else {
                break;
            };
            let v = idx[pos] + 1;
            idx[pos..].iter_mut().for_each(|x| *x = v);
        }
    }
    Ok(format!("{checked} parameters with n <= 2"))
}

fn coset_counts() -> Outcome {
    let telephone = [1, 2, 4, 10, 26];
    for n in 1..=5 {
        let all = cosets::enumerate_involutions(n).map_err(|e| e.to_string())?;
        ensure(all.len() == telephone[n - 1], || format!("{} involutions for n = {n}", all.len()))?;
        ensure(all.iter().all(cosets::verify_representative), || format!("representative check, n = {n}"))?;
    }
    for n in 1..=3 {
        let comp = Composition::new(vec![n, n]).map_err(|e| e.to_string())?;
        let classes = cosets::parabolic_classes(2 * n, &comp).map_err(|e| e.to_string())?;
        ensure(classes.len() == n + 1, || format!("{} classes for ({n},{n})", classes.len()))?;
        let open = classes
            .iter()
            .filter(|w| cosets::is_open_orbit(w, &comp).unwrap_or(false))
            .count();
        ensure(open == 1, || format!("{open} open classes for ({n},{n})"))?;
    }
    Ok("involution counts 1,2,4,10,26; (n,n) classes n+1 with one open".into())
}

fn special_functions() -> Outcome {
    let g = kernelnum::complex_gamma(Complex64::new(0.5, 0.0)).map_err(|e| e.to_string())?;
    let err = (g * g - std::f64::consts::PI).norm();
    ensure(err < 1e-12, || format!("Gamma(1/2)^2 off by {err:e}"))?;
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for a in [0.5, 1.0, 2.5] {
        for b in [0.5, 1.5, 3.0] {
            let r = kernelnum::beta_p(Complex64::new(a, 0.0), Complex64::new(b, 0.5), &cfg).map_err(|e| e.to_string())?;
            worst = worst.max((r.numeric - r.closed).norm() / r.closed.norm());
        }
    }
    ensure(worst < 1e-8, || format!("beta integral relative error {worst:e}"))?;
    Ok(format!("Gamma(1/2)^2 residual {err:.1e}; beta grid relative error {worst:.1e}"))
}

fn kernel_integrals() -> Outcome {
    let cfg = QuadratureConfig::default();
    let s = Complex64::new(0.2, 0.0);
    let c1 = kernelnum::kernel_case1(s, &cfg).map_err(|e| e.to_string())?;
    let c2 = kernelnum::kernel_case2(s, &cfg).map_err(|e| e.to_string())?;
    let worst = c1.rel_err.max(c2.rel_err).max(c1.ratio_err);
    ensure(worst < 1e-6, || format!("kernel relative error {worst:e}"))?;
    Ok(format!("s = 1/5: worst relative error {worst:.1e}"))
}
