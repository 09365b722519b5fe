//! Local ε-factors of characters of `ℂ^×`.
//!
//! For `ψ_b(z) = ψ°(bz)` with `ψ°(z) = exp(2πi·Re z)`,
//! `ε(s, κ_{m,t}, ψ_b) = i^{|m|} · b^m · |b|^{2t - m + s - 1/2}`.
//! Values are kept as `unit · (|b|²)^h` with `unit ∈ ℚ(i)` and `h = e/2`, so
//! comparisons with `±1` stay exact.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactnum::{GaussianRational, Rational};
use crate::params::{CharacterCx, LanglandsParameter};
use crate::Error;

/// The additive character `ψ_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PsiRepr", into = "PsiRepr")]
pub struct AdditiveCharacterSpec {
    b: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct PsiRepr {
    b: GaussianRational,
}

impl TryFrom<PsiRepr> for AdditiveCharacterSpec {
    type Error = Error;
    fn try_from(r: PsiRepr) -> Result<Self, Error> {
        AdditiveCharacterSpec::new(r.b)
    }
}

impl From<AdditiveCharacterSpec> for PsiRepr {
    fn from(p: AdditiveCharacterSpec) -> Self {
        PsiRepr { b: p.b }
    }
}

impl AdditiveCharacterSpec {
    pub fn new(b: GaussianRational) -> Result<Self, Error> {
        if b.is_zero() {
            return Err(Error::Precondition("b must be non-zero".into()));
        }
        Ok(AdditiveCharacterSpec { b })
    }

    /// `ψ_b` for `b = i·β`.
    pub fn imaginary(beta: Rational) -> Result<Self, Error> {
        Self::new(GaussianRational::imag(beta))
    }

    pub fn b(&self) -> &GaussianRational {
        &self.b
    }

    /// `ψ_b` is trivial on `ℝ` exactly when `b` is purely imaginary.
    pub fn trivial_on_r(&self) -> bool {
        self.b.re.is_zero()
    }
}

/// `unit · (abs_b_sq)^{half_exponent}`.
///
/// Normal form: `0 ≤ Re(half_exponent) < 1`, the exponent is zero when the
/// base is one, and a real part `1/2` is absorbed when the base is a
/// rational square. `is_one` is exact on this form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EpsRepr", into = "EpsRepr")]
pub struct ExactEps {
    unit: GaussianRational,
    abs_b_sq: Rational,
    half_exponent: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct EpsRepr {
    unit: GaussianRational,
    abs_b_sq: Rational,
    half_exponent: GaussianRational,
    #[serde(default, skip_deserializing)]
    value: Option<[f64; 2]>,
}

impl TryFrom<EpsRepr> for ExactEps {
    type Error = Error;
    fn try_from(r: EpsRepr) -> Result<Self, Error> {
        ExactEps::new(r.unit, r.abs_b_sq, r.half_exponent)
    }
}

impl From<ExactEps> for EpsRepr {
    fn from(e: ExactEps) -> Self {
        let v = e.to_complex();
        EpsRepr { unit: e.unit, abs_b_sq: e.abs_b_sq, half_exponent: e.half_exponent, value: Some([v.re, v.im]) }
    }
}

impl ExactEps {
    pub fn new(unit: GaussianRational, abs_b_sq: Rational, half_exponent: GaussianRational) -> Result<Self, Error> {
        if abs_b_sq.signum() <= 0 {
            return Err(Error::Precondition(format!("|b|^2 = {abs_b_sq} must be positive")));
        }
        let mut e = ExactEps { unit, abs_b_sq, half_exponent };
        e.normalize();
        Ok(e)
    }

    pub fn one() -> Self {
        ExactEps { unit: GaussianRational::one(), abs_b_sq: Rational::one(), half_exponent: GaussianRational::zero() }
    }

    pub fn unit(&self) -> &GaussianRational {
        &self.unit
    }

    pub fn abs_b_sq(&self) -> &Rational {
        &self.abs_b_sq
    }

    pub fn half_exponent(&self) -> &GaussianRational {
        &self.half_exponent
    }

    /// The exponent `e` in `|b|^e`.
    pub fn modulus_exponent(&self) -> GaussianRational {
        &self.half_exponent + &self.half_exponent
    }

    fn normalize(&mut self) {
        if self.unit.is_zero() || self.abs_b_sq.is_one() {
            self.half_exponent = GaussianRational::zero();
        }
        let k = self.half_exponent.re.floor().to_i64().expect("exponent fits in i64");
        if k != 0 {
            let whole = Rational::from_int(k);
            let factor = self.abs_b_sq.pow(k).expect("positive base");
            self.unit = self.unit.scale(&factor);
            self.half_exponent.re = &self.half_exponent.re - &whole;
        }
        if self.half_exponent.re == Rational::frac(1, 2) {
            if let Some(root) = self.abs_b_sq.sqrt_exact() {
                self.unit = self.unit.scale(&root);
                self.half_exponent.re = Rational::zero();
            }
        }
        if self.half_exponent.is_zero() {
            self.abs_b_sq = Rational::one();
        }
    }

    /// Exact product; both factors must share the base `|b|²` unless one of
    /// them has no modulus part.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        let base = if self.half_exponent.is_zero() {
            other.abs_b_sq.clone()
        } else if other.half_exponent.is_zero() || self.abs_b_sq == other.abs_b_sq {
            self.abs_b_sq.clone()
        } else {
            return Err(Error::Precondition(format!(
                "cannot multiply powers of {} and {} exactly",
                self.abs_b_sq, other.abs_b_sq
            )));
        };
        ExactEps::new(&self.unit * &other.unit, base, &self.half_exponent + &other.half_exponent)
    }

    pub fn is_one(&self) -> bool {
        self.unit.is_one() && self.half_exponent.is_zero()
    }

    pub fn is_minus_one(&self) -> bool {
        self.unit == -GaussianRational::one() && self.half_exponent.is_zero()
    }

    /// The exact value when no irrational modulus factor remains.
    pub fn exact_value(&self) -> Option<&GaussianRational> {
        self.half_exponent.is_zero().then_some(&self.unit)
    }

    pub fn to_complex(&self) -> Complex64 {
        let h = self.half_exponent.to_complex();
        self.unit.to_complex() * (h * self.abs_b_sq.to_f64().ln()).exp()
    }
}

/// `ε(s0, κ_{m,t}, ψ_b)`, with `t` the character's slot `s`.
pub fn eps_character(c: &CharacterCx, psi: &AdditiveCharacterSpec, s0: &GaussianRational) -> ExactEps {
    let unit = &GaussianRational::i_pow(c.m.abs()) * &psi.b.pow(c.m).expect("b is non-zero");
    let e = &(&(&c.s + &c.s) - &GaussianRational::from_int(c.m)) + &(s0 - &GaussianRational::real(Rational::frac(1, 2)));
    let h = e.scale(&Rational::frac(1, 2));
    ExactEps::new(unit, psi.b.norm_sq(), h).expect("|b|^2 > 0")
}

/// `ε(1/2, κ_{m,t}, ψ_b)` for `b = iβ`: `sgn(β)^m |b|^{2t}` times `(-1)^m`
/// when `m > 0`.
pub fn eps_half_trivial_psi(c: &CharacterCx, psi: &AdditiveCharacterSpec) -> Result<ExactEps, Error> {
    if !psi.trivial_on_r() {
        return Err(Error::Precondition(format!("psi_b with b = {} is not trivial on R", psi.b)));
    }
    let mut sign = 1;
    if c.m > 0 && c.m % 2 != 0 {
        sign = -sign;
    }
    if psi.b.im.signum() < 0 && c.m % 2 != 0 {
        sign = -sign;
    }
    ExactEps::new(GaussianRational::from_int(sign), psi.b.norm_sq(), c.s.clone())
}

pub fn eps_rep(p: &LanglandsParameter, psi: &AdditiveCharacterSpec, s0: &GaussianRational) -> ExactEps {
    p.chars()
        .iter()
        .map(|c| eps_character(c, psi, s0))
        .fold(ExactEps::one(), |acc, e| acc.mul(&e).expect("same additive character"))
}

/// `ε(1/2, π × π', ψ)` as the product over all pairs of characters.
pub fn eps_pair(p1: &LanglandsParameter, p2: &LanglandsParameter, psi: &AdditiveCharacterSpec) -> ExactEps {
    let half = GaussianRational::real(Rational::frac(1, 2));
    let mut acc = ExactEps::one();
    for a in p1.chars() {
        for b in p2.chars() {
            acc = acc.mul(&eps_character(&a.product(b), psi, &half)).expect("same additive character");
        }
    }
    acc
}
