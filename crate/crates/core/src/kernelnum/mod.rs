//! Numerical checks of the rank-one kernel pairings.
//!
//! The pairing of the kernel `(1/r)^{1+s} |sin θ|^{1+s}` with the minimal
//! K-type vector reduces to
//!
//! * case 1: `∫₀^{2π}∫₀^∞ (1+r²)^{-1-s} r^{-s} |sin θ|^{1+s} dr dθ`,
//! * case 2: `∫₀^{2π}∫₀^∞ (1+r²)^{-2-s} r^{1-s} |sin θ|^{2+s} dr dθ`.
//!
//! With `u = r²` the radial parts are `½B((1-s)/2, (3s+1)/2)` and
//! `½B(1-s/2, (3s+2)/2)`. Each check integrates the double integral
//! directly and compares it with that Beta value times a separately
//! integrated angular factor.

mod gamma;
mod quad;

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::exactnum::GaussianRational;
use crate::Error;

pub use gamma::{complex_beta, complex_gamma};
pub use quad::{gauss_kronrod, tanh_sinh, QuadResult, QuadratureConfig};

/// `P(a, b)` both as `(Γ(a)Γ(b))^{-1} ∫_{-1}^{1} (1-x)^{a-1}(1+x)^{b-1} dx`
/// and in closed form `2^{a+b-1}/Γ(a+b)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BetaP {
    pub numeric: Complex64,
    pub closed: Complex64,
    pub error_estimate: f64,
}

pub fn beta_p_closed(a: Complex64, b: Complex64) -> Result<Complex64, Error> {
    let sum = a + b;
    if sum.im == 0.0 && sum.re <= 0.0 && sum.re.fract() == 0.0 {
        // 1/Γ vanishes at its poles.
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(Complex64::new(2.0, 0.0).powc(sum - 1.0) / complex_gamma(sum)?)
}

pub fn beta_p_numeric(a: Complex64, b: Complex64, cfg: &QuadratureConfig) -> Result<QuadResult, Error> {
    if a.re <= 0.0 || b.re <= 0.0 {
        return Err(Error::Precondition(format!("the integral needs Re a > 0 and Re b > 0 (a = {a}, b = {b})")));
    }
    let norm = complex_gamma(a)? * complex_gamma(b)?;
    let r = tanh_sinh(-1.0, 1.0, cfg, |_, d_lo, d_hi| {
        (d_hi.ln() * (a - 1.0)).exp() * (d_lo.ln() * (b - 1.0)).exp()
    })?;
    Ok(QuadResult { value: r.value / norm, error_estimate: r.error_estimate / norm.norm(), ..r })
}

pub fn beta_p(a: Complex64, b: Complex64, cfg: &QuadratureConfig) -> Result<BetaP, Error> {
    let n = beta_p_numeric(a, b, cfg)?;
    Ok(BetaP { numeric: n.value, closed: beta_p_closed(a, b)?, error_estimate: n.error_estimate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelCase {
    Case1,
    Case2,
}

impl KernelCase {
    /// Open interval for `Re s` on which the double integral converges.
    pub fn strip(self) -> (f64, f64) {
        match self {
            KernelCase::Case1 => (-1.0 / 3.0, 1.0),
            KernelCase::Case2 => (-2.0 / 3.0, 2.0),
        }
    }

    /// Exponent of `|sin θ|`.
    fn angular_power(self, s: Complex64) -> Complex64 {
        match self {
            KernelCase::Case1 => s + 1.0,
            KernelCase::Case2 => s + 2.0,
        }
    }

    /// Radial integrand on `(0, 1]`, and on `[1, ∞)` after `r = 1/x`.
    fn radial(self, s: Complex64, r: f64, inverted: bool) -> Complex64 {
        let ln_r = r.ln();
        let ln_q = (1.0 + r * r).ln();
        let (p, q) = match (self, inverted) {
            (KernelCase::Case1, false) => (-s, -1.0 - s),
            (KernelCase::Case1, true) => (3.0 * s, -1.0 - s),
            (KernelCase::Case2, false) => (1.0 - s, -2.0 - s),
            (KernelCase::Case2, true) => (3.0 * s + 1.0, -2.0 - s),
        };
        (p * ln_r + q * ln_q).exp()
    }

    fn beta_args(self, s: Complex64) -> (Complex64, Complex64) {
        match self {
            KernelCase::Case1 => ((1.0 - s) / 2.0, (3.0 * s + 1.0) / 2.0),
            KernelCase::Case2 => (1.0 - s / 2.0, (3.0 * s + 2.0) / 2.0),
        }
    }
}

/// A sample point and whether each case's integral converges there.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StripDomain {
    pub s: Complex64,
    pub case1: bool,
    pub case2: bool,
}

impl StripDomain {
    pub fn new(s: Complex64) -> Self {
        let inside = |c: KernelCase| {
            let (lo, hi) = c.strip();
            lo < s.re && s.re < hi
        };
        StripDomain { s, case1: inside(KernelCase::Case1), case2: inside(KernelCase::Case2) }
    }

    pub fn valid(&self, case: KernelCase) -> bool {
        match case {
            KernelCase::Case1 => self.case1,
            KernelCase::Case2 => self.case2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelCheck {
    pub case: KernelCase,
    pub s: Complex64,
    /// The double integral, by nested quadrature.
    pub numeric: Complex64,
    /// Beta closed form of the radial part times the angular integral.
    pub reference: Complex64,
    pub rel_err: f64,
    /// `numeric` divided by the closed form as usually displayed,
    /// `2^s Γ(a)Γ(b)/Γ(s+1) · A`; equals `expected_ratio`.
    pub ratio_to_displayed: Complex64,
    /// `2^{-(1+s)}` in case 1 and `2^{-(1+s)}/(1+s)` in case 2.
    pub expected_ratio: Complex64,
    pub ratio_err: f64,
}

/// `∫₀^{2π} |sin θ|^p dθ` by adaptive Gauss–Kronrod on a quarter period.
pub fn angular_integral(p: Complex64, cfg: &QuadratureConfig) -> Result<Complex64, Error> {
    if p.re <= -1.0 {
        return Err(Error::Precondition(format!("|sin θ|^p is not integrable for Re p = {}", p.re)));
    }
    let r = gauss_kronrod(0.0, FRAC_PI_2, cfg, |t| {
        let s = t.sin();
        if s <= 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            (p * s.ln()).exp()
        }
    })?;
    Ok(4.0 * r.value)
}

fn double_integral(case: KernelCase, s: Complex64, cfg: &QuadratureConfig) -> Result<Complex64, Error> {
    let p = case.angular_power(s);
    let radial_at = |theta_weight: Complex64| -> Result<Complex64, Error> {
        let inner = tanh_sinh(0.0, 1.0, cfg, |_, r, _| case.radial(s, r, false) * theta_weight)?;
        let outer = tanh_sinh(0.0, 1.0, cfg, |_, x, _| case.radial(s, x, true) * theta_weight)?;
        Ok(inner.value + outer.value)
    };
    let mut total = Complex64::new(0.0, 0.0);
    for quarter in 0..4 {
        let a = quarter as f64 * FRAC_PI_2;
        // |sin θ| vanishes at the left end of even quarters and the right
        // end of odd ones; take the sine of the distance to that zero.
        let zero_at_left = quarter % 2 == 0;
        let failure = std::cell::Cell::new(None);
        let r = tanh_sinh(a, a + FRAC_PI_2, cfg, |_, da, db| {
            let d = if zero_at_left { da } else { db };
            let w = (p * d.sin().ln()).exp();
            match radial_at(w) {
                Ok(v) => v,
                Err(e) => {
                    failure.set(Some(e));
                    Complex64::new(f64::NAN, 0.0)
                }
            }
        })?;
        if let Some(e) = failure.take() {
            return Err(e);
        }
        total += r.value;
    }
    Ok(total)
}

pub fn kernel_check(case: KernelCase, s: Complex64, cfg: &QuadratureConfig) -> Result<KernelCheck, Error> {
    if !StripDomain::new(s).valid(case) {
        let (lo, hi) = case.strip();
        return Err(Error::Precondition(format!("{case:?} needs {lo:.4} < Re s < {hi} (s = {s})")));
    }
    let numeric = double_integral(case, s, cfg)?;
    let angular = angular_integral(case.angular_power(s), cfg)?;
    let (a, b) = case.beta_args(s);
    let reference = 0.5 * complex_beta(a, b)? * angular;
    let displayed = Complex64::new(2.0, 0.0).powc(s) * complex_gamma(a)? * complex_gamma(b)? / complex_gamma(s + 1.0)? * angular;
    let ratio_to_displayed = numeric / displayed;
    let mut expected_ratio = Complex64::new(2.0, 0.0).powc(-(s + 1.0));
    if case == KernelCase::Case2 {
        expected_ratio /= s + 1.0;
    }
    Ok(KernelCheck {
        case,
        s,
        numeric,
        reference,
        rel_err: (numeric - reference).norm() / reference.norm(),
        ratio_to_displayed,
        expected_ratio,
        ratio_err: (ratio_to_displayed - expected_ratio).norm() / expected_ratio.norm(),
    })
}

pub fn kernel_case1(s: Complex64, cfg: &QuadratureConfig) -> Result<KernelCheck, Error> {
    kernel_check(KernelCase::Case1, s, cfg)
}

pub fn kernel_case2(s: Complex64, cfg: &QuadratureConfig) -> Result<KernelCheck, Error> {
    kernel_check(KernelCase::Case2, s, cfg)
}

/// The induced representation `|·|^s × |·|^{-s}` is irreducible unless `s`
/// is a non-zero integer.
pub fn irreducibility_guard(s: &GaussianRational) -> bool {
    !(s.im.is_zero() && s.re.is_integer() && !s.re.is_zero())
}
