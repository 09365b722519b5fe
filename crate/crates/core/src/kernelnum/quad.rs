//! Tanh-sinh (double exponential) quadrature for endpoint singularities, and
//! adaptive Gauss–Kronrod for smooth integrands.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Number of step halvings (tanh-sinh) or the subdivision budget
    /// exponent (Gauss–Kronrod may use up to `2^max_levels` intervals).
    pub max_levels: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { abs_tol: 1e-14, rel_tol: 1e-11, max_levels: 12 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Precondition("quadrature tolerances must be positive".into()));
        }
        if self.max_levels == 0 || self.max_levels > 20 {
            return Err(Error::Precondition("max_levels must lie in 1..=20".into()));
        }
        Ok(())
    }

    fn tolerance(&self, value: Complex64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub levels: usize,
}

/// Beyond this the node complements underflow.
const T_MAX: f64 = 6.5;

/// `∫_a^b f`, where `f(x, x - a, b - x)` receives the distances to both
/// endpoints computed without cancellation.
pub fn tanh_sinh<F>(a: f64, b: f64, cfg: &QuadratureConfig, f: F) -> Result<QuadResult, Error>
where
    F: Fn(f64, f64, f64) -> Complex64,
{
    cfg.validate()?;
    let half = 0.5 * (b - a);
    let node = |t: f64| -> Complex64 {
        let u = FRAC_PI_2 * t.sinh();
        let cu = u.cosh();
        // 1 - tanh(u) and 1 + tanh(u), each without cancellation.
        let (comp_hi, comp_lo) = if u >= 0.0 {
            let c = (-u).exp() / cu;
            (c, 2.0 - c)
        } else {
            let c = u.exp() / cu;
            (2.0 - c, c)
        };
        let da = half * comp_lo;
        let db = half * comp_hi;
        if da <= 0.0 || db <= 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let w = FRAC_PI_2 * t.cosh() / (cu * cu);
        let x = if da < db { a + da } else { b - db };
        let v = f(x, da, db) * w;
        if v.re.is_finite() && v.im.is_finite() {
            v
        } else {
            Complex64::new(0.0, 0.0)
        }
    };

    let mut h = 1.0;
    let mut sum = node(0.0);
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        sum += node(k as f64 * h) + node(-(k as f64) * h);
        k += 1;
    }
    let mut estimate = sum * h * half;
    let mut err = f64::INFINITY;
    for level in 1..=cfg.max_levels {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            sum += node(k as f64 * h) + node(-(k as f64) * h);
            k += 2;
        }
        let next = sum * h * half;
        err = (next - estimate).norm();
        estimate = next;
        if level >= 3 && err <= cfg.tolerance(estimate) {
            return Ok(QuadResult { value: estimate, error_estimate: err, levels: level });
        }
    }
    Err(Error::NoConvergence { estimate: err, levels: cfg.max_levels })
}

const GK_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_W: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
/// Gauss weights for the odd-indexed Kronrod nodes.
const GAUSS_W: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * KRONROD_W[7];
    let mut gauss = fc * GAUSS_W[3];
    for i in 0..7 {
        let dx = h * GK_NODES[i];
        let pair = f(c - dx) + f(c + dx);
        kron += pair * KRONROD_W[i];
        if i % 2 == 1 {
            gauss += pair * GAUSS_W[i / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

/// Globally adaptive 15-point Gauss–Kronrod: bisect the interval with the
/// largest error estimate until the total estimate meets the tolerance.
pub fn gauss_kronrod<F: Fn(f64) -> Complex64>(a: f64, b: f64, cfg: &QuadratureConfig, f: F) -> Result<QuadResult, Error> {
    cfg.validate()?;
    let max_intervals = 1usize << cfg.max_levels;
    let (v, e) = gk15(&f, a, b);
    let mut parts = vec![(a, b, v, e)];
    loop {
        let value: Complex64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        if err <= cfg.tolerance(value) {
            return Ok(QuadResult { value, error_estimate: err, levels: parts.len() });
        }
        if parts.len() >= max_intervals {
            return Err(Error::NoConvergence { estimate: err, levels: parts.len() });
        }
        let worst = (0..parts.len())
            .max_by(|&i, &j| parts[i].3.total_cmp(&parts[j].3))
            .expect("non-empty");
        let (lo, hi, _, _) = parts.swap_remove(worst);
        let m = 0.5 * (lo + hi);
        let (vl, el) = gk15(&f, lo, m);
        let (vr, er) = gk15(&f, m, hi);
        parts.push((lo, m, vl, el));
        parts.push((m, hi, vr, er));
        // Keep the summation order independent of the refinement history.
        parts.sort_by(|x, y| x.0.total_cmp(&y.0));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn smooth_polynomial() {
        let r = tanh_sinh(0.0, 2.0, &cfg(), |x, _, _| Complex64::new(x * x, 0.0)).unwrap();
        assert!((r.value.re - 8.0 / 3.0).abs() < 1e-12);
        let r = gauss_kronrod(0.0, 2.0, &cfg(), |x| Complex64::new(x * x, x)).unwrap();
        assert!((r.value - Complex64::new(8.0 / 3.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let r = tanh_sinh(0.0, 1.0, &cfg(), |_, da, _| Complex64::new(da.powf(-0.5), 0.0)).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-11);
        // ∫_{-1}^{1} (1-x)^{-1/2}(1+x)^{-1/2} dx = π
        let r = tanh_sinh(-1.0, 1.0, &cfg(), |_, da, db| Complex64::new((da * db).powf(-0.5), 0.0)).unwrap();
        assert!((r.value.re - std::f64::consts::PI).abs() < 1e-11);
    }

    #[test]
    fn deterministic() {
        let f = |x: f64| Complex64::new(x.sin().abs().powf(1.3), 0.0);
        let a = gauss_kronrod(0.0, 6.0, &cfg(), f).unwrap();
        let b = gauss_kronrod(0.0, 6.0, &cfg(), f).unwrap();
        assert_eq!(a.value.re.to_bits(), b.value.re.to_bits());
    }

    #[test]
    fn budget_exhaustion_reported() {
        let tight = QuadratureConfig { abs_tol: 1e-300, rel_tol: 1e-300, max_levels: 2 };
        let err = tanh_sinh(0.0, 1.0, &tight, |x, _, _| Complex64::new(x.cos(), 0.0)).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { levels: 2, .. }));
        assert!(QuadratureConfig { abs_tol: 0.0, ..cfg() }.validate().is_err());
    }
}
