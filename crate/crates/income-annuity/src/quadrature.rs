//! Numerical integration over finite and semi-infinite domains, plus a
//! guarded bisection root finder. These two primitives carry the whole
//! valuation engine.
//!
//! Integration is adaptive Gauss–Kronrod (G7/K15): each interval is scored
//! by the difference between the 15-point Kronrod and embedded 7-point Gauss
//! estimates and split until its share of the error budget is met.
//! Semi-infinite integrals are truncated where a caller-supplied decay
//! envelope falls below `truncation_survival_floor`, then handed to the
//! finite routine.

use serde::{Deserialize, Serialize};

use crate::error::{AnnuityError, Result};

/// NaN-rejecting check for settings that must be strictly positive.
fn nonpositive(value: f64) -> bool {
    !value.is_finite() || value <= 0.0
}

/// Tolerances and budgets for the adaptive integrator.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadratureSettings {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    /// Semi-infinite integrals stop where the decay envelope drops below this.
    pub truncation_survival_floor: f64,
    /// Total interval splits allowed per integral.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-10,
            absolute_tolerance: 1e-12,
            truncation_survival_floor: 1e-14,
            max_subdivisions: 4000,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        if nonpositive(self.relative_tolerance) || nonpositive(self.absolute_tolerance) {
            return Err(AnnuityError::invalid(
                "quadrature tolerances must be positive",
            ));
        }
        if nonpositive(self.truncation_survival_floor) {
            return Err(AnnuityError::invalid("truncation floor must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(AnnuityError::invalid("max_subdivisions must be >= 1"));
        }
        Ok(())
    }
}

/// Stopping rules for [`bisect`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BisectionSettings {
    /// Accept a root once |f(root)| falls below this.
    pub residual_tolerance: f64,
    pub max_iterations: u32,
}

impl Default for BisectionSettings {
    fn default() -> Self {
        Self {
            residual_tolerance: 1e-9,
            max_iterations: 200,
        }
    }
}

impl BisectionSettings {
    pub fn validate(&self) -> Result<()> {
        if nonpositive(self.residual_tolerance) {
            return Err(AnnuityError::invalid(
                "bisection residual tolerance must be positive",
            ));
        }
        if self.max_iterations < 1 {
            return Err(AnnuityError::invalid("max_iterations must be >= 1"));
        }
        Ok(())
    }
}

/// Outcome of a bisection run: the evaluated point with the smallest
/// residual magnitude, which always lies inside the initial bracket.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BisectionResult {
    pub root: f64,
    pub residual: f64,
    pub iterations: u32,
    /// True when |residual| met the tolerance before the iteration cap.
    pub converged: bool,
}

// 15-point Kronrod abscissae on [-1, 1]; odd indices are the embedded
// 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 7] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One G7/K15 panel: returns (kronrod, |kronrod - gauss|).
fn kronrod_panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut gauss = WG[3] * fc;
    let mut kronrod = WGK[7] * fc;
    for (j, &node) in XGK.iter().enumerate() {
        let dx = half * node;
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, (kronrod - gauss).abs() * half)
}

/// Adaptive integral of `f` over the finite interval `[lo, hi]`.
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    settings.validate()?;
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(AnnuityError::invalid(format!(
            "integration bounds must satisfy lo <= hi, got [{lo}, {hi}]"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }

    let (first, first_err) = kronrod_panel(&f, lo, hi);
    let budget = settings
        .absolute_tolerance
        .max(settings.relative_tolerance * first.abs());
    if first_err <= budget {
        return Ok(first);
    }

    // Work stack of (lo, hi, error budget); budgets halve on each split.
    let mut total = 0.0;
    let mut splits = 0usize;
    let mut stack = vec![(lo, hi, budget)];
    while let Some((a, b, tol)) = stack.pop() {
        let (value, err) = kronrod_panel(&f, a, b);
        let width_vanished = (b - a).abs() <= f64::EPSILON * (a.abs() + b.abs()).max(1.0);
        if err <= tol || width_vanished {
            total += value;
            continue;
        }
        splits += 1;
        if splits > settings.max_subdivisions {
            return Err(AnnuityError::numerical(format!(
                "quadrature did not converge within {} subdivisions on [{lo}, {hi}] \
                 (partial estimate {:.6e}, local error {:.3e})",
                settings.max_subdivisions,
                total + value,
                err
            )));
        }
        let mid = 0.5 * (a + b);
        stack.push((a, mid, 0.5 * tol));
        stack.push((mid, b, 0.5 * tol));
    }
    Ok(total)
}

/// Integral of `f` over `[lo, ∞)`, truncated where `envelope` decays below
/// the survival floor. The envelope must dominate the integrand's decay
/// (typically `t ↦ e^(-rt) · tpx`).
pub fn integrate_to_infinity<F, E>(
    f: F,
    lo: f64,
    envelope: E,
    settings: &QuadratureSettings,
) -> Result<f64>
where
    F: Fn(f64) -> f64,
    E: Fn(f64) -> f64,
{
    let hi = truncation_point(&envelope, lo, settings)?;
    integrate_finite(f, lo, hi, settings)
}

/// First horizon past `lo` where the envelope falls below the truncation
/// floor, found by doubling the offset.
pub(crate) fn truncation_point<E: Fn(f64) -> f64>(
    envelope: &E,
    lo: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    settings.validate()?;
    let floor = settings.truncation_survival_floor;
    let mut offset = 1.0;
    for _ in 0..128 {
        let t = lo + offset;
        if envelope(t).abs() < floor {
            return Ok(t);
        }
        offset *= 2.0;
    }
    Err(AnnuityError::numerical(
        "decay envelope never fell below the truncation floor",
    ))
}

/// Bisection root finder on a bracketing interval.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (or one endpoint to
/// already satisfy the residual tolerance). Returns the evaluated point with
/// the smallest |f|; with `converged = false` the tolerance was not met
/// within `max_iterations` and the caller decides what the best point means.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &BisectionSettings,
) -> Result<BisectionResult> {
    bisect_fallible(|x| Ok(f(x)), lo, hi, settings)
}

/// [`bisect`] over a residual that can itself fail (quadrature inside the
/// pricers); the first evaluation error aborts the search.
pub(crate) fn bisect_fallible<F: Fn(f64) -> Result<f64>>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &BisectionSettings,
) -> Result<BisectionResult> {
    settings.validate()?;
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(AnnuityError::invalid(format!(
            "bisection bracket must be finite with lo <= hi, got [{lo}, {hi}]"
        )));
    }
    let tol = settings.residual_tolerance;
    let f_lo = f(lo)?;
    if f_lo.abs() <= tol {
        return Ok(BisectionResult {
            root: lo,
            residual: f_lo,
            iterations: 0,
            converged: true,
        });
    }
    let f_hi = f(hi)?;
    if f_hi.abs() <= tol {
        return Ok(BisectionResult {
            root: hi,
            residual: f_hi,
            iterations: 0,
            converged: true,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(AnnuityError::numerical(format!(
            "no sign change on bracket [{lo}, {hi}]: f(lo) = {f_lo:.6e}, f(hi) = {f_hi:.6e}"
        )));
    }

    let (mut a, mut b, mut f_a) = (lo, hi, f_lo);
    let (mut best, mut best_res) = if f_lo.abs() < f_hi.abs() {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };
    for iteration in 1..=settings.max_iterations {
        let mid = 0.5 * (a + b);
        let f_mid = f(mid)?;
        if f_mid.abs() < best_res.abs() {
            best = mid;
            best_res = f_mid;
        }
        if f_mid.abs() <= tol {
            return Ok(BisectionResult {
                root: mid,
                residual: f_mid,
                iterations: iteration,
                converged: true,
            });
        }
        if f_mid.signum() == f_a.signum() {
            a = mid;
            f_a = f_mid;
        } else {
            b = mid;
        }
    }
    Ok(BisectionResult {
        root: best,
        residual: best_res,
        iterations: settings.max_iterations,
        converged: false,
    })
}
