//! The valuation core: life-only prices in closed form and by quadrature,
//! and the recursive cash-refund / instalment-refund prices solved as fixed
//! points by bisection.
//!
//! Everything is built from two functions of a candidate price `α`:
//!
//! ```text
//! F(α) = ∫_α^∞ e^(-rt) · tpx dt          (deferred life annuity value)
//! G(α) = ∫_0^α e^(-rt) · r(α−t) · tpx dt (interest thrown off by the
//!                                          refundable account)
//! ```
//!
//! With `δ = π/(1+π)`, a cash-refund annuity loaded by `π` is viable at
//! price `α` when `δα + F(α) = G(α)`; it has a solution iff `δ < r·a(x,r)`.
//! An instalment-refund annuity solves `α/(1+π) = H(α)` with
//! `H(α) = (1−e^(-rα))/r + F(α)`, which has a solution for every `r > 0`.

use std::fmt;

use serde::Serialize;

use crate::error::{AnnuityError, Result};
use crate::mortality::MortalityLaw;
use crate::quadrature::{
    bisect_fallible, integrate_finite, truncation_point, BisectionSettings, QuadratureSettings,
};
use crate::special::upper_incomplete_gamma_exp_scaled;

/// Relative guard band on the viability condition `δ < r·a_x`; inputs at or
/// inside the band are reported non-viable, matching the strict inequality.
const VIABILITY_GUARD: f64 = 1e-10;

/// Expanding-bracket cap for the loaded cash-refund solver, as a multiple
/// of `1/r`. A crossing exists whenever the viability condition holds, so
/// the cap only trips on numerical pathology.
const BRACKET_CAP_OVER_RATE: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    LifeOnly,
    InstalmentRefund,
    CashRefund,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            ProductKind::LifeOnly => "LO",
            ProductKind::InstalmentRefund => "IR",
            ProductKind::CashRefund => "CR",
        };
        f.write_str(tag)
    }
}

impl ProductKind {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.to_ascii_uppercase().as_str() {
            "LO" | "LIFEONLY" | "LIFE-ONLY" => Ok(ProductKind::LifeOnly),
            "IR" | "INSTALMENTREFUND" | "INSTALMENT-REFUND" => Ok(ProductKind::InstalmentRefund),
            "CR" | "CASHREFUND" | "CASH-REFUND" => Ok(ProductKind::CashRefund),
            other => Err(AnnuityError::invalid(format!(
                "unknown product kind '{other}' (expected LO, IR, or CR)"
            ))),
        }
    }
}

/// One annuity product: kind, issue age, valuation rate, proportional loading.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ProductSpec {
    pub kind: ProductKind,
    /// Issue age in years.
    pub age: f64,
    /// Continuously-compounded valuation rate per year. May be ≤ 0 only for
    /// life-only products; refund products are non-viable there.
    pub rate: f64,
    /// Proportional loading π ≥ 0 from actuarial value to price.
    pub loading: f64,
}

impl ProductSpec {
    pub fn new(kind: ProductKind, age: f64, rate: f64, loading: f64) -> Result<Self> {
        let spec = Self {
            kind,
            age,
            rate,
            loading,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.age.is_finite() || self.age < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "issue age must be non-negative and finite, got {}",
                self.age
            )));
        }
        if !self.rate.is_finite() {
            return Err(AnnuityError::invalid("valuation rate must be finite"));
        }
        if !self.loading.is_finite() || self.loading < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "loading must be non-negative and finite, got {}",
                self.loading
            )));
        }
        Ok(())
    }

    /// Loaded fraction δ = π/(1+π) of the price absorbed by the insurer.
    pub fn delta(&self) -> f64 {
        self.loading / (1.0 + self.loading)
    }
}

/// Why a product has no price.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum NonViability {
    /// Refund products cannot return the premium when money earns nothing.
    RateAtOrBelowZero,
    /// Loaded cash refund past the frontier: δ ≥ r·a(x,r).
    LoadingAboveFrontier { delta: f64, rate_times_annuity: f64 },
}

impl fmt::Display for NonViability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonViability::RateAtOrBelowZero => f.write_str("rate at or below zero"),
            NonViability::LoadingAboveFrontier {
                delta,
                rate_times_annuity,
            } => write!(
                f,
                "loading fraction {delta:.6} is not below r·a(x,r) = {rate_times_annuity:.6}"
            ),
        }
    }
}

/// A solved (or structurally unsolvable) price.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PriceResult {
    /// Price in dollars per $1/year of lifetime income; `None` when not
    /// viable, in which case it must not be consumed downstream.
    pub price: Option<f64>,
    /// Value of the defining equation at the returned price.
    pub residual: f64,
    pub iterations: u32,
    pub viable: bool,
    pub reason: Option<NonViability>,
}

impl PriceResult {
    fn solved(price: f64, residual: f64, iterations: u32) -> Self {
        Self {
            price: Some(price),
            residual,
            iterations,
            viable: true,
            reason: None,
        }
    }

    fn not_viable(reason: NonViability) -> Self {
        Self {
            price: None,
            residual: 0.0,
            iterations: 0,
            viable: false,
            reason: Some(reason),
        }
    }

    /// The price, or a structured error when the product is not viable.
    pub fn require_price(&self) -> Result<f64> {
        match self.price {
            Some(p) if self.viable => Ok(p),
            _ => Err(AnnuityError::non_viable(
                self.reason
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "no price available".to_string()),
            )),
        }
    }
}

/// Mortality law plus numerical settings; every pricing call takes one.
#[derive(Debug, Clone, Copy)]
pub struct ValuationContext {
    pub law: MortalityLaw,
    pub quadrature: QuadratureSettings,
    pub bisection: BisectionSettings,
}

impl ValuationContext {
    pub fn new(law: MortalityLaw) -> Self {
        Self {
            law,
            quadrature: QuadratureSettings::default(),
            bisection: BisectionSettings::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.quadrature.validate()?;
        self.bisection.validate()
    }
}

/// Discounted annuity-certain `∫_0^τ e^(-rt) dt`, stable through `r = 0`.
pub(crate) fn annuity_certain(rate: f64, tau: f64) -> f64 {
    if rate == 0.0 {
        tau
    } else {
        -(-rate * tau).exp_m1() / rate
    }
}

/// Precomputed evaluation kernel for one `(law, x, r)`: the truncation
/// horizon plus every integral the pricers and sensitivities need.
pub(crate) struct Kernel {
    law: MortalityLaw,
    pub x: f64,
    pub r: f64,
    /// Horizon beyond which `e^(-rt)·tpx` is below the truncation floor.
    pub horizon: f64,
    quadrature: QuadratureSettings,
}

impl Kernel {
    pub fn new(ctx: &ValuationContext, x: f64, r: f64) -> Result<Self> {
        ctx.validate()?;
        if !x.is_finite() || x < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "issue age must be non-negative and finite, got {x}"
            )));
        }
        if !r.is_finite() {
            return Err(AnnuityError::invalid("valuation rate must be finite"));
        }
        if let MortalityLaw::Exponential(e) = &ctx.law {
            if r + e.hazard() <= 0.0 {
                return Err(AnnuityError::invalid(format!(
                    "rate {r} must exceed -λ = {} for the exponential law",
                    -e.hazard()
                )));
            }
        }
        let law = ctx.law;
        let horizon = truncation_point(
            &|t: f64| (-r * t + law.log_survival_raw(x, t)).exp(),
            0.0,
            &ctx.quadrature,
        )?;
        Ok(Self {
            law,
            x,
            r,
            horizon,
            quadrature: ctx.quadrature,
        })
    }

    #[inline]
    pub fn discounted_survival(&self, t: f64) -> f64 {
        (-self.r * t + self.law.log_survival_raw(self.x, t)).exp()
    }

    #[inline]
    pub fn hazard_at(&self, t: f64) -> f64 {
        self.law.hazard_raw(self.x + t)
    }

    /// `a(x,r) = ∫_0^∞ e^(-rt) tpx dt`.
    pub fn life_annuity(&self) -> Result<f64> {
        self.deferred_annuity(0.0)
    }

    /// `F(α) = ∫_α^∞ e^(-rt) tpx dt`.
    pub fn deferred_annuity(&self, alpha: f64) -> Result<f64> {
        if alpha >= self.horizon {
            return Ok(0.0);
        }
        integrate_finite(
            |t| self.discounted_survival(t),
            alpha,
            self.horizon,
            &self.quadrature,
        )
    }

    /// `G(α) = r ∫_0^α e^(-rt) (α−t) tpx dt`. Beyond the horizon the
    /// integrand is below `α` times the truncation floor and is dropped.
    pub fn refund_account_interest(&self, alpha: f64) -> Result<f64> {
        if alpha <= 0.0 {
            return Ok(0.0);
        }
        let hi = alpha.min(self.horizon);
        let v = integrate_finite(
            |t| (alpha - t) * self.discounted_survival(t),
            0.0,
            hi,
            &self.quadrature,
        )?;
        Ok(self.r * v)
    }

    /// `H(α) = (1−e^(-rα))/r + F(α)`: instalment-refund present value.
    pub fn instalment_present_value(&self, alpha: f64) -> Result<f64> {
        Ok(annuity_certain(self.r, alpha) + self.deferred_annuity(alpha)?)
    }

    /// `∫_0^α e^(-rt) tpx dt`.
    pub fn annuity_to(&self, alpha: f64) -> Result<f64> {
        integrate_finite(
            |t| self.discounted_survival(t),
            0.0,
            alpha.min(self.horizon),
            &self.quadrature,
        )
    }

    /// `∫_α^∞ t e^(-rt) tpx dt`.
    pub fn time_weighted_tail(&self, alpha: f64) -> Result<f64> {
        if alpha >= self.horizon {
            return Ok(0.0);
        }
        integrate_finite(
            |t| t * self.discounted_survival(t),
            alpha,
            self.horizon,
            &self.quadrature,
        )
    }

    /// `∂G/∂r = ∫_0^α e^(-rt) (α−t) (1−rt) tpx dt`.
    pub fn refund_interest_rate_partial(&self, alpha: f64) -> Result<f64> {
        if alpha <= 0.0 {
            return Ok(0.0);
        }
        integrate_finite(
            |t| (alpha - t) * (1.0 - self.r * t) * self.discounted_survival(t),
            0.0,
            alpha.min(self.horizon),
            &self.quadrature,
        )
    }
}

/// Life-only income annuity price `a(x,r)` by quadrature. Always viable.
pub fn loia_price(ctx: &ValuationContext, age: f64, rate: f64) -> Result<PriceResult> {
    let kernel = Kernel::new(ctx, age, rate)?;
    let price = kernel.life_annuity()?;
    Ok(PriceResult::solved(price, 0.0, 0))
}

/// Gompertz life-only closed form
/// `a(x,r) = b · e^z · z^(rb) · Γ(−rb, z)` with `z = e^((x−m)/b)`.
pub fn loia_price_gompertz_closed_form(m: f64, b: f64, x: f64, r: f64) -> Result<f64> {
    crate::mortality::GompertzLaw::new(m, b)?;
    if x.is_nan() || x < 0.0 || !r.is_finite() {
        return Err(AnnuityError::invalid(
            "age must be non-negative and rate finite",
        ));
    }
    let z = ((x - m) / b).exp();
    let shape = -r * b;
    // z^(rb) = e^(r(x−m)); pairing it with the exp-scaled gamma keeps every
    // factor representable at extreme ages.
    let scaled = upper_incomplete_gamma_exp_scaled(shape, z)?;
    Ok(b * (r * (x - m)).exp() * scaled)
}

/// Price of an annuity guaranteed for `tau` years regardless of survival:
/// an annuity-certain plus a deferred life annuity.
pub fn period_certain_price(ctx: &ValuationContext, age: f64, rate: f64, tau: f64) -> Result<f64> {
    if tau.is_nan() || tau < 0.0 {
        return Err(AnnuityError::invalid(format!(
            "guarantee period must be non-negative, got {tau}"
        )));
    }
    let kernel = Kernel::new(ctx, age, rate)?;
    Ok(annuity_certain(rate, tau) + kernel.deferred_annuity(tau)?)
}

/// Price `A(x,r)` of $1 paid at death, via the identity `A + r·a = 1`.
pub fn insurance_price(ctx: &ValuationContext, age: f64, rate: f64) -> Result<f64> {
    let a = loia_price(ctx, age, rate)?.require_price()?;
    Ok(1.0 - rate * a)
}

/// Mortality credits `1/a − r = A/a`, the survivors' excess yield.
pub fn mortality_credits(ctx: &ValuationContext, age: f64, rate: f64) -> Result<f64> {
    let a = loia_price(ctx, age, rate)?.require_price()?;
    Ok(1.0 / a - rate)
}

/// Cash-refund price: solves `δα + F(α) = G(α)`. Returns a structured
/// non-viable result at `r ≤ 0`, or when the loading exceeds the frontier.
pub fn cria_price(ctx: &ValuationContext, spec: &ProductSpec) -> Result<PriceResult> {
    spec.validate()?;
    if spec.kind != ProductKind::CashRefund {
        return Err(AnnuityError::invalid(format!(
            "cria_price requires a cash-refund spec, got {}",
            spec.kind
        )));
    }
    if spec.rate <= 0.0 {
        return Ok(PriceResult::not_viable(NonViability::RateAtOrBelowZero));
    }
    let kernel = Kernel::new(ctx, spec.age, spec.rate)?;
    let delta = spec.delta();
    if delta > 0.0 {
        let rate_times_annuity = spec.rate * kernel.life_annuity()?;
        if delta >= rate_times_annuity * (1.0 - VIABILITY_GUARD) {
            return Ok(PriceResult::not_viable(
                NonViability::LoadingAboveFrontier {
                    delta,
                    rate_times_annuity,
                },
            ));
        }
    }

    let residual = |alpha: f64| -> Result<f64> {
        Ok(delta * alpha + kernel.deferred_annuity(alpha)?
            - kernel.refund_account_interest(alpha)?)
    };

    // Unloaded roots satisfy r·a* < 1; loaded ones approach (1+π)/r away
    // from the frontier and blow up near it, so expand by doubling.
    let cap = BRACKET_CAP_OVER_RATE / spec.rate;
    let mut hi = (1.0 + spec.loading) / spec.rate;
    while residual(hi)? >= 0.0 {
        hi *= 2.0;
        if hi > cap {
            return Err(AnnuityError::numerical(format!(
                "cash-refund bracket expansion exceeded {cap:.3e}"
            )));
        }
    }
    let root = bisect_fallible(residual, 0.0, hi, &ctx.bisection)?;
    if !root.converged {
        return Err(AnnuityError::numerical(format!(
            "cash-refund bisection stalled at residual {:.3e}",
            root.residual
        )));
    }
    Ok(PriceResult::solved(
        root.root,
        root.residual,
        root.iterations,
    ))
}

/// Instalment-refund price: solves `α/(1+π) = H(α)`. Viable for every
/// `r > 0` and any loading.
pub fn iria_price(ctx: &ValuationContext, spec: &ProductSpec) -> Result<PriceResult> {
    spec.validate()?;
    if spec.kind != ProductKind::InstalmentRefund {
        return Err(AnnuityError::invalid(format!(
            "iria_price requires an instalment-refund spec, got {}",
            spec.kind
        )));
    }
    if spec.rate <= 0.0 {
        return Ok(PriceResult::not_viable(NonViability::RateAtOrBelowZero));
    }
    let kernel = Kernel::new(ctx, spec.age, spec.rate)?;
    let one_plus_pi = 1.0 + spec.loading;
    let residual = |alpha: f64| -> Result<f64> {
        Ok(alpha / one_plus_pi - kernel.instalment_present_value(alpha)?)
    };

    // residual(0) = -a_x < 0 and residual((1+π)/r) > 0 since H < 1/r.
    let cap = BRACKET_CAP_OVER_RATE / spec.rate;
    let mut hi = one_plus_pi / spec.rate;
    while residual(hi)? <= 0.0 {
        hi *= 2.0;
        if hi > cap {
            return Err(AnnuityError::numerical(format!(
                "instalment-refund bracket expansion exceeded {cap:.3e}"
            )));
        }
    }
    let root = bisect_fallible(residual, 0.0, hi, &ctx.bisection)?;
    if !root.converged {
        return Err(AnnuityError::numerical(format!(
            "instalment-refund bisection stalled at residual {:.3e}",
            root.residual
        )));
    }
    Ok(PriceResult::solved(
        root.root,
        root.residual,
        root.iterations,
    ))
}

/// Price any product. Life-only loading is the linear gross-up
/// `â = (1+π)·a`; refund products re-solve their fixed points.
pub fn price(ctx: &ValuationContext, spec: &ProductSpec) -> Result<PriceResult> {
    spec.validate()?;
    match spec.kind {
        ProductKind::LifeOnly => {
            let base = loia_price(ctx, spec.age, spec.rate)?.require_price()?;
            Ok(PriceResult::solved((1.0 + spec.loading) * base, 0.0, 0))
        }
        ProductKind::CashRefund => cria_price(ctx, spec),
        ProductKind::InstalmentRefund => iria_price(ctx, spec),
    }
}

/// Startup guard against survival-exponent sign drift: prices the reference
/// Gompertz(90, 10) contract at (65, 2%) both ways and checks the known
/// value 17.04378.
pub fn convention_self_check() -> Result<()> {
    const REFERENCE: f64 = 17.04378;
    let ctx = ValuationContext::new(MortalityLaw::gompertz(90.0, 10.0)?);
    let by_quadrature = loia_price(&ctx, 65.0, 0.02)?.require_price()?;
    let by_closed_form = loia_price_gompertz_closed_form(90.0, 10.0, 65.0, 0.02)?;
    for (label, value) in [
        ("quadrature", by_quadrature),
        ("closed form", by_closed_form),
    ] {
        if (value - REFERENCE).abs() > 1e-4 {
            return Err(AnnuityError::numerical(format!(
                "survival convention self-check failed: {label} priced {value}, expected {REFERENCE}"
            )));
        }
    }
    Ok(())
}
