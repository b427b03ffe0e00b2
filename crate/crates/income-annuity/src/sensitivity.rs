//! Analytic first-order sensitivities in age and rate, the two duration
//! notions, and the exponential-mortality asymptotic expansions.
//!
//! Life annuity duration is the relative rate sensitivity
//! `Dr[a] = −(∂a/∂r)/a` of the *solved* price, obtained by implicit
//! differentiation of each product's defining equation. Macaulay duration
//! instead holds the cash flows fixed and differentiates their present
//! value; for refund products the two disagree because the refund amount
//! itself moves with the rate.
//!
//! No finite differencing here — near the viability frontier the price
//! blows up and differences are meaningless, while the implicit-function
//! formulas degrade into an explicit blow-up signal.

use serde::Serialize;

use crate::error::{AnnuityError, Result};
use crate::pricing::{self, Kernel, ProductKind, ProductSpec, ValuationContext};

/// Denominators this close to zero mean the defining equation's crossing is
/// tangent: duration has blown up.
const BLOW_UP_GUARD: f64 = 1e-10;

/// First-order sensitivities of one product's price.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SensitivityReport {
    /// The solved price the derivatives are evaluated at.
    pub price: f64,
    /// ∂price/∂x per year of issue age.
    pub d_price_d_age: f64,
    /// ∂price/∂r per unit of valuation rate.
    pub d_price_d_rate: f64,
    /// `−(∂price/∂r)/price`, in years.
    pub life_annuity_duration: f64,
    /// Present-value-weighted mean arrival time of the *fixed* cash flows.
    pub macaulay_duration: f64,
}

/// Which end of the rate axis an expansion targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AsymptoticRegime {
    RateToZero,
    RateToInfinity,
}

/// Two-term expansion of price and life annuity duration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AsymptoticExpansion {
    pub price: f64,
    pub life_annuity_duration: f64,
}

/// All four sensitivities for a viable product, from the closed-form
/// implicit derivatives evaluated at the solved price.
pub fn analytic_sensitivities(
    ctx: &ValuationContext,
    spec: &ProductSpec,
) -> Result<SensitivityReport> {
    spec.validate()?;
    let solved = pricing::price(ctx, spec)?.require_price()?;
    let kernel = Kernel::new(ctx, spec.age, spec.rate)?;
    let one_plus_pi = 1.0 + spec.loading;
    let hazard_at_issue = kernel.hazard_at(0.0);

    match spec.kind {
        ProductKind::LifeOnly => {
            let base = solved / one_plus_pi;
            let d_base_d_rate = -kernel.time_weighted_tail(0.0)?;
            let d_base_d_age = -(1.0 - (spec.rate + hazard_at_issue) * base);
            let duration = -d_base_d_rate / base;
            Ok(SensitivityReport {
                price: solved,
                d_price_d_age: one_plus_pi * d_base_d_age,
                d_price_d_rate: one_plus_pi * d_base_d_rate,
                life_annuity_duration: duration,
                // loading cancels; for fixed lifetime cash flows Macaulay
                // and life annuity duration coincide
                macaulay_duration: duration,
            })
        }
        ProductKind::CashRefund => {
            let alpha = solved;
            let delta = spec.delta();
            let survival_at_alpha = kernel.discounted_survival(alpha);
            let annuity_to_alpha = kernel.annuity_to(alpha)?;

            // ∂(δα + F − G)/∂α; tangency here is the duration blow-up
            let d_alpha = delta - survival_at_alpha - spec.rate * annuity_to_alpha;
            if d_alpha.abs() <= BLOW_UP_GUARD {
                return Err(AnnuityError::DurationBlowUp {
                    age: spec.age,
                    rate: spec.rate,
                });
            }

            let d_fg_d_rate =
                -kernel.time_weighted_tail(alpha)? - kernel.refund_interest_rate_partial(alpha)?;
            // ∂(F−G)/∂x after integration by parts, with F−G = −δα at the root
            let d_fg_d_age = spec.rate * alpha - survival_at_alpha - spec.rate * annuity_to_alpha
                + (spec.rate + hazard_at_issue) * (-delta * alpha);

            let d_price_d_rate = -d_fg_d_rate / d_alpha;
            let d_price_d_age = -d_fg_d_age / d_alpha;
            Ok(SensitivityReport {
                price: solved,
                d_price_d_age,
                d_price_d_rate,
                life_annuity_duration: -d_price_d_rate / alpha,
                macaulay_duration: -(one_plus_pi / alpha) * d_fg_d_rate,
            })
        }
        ProductKind::InstalmentRefund => {
            let alpha = solved;
            let survival_at_alpha = kernel.discounted_survival(alpha);
            let d_h_d_alpha = (-spec.rate * alpha).exp() - survival_at_alpha;
            let denom = 1.0 / one_plus_pi - d_h_d_alpha;
            if denom.abs() <= BLOW_UP_GUARD {
                return Err(AnnuityError::DurationBlowUp {
                    age: spec.age,
                    rate: spec.rate,
                });
            }

            let d_h_d_rate =
                d_annuity_certain_d_rate(spec.rate, alpha) - kernel.time_weighted_tail(alpha)?;
            let d_h_d_age = -survival_at_alpha
                + (spec.rate + hazard_at_issue) * kernel.deferred_annuity(alpha)?;

            let d_price_d_rate = d_h_d_rate / denom;
            let d_price_d_age = d_h_d_age / denom;
            Ok(SensitivityReport {
                price: solved,
                d_price_d_age,
                d_price_d_rate,
                life_annuity_duration: -d_price_d_rate / alpha,
                macaulay_duration: -(one_plus_pi / alpha) * d_h_d_rate,
            })
        }
    }
}

/// Macaulay duration alone (fixed cash flows). Equals life annuity duration
/// for life-only products and generally differs for refunds.
pub fn macaulay_duration(ctx: &ValuationContext, spec: &ProductSpec) -> Result<f64> {
    Ok(analytic_sensitivities(ctx, spec)?.macaulay_duration)
}

/// `∂/∂r [(1 − e^(-rα))/r] = (e^(-rα)(1 + rα) − 1)/r²`, with a series
/// branch where the direct form cancels catastrophically.
fn d_annuity_certain_d_rate(rate: f64, alpha: f64) -> f64 {
    let x = rate * alpha;
    if x.abs() >= 0.5 {
        return ((-x).exp() * (1.0 + x) - 1.0) / (rate * rate);
    }
    // (1+x)e^(-x) − 1 = Σ_{n≥2} (−1)^n (1−n)/n! xⁿ
    let mut sum = 0.0;
    let mut power = 1.0; // x^(n-2)
    let mut factorial = 1.0; // n!
    let mut sign = 1.0; // (−1)^n
    for n in 2..40u32 {
        factorial *= n as f64;
        let term = sign * (1.0 - n as f64) / factorial * power;
        sum += term;
        if term.abs() < f64::EPSILON * sum.abs().max(1.0) {
            break;
        }
        power *= x;
        sign = -sign;
    }
    alpha * alpha * sum
}

/// Two-term expansions of the exponential-mortality price and life annuity
/// duration, per product, at either end of the rate axis.
///
/// Life-only is exact (`1/(r+λ)`) in both regimes. The refund expansions
/// are only meaningful well inside their regime: rates near 1 are rejected.
pub fn asymptotic_price_exponential(
    kind: ProductKind,
    lambda: f64,
    rate: f64,
    regime: AsymptoticRegime,
) -> Result<AsymptoticExpansion> {
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(AnnuityError::invalid(format!(
            "exponential hazard must be positive, got {lambda}"
        )));
    }
    if !rate.is_finite() || rate <= 0.0 {
        return Err(AnnuityError::invalid(format!(
            "expansion rate must be positive, got {rate}"
        )));
    }
    if kind == ProductKind::LifeOnly {
        let exact = 1.0 / (rate + lambda);
        return Ok(AsymptoticExpansion {
            price: exact,
            life_annuity_duration: exact,
        });
    }
    match regime {
        AsymptoticRegime::RateToZero => {
            // needs log log(1/r) > 0, i.e. r < 1/e
            if rate >= (-1.0f64).exp() {
                return Err(AnnuityError::invalid(format!(
                    "rate {rate} is outside the r→0 expansion's validity range (r < 1/e)"
                )));
            }
            let big_l = (1.0 / rate).ln();
            let log_l = big_l.ln();
            let (price, duration) = match kind {
                ProductKind::CashRefund => (
                    (big_l - log_l) / lambda,
                    (1.0 + log_l / big_l) / (rate * big_l),
                ),
                ProductKind::InstalmentRefund => (
                    (big_l - 2.0 * log_l) / lambda,
                    (1.0 + 2.0 * log_l / big_l) / (rate * big_l),
                ),
                ProductKind::LifeOnly => unreachable!(),
            };
            Ok(AsymptoticExpansion {
                price,
                life_annuity_duration: duration,
            })
        }
        AsymptoticRegime::RateToInfinity => {
            if rate < 1.0 {
                return Err(AnnuityError::invalid(format!(
                    "rate {rate} is outside the r→∞ expansion's validity range (r ≥ 1)"
                )));
            }
            let coefficient = match kind {
                ProductKind::CashRefund => 1.0 - (-1.0f64).exp(),
                ProductKind::InstalmentRefund => 2.0 * (-1.0f64).exp(),
                ProductKind::LifeOnly => unreachable!(),
            };
            let value = (1.0 - (lambda / rate) * coefficient) / rate;
            Ok(AsymptoticExpansion {
                price: value,
                life_annuity_duration: value,
            })
        }
    }
}
