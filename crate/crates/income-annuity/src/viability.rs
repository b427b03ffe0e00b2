//! Feasibility frontier of loaded cash-refund annuities.
//!
//! A cash refund loaded by `π` is viable exactly when `δ = π/(1+π)` lies
//! below `ρ(r) = r·a(x,r)`, and `ρ` increases from 0 to 1 in `r` while
//! `a(x,r)` decreases to 0 in `x`. Each frontier coordinate is therefore a
//! bisection root of `ρ − δ` in the free variable: the minimum viable rate
//! at fixed age, or the maximum viable age at fixed rate.

use serde::Serialize;

use crate::error::{AnnuityError, Result};
use crate::pricing::{Kernel, ValuationContext};
use crate::quadrature::bisect_fallible;

/// Bisection cap for [`max_viable_age`]: Gompertz hazard at this age is so
/// large that `a(x,r)` is numerically zero.
const AGE_CAP: f64 = 150.0;

/// Expansion cap for the rate bracket in [`min_viable_rate`].
const RATE_CAP: f64 = 1e6;

/// One point on the viability frontier.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FrontierPoint {
    /// Threshold value: a rate per year, or an age in years.
    pub threshold: f64,
    /// Residual of the frontier equation `r·a(x,r) − δ` at the threshold.
    pub residual: f64,
}

/// Outcome of the age-frontier search.
#[derive(Debug, Clone, Copy, Serialize)]
pub enum AgeFrontier {
    /// Viable strictly below this age.
    Bounded(FrontierPoint),
    /// `r·a(0,r) ≤ δ`: not viable at any age.
    NeverViable,
}

fn check_loading(loading: f64) -> Result<f64> {
    if !loading.is_finite() || loading <= 0.0 {
        return Err(AnnuityError::invalid(format!(
            "frontier queries need a strictly positive loading, got {loading} \
             (unloaded cash refunds are viable at every positive rate)"
        )));
    }
    Ok(loading / (1.0 + loading))
}

fn rho(ctx: &ValuationContext, age: f64, rate: f64) -> Result<f64> {
    Ok(rate * Kernel::new(ctx, age, rate)?.life_annuity()?)
}

/// Lowest valuation rate at which a cash refund loaded by `loading` is
/// still viable at issue age `age`.
pub fn min_viable_rate(ctx: &ValuationContext, age: f64, loading: f64) -> Result<FrontierPoint> {
    let delta = check_loading(loading)?;
    let residual = |r: f64| -> Result<f64> { Ok(rho(ctx, age, r)? - delta) };

    // ρ increases from 0 toward 1, so expand the upper end until it clears δ.
    let lo = 1e-12;
    let mut hi = 0.01;
    while residual(hi)? <= 0.0 {
        hi *= 2.0;
        if hi > RATE_CAP {
            return Err(AnnuityError::numerical(
                "rate bracket expansion exceeded cap while locating the frontier",
            ));
        }
    }
    let root = bisect_fallible(residual, lo, hi, &ctx.bisection)?;
    if !root.converged {
        return Err(AnnuityError::numerical(
            "frontier rate bisection did not meet the residual tolerance",
        ));
    }
    Ok(FrontierPoint {
        threshold: root.root,
        residual: root.residual,
    })
}

/// Highest issue age at which a cash refund loaded by `loading` is still
/// viable under rate `rate`, or `NeverViable` when no age qualifies.
pub fn max_viable_age(ctx: &ValuationContext, rate: f64, loading: f64) -> Result<AgeFrontier> {
    let delta = check_loading(loading)?;
    if rate.is_nan() || rate <= 0.0 {
        return Err(AnnuityError::invalid(format!(
            "age frontier needs a positive rate, got {rate}"
        )));
    }
    let residual = |x: f64| -> Result<f64> { Ok(rho(ctx, x, rate)? - delta) };
    if residual(0.0)? <= 0.0 {
        return Ok(AgeFrontier::NeverViable);
    }
    if residual(AGE_CAP)? > 0.0 {
        return Err(AnnuityError::numerical(format!(
            "viable beyond the {AGE_CAP}-year search cap; no frontier age located"
        )));
    }
    let root = bisect_fallible(residual, 0.0, AGE_CAP, &ctx.bisection)?;
    if !root.converged {
        return Err(AnnuityError::numerical(
            "frontier age bisection did not meet the residual tolerance",
        ));
    }
    Ok(AgeFrontier::Bounded(FrontierPoint {
        threshold: root.root,
        residual: root.residual,
    }))
}

/// One row of a frontier sweep; failures are recorded, not fatal.
#[derive(Debug, Clone, Serialize)]
pub struct FrontierRow {
    pub age: f64,
    pub loading: f64,
    pub outcome: std::result::Result<FrontierPoint, String>,
}

/// Minimum viable rate for each age in `ages`, sorted by age. Per-cell
/// failures are captured in the row so the sweep always completes.
pub fn frontier_sweep(ctx: &ValuationContext, loading: f64, ages: &[f64]) -> Vec<FrontierRow> {
    let mut sorted = ages.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    sorted
        .into_iter()
        .map(|age| FrontierRow {
            age,
            loading,
            outcome: min_viable_rate(ctx, age, loading).map_err(|e| e.to_string()),
        })
        .collect()
}
