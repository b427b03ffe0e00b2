//! Parametric mortality laws and the survival / hazard / density primitives
//! that every valuation integral consumes.
//!
//! Two laws are supported. The Gompertz law has survival
//!
//! ```text
//! tpx = exp{ e^((x-m)/b) * (1 - e^(t/b)) }
//! ```
//!
//! with hazard `λ_s = (1/b) e^((s-m)/b)` (modal age `m`, dispersion `b`),
//! and the exponential law has constant hazard `λ`. Both have almost-surely
//! finite lifetimes, so `∫₀^∞ density(x, t) dt = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{AnnuityError, Result};

/// Gompertz mortality: hazard grows exponentially with attained age.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GompertzLaw {
    /// Modal age at death, years.
    modal_age: f64,
    /// Dispersion coefficient, years.
    dispersion: f64,
}

impl GompertzLaw {
    pub fn new(modal_age: f64, dispersion: f64) -> Result<Self> {
        if !modal_age.is_finite() || modal_age <= 0.0 {
            return Err(AnnuityError::invalid(format!(
                "Gompertz modal age must be positive and finite, got {modal_age}"
            )));
        }
        if !dispersion.is_finite() || dispersion <= 0.0 {
            return Err(AnnuityError::invalid(format!(
                "Gompertz dispersion must be positive and finite, got {dispersion}"
            )));
        }
        Ok(Self {
            modal_age,
            dispersion,
        })
    }

    pub fn modal_age(&self) -> f64 {
        self.modal_age
    }

    pub fn dispersion(&self) -> f64 {
        self.dispersion
    }
}

/// Constant-hazard mortality; lifetimes are exponential and ageless.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentialLaw {
    /// Constant hazard per year.
    hazard: f64,
}

impl ExponentialLaw {
    pub fn new(hazard: f64) -> Result<Self> {
        if !hazard.is_finite() || hazard <= 0.0 {
            return Err(AnnuityError::invalid(format!(
                "exponential hazard must be positive and finite, got {hazard}"
            )));
        }
        Ok(Self { hazard })
    }

    pub fn hazard(&self) -> f64 {
        self.hazard
    }
}

/// A parametric mortality law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MortalityLaw {
    Gompertz(GompertzLaw),
    Exponential(ExponentialLaw),
}

impl MortalityLaw {
    /// Convenience constructor for a validated Gompertz law.
    pub fn gompertz(modal_age: f64, dispersion: f64) -> Result<Self> {
        Ok(MortalityLaw::Gompertz(GompertzLaw::new(
            modal_age, dispersion,
        )?))
    }

    /// Convenience constructor for a validated exponential law.
    pub fn exponential(hazard: f64) -> Result<Self> {
        Ok(MortalityLaw::Exponential(ExponentialLaw::new(hazard)?))
    }

    /// Conditional survival probability `Pr[T_x > t]`.
    ///
    /// Equals 1 at `t = 0` and is monotone non-increasing in `t`.
    pub fn survival_probability(&self, age: f64, horizon: f64) -> Result<f64> {
        if horizon.is_nan() || horizon < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "survival horizon must be non-negative, got {horizon}"
            )));
        }
        if age.is_nan() || age < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "age must be non-negative, got {age}"
            )));
        }
        Ok(self.survival_raw(age, horizon))
    }

    /// Instantaneous force of mortality at attained age `s`.
    pub fn hazard_rate(&self, attained_age: f64) -> Result<f64> {
        if attained_age.is_nan() || attained_age < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "attained age must be non-negative, got {attained_age}"
            )));
        }
        Ok(self.hazard_raw(attained_age))
    }

    /// Lifetime density `f_x(t) = tpx · λ_(x+t)`.
    pub fn density(&self, age: f64, horizon: f64) -> Result<f64> {
        Ok(self.survival_probability(age, horizon)? * self.hazard_rate(age + horizon)?)
    }

    /// Inverse-transform death time: the `t` with `survival(x, t) = u`.
    ///
    /// For Gompertz this is `t = b·ln(1 − ln(u)·e^(−(x−m)/b))`; for the
    /// exponential law `t = −ln(u)/λ`.
    pub fn sample_lifetime(&self, age: f64, uniform: f64) -> Result<f64> {
        if !(uniform > 0.0 && uniform < 1.0) {
            return Err(AnnuityError::invalid(format!(
                "uniform draw must lie strictly inside (0, 1), got {uniform}"
            )));
        }
        if age.is_nan() || age < 0.0 {
            return Err(AnnuityError::invalid(format!(
                "age must be non-negative, got {age}"
            )));
        }
        let t = match self {
            MortalityLaw::Gompertz(g) => {
                // survival = exp(-z·expm1(t/b)) with z = e^((x-m)/b), so
                // expm1(t/b) = -ln(u)/z.
                let z = ((age - g.modal_age) / g.dispersion).exp();
                g.dispersion * (-uniform.ln() / z).ln_1p()
            }
            MortalityLaw::Exponential(e) => -uniform.ln() / e.hazard,
        };
        Ok(t)
    }

    /// Unchecked survival for integrand hot paths; callers guarantee
    /// `age >= 0` and `horizon >= 0`.
    #[inline]
    pub(crate) fn survival_raw(&self, age: f64, horizon: f64) -> f64 {
        self.log_survival_raw(age, horizon).exp()
    }

    /// `ln tpx`; combining this with the discount exponent before a single
    /// `exp` avoids inf·0 when the rate is negative and the horizon long.
    #[inline]
    pub(crate) fn log_survival_raw(&self, age: f64, horizon: f64) -> f64 {
        match self {
            MortalityLaw::Gompertz(g) => {
                let z = ((age - g.modal_age) / g.dispersion).exp();
                -z * (horizon / g.dispersion).exp_m1()
            }
            MortalityLaw::Exponential(e) => -e.hazard * horizon,
        }
    }

    #[inline]
    pub(crate) fn hazard_raw(&self, attained_age: f64) -> f64 {
        match self {
            MortalityLaw::Gompertz(g) => {
                ((attained_age - g.modal_age) / g.dispersion).exp() / g.dispersion
            }
            MortalityLaw::Exponential(e) => e.hazard,
        }
    }
}
