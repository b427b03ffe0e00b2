//! Brute-force valuations used to cross-check the fixed-point pricers:
//! Monte Carlo over sampled lifetimes, and a discrete-time Riemann pricer.
//!
//! Both take a candidate price and value the *payoff written against it*,
//! so agreement means "the fixed point really is a fixed point" rather
//! than re-deriving the fixed point by simulation. Per-$1-of-income payoff
//! for a lifetime ending at `T` and candidate price `α`:
//!
//! ```text
//! LO: ∫_0^T e^(-rs) ds
//! CR: ∫_0^T e^(-rs) ds + (α − T)₊ e^(-rT)
//! IR: ∫_0^max(T,α) e^(-rs) ds
//! ```
//!
//! The expectation of each payoff equals `price/(1+π)` at the solved price.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::{AnnuityError, Result};
use crate::mortality::MortalityLaw;
use crate::pricing::{annuity_certain, ProductKind, ProductSpec};

/// Survival level below which lifetimes no longer matter numerically.
const SURVIVAL_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SimulationSettings {
    pub paths: u64,
    /// Seed for the ChaCha12 generator; identical seeds give bit-identical
    /// estimates (accumulation is strictly sequential).
    pub seed: u64,
    /// Grid spacing for the discrete-time oracle, years.
    pub time_step: f64,
}

impl Default for SimulationSettings {
    fn default() -> Self {
        Self {
            paths: 100_000,
            seed: 0x5EED,
            time_step: 1.0 / 365.0,
        }
    }
}

impl SimulationSettings {
    pub fn validate(&self) -> Result<()> {
        if self.paths < 1 {
            return Err(AnnuityError::invalid("simulation needs at least one path"));
        }
        if self.time_step.is_nan() || self.time_step <= 0.0 {
            return Err(AnnuityError::invalid("time step must be positive"));
        }
        Ok(())
    }
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OracleEstimate {
    pub value: f64,
    pub standard_error: f64,
}

fn check_spec(law: &MortalityLaw, spec: &ProductSpec) -> Result<()> {
    spec.validate()?;
    if spec.kind != ProductKind::LifeOnly && spec.rate <= 0.0 {
        return Err(AnnuityError::invalid("refund payoffs need a positive rate"));
    }
    if let MortalityLaw::Exponential(e) = law {
        if spec.rate + e.hazard() <= 0.0 {
            return Err(AnnuityError::invalid(
                "rate must exceed -λ for the exponential law",
            ));
        }
    }
    Ok(())
}

fn payoff(spec: &ProductSpec, candidate_price: f64, death_time: f64) -> f64 {
    match spec.kind {
        ProductKind::LifeOnly => annuity_certain(spec.rate, death_time),
        ProductKind::CashRefund => {
            annuity_certain(spec.rate, death_time)
                + (candidate_price - death_time).max(0.0) * (-spec.rate * death_time).exp()
        }
        ProductKind::InstalmentRefund => {
            annuity_certain(spec.rate, death_time.max(candidate_price))
        }
    }
}

/// Monte Carlo value of the payoff written at `candidate_price`, via
/// inverse-transform lifetime sampling. Sequential accumulation keeps the
/// estimate bit-identical for a fixed seed.
pub fn mc_value_at_price(
    law: &MortalityLaw,
    spec: &ProductSpec,
    candidate_price: f64,
    sim: &SimulationSettings,
) -> Result<OracleEstimate> {
    sim.validate()?;
    check_spec(law, spec)?;
    if candidate_price.is_nan() || candidate_price < 0.0 {
        return Err(AnnuityError::invalid(
            "candidate price must be non-negative",
        ));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(sim.seed);
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for n in 1..=sim.paths {
        let uniform = loop {
            let u: f64 = rng.gen();
            if u > 0.0 && u < 1.0 {
                break u;
            }
        };
        let death = law.sample_lifetime(spec.age, uniform)?;
        let value = payoff(spec, candidate_price, death);
        // Welford running moments
        let delta = value - mean;
        mean += delta / n as f64;
        m2 += delta * (value - mean);
    }
    let variance = if sim.paths > 1 {
        m2 / (sim.paths - 1) as f64
    } else {
        0.0
    };
    Ok(OracleEstimate {
        value: mean,
        standard_error: (variance / sim.paths as f64).sqrt(),
    })
}

/// Death-time grid: cell probabilities `q_k = p(t_{k-1}) − p(t_k)` out to
/// the horizon where discounted survival is negligible.
struct Grid {
    times: Vec<f64>,
    cell_probabilities: Vec<f64>,
    /// Survivors beyond the last cell.
    tail_probability: f64,
}

fn build_grid(law: &MortalityLaw, age: f64, rate: f64, step: f64) -> Result<Grid> {
    const MAX_CELLS: usize = 50_000_000;
    let mut times = Vec::new();
    let mut cell_probabilities = Vec::new();
    let mut previous = 1.0;
    let mut k = 0usize;
    loop {
        k += 1;
        if k > MAX_CELLS {
            return Err(AnnuityError::numerical(
                "discrete-time grid exceeded its cell budget",
            ));
        }
        let t = k as f64 * step;
        let survival = law.survival_raw(age, t);
        times.push(t);
        cell_probabilities.push(previous - survival);
        previous = survival;
        if (-rate * t).exp() * survival < SURVIVAL_FLOOR {
            break;
        }
    }
    Ok(Grid {
        times,
        cell_probabilities,
        tail_probability: previous,
    })
}

/// Discrete-time price by Riemann discretization of the valuation
/// equations with fixed-point iteration. First-order in the step size;
/// converges to the continuous price as the step shrinks.
pub fn discrete_time_price(law: &MortalityLaw, spec: &ProductSpec, time_step: f64) -> Result<f64> {
    if !time_step.is_finite() || time_step <= 0.0 {
        return Err(AnnuityError::invalid(
            "time step must be positive and finite",
        ));
    }
    check_spec(law, spec)?;
    let one_plus_pi = 1.0 + spec.loading;
    let grid = build_grid(law, spec.age, spec.rate, time_step)?;
    if grid.times.len() < 2 {
        return Err(AnnuityError::invalid(format!(
            "time step {time_step} exceeds every plausible lifetime at this age"
        )));
    }

    if spec.kind == ProductKind::LifeOnly {
        // right-endpoint Riemann sum of the survival integral
        let mut sum = 0.0;
        for &t in &grid.times {
            sum += (-spec.rate * t).exp() * law.survival_raw(spec.age, t);
        }
        return Ok(one_plus_pi * sum * time_step);
    }

    // E[payoff(α)] on the death-time grid, survivors past the horizon
    // collecting the full annuity-certain to the last time.
    let last_time = *grid.times.last().expect("grid is non-empty");
    let expected_payoff = |alpha: f64| -> f64 {
        let mut sum = grid.tail_probability
            * match spec.kind {
                ProductKind::InstalmentRefund => annuity_certain(spec.rate, last_time.max(alpha)),
                _ => annuity_certain(spec.rate, last_time),
            };
        for (&t, &q) in grid.times.iter().zip(&grid.cell_probabilities) {
            sum += q * payoff(spec, alpha, t);
        }
        sum
    };

    // α ← (1+π)·E[payoff(α)] is a contraction away from the frontier.
    let mut alpha = one_plus_pi * expected_payoff(0.0);
    for _ in 0..10_000 {
        let next = one_plus_pi * expected_payoff(alpha);
        let done = (next - alpha).abs() <= 1e-12 * alpha.abs().max(1.0);
        alpha = next;
        if done {
            return Ok(alpha);
        }
    }
    Err(AnnuityError::numerical(
        "discrete-time fixed-point iteration did not converge",
    ))
}
