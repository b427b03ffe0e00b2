//! Pricing and analytics for lifetime income annuities with money-back
//! guarantees, under parametric (Gompertz or exponential) mortality and a
//! flat valuation rate.
//!
//! Three products are covered, all paying $1 per year in continuous time:
//!
//! - **Life-only (LO)**: payments stop at death. Priced by a single
//!   integral, with a Gompertz closed form via the incomplete gamma.
//! - **Cash refund (CR)**: the beneficiary receives the premium minus
//!   payments to date as a lump sum. The premium appears on both sides of
//!   the valuation equation, so the price is a fixed point — and with a
//!   proportional loading it can fail to exist below a threshold rate or
//!   above a threshold age.
//! - **Instalment refund (IR)**: payments continue to the beneficiary until
//!   the premium has been returned; the guarantee period equals the price.
//!
//! Beyond prices: viability frontiers for loaded cash refunds, analytic
//! age/rate sensitivities with two distinct duration notions, money's-worth
//! ratios against market quotes, and brute-force Monte Carlo / discrete-time
//! oracles for cross-validation.
//!
//! ```
//! use income_annuity::mortality::MortalityLaw;
//! use income_annuity::pricing::{self, ProductKind, ProductSpec, ValuationContext};
//!
//! let law = MortalityLaw::gompertz(90.0, 10.0)?;
//! let ctx = ValuationContext::new(law);
//! let spec = ProductSpec::new(ProductKind::CashRefund, 65.0, 0.02, 0.0)?;
//! let result = pricing::price(&ctx, &spec)?;
//! let price = result.require_price()?;
//! assert!((price - 19.5447).abs() < 1e-3);
//! # Ok::<(), income_annuity::error::AnnuityError>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! thin `annuity` binary exposes the same functionality as subcommands.

pub mod config;
pub mod error;
pub mod mortality;
pub mod mwr;
pub mod oracle;
pub mod pricing;
pub mod quadrature;
pub mod report;
pub mod sensitivity;
pub mod special;
pub mod viability;

pub use error::{AnnuityError, Result};
pub use mortality::MortalityLaw;
pub use pricing::{PriceResult, ProductKind, ProductSpec, ValuationContext};
