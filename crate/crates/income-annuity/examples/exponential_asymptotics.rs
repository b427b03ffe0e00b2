//! Constant-hazard mortality admits two-term expansions of refund prices
//! and durations at both ends of the rate axis. Compare them against the
//! exact fixed-point prices.
//!
//! ```bash
//! cargo run -p income-annuity --example exponential_asymptotics
//! ```

use income_annuity::mortality::MortalityLaw;
use income_annuity::pricing::{self, ProductKind, ProductSpec, ValuationContext};
use income_annuity::sensitivity::{asymptotic_price_exponential, AsymptoticRegime};

fn main() -> income_annuity::Result<()> {
    let lambda = 0.02;
    let ctx = ValuationContext::new(MortalityLaw::exponential(lambda)?);

    println!("Exponential mortality λ = {lambda}: cash-refund price, exact vs expansion");
    println!(
        "{:>8} {:>14} {:>14} {:>10}",
        "rate", "exact", "two-term", "rel err"
    );
    for (rate, regime) in [
        (1e-3, AsymptoticRegime::RateToZero),
        (1e-4, AsymptoticRegime::RateToZero),
        (1e-5, AsymptoticRegime::RateToZero),
        (5.0, AsymptoticRegime::RateToInfinity),
        (10.0, AsymptoticRegime::RateToInfinity),
        (20.0, AsymptoticRegime::RateToInfinity),
    ] {
        let spec = ProductSpec::new(ProductKind::CashRefund, 60.0, rate, 0.0)?;
        let exact = pricing::price(&ctx, &spec)?.require_price()?;
        let approx =
            asymptotic_price_exponential(ProductKind::CashRefund, lambda, rate, regime)?.price;
        println!(
            "{:>8e} {:>14.6} {:>14.6} {:>10.2e}",
            rate,
            exact,
            approx,
            ((approx - exact) / exact).abs()
        );
    }

    println!();
    println!("Price ordering at a high rate (r = 10): CR > IR > LO");
    for kind in [
        ProductKind::CashRefund,
        ProductKind::InstalmentRefund,
        ProductKind::LifeOnly,
    ] {
        let spec = ProductSpec::new(kind, 60.0, 10.0, 0.0)?;
        let exact = pricing::price(&ctx, &spec)?.require_price()?;
        println!("  {kind}: {exact:.8}");
    }

    println!();
    println!("As the rate falls, refund prices grow like log(1/r)/λ while the");
    println!("life-only price stays below 1/λ = {}", 1.0 / lambda);
    Ok(())
}
