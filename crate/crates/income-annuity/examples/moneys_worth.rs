//! Money's-worth ratios for a small set of observed quotes: model value
//! per premium dollar, sex-specific Gompertz mortality, and the implied
//! rate at which each quote would be exactly fair.
//!
//! ```bash
//! cargo run -p income-annuity --example moneys_worth
//! ```

use income_annuity::mwr::{implied_fair_rate, moneys_worth, MarketQuote, MwrContext, Sex};
use income_annuity::pricing::ProductKind;

fn main() -> income_annuity::Result<()> {
    // July-2021-era single-premium quotes: $100,000 premium, annual income
    let quotes = [
        ("65 M", 65.0, Sex::Male, ProductKind::LifeOnly, 5844.0),
        ("65 M", 65.0, Sex::Male, ProductKind::CashRefund, 5280.0),
        ("65 F", 65.0, Sex::Female, ProductKind::LifeOnly, 5556.0),
        ("65 F", 65.0, Sex::Female, ProductKind::CashRefund, 5112.0),
        ("80 M", 80.0, Sex::Male, ProductKind::LifeOnly, 10524.0),
        ("80 M", 80.0, Sex::Male, ProductKind::CashRefund, 7788.0),
        ("80 F", 80.0, Sex::Female, ProductKind::LifeOnly, 9636.0),
        ("80 F", 80.0, Sex::Female, ProductKind::CashRefund, 7428.0),
    ];

    // Gompertz m=90 (male) / m=92 (female), b=10; 2% valuation rate
    let ctx = MwrContext::default();
    let rate = 0.02;

    println!("Money's worth at r={rate} (ratio > 1 favors the buyer):");
    println!(
        "{:<6} {:<5} {:>10} {:>10} {:>8} {:>12}",
        "quote", "kind", "P/C", "model", "MWR", "fair rate"
    );
    for (label, age, sex, kind, income) in quotes {
        let quote = MarketQuote::new(label, age, sex, kind, 100_000.0, income)?;
        let result = moneys_worth(&ctx, &quote, rate)?;
        let fair = implied_fair_rate(&ctx, &quote)?;
        println!(
            "{:<6} {:<5} {:>10.4} {:>10.4} {:>8.3} {:>12}",
            label,
            kind.to_string(),
            result.empirical_price,
            result.model_price,
            result.mwr,
            fair.map(|r| format!("{:.3}%", r * 100.0))
                .unwrap_or_else(|| "none".into()),
        );
    }

    println!();
    println!("Under the same mortality basis the cash-refund quotes carry");
    println!("uniformly higher ratios than the life-only quotes.");
    Ok(())
}
