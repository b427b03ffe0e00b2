//! Price the three product types for one annuitant and show what a
//! $100,000 premium buys under each.
//!
//! ```bash
//! cargo run -p income-annuity --example quickstart
//! ```

use income_annuity::mortality::MortalityLaw;
use income_annuity::pricing::{self, ProductKind, ProductSpec, ValuationContext};

fn main() -> income_annuity::Result<()> {
    let law = MortalityLaw::gompertz(90.0, 10.0)?;
    let ctx = ValuationContext::new(law);
    let (age, rate) = (65.0, 0.02);
    let premium = 100_000.0;

    println!("Gompertz(m=90, b=10), issue age {age}, valuation rate {rate}");
    println!("{:<20} {:>12} {:>16}", "product", "price", "income / $100k");
    for kind in [
        ProductKind::LifeOnly,
        ProductKind::InstalmentRefund,
        ProductKind::CashRefund,
    ] {
        let spec = ProductSpec::new(kind, age, rate, 0.0)?;
        let price = pricing::price(&ctx, &spec)?.require_price()?;
        println!(
            "{:<20} {:>12.5} {:>15.2}/yr",
            kind.to_string(),
            price,
            premium / price
        );
    }

    println!();
    println!("The cash refund guarantees the estate receives the unreturned");
    println!("premium as a lump sum; the instalment refund keeps paying the");
    println!("beneficiary until the premium is returned. Both cost income.");
    Ok(())
}
