//! Age and rate sensitivities across issue ages: life annuity duration
//! versus Macaulay duration, unloaded versus loaded, and the loaded cash
//! refund's counterintuitive positive age derivative near the frontier.
//!
//! ```bash
//! cargo run -p income-annuity --example duration_profiles
//! ```

use income_annuity::error::AnnuityError;
use income_annuity::mortality::MortalityLaw;
use income_annuity::pricing::{ProductKind, ProductSpec, ValuationContext};
use income_annuity::sensitivity::analytic_sensitivities;

fn main() -> income_annuity::Result<()> {
    let ctx = ValuationContext::new(MortalityLaw::gompertz(90.0, 10.0)?);
    let rate = 0.02;

    println!("Life annuity duration Dr = -(∂price/∂r)/price by issue age, r={rate}");
    println!("(unloaded)");
    println!(
        "{:>6} {:>10} {:>10} {:>10}",
        "age", "life-only", "instalment", "cash-ref"
    );
    for age in [40.0, 55.0, 65.0, 75.0, 85.0] {
        let mut cells = Vec::new();
        for kind in [
            ProductKind::LifeOnly,
            ProductKind::InstalmentRefund,
            ProductKind::CashRefund,
        ] {
            let spec = ProductSpec::new(kind, age, rate, 0.0)?;
            cells.push(analytic_sensitivities(&ctx, &spec)?.life_annuity_duration);
        }
        println!(
            "{:>6} {:>10.3} {:>10.3} {:>10.3}",
            age, cells[0], cells[1], cells[2]
        );
    }

    println!();
    println!("Loaded cash refund (loading 15%): duration and age derivative");
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "age", "Dr (years)", "Macaulay", "∂price/∂age"
    );
    for age in [65.0, 75.0, 78.0, 80.0, 84.0, 86.0] {
        let spec = ProductSpec::new(ProductKind::CashRefund, age, rate, 0.15)?;
        match analytic_sensitivities(&ctx, &spec) {
            Ok(report) => println!(
                "{:>6} {:>12.2} {:>12.3} {:>+12.4}",
                age, report.life_annuity_duration, report.macaulay_duration, report.d_price_d_age
            ),
            Err(AnnuityError::NonViable { reason }) => {
                println!("{age:>6} {reason:>38}");
            }
            Err(other) => return Err(other),
        }
    }
    println!();
    println!("Dr outgrows Macaulay because the refund amount itself moves with");
    println!("the rate; past ~age 78 aging makes the loaded contract dearer.");
    Ok(())
}
