//! Where loaded cash refunds stop existing: lowest viable rates by age and
//! loading, the highest viable age at a fixed rate, and the price blow-up
//! approaching the frontier.
//!
//! ```bash
//! cargo run -p income-annuity --example viability_frontier
//! ```

use income_annuity::mortality::MortalityLaw;
use income_annuity::pricing::{cria_price, ProductKind, ProductSpec, ValuationContext};
use income_annuity::viability::{max_viable_age, min_viable_rate, AgeFrontier};

fn main() -> income_annuity::Result<()> {
    let ctx = ValuationContext::new(MortalityLaw::gompertz(90.0, 10.0)?);

    println!("Lowest viable valuation rate (basis points) for a loaded cash refund:");
    let loadings = [0.05, 0.15, 0.25];
    print!("{:>6}", "age");
    for pi in loadings {
        print!("{:>10}", format!("π={pi}"));
    }
    println!();
    for age in [55.0, 65.0, 75.0] {
        print!("{age:>6}");
        for pi in loadings {
            let point = min_viable_rate(&ctx, age, pi)?;
            print!("{:>10.2}", point.threshold * 1e4);
        }
        println!();
    }

    println!();
    let (rate, loading) = (0.02, 0.15);
    match max_viable_age(&ctx, rate, loading)? {
        AgeFrontier::Bounded(point) => println!(
            "At r={rate} with loading {loading}, issues stay viable below age {:.2}.",
            point.threshold
        ),
        AgeFrontier::NeverViable => println!("Not viable at any age."),
    }

    println!();
    println!("Price of the loaded contract as the rate falls toward the threshold");
    println!("(age 65, loading 15%):");
    let threshold = min_viable_rate(&ctx, 65.0, loading)?.threshold;
    for k in 1..=4 {
        let r = threshold * (1.0 + 10f64.powi(-k));
        let spec = ProductSpec::new(ProductKind::CashRefund, 65.0, r, loading)?;
        let price = cria_price(&ctx, &spec)?.require_price()?;
        println!("  r = threshold × (1 + 1e-{k}): price {price:>14.2}");
    }
    let below = ProductSpec::new(ProductKind::CashRefund, 65.0, threshold * 0.999, loading)?;
    let result = cria_price(&ctx, &below)?;
    println!(
        "  r = threshold × 0.999:      viable = {} ({})",
        result.viable,
        result.reason.map(|r| r.to_string()).unwrap_or_default()
    );
    Ok(())
}
