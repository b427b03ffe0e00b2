//! Reference price grids for all three products over ages × rates,
//! unloaded, printed as aligned tables (the `annuity table` subcommand
//! emits the same grids as CSV/JSON).
//!
//! ```bash
//! cargo run -p income-annuity --example price_tables
//! ```

use income_annuity::mortality::MortalityLaw;
use income_annuity::pricing::{ProductKind, ValuationContext};
use income_annuity::report;

fn main() -> income_annuity::Result<()> {
    let ctx = ValuationContext::new(MortalityLaw::gompertz(90.0, 10.0)?);
    let ages = [55.0, 65.0, 75.0];
    let rates = [0.02, 0.04];

    for (kind, title) in [
        (ProductKind::LifeOnly, "life only"),
        (ProductKind::CashRefund, "cash refund"),
        (ProductKind::InstalmentRefund, "instalment refund"),
    ] {
        println!("{title} prices per $1/yr, Gompertz(90, 10)");
        print!("{:>6}", "age");
        for r in rates {
            print!("{:>12}", format!("r={r}"));
        }
        println!();
        let rows = report::price_table(&ctx, kind, &ages, &rates, 0.0)?;
        for chunk in rows.chunks(rates.len()) {
            print!("{:>6}", chunk[0].age);
            for cell in chunk {
                print!("{:>12.5}", cell.price.expect("unloaded grids are viable"));
            }
            println!();
        }
        println!();
    }

    println!("Incomes per $1,000,000 premium at age 65:");
    for rate in [0.02, 0.03, 0.04] {
        let row = report::price_table(&ctx, ProductKind::CashRefund, &[65.0], &[rate], 0.0)?;
        let price = row[0].price.unwrap();
        println!("  cash refund, r={rate}: {:.2}/yr", 1.0e6 / price);
    }
    Ok(())
}
