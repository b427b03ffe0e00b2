//! Money's-worth ratios: unloaded model values against observed market
//! quotes, plus the rate inversion that finds where a quote is exactly fair.
//!
//! A quote paying `C` per year for premium `P` has empirical price `P/C`
//! per dollar of income; the MWR is `model_price / (P/C)`. Ratios above 1
//! mean the quote delivers more than the model's fair value.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{AnnuityError, Result};
use crate::mortality::{GompertzLaw, MortalityLaw};
use crate::pricing::{self, ProductKind, ProductSpec, ValuationContext};
use crate::quadrature::{bisect_fallible, BisectionSettings, QuadratureSettings};

/// Rate search window for [`implied_fair_rate`].
const RATE_LO: f64 = 1e-6;
const RATE_HI: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sex {
    Male,
    Female,
}

impl Sex {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.trim().to_ascii_uppercase().as_str() {
            "M" | "MALE" => Ok(Sex::Male),
            "F" | "FEMALE" => Ok(Sex::Female),
            other => Err(AnnuityError::invalid(format!(
                "unknown sex tag '{other}' (expected M or F)"
            ))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Sex::Male => "M",
            Sex::Female => "F",
        }
    }
}

/// An observed market quote: premium and annual income for one product.
#[derive(Debug, Clone, Serialize)]
pub struct MarketQuote {
    pub label: String,
    pub age: f64,
    pub sex: Sex,
    pub kind: ProductKind,
    pub premium: f64,
    pub annual_income: f64,
}

impl MarketQuote {
    pub fn new(
        label: impl Into<String>,
        age: f64,
        sex: Sex,
        kind: ProductKind,
        premium: f64,
        annual_income: f64,
    ) -> Result<Self> {
        if premium.is_nan() || premium <= 0.0 || annual_income.is_nan() || annual_income <= 0.0 {
            return Err(AnnuityError::invalid(
                "premium and annual income must both be positive",
            ));
        }
        if age.is_nan() || age < 0.0 {
            return Err(AnnuityError::invalid("quote age must be non-negative"));
        }
        Ok(Self {
            label: label.into(),
            age,
            sex,
            kind,
            premium,
            annual_income,
        })
    }

    /// Empirical price per dollar of lifetime income.
    pub fn empirical_price(&self) -> f64 {
        self.premium / self.annual_income
    }
}

/// Sex-dependent mortality assumptions for quote valuation. The defaults
/// are configurable; nothing downstream hardcodes them.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SexMortality {
    pub male: MortalityLaw,
    pub female: MortalityLaw,
}

impl SexMortality {
    /// Gompertz bases with separate modal ages and a shared dispersion.
    pub fn gompertz(male_modal_age: f64, female_modal_age: f64, dispersion: f64) -> Result<Self> {
        Ok(Self {
            male: MortalityLaw::Gompertz(GompertzLaw::new(male_modal_age, dispersion)?),
            female: MortalityLaw::Gompertz(GompertzLaw::new(female_modal_age, dispersion)?),
        })
    }

    pub fn law_for(&self, sex: Sex) -> MortalityLaw {
        match sex {
            Sex::Male => self.male,
            Sex::Female => self.female,
        }
    }
}

impl Default for SexMortality {
    fn default() -> Self {
        Self::gompertz(90.0, 92.0, 10.0).expect("default mortality basis is valid")
    }
}

/// Mortality basis plus numerical settings for quote valuation.
#[derive(Debug, Clone, Copy)]
pub struct MwrContext {
    pub mortality: SexMortality,
    pub quadrature: QuadratureSettings,
    pub bisection: BisectionSettings,
}

impl MwrContext {
    pub fn new(mortality: SexMortality) -> Self {
        Self {
            mortality,
            quadrature: QuadratureSettings::default(),
            bisection: BisectionSettings::default(),
        }
    }

    fn valuation_ctx(&self, sex: Sex) -> ValuationContext {
        ValuationContext {
            law: self.mortality.law_for(sex),
            quadrature: self.quadrature,
            bisection: self.bisection,
        }
    }
}

impl Default for MwrContext {
    fn default() -> Self {
        Self::new(SexMortality::default())
    }
}

/// Model value, empirical price, and their ratio for one quote.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MwrResult {
    /// Unloaded model price per $1/year at the valuation rate.
    pub model_price: f64,
    /// P/C from the quote.
    pub empirical_price: f64,
    pub mwr: f64,
    /// Filled by [`implied_fair_rate`] when requested.
    pub implied_fair_rate: Option<f64>,
}

fn model_price(ctx: &MwrContext, quote: &MarketQuote, rate: f64) -> Result<f64> {
    let vctx = ctx.valuation_ctx(quote.sex);
    let spec = ProductSpec::new(quote.kind, quote.age, rate, 0.0)?;
    pricing::price(&vctx, &spec)?.require_price()
}

/// Money's worth of a quote at a given valuation rate, against the
/// unloaded model value of the same product kind.
pub fn moneys_worth(ctx: &MwrContext, quote: &MarketQuote, rate: f64) -> Result<MwrResult> {
    let model = model_price(ctx, quote, rate)?;
    let empirical = quote.empirical_price();
    Ok(MwrResult {
        model_price: model,
        empirical_price: empirical,
        mwr: model / empirical,
        implied_fair_rate: None,
    })
}

/// The valuation rate at which the quote's MWR equals 1, if one exists in
/// the search window. Model prices decrease strictly in the rate, so this
/// is a bisection; `None` means the quote is cheaper (or dearer) than the
/// model at every rate in range.
pub fn implied_fair_rate(ctx: &MwrContext, quote: &MarketQuote) -> Result<Option<f64>> {
    let empirical = quote.empirical_price();
    let residual = |r: f64| -> Result<f64> { Ok(model_price(ctx, quote, r)? - empirical) };
    if residual(RATE_LO)? < 0.0 || residual(RATE_HI)? > 0.0 {
        return Ok(None);
    }
    let settings = BisectionSettings {
        residual_tolerance: empirical * 1e-8,
        max_iterations: 200,
    };
    let root = bisect_fallible(residual, RATE_LO, RATE_HI, &settings)?;
    if !root.converged {
        return Err(AnnuityError::numerical(
            "implied-rate bisection did not meet its tolerance",
        ));
    }
    Ok(Some(root.root))
}

/// One row of a batch run: the source line and either a valued quote or
/// the reason that line was skipped.
#[derive(Debug)]
pub struct BatchRow {
    /// 1-based line number in the quote file (header is line 1).
    pub line: u64,
    pub outcome: std::result::Result<(MarketQuote, MwrResult), String>,
}

/// Raw CSV schema: `label,age,sex,kind,premium,annual_income`.
#[derive(Debug, Deserialize)]
struct RawQuote {
    label: String,
    age: f64,
    sex: String,
    kind: String,
    premium: f64,
    annual_income: f64,
}

impl RawQuote {
    fn parse(self) -> Result<MarketQuote> {
        MarketQuote::new(
            self.label,
            self.age,
            Sex::parse(&self.sex)?,
            ProductKind::parse(&self.kind)?,
            self.premium,
            self.annual_income,
        )
    }
}

/// Value every quote in a CSV file at one rate. Malformed rows become
/// error entries; the batch always completes. An unreadable file is the
/// only fatal case.
pub fn mwr_batch(ctx: &MwrContext, path: &Path, rate: f64) -> Result<Vec<BatchRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| AnnuityError::invalid(format!("cannot read quote file: {e}")))?;
    let mut rows = Vec::new();
    for (index, record) in reader.deserialize::<RawQuote>().enumerate() {
        let line = index as u64 + 2; // header occupies line 1
        let outcome = record
            .map_err(|e| e.to_string())
            .and_then(|raw| raw.parse().map_err(|e| e.to_string()))
            .and_then(|quote| match moneys_worth(ctx, &quote, rate) {
                Ok(result) => Ok((quote, result)),
                Err(e) => Err(e.to_string()),
            });
        rows.push(BatchRow { line, outcome });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::io::Write;

    fn quote(label: &str, age: f64, sex: Sex, kind: ProductKind, income: f64) -> MarketQuote {
        MarketQuote::new(label, age, sex, kind, 100_000.0, income).unwrap()
    }

    #[test]
    fn reference_life_only_ratio() {
        let ctx = MwrContext::default();
        let q = quote("65M LO", 65.0, Sex::Male, ProductKind::LifeOnly, 5844.0);
        let res = moneys_worth(&ctx, &q, 0.02).unwrap();
        assert_relative_eq!(
            res.empirical_price,
            100_000.0 / 5844.0,
            max_relative = 1e-12
        );
        assert!((res.mwr - 0.996).abs() < 0.002, "mwr {}", res.mwr);
    }

    #[test]
    fn reference_cash_refund_ratios() {
        let ctx = MwrContext::default();
        let q = quote("65M CR", 65.0, Sex::Male, ProductKind::CashRefund, 5280.0);
        let res = moneys_worth(&ctx, &q, 0.02).unwrap();
        assert!((res.mwr - 1.031).abs() < 0.002, "mwr {}", res.mwr);

        let q = quote("80F CR", 80.0, Sex::Female, ProductKind::CashRefund, 7428.0);
        let res = moneys_worth(&ctx, &q, 0.02).unwrap();
        assert!((res.mwr - 1.033).abs() < 0.002, "mwr {}", res.mwr);
    }

    #[test]
    fn refund_quotes_need_positive_rates() {
        let ctx = MwrContext::default();
        let q = quote("x", 65.0, Sex::Male, ProductKind::CashRefund, 5280.0);
        assert!(matches!(
            moneys_worth(&ctx, &q, 0.0),
            Err(AnnuityError::NonViable { .. })
        ));
    }

    #[test]
    fn synthetic_quote_inverts_to_its_construction_rate() {
        let ctx = MwrContext::default();
        let vctx = ValuationContext::new(ctx.mortality.male);
        let model = pricing::loia_price(&vctx, 65.0, 0.03)
            .unwrap()
            .require_price()
            .unwrap();
        let q = quote(
            "synthetic",
            65.0,
            Sex::Male,
            ProductKind::LifeOnly,
            100_000.0 / model,
        );
        let rate = implied_fair_rate(&ctx, &q).unwrap().unwrap();
        assert!((rate - 0.03).abs() < 1e-8, "rate {rate}");

        let check = moneys_worth(&ctx, &q, rate).unwrap();
        assert!((check.mwr - 1.0).abs() < 1e-8);
    }

    #[test]
    fn reference_quote_implies_a_rate_near_two_percent() {
        let ctx = MwrContext::default();
        let q = quote("65M LO", 65.0, Sex::Male, ProductKind::LifeOnly, 5844.0);
        let rate = implied_fair_rate(&ctx, &q).unwrap().unwrap();
        assert!((rate - 0.02).abs() < 0.005, "rate {rate}");
    }

    #[test]
    fn richer_income_implies_higher_rate() {
        let ctx = MwrContext::default();
        let lean = quote("a", 65.0, Sex::Male, ProductKind::LifeOnly, 5000.0);
        let rich = quote("b", 65.0, Sex::Male, ProductKind::LifeOnly, 6500.0);
        let r_lean = implied_fair_rate(&ctx, &lean).unwrap().unwrap();
        let r_rich = implied_fair_rate(&ctx, &rich).unwrap().unwrap();
        assert!(r_rich > r_lean);
    }

    #[test]
    fn out_of_range_quotes_have_no_fair_rate() {
        let ctx = MwrContext::default();
        // absurdly rich income: P/C below the model value at every rate in range
        let cheap = quote("cheap", 65.0, Sex::Male, ProductKind::LifeOnly, 200_000.0);
        assert!(implied_fair_rate(&ctx, &cheap).unwrap().is_none());
        // absurdly poor income: P/C above the model value even as r → 0
        let dear = quote("dear", 65.0, Sex::Male, ProductKind::LifeOnly, 3_000.0);
        assert!(implied_fair_rate(&ctx, &dear).unwrap().is_none());
    }

    #[test]
    fn batch_continues_past_malformed_rows() {
        let ctx = MwrContext::default();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("quotes.csv");
        let mut file = std::fs::File::create(&path).unwrap();
        writeln!(file, "label,age,sex,kind,premium,annual_income").unwrap();
        writeln!(file, "65M LO,65,M,LO,100000,5844").unwrap();
        writeln!(file, "bad row,65,M,XX,100000,5844").unwrap();
        writeln!(file, "65F CR,65,F,CR,100000,5112").unwrap();
        drop(file);

        let rows = mwr_batch(&ctx, &path, 0.02).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].outcome.is_ok());
        assert!(rows[1].outcome.is_err());
        assert_eq!(rows[1].line, 3);
        assert!(rows[2].outcome.is_ok());
    }

    #[test]
    fn empty_file_yields_empty_report() {
        let ctx = MwrContext::default();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.csv");
        std::fs::write(&path, "label,age,sex,kind,premium,annual_income\n").unwrap();
        assert!(mwr_batch(&ctx, &path, 0.02).unwrap().is_empty());
    }

    #[test]
    fn unreadable_file_is_fatal() {
        let ctx = MwrContext::default();
        assert!(mwr_batch(&ctx, Path::new("/no/such/file.csv"), 0.02).is_err());
    }
}
