//! Table and sweep builders behind the CLI and examples: price grids,
//! frontier grids, quote-file valuation, one-axis sweeps, and CSV/JSON
//! emission.
//!
//! Non-viable cells are data, not errors — frontier plots need them — so
//! every row carries an explicit `viable` flag and an empty value cell
//! rather than NaN text. Rows are emitted in deterministic grid order and
//! numbers use Rust's shortest round-trip formatting.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{AnnuityError, Result};
use crate::mwr::{self, MwrContext};
use crate::pricing::{self, ProductKind, ProductSpec, ValuationContext};
use crate::sensitivity;
use crate::viability;

/// Which coordinate a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axis {
    Age,
    Rate,
    Loading,
}

impl Axis {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "age" => Ok(Axis::Age),
            "rate" => Ok(Axis::Rate),
            "loading" => Ok(Axis::Loading),
            other => Err(AnnuityError::invalid(format!(
                "unknown axis '{other}' (expected age, rate, or loading)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Axis::Age => "age",
            Axis::Rate => "rate",
            Axis::Loading => "loading",
        }
    }
}

/// Inclusive arithmetic grid along one axis.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepGrid {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SweepGrid {
    pub fn new(axis: Axis, start: f64, stop: f64, step: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(AnnuityError::invalid(format!(
                "grid step must be positive, got {step}"
            )));
        }
        if !start.is_finite() || !stop.is_finite() || start > stop {
            return Err(AnnuityError::invalid(format!(
                "grid needs finite start <= stop, got [{start}, {stop}]"
            )));
        }
        Ok(Self {
            axis,
            start,
            stop,
            step,
        })
    }

    /// Grid points; endpoints are included within half a step.
    pub fn values(&self) -> Vec<f64> {
        let mut points = Vec::new();
        let mut k = 0u64;
        loop {
            let value = self.start + k as f64 * self.step;
            if value > self.stop + 0.5 * self.step {
                break;
            }
            points.push(value.min(self.stop));
            k += 1;
        }
        points
    }
}

/// What a sweep reports at each grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepQuantity {
    Price,
    Duration,
    DAge,
    DRate,
}

impl SweepQuantity {
    pub fn parse(tag: &str) -> Result<Self> {
        match tag.to_ascii_lowercase().as_str() {
            "price" => Ok(SweepQuantity::Price),
            "duration" => Ok(SweepQuantity::Duration),
            "d_age" | "dage" => Ok(SweepQuantity::DAge),
            "d_rate" | "drate" => Ok(SweepQuantity::DRate),
            other => Err(AnnuityError::invalid(format!(
                "unknown sweep quantity '{other}' (expected price, duration, d_age, or d_rate)"
            ))),
        }
    }
}

/// Cells serialize as strings: numbers in shortest round-trip form, `None`
/// as an empty cell.
pub trait TableRow: Serialize {
    fn header() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

pub(crate) fn fmt_f64(value: f64) -> String {
    format!("{value}")
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map(fmt_f64).unwrap_or_default()
}

/// One cell of a price table.
#[derive(Debug, Clone, Serialize)]
pub struct PriceRow {
    pub kind: ProductKind,
    pub age: f64,
    pub rate: f64,
    pub loading: f64,
    pub price: Option<f64>,
    pub viable: bool,
    pub residual: f64,
    pub iterations: u32,
}

impl TableRow for PriceRow {
    fn header() -> Vec<&'static str> {
        vec![
            "kind",
            "age",
            "rate",
            "loading",
            "price",
            "viable",
            "residual",
            "iterations",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.kind.to_string(),
            fmt_f64(self.age),
            fmt_f64(self.rate),
            fmt_f64(self.loading),
            fmt_opt(self.price),
            self.viable.to_string(),
            fmt_f64(self.residual),
            self.iterations.to_string(),
        ]
    }
}

/// Price every (age, rate) cell for one product kind, age-major order.
pub fn price_table(
    ctx: &ValuationContext,
    kind: ProductKind,
    ages: &[f64],
    rates: &[f64],
    loading: f64,
) -> Result<Vec<PriceRow>> {
    let mut rows = Vec::with_capacity(ages.len() * rates.len());
    for &age in ages {
        for &rate in rates {
            let spec = ProductSpec::new(kind, age, rate, loading)?;
            let result = pricing::price(ctx, &spec)?;
            rows.push(PriceRow {
                kind,
                age,
                rate,
                loading,
                price: result.price,
                viable: result.viable,
                residual: result.residual,
                iterations: result.iterations,
            });
        }
    }
    Ok(rows)
}

/// One cell of a frontier table.
#[derive(Debug, Clone, Serialize)]
pub struct FrontierTableRow {
    pub age: f64,
    pub loading: f64,
    pub threshold_rate: Option<f64>,
    pub threshold_bp: Option<f64>,
    pub note: String,
}

impl TableRow for FrontierTableRow {
    fn header() -> Vec<&'static str> {
        vec!["age", "loading", "threshold_rate", "threshold_bp", "note"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            fmt_f64(self.age),
            fmt_f64(self.loading),
            fmt_opt(self.threshold_rate),
            fmt_opt(self.threshold_bp),
            self.note.clone(),
        ]
    }
}

/// Minimum viable rate on an age × loading grid; failures become notes.
pub fn frontier_table(
    ctx: &ValuationContext,
    ages: &[f64],
    loadings: &[f64],
) -> Vec<FrontierTableRow> {
    let mut rows = Vec::with_capacity(ages.len() * loadings.len());
    for &age in ages {
        for &loading in loadings {
            let row = match viability::min_viable_rate(ctx, age, loading) {
                Ok(point) => FrontierTableRow {
                    age,
                    loading,
                    threshold_rate: Some(point.threshold),
                    threshold_bp: Some(point.threshold * 1e4),
                    note: String::new(),
                },
                Err(e) => FrontierTableRow {
                    age,
                    loading,
                    threshold_rate: None,
                    threshold_bp: None,
                    note: e.to_string(),
                },
            };
            rows.push(row);
        }
    }
    rows
}

/// One valued quote (or the reason its line was skipped).
#[derive(Debug, Clone, Serialize)]
pub struct MwrTableRow {
    pub line: u64,
    pub label: String,
    pub age: Option<f64>,
    pub sex: String,
    pub kind: String,
    pub premium: Option<f64>,
    pub annual_income: Option<f64>,
    pub empirical_price: Option<f64>,
    pub model_price: Option<f64>,
    pub mwr: Option<f64>,
    pub implied_rate: Option<f64>,
    pub note: String,
}

impl TableRow for MwrTableRow {
    fn header() -> Vec<&'static str> {
        vec![
            "line",
            "label",
            "age",
            "sex",
            "kind",
            "premium",
            "annual_income",
            "empirical_price",
            "model_price",
            "mwr",
            "implied_rate",
            "note",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.line.to_string(),
            self.label.clone(),
            fmt_opt(self.age),
            self.sex.clone(),
            self.kind.clone(),
            fmt_opt(self.premium),
            fmt_opt(self.annual_income),
            fmt_opt(self.empirical_price),
            fmt_opt(self.model_price),
            fmt_opt(self.mwr),
            fmt_opt(self.implied_rate),
            self.note.clone(),
        ]
    }
}

/// Value a quote file at one rate; optionally invert each quote for its
/// fair rate. Malformed lines become note-only rows.
pub fn mwr_table(
    ctx: &MwrContext,
    quotes: &Path,
    rate: f64,
    with_implied_rate: bool,
) -> Result<Vec<MwrTableRow>> {
    let batch = mwr::mwr_batch(ctx, quotes, rate)?;
    let mut rows = Vec::with_capacity(batch.len());
    for entry in batch {
        match entry.outcome {
            Ok((quote, result)) => {
                let implied = if with_implied_rate {
                    mwr::implied_fair_rate(ctx, &quote)?
                } else {
                    None
                };
                rows.push(MwrTableRow {
                    line: entry.line,
                    label: quote.label.clone(),
                    age: Some(quote.age),
                    sex: quote.sex.tag().to_string(),
                    kind: quote.kind.to_string(),
                    premium: Some(quote.premium),
                    annual_income: Some(quote.annual_income),
                    empirical_price: Some(result.empirical_price),
                    model_price: Some(result.model_price),
                    mwr: Some(result.mwr),
                    implied_rate: implied,
                    note: String::new(),
                });
            }
            Err(message) => rows.push(MwrTableRow {
                line: entry.line,
                label: String::new(),
                age: None,
                sex: String::new(),
                kind: String::new(),
                premium: None,
                annual_income: None,
                empirical_price: None,
                model_price: None,
                mwr: None,
                implied_rate: None,
                note: message,
            }),
        }
    }
    Ok(rows)
}

/// One grid point of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub axis: Axis,
    pub axis_value: f64,
    pub value: Option<f64>,
    pub viable: bool,
    pub note: String,
}

impl TableRow for SweepRow {
    fn header() -> Vec<&'static str> {
        vec!["axis", "axis_value", "value", "viable", "note"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.axis.name().to_string(),
            fmt_f64(self.axis_value),
            fmt_opt(self.value),
            self.viable.to_string(),
            self.note.clone(),
        ]
    }
}

/// Evaluate one quantity for one product along a grid, replacing the axis
/// coordinate of `base` at each point. Non-viable cells and duration
/// blow-ups are recorded in place; real numerical failures abort.
pub fn sweep(
    ctx: &ValuationContext,
    quantity: SweepQuantity,
    base: &ProductSpec,
    axis: Axis,
    points: &[f64],
) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(points.len());
    for &point in points {
        let mut spec = *base;
        match axis {
            Axis::Age => spec.age = point,
            Axis::Rate => spec.rate = point,
            Axis::Loading => spec.loading = point,
        }
        let row = match quantity {
            SweepQuantity::Price => {
                let result = pricing::price(ctx, &spec)?;
                SweepRow {
                    axis,
                    axis_value: point,
                    value: result.price,
                    viable: result.viable,
                    note: result.reason.map(|r| r.to_string()).unwrap_or_default(),
                }
            }
            _ => match sensitivity::analytic_sensitivities(ctx, &spec) {
                Ok(report) => SweepRow {
                    axis,
                    axis_value: point,
                    value: Some(match quantity {
                        SweepQuantity::Duration => report.life_annuity_duration,
                        SweepQuantity::DAge => report.d_price_d_age,
                        SweepQuantity::DRate => report.d_price_d_rate,
                        SweepQuantity::Price => unreachable!(),
                    }),
                    viable: true,
                    note: String::new(),
                },
                Err(AnnuityError::NonViable { reason }) => SweepRow {
                    axis,
                    axis_value: point,
                    value: None,
                    viable: false,
                    note: reason,
                },
                Err(AnnuityError::DurationBlowUp { .. }) => SweepRow {
                    axis,
                    axis_value: point,
                    value: None,
                    viable: true,
                    note: "duration blow-up".to_string(),
                },
                Err(other) => return Err(other),
            },
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Write rows as CSV with a header, optionally preceded by a
/// `# generated <unix seconds>` comment line.
pub fn write_csv<R: TableRow>(rows: &[R], out: &mut dyn Write, timestamp: bool) -> Result<()> {
    if timestamp {
        let seconds = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        writeln!(out, "# generated {seconds}")?;
    }
    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record(R::header())
        .map_err(|e| AnnuityError::numerical(format!("csv write failed: {e}")))?;
    for row in rows {
        writer
            .write_record(row.cells())
            .map_err(|e| AnnuityError::numerical(format!("csv write failed: {e}")))?;
    }
    writer.flush().map_err(AnnuityError::Io)?;
    Ok(())
}

/// Write rows as a JSON array.
pub fn write_json<R: Serialize>(rows: &[R], out: &mut dyn Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, rows)
        .map_err(|e| AnnuityError::invalid(format!("json write failed: {e}")))?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mortality::MortalityLaw;

    fn ctx() -> ValuationContext {
        ValuationContext::new(MortalityLaw::gompertz(90.0, 10.0).unwrap())
    }

    #[test]
    fn grid_endpoints_are_inclusive() {
        let grid = SweepGrid::new(Axis::Age, 55.0, 75.0, 10.0).unwrap();
        assert_eq!(grid.values(), vec![55.0, 65.0, 75.0]);
        // endpoint within half a step still lands
        let grid = SweepGrid::new(Axis::Rate, 0.01, 0.0499, 0.01).unwrap();
        assert_eq!(grid.values().len(), 5);
        let single = SweepGrid::new(Axis::Age, 65.0, 65.0, 1.0).unwrap();
        assert_eq!(single.values(), vec![65.0]);
    }

    #[test]
    fn grid_rejects_bad_parameters() {
        assert!(SweepGrid::new(Axis::Age, 55.0, 75.0, 0.0).is_err());
        assert!(SweepGrid::new(Axis::Age, 75.0, 55.0, 1.0).is_err());
    }

    #[test]
    fn price_table_covers_the_grid_in_order() {
        let rows = price_table(
            &ctx(),
            ProductKind::LifeOnly,
            &[55.0, 65.0],
            &[0.02, 0.04],
            0.0,
        )
        .unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!((rows[0].age, rows[0].rate), (55.0, 0.02));
        assert_eq!((rows[3].age, rows[3].rate), (65.0, 0.04));
        assert!(rows.iter().all(|r| r.viable));
    }

    #[test]
    fn non_viable_sweep_cells_are_rows_not_errors() {
        let base = ProductSpec::new(ProductKind::CashRefund, 65.0, 0.02, 0.15).unwrap();
        let rows = sweep(
            &ctx(),
            SweepQuantity::Price,
            &base,
            Axis::Rate,
            &[0.02, 0.004],
        )
        .unwrap();
        assert!(rows[0].viable && rows[0].value.is_some());
        assert!(!rows[1].viable && rows[1].value.is_none());
        assert!(!rows[1].note.is_empty());
    }

    #[test]
    fn empty_grid_gives_header_only_output() {
        let base = ProductSpec::new(ProductKind::LifeOnly, 65.0, 0.02, 0.0).unwrap();
        let rows = sweep(&ctx(), SweepQuantity::Price, &base, Axis::Age, &[]).unwrap();
        let mut buffer = Vec::new();
        write_csv(&rows, &mut buffer, false).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("axis,axis_value,value,viable,note"));
    }

    #[test]
    fn csv_cells_never_contain_nan_or_inf() {
        let rows = price_table(
            &ctx(),
            ProductKind::CashRefund,
            &[65.0, 75.0],
            &[0.0099, 0.02],
            0.15,
        )
        .unwrap();
        let mut buffer = Vec::new();
        write_csv(&rows, &mut buffer, false).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        assert!(!text.to_ascii_lowercase().contains("nan"));
        assert!(!text.to_ascii_lowercase().contains("inf"));
        // the infeasible cell is present with an explicit flag
        assert!(text.contains("false"));
    }

    #[test]
    fn timestamp_header_is_optional() {
        let rows: Vec<SweepRow> = Vec::new();
        let mut with = Vec::new();
        write_csv(&rows, &mut with, true).unwrap();
        assert!(String::from_utf8(with).unwrap().starts_with("# generated "));
        let mut without = Vec::new();
        write_csv(&rows, &mut without, false).unwrap();
        assert!(String::from_utf8(without).unwrap().starts_with("axis,"));
    }
}
