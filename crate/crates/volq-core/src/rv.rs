//! Realized variance from intraday prices, and the daily/weekly/monthly
//! feature series built on top of it.
//!
//! Daily realized variance is the sum of squared intraday log-returns.
//! The weekly and monthly aggregates are trailing means over the 7 and
//! 30 *preceding* records, so a record never includes its own day; the
//! windows are calendar-free record counts.

use alloc::vec::Vec;

use crate::day::Day;
use crate::error::{Error, Result};
use crate::math;
use crate::Scale;

/// Trailing window length of the weekly aggregate.
pub const WEEKLY_WINDOW: usize = 7;
/// Trailing window length of the monthly aggregate.
pub const MONTHLY_WINDOW: usize = 30;

/// One day of ordered intraday prices. The first price is the day's own
/// first observation; overnight returns are excluded by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct IntradayDay {
    pub day: Day,
    pub prices: Vec<f64>,
}

/// Daily realized variance plus its trailing aggregates, where defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RvRecord {
    pub day: Day,
    pub rv_d: f64,
    /// Mean of the 7 preceding `rv_d` values; `None` for the first 7 records.
    pub rv_w: Option<f64>,
    /// Mean of the 30 preceding `rv_d` values; `None` for the first 30 records.
    pub rv_m: Option<f64>,
}

/// A gap-free, chronologically ordered realized-variance series.
#[derive(Debug, Clone, PartialEq)]
pub struct RvSeries {
    records: Vec<RvRecord>,
    scale: Scale,
}

impl RvSeries {
    /// Builds a series from precomputed records, validating ordering and
    /// contiguity. The aggregates are taken as given; use
    /// [`build_rv_series`] to compute them from intraday data.
    pub fn from_records(records: Vec<RvRecord>, scale: Scale) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::EmptyInput);
        }
        for w in records.windows(2) {
            let expected = w[0].day.next();
            if w[1].day == w[0].day {
                return Err(Error::DuplicateDate(w[1].day));
            }
            if w[1].day != expected {
                return Err(Error::GapError {
                    after: w[0].day,
                    expected,
                    found: w[1].day,
                });
            }
        }
        Ok(RvSeries { records, scale })
    }

    pub fn records(&self) -> &[RvRecord] {
        &self.records
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn start(&self) -> Day {
        self.records[0].day
    }

    pub fn end(&self) -> Day {
        self.records[self.records.len() - 1].day
    }

    /// Record lookup by day; the series is gap-free so this is O(1).
    pub fn get(&self, day: Day) -> Option<&RvRecord> {
        let offset = day - self.start();
        if offset < 0 || offset as usize >= self.records.len() {
            return None;
        }
        Some(&self.records[offset as usize])
    }
}

/// Daily realized variance: the sum of squared intraday log-returns.
/// Summation is Neumaier-compensated, so the result is the faithfully
/// rounded value of the exact sum.
pub fn compute_daily_rv(day: &IntradayDay) -> Result<f64> {
    if day.prices.len() < 2 {
        return Err(Error::InsufficientData {
            needed: 2,
            got: day.prices.len(),
        });
    }
    for (i, &p) in day.prices.iter().enumerate() {
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::InvalidPrice { index: i, value: p });
        }
    }
    let squared_returns = day.prices.windows(2).map(|w| {
        let r = math::ln(w[1]) - math::ln(w[0]);
        r * r
    });
    Ok(math::neumaier_sum(squared_returns))
}

/// Computes the raw-scale RV series for contiguous, chronological days.
/// `rv_w` and `rv_m` at record `t` average the 7 and 30 records strictly
/// before `t`.
pub fn build_rv_series(days: &[IntradayDay]) -> Result<RvSeries> {
    if days.is_empty() {
        return Err(Error::EmptyInput);
    }
    for w in days.windows(2) {
        let expected = w[0].day.next();
        if w[1].day != expected {
            return Err(Error::GapError {
                after: w[0].day,
                expected,
                found: w[1].day,
            });
        }
    }

    let rv_d: Vec<f64> = days
        .iter()
        .map(compute_daily_rv)
        .collect::<Result<Vec<f64>>>()?;

    let records = days
        .iter()
        .enumerate()
        .map(|(t, d)| RvRecord {
            day: d.day,
            rv_d: rv_d[t],
            rv_w: trailing_mean(&rv_d, t, WEEKLY_WINDOW),
            rv_m: trailing_mean(&rv_d, t, MONTHLY_WINDOW),
        })
        .collect();

    RvSeries::from_records(records, Scale::Raw)
}

fn trailing_mean(rv_d: &[f64], t: usize, window: usize) -> Option<f64> {
    if t < window {
        return None;
    }
    let mut sum = 0.0;
    for &v in &rv_d[t - window..t] {
        sum += v;
    }
    Some(sum / window as f64)
}

/// Elementwise natural log of `rv_d`, `rv_w`, and `rv_m`.
pub fn log_transform(series: &RvSeries) -> Result<RvSeries> {
    if series.scale() == Scale::Log {
        return Err(Error::ConfigError(alloc::string::String::from(
            "series is already log-scaled",
        )));
    }
    let mut records = Vec::with_capacity(series.records.len());
    for (i, rec) in series.records.iter().enumerate() {
        records.push(RvRecord {
            day: rec.day,
            rv_d: checked_ln(rec.rv_d, i)?,
            rv_w: rec.rv_w.map(|v| checked_ln(v, i)).transpose()?,
            rv_m: rec.rv_m.map(|v| checked_ln(v, i)).transpose()?,
        });
    }
    Ok(RvSeries {
        records,
        scale: Scale::Log,
    })
}

fn checked_ln(v: f64, index: usize) -> Result<f64> {
    if v <= 0.0 {
        return Err(Error::NonPositiveValue { index, value: v });
    }
    Ok(math::ln(v))
}

/// The lagged input triple `[rv_d, rv_w, rv_m]` taken at `t - 1`, in the
/// series' own scale.
pub fn feature_vector(series: &RvSeries, t: Day) -> Result<[f64; 3]> {
    let lagged = series
        .get(t.prev())
        .ok_or(Error::InsufficientHistory(t))?;
    match (lagged.rv_w, lagged.rv_m) {
        (Some(w), Some(m)) => Ok([lagged.rv_d, w, m]),
        _ => Err(Error::InsufficientHistory(t)),
    }
}
