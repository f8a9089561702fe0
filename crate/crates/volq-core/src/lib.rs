//! Probabilistic forecasting of cryptocurrency realized variance.
//!
//! This crate turns deterministic (point) forecasts of daily realized
//! variance into 99-level quantile forecasts and scores them. Three
//! meta-methods are provided:
//!
//! - [`qrs`] — quantile estimation through residual simulation: a kernel
//!   density is fitted to the base model's shifted residual pool and
//!   quantiles are read off its inverse CDF,
//! - [`qlr`] — quantile linear regression: one pinball-loss linear model
//!   per level, solved as a linear program by a primal-dual interior
//!   point method,
//! - [`qrf`] — quantile regression forests: bagged CART trees whose
//!   leaves retain training indices, yielding a weighted empirical
//!   conditional CDF.
//!
//! Supporting modules compute realized variance from intraday prices
//! ([`rv`]), fit the native point-forecast base models ([`linear`]),
//! and evaluate forecasts with CRPS, calibration, Winkler-score, and
//! Diebold–Mariano machinery ([`metrics`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats, and the
//! rolling backtest harness live in the companion `volq` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod day;
pub mod density;
pub mod error;
pub mod levels;
pub mod linear;
pub mod mat;
pub mod metrics;
pub mod panel;
pub mod qlr;
pub mod qrf;
pub mod qrs;
pub mod rv;

mod math;
mod pchip;

pub use day::{Day, DayRange};
pub use error::{Error, Result};
pub use panel::ForecastPanel;

use core::fmt;
use core::str::FromStr;

/// Whether a series, panel, or model operates on raw realized variance
/// or on its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Scale {
    Raw,
    Log,
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scale::Raw => f.write_str("raw"),
            Scale::Log => f.write_str("log"),
        }
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Scale::Raw),
            "log" => Ok(Scale::Log),
            other => Err(Error::ConfigError(alloc::format!(
                "unknown scale `{other}` (expected `raw` or `log`)"
            ))),
        }
    }
}
