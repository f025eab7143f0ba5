//! Copula-based pairs trading research engine.
//!
//! The crate covers the full research pipeline for a spread-based statistical
//! arbitrage strategy on a panel of hourly close prices:
//!
//! 1. [`market_data`] — ingest and align candle files, slice rolling
//!    formation/trading cycles.
//! 2. [`unit_root`] — no-intercept spread regression plus ADF and KSS
//!    unit-root screens with Monte Carlo critical-value tables.
//! 3. [`dependence`] — Kendall's tau and the empirical-CDF probability
//!    integral transform.
//! 4. [`copula`] — twelve bivariate copula families with CDF, density,
//!    conditional h-functions, rotations, and canonical ML fitting.
//! 5. [`strategy`] — weekly pair formation and the hourly signal engine.
//! 6. [`backtest`] — execution ledger, fees, performance metrics and
//!    copula occurrence statistics.
//!
//! Everything is deterministic: same inputs, same outputs, regardless of
//! thread count.

pub mod backtest;
pub mod config;
pub mod copula;
pub mod dependence;
pub mod market_data;
pub mod numeric;
pub mod report;
pub mod strategy;
pub mod synthetic;
pub mod unit_root;
