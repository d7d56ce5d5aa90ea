//! Growth accumulation models, two-point rate estimation and the
//! sensitivity of an estimated rate to an error in the later count.
//!
//! Rates are carried as a fraction per decade ([`RatePerDecade`]). Years
//! are calendar years with B.C.E. years negated and no year-zero
//! correction, so the span from 1750 B.C.E. to 1992 is 3742 years.

use std::fmt;

use crate::error::{ensure_finite, Error, Result};

/// Calendar year. 1750 B.C.E. is stored as `-1750.0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct YearCE(f64);

impl YearCE {
    pub fn new(value: f64) -> Result<Self> {
        ensure_finite(value, "year").map(YearCE)
    }

    /// A year before the common era, given as a positive number.
    pub fn bce(year: f64) -> Result<Self> {
        YearCE::new(-year)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Signed number of years from `self` to `later`.
    pub fn years_until(self, later: YearCE) -> f64 {
        later.0 - self.0
    }

    pub fn minus_years(self, years: f64) -> YearCE {
        YearCE(self.0 - years)
    }
}

impl fmt::Display for YearCE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0.0 {
            write!(f, "{} BCE", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Dimensionless growth rate per decade (`0.0341` is 3.41% per decade).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct RatePerDecade(f64);

impl RatePerDecade {
    pub fn new(value: f64) -> Result<Self> {
        ensure_finite(value, "rate").map(RatePerDecade)
    }

    pub fn from_per_year(value: f64) -> Result<Self> {
        RatePerDecade::new(value * 10.0)
    }

    pub fn from_per_millennium(value: f64) -> Result<Self> {
        RatePerDecade::new(value / 100.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn per_year(self) -> f64 {
        self.0 / 10.0
    }

    pub fn per_millennium(self) -> f64 {
        self.0 * 100.0
    }

    pub fn in_unit(self, unit: RateUnit) -> f64 {
        match unit {
            RateUnit::Year => self.per_year(),
            RateUnit::Decade => self.0,
            RateUnit::Millennium => self.per_millennium(),
        }
    }
}

/// Display unit for rates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RateUnit {
    Year,
    #[default]
    Decade,
    Millennium,
}

impl RateUnit {
    pub fn name(self) -> &'static str {
        match self {
            RateUnit::Year => "year",
            RateUnit::Decade => "decade",
            RateUnit::Millennium => "millennium",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Compounding {
    /// `(1 + r)^dt`, one compounding step per decade.
    Discrete,
    /// `exp(r * dt)`.
    #[default]
    Continuous,
}

/// Two dated positive counts, strictly ordered in time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthPair {
    t1: YearCE,
    n1: f64,
    t2: YearCE,
    n2: f64,
}

impl GrowthPair {
    pub fn new(t1: YearCE, n1: f64, t2: YearCE, n2: f64) -> Result<Self> {
        check_count(n1)?;
        check_count(n2)?;
        if t2.value() <= t1.value() {
            return Err(Error::TimeOrder {
                t1: t1.value(),
                t2: t2.value(),
            });
        }
        Ok(GrowthPair { t1, n1, t2, n2 })
    }

    pub fn t1(&self) -> YearCE {
        self.t1
    }

    pub fn n1(&self) -> f64 {
        self.n1
    }

    pub fn t2(&self) -> YearCE {
        self.t2
    }

    pub fn n2(&self) -> f64 {
        self.n2
    }

    pub fn span_decades(&self) -> f64 {
        self.t1.years_until(self.t2) / 10.0
    }
}

fn check_count(n: f64) -> Result<f64> {
    if n.is_finite() && n > 0.0 {
        Ok(n)
    } else {
        Err(Error::NonPositiveCount(n))
    }
}

fn check_decades(dt: f64) -> Result<f64> {
    if dt.is_finite() && dt >= 0.0 {
        Ok(dt)
    } else {
        Err(Error::DegenerateInput(format!(
            "elapsed decades must be finite and non-negative, got {dt}"
        )))
    }
}

/// `(1 + r * dt) * n0`.
pub fn accumulate_linear(n0: f64, rate: RatePerDecade, dt: f64) -> Result<f64> {
    check_count(n0)?;
    check_decades(dt)?;
    Ok((1.0 + rate.value() * dt) * n0)
}

pub fn accumulate_exponential(
    n0: f64,
    rate: RatePerDecade,
    dt: f64,
    compounding: Compounding,
) -> Result<f64> {
    check_count(n0)?;
    check_decades(dt)?;
    let factor = match compounding {
        Compounding::Discrete => (1.0 + rate.value()).powf(dt),
        Compounding::Continuous => (rate.value() * dt).exp(),
    };
    Ok(n0 * factor)
}

/// Average continuous rate per decade between the two observations,
/// `ln(n2 / n1) / decades`.
pub fn estimate_rate(obs: &GrowthPair) -> RatePerDecade {
    RatePerDecade((obs.n2 / obs.n1).ln() / obs.span_decades())
}

/// Rate per decade that turns `1` into `ratio` over `span_years`.
pub fn rate_from_ratio(ratio: f64, span_years: f64) -> Result<RatePerDecade> {
    check_count(ratio)?;
    check_span(span_years)?;
    RatePerDecade::new(ratio.ln() / (span_years / 10.0))
}

fn check_span(span_years: f64) -> Result<f64> {
    if span_years.is_finite() && span_years > 0.0 {
        Ok(span_years)
    } else {
        Err(Error::DegenerateInput(format!(
            "span must be a positive number of years, got {span_years}"
        )))
    }
}

/// Error in an estimated rate caused by the later count being off by
/// `ratio_error` (`0.10` means 10% too high).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateError {
    /// `r_est - r_act`.
    pub absolute: RatePerDecade,
    /// `(r_est - r_act) / r_act`; `None` when the actual rate is zero.
    pub relative: Option<f64>,
}

pub fn rate_error(ratio_error: f64, span_years: f64, actual: RatePerDecade) -> Result<RateError> {
    if !ratio_error.is_finite() || ratio_error <= -1.0 {
        return Err(Error::DegenerateInput(format!(
            "ratio error must exceed -1, got {ratio_error}"
        )));
    }
    check_span(span_years)?;
    let absolute = ratio_error.ln_1p() / (span_years / 10.0);
    let relative = (actual.value() != 0.0).then(|| absolute / actual.value());
    Ok(RateError {
        absolute: RatePerDecade(absolute),
        relative,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorTableRow {
    pub span_years: f64,
    /// Magnitude of the relative error, as a fraction of the actual rate.
    pub relative_error: f64,
}

/// One row per span, in input order. Rows carry the size of the error, so a
/// count that is too low yields positive entries just like one too high.
pub fn error_table(
    ratio_error: f64,
    spans: &[f64],
    actual: RatePerDecade,
) -> Result<Vec<ErrorTableRow>> {
    spans
        .iter()
        .map(|&span_years| {
            let err = rate_error(ratio_error, span_years, actual)?;
            let relative = err
                .relative
                .ok_or(Error::DivisionByZero("actual rate is zero"))?;
            Ok(ErrorTableRow {
                span_years,
                relative_error: relative.abs(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn year(v: f64) -> YearCE {
        YearCE::new(v).unwrap()
    }

    fn rate(v: f64) -> RatePerDecade {
        RatePerDecade::new(v).unwrap()
    }

    #[test]
    fn linear_accumulation() {
        assert!((accumulate_linear(100.0, rate(0.10), 1.0).unwrap() - 110.0).abs() < 1e-12);
        assert_eq!(accumulate_linear(100.0, rate(0.0), 5.0).unwrap(), 100.0);
        // 34020 * (1 + 0.03453 * 83.9) evaluated by hand: 132578.21934
        let v = accumulate_linear(34020.0, rate(0.03453), 83.9).unwrap();
        assert!((v - 132_578.219_34).abs() < 1e-6, "{v}");
    }

    #[test]
    fn exponential_accumulation() {
        let v = accumulate_exponential(1.0, rate(0.0341), 0.0, Compounding::Continuous).unwrap();
        assert_eq!(v, 1.0);
        let v = accumulate_exponential(100.0, rate(1.0), 3.0, Compounding::Discrete).unwrap();
        assert_eq!(v, 800.0);
        let v =
            accumulate_exponential(34020.0, rate(0.03453), 83.9, Compounding::Continuous).unwrap();
        assert!((v - 616_500.0).abs() < 1_500.0, "{v}");
    }

    #[test]
    fn accumulation_rejects_bad_counts() {
        assert_eq!(
            accumulate_linear(0.0, rate(0.1), 1.0),
            Err(Error::NonPositiveCount(0.0))
        );
        assert!(matches!(
            accumulate_exponential(-3.0, rate(0.1), 1.0, Compounding::Discrete),
            Err(Error::NonPositiveCount(_))
        ));
        assert!(matches!(
            accumulate_linear(1.0, rate(0.1), -1.0),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn lexical_rates() {
        let p = GrowthPair::new(year(1150.0), 34020.0, year(1989.0), 616_500.0).unwrap();
        assert!((estimate_rate(&p).value() - 0.03453).abs() < 1e-5);
        let p = GrowthPair::new(year(1657.0), 200_000.0, year(1989.0), 616_500.0).unwrap();
        assert!((estimate_rate(&p).value() - 0.03391).abs() < 1e-5);
        let p = GrowthPair::new(year(10.0), 7.0, year(50.0), 7.0).unwrap();
        assert_eq!(estimate_rate(&p).value(), 0.0);
    }

    #[test]
    fn growth_pair_validation() {
        assert!(matches!(
            GrowthPair::new(year(1989.0), 1.0, year(1989.0), 2.0),
            Err(Error::TimeOrder { .. })
        ));
        assert!(matches!(
            GrowthPair::new(year(1.0), 0.0, year(2.0), 2.0),
            Err(Error::NonPositiveCount(_))
        ));
    }

    #[test]
    fn bce_years_have_no_year_zero() {
        let start = YearCE::bce(1750.0).unwrap();
        assert_eq!(start.years_until(year(1992.0)), 3742.0);
        assert_eq!(start.to_string(), "1750 BCE");
    }

    #[test]
    fn ratio_rates() {
        let r = rate_from_ratio(41.5 / 0.000119, 3742.0).unwrap();
        assert!((r.value() - 0.0341).abs() < 1e-4);
        assert_eq!(rate_from_ratio(1.0, 123.0).unwrap().value(), 0.0);
        let r = rate_from_ratio(10f64.exp(), 100.0).unwrap();
        assert!((r.value() - 1.0).abs() < 1e-15);
        assert!(matches!(
            rate_from_ratio(0.0, 10.0),
            Err(Error::NonPositiveCount(_))
        ));
    }

    #[test]
    fn rate_error_examples() {
        let e = rate_error(0.10, 332.0, rate(0.0341)).unwrap();
        assert!((e.relative.unwrap() - 0.0842).abs() < 3e-4);
        let e = rate_error(0.10, 100.0, rate(0.0341)).unwrap();
        assert!((e.relative.unwrap() - 0.279).abs() < 1e-3);
        let e = rate_error(0.0, 50.0, rate(0.02)).unwrap();
        assert_eq!(e.absolute.value(), 0.0);
        assert_eq!(e.relative, Some(0.0));
        assert!(rate_error(0.1, 10.0, rate(0.0)).unwrap().relative.is_none());
        assert!(matches!(
            rate_error(-1.0, 10.0, rate(0.1)),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn error_tables() {
        let rows = error_table(0.10, &[100.0, 332.0, 839.0, 3742.0], rate(0.0341)).unwrap();
        let pct: Vec<f64> = rows.iter().map(|r| r.relative_error * 100.0).collect();
        for (got, want) in pct.iter().zip([27.9, 8.42, 3.33, 0.747]) {
            assert!((got - want).abs() < 0.06, "{got} vs {want}");
        }
        let rows = error_table(-0.10, &[100.0, 332.0, 839.0], rate(0.0341)).unwrap();
        for (row, want) in rows.iter().zip([30.9, 9.3, 3.6]) {
            assert!((row.relative_error * 100.0 - want).abs() < 0.1);
        }
        assert!(error_table(0.10, &[], rate(0.0341)).unwrap().is_empty());
        assert!(error_table(0.10, &[0.0], rate(0.0341)).is_err());
    }

    #[test]
    fn unit_conversions() {
        let r = rate(0.0341);
        assert!((r.per_year() - 0.00341).abs() < 1e-15);
        assert!((r.per_millennium() - 3.41).abs() < 1e-12);
        let back = RatePerDecade::from_per_millennium(r.per_millennium()).unwrap();
        assert!((back.value() - 0.0341).abs() < 1e-15);
        assert_eq!(RatePerDecade::from_per_year(0.1).unwrap().value(), 1.0);
    }
}
