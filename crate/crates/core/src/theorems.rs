//! Applied models built on the entropy multiplier: solving for the innate
//! rate, re-anchoring glottochronological divergence, dating a network's
//! origin, economic productivity growth, longevity rates and the
//! occupancy count used in statistical mechanics.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::growthkit::{estimate_rate, GrowthPair, RatePerDecade, YearCE};

/// Long-run collective rate used as the longevity baseline.
pub const COLLECTIVE_RATE_PER_DECADE: f64 = 0.0341;

/// Innate (basal) rate, as a fraction per millennium.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct InnateRate(f64);

impl InnateRate {
    pub fn per_millennium(value: f64) -> Result<Self> {
        if value.is_finite() {
            Ok(InnateRate(value))
        } else {
            Err(Error::DegenerateInput(format!(
                "rate must be finite, got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn per_year(self) -> f64 {
        self.0 / 1000.0
    }

    pub fn as_rate(self) -> RatePerDecade {
        RatePerDecade::from_per_millennium(self.0).expect("finite by construction")
    }
}

/// Divides the collective rate by the product of the averaged population
/// and solved-problem entropies.
pub fn innate_rate(
    collective: RatePerDecade,
    eta_pop_avg: f64,
    eta_ps_avg: f64,
) -> Result<InnateRate> {
    for eta in [eta_pop_avg, eta_ps_avg] {
        if !eta.is_finite() || eta < 0.0 {
            return Err(Error::DegenerateInput(format!(
                "averaged entropy must be non-negative, got {eta}"
            )));
        }
    }
    let product = eta_pop_avg * eta_ps_avg;
    if product == 0.0 {
        return Err(Error::DivisionByZero("entropy product is zero"));
    }
    InnateRate::per_millennium((collective.value() / product) * 100.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceRates {
    pub raw_rate: f64,
    pub adjusted_rate: f64,
    /// Each daughter language diverges from the ancestor at half the
    /// mutual rate.
    pub per_branch: f64,
}

/// Rescales a divergence rate (fraction per millennium) so that it dates
/// the common ancestor to `revised_age_years` rather than
/// `original_age_years`.
pub fn adjusted_swadesh(
    raw_rate: f64,
    original_age_years: f64,
    revised_age_years: f64,
) -> Result<DivergenceRates> {
    for age in [original_age_years, revised_age_years] {
        if !(age.is_finite() && age > 0.0) {
            return Err(Error::NonPositiveCount(age));
        }
    }
    let adjusted_rate = raw_rate * original_age_years / revised_age_years;
    Ok(DivergenceRates {
        raw_rate,
        adjusted_rate,
        per_branch: adjusted_rate / 2.0,
    })
}

/// Two branches diverging from a common vertex separate at twice the
/// per-branch rate.
pub fn divergence_from_branches(branch_rate: f64) -> f64 {
    2.0 * branch_rate
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DatingResult {
    pub origin: YearCE,
    pub years_before_t2: f64,
}

/// Years needed at constant innate rate `m` to grow from `n_origin` to
/// `n_now` nodes under continuous compounding.
pub fn date_origin(n_now: f64, n_origin: f64, t2: YearCE, m: InnateRate) -> Result<DatingResult> {
    if !(n_origin.is_finite() && n_origin > 0.0) {
        return Err(Error::NonPositiveCount(n_origin));
    }
    if !(n_now.is_finite() && n_now > n_origin) {
        return Err(Error::BadOrdering(format!(
            "current size {n_now} must exceed origin size {n_origin}"
        )));
    }
    if m.value() == 0.0 {
        return Err(Error::DivisionByZero("innate rate is zero"));
    }
    if m.value() < 0.0 {
        return Err(Error::DegenerateInput(format!(
            "innate rate must be positive, got {}",
            m.value()
        )));
    }
    let years_before_t2 = (n_now / n_origin).ln() / m.per_year();
    Ok(DatingResult {
        origin: t2.minus_years(years_before_t2),
        years_before_t2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EconInputs {
    pub individual_rate: RatePerDecade,
    pub eta_pop_avg: f64,
    pub labor_participation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EconGrowth {
    pub per_decade: RatePerDecade,
    pub per_year: f64,
}

/// Productivity growth: individual rate times averaged population entropy
/// times labour participation.
pub fn economic_growth(inputs: &EconInputs) -> Result<EconGrowth> {
    let lp = inputs.labor_participation;
    if !(lp > 0.0 && lp <= 1.0) {
        return Err(Error::BadProportion {
            value: lp,
            range: "(0, 1]",
        });
    }
    if !(inputs.eta_pop_avg.is_finite() && inputs.eta_pop_avg >= 0.0) {
        return Err(Error::DegenerateInput(format!(
            "averaged population entropy must be non-negative, got {}",
            inputs.eta_pop_avg
        )));
    }
    let per_decade = RatePerDecade::new(inputs.individual_rate.value() * inputs.eta_pop_avg * lp)?;
    Ok(EconGrowth {
        per_decade,
        per_year: per_decade.per_year(),
    })
}

/// `eta_pop^2 * eta_ps`, a unitless proportionality index.
pub fn productivity_proportionality(eta_pop: f64, eta_ps: f64) -> f64 {
    eta_pop * eta_pop * eta_ps
}

#[derive(Debug, Clone, PartialEq)]
pub struct LongevityRecord {
    pub label: String,
    pub t1: YearCE,
    pub le1: f64,
    pub t2: YearCE,
    pub le2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongevityRate {
    pub rate: RatePerDecade,
    /// `(rate - baseline) / baseline`.
    pub excess_vs_baseline: f64,
}

pub fn longevity_rates(
    records: &[LongevityRecord],
    baseline: RatePerDecade,
) -> Result<Vec<LongevityRate>> {
    if baseline.value() == 0.0 {
        return Err(Error::DivisionByZero("baseline rate is zero"));
    }
    records
        .iter()
        .map(|rec| {
            let pair = GrowthPair::new(rec.t1, rec.le1, rec.t2, rec.le2)?;
            let rate = estimate_rate(&pair);
            Ok(LongevityRate {
                rate,
                excess_vs_baseline: (rate.value() - baseline.value()) / baseline.value(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistributionCount {
    /// `(n + r - 1)! / ((n - 1)! r!)`.
    pub exact: BigUint,
    pub exact_log: f64,
    pub stirling_log: f64,
    /// `|stirling_log - exact_log| / exact_log`; `None` when the count is 1.
    pub relative_log_error: Option<f64>,
}

/// Ways of distributing `r` indistinguishable units among `n` receivers.
pub fn distribution_count(n: u64, r: u64) -> Result<DistributionCount> {
    if n == 0 {
        return Err(Error::NonPositiveCount(0.0));
    }
    // C(n + r - 1, r), built so that every intermediate division is exact
    let mut exact = BigUint::one();
    for i in 1..=r {
        exact *= n - 1 + i;
        exact /= i;
    }
    let exact_log = ln_big(&exact);
    let stirling_log =
        ln_factorial_stirling(n - 1 + r) - ln_factorial_stirling(n - 1) - ln_factorial_stirling(r);
    let relative_log_error =
        (exact_log > 0.0).then(|| (stirling_log - exact_log).abs() / exact_log);
    Ok(DistributionCount {
        exact,
        exact_log,
        stirling_log,
        relative_log_error,
    })
}

/// `x ln x - x + ln(2 pi x) / 2`, with `ln 0! = 0`.
fn ln_factorial_stirling(x: u64) -> f64 {
    if x == 0 {
        return 0.0;
    }
    let x = x as f64;
    x * x.ln() - x + 0.5 * (2.0 * PI * x).ln()
}

fn ln_big(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits <= 1000 {
        return value.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (value >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * LN_2
}
