//! Network entropy `eta = C * log_S(n)` and the quantities derived from it.
//!
//! `n` is the node count, `S` the path length and `C` the clustering
//! coefficient (or, for lexicons, the measured proportion). An isotropic
//! network has `C = 1` and `S = e`, which reduces entropy to `ln(n)`.

use std::f64::consts::E;

use crate::error::{Error, Result};
use crate::growthkit::YearCE;

/// `(n, S, C)` for one labelled network.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkMetrics {
    label: String,
    n: f64,
    path_length: f64,
    clustering: f64,
}

impl NetworkMetrics {
    pub fn new(
        label: impl Into<String>,
        n: f64,
        path_length: f64,
        clustering: f64,
    ) -> Result<Self> {
        check_nodes(n)?;
        check_base(path_length)?;
        if !(0.0..=1.0).contains(&clustering) {
            return Err(Error::BadProportion {
                value: clustering,
                range: "[0, 1]",
            });
        }
        Ok(NetworkMetrics {
            label: label.into(),
            n,
            path_length,
            clustering,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn path_length(&self) -> f64 {
        self.path_length
    }

    pub fn clustering(&self) -> f64 {
        self.clustering
    }

    /// Same `S` and `C`, different node count.
    pub fn with_nodes(&self, label: impl Into<String>, n: f64) -> Result<Self> {
        NetworkMetrics::new(label, n, self.path_length, self.clustering)
    }
}

fn check_nodes(n: f64) -> Result<f64> {
    if n.is_finite() && n >= 1.0 {
        Ok(n)
    } else {
        Err(Error::NonPositiveCount(n))
    }
}

fn check_base(path_length: f64) -> Result<f64> {
    if path_length.is_finite() && path_length > 1.0 {
        Ok(path_length)
    } else {
        Err(Error::DegenerateBase(path_length))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct NetworkEntropy(f64);

impl NetworkEntropy {
    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn entropy(m: &NetworkMetrics) -> NetworkEntropy {
    NetworkEntropy(m.clustering * m.n.ln() / m.path_length.ln())
}

/// Entropy straight from raw `(n, S, C)`.
pub fn eta(n: f64, path_length: f64, clustering: f64) -> Result<f64> {
    NetworkMetrics::new("", n, path_length, clustering).map(|m| entropy(&m).value())
}

pub fn isotropic_entropy(n: f64) -> Result<NetworkEntropy> {
    check_nodes(n)?;
    Ok(NetworkEntropy(n.ln()))
}

/// Network transmission rate: the bi-nodal rate multiplied by entropy.
pub fn network_rate(bi_nodal_rate: f64, m: &NetworkMetrics) -> f64 {
    bi_nodal_rate * entropy(m).value()
}

/// `log_S(n)`, the number of cluster generations needed to reach `n`
/// nodes, so that `S^result = n`.
pub fn cluster_generations(n: f64, path_length: f64) -> Result<f64> {
    check_nodes(n)?;
    check_base(path_length)?;
    Ok(n.ln() / path_length.ln())
}

/// `d(log_S n)/dn` evaluated at `n = S^eta`, i.e. `1 / (ln(S) * S^eta)`.
pub fn receive_capacity_derivative(path_length: f64, eta: f64) -> Result<f64> {
    check_base(path_length)?;
    Ok(1.0 / (path_length.ln() * path_length.powf(eta)))
}

/// Distance of `S` from `e`; zero exactly when `ln(S) = 1`.
pub fn isotropy_gap(path_length: f64) -> Result<f64> {
    check_base(path_length)?;
    Ok((path_length - E).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaPeriodAverage {
    pub t1: YearCE,
    pub t2: YearCE,
    pub eta_start: f64,
    pub eta_end: f64,
    pub eta_avg: f64,
}

/// Mean of one network's entropy at the two ends of a period. Averages are
/// formed per network; products of averages come afterwards.
pub fn average_eta(
    t1: YearCE,
    start: &NetworkMetrics,
    t2: YearCE,
    end: &NetworkMetrics,
) -> EtaPeriodAverage {
    let eta_start = entropy(start).value();
    let eta_end = entropy(end).value();
    EtaPeriodAverage {
        t1,
        t2,
        eta_start,
        eta_end,
        eta_avg: (eta_start + eta_end) / 2.0,
    }
}

pub fn eta_product(etas: &[f64]) -> Result<f64> {
    if etas.is_empty() {
        return Err(Error::EmptyInput(
            "entropy product needs at least one factor",
        ));
    }
    if let Some(&bad) = etas.iter().find(|e| !(e.is_finite() && **e >= 0.0)) {
        return Err(Error::DegenerateInput(format!(
            "entropy factors must be non-negative, got {bad}"
        )));
    }
    Ok(etas.iter().product())
}

/// Ratio of the entropy products of two sets of networks.
pub fn compare_eta_products(a: &[NetworkMetrics], b: &[NetworkMetrics]) -> Result<f64> {
    let product = |ms: &[NetworkMetrics]| {
        let etas: Vec<f64> = ms.iter().map(|m| entropy(m).value()).collect();
        eta_product(&etas)
    };
    let numerator = product(a)?;
    let denominator = product(b)?;
    if denominator == 0.0 {
        return Err(Error::DivisionByZero("denominator entropy product is zero"));
    }
    Ok(numerator / denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn metrics(n: f64, s: f64, c: f64) -> NetworkMetrics {
        NetworkMetrics::new("t", n, s, c).unwrap()
    }

    #[test]
    fn table_entropies() {
        assert!((eta(225_226.0, 3.65, 0.79).unwrap() - 7.52).abs() < 0.01);
        assert!((eta(1e11, 2.49, 0.53).unwrap() - 14.71).abs() < 0.01);
        assert!((eta(616_500.0, 2.67, 0.437).unwrap() - 5.932).abs() < 0.005);
        assert!((eta(2.5, 2.5, 1.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn zero_entropy_cases() {
        assert_eq!(eta(1.0, 3.0, 0.5).unwrap(), 0.0);
        assert_eq!(eta(1000.0, 3.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn metric_validation() {
        assert_eq!(
            NetworkMetrics::new("k", 10.0, 1.0, 0.5),
            Err(Error::DegenerateBase(1.0))
        );
        assert!(matches!(
            NetworkMetrics::new("k", 10.0, 2.0, 1.2),
            Err(Error::BadProportion { .. })
        ));
        assert!(matches!(
            NetworkMetrics::new("k", 0.5, 2.0, 0.2),
            Err(Error::NonPositiveCount(_))
        ));
    }

    #[test]
    fn isotropic() {
        assert_eq!(isotropic_entropy(1.0).unwrap().value(), 0.0);
        assert!((isotropic_entropy(E).unwrap().value() - 1.0).abs() < 1e-15);
        // ln(616500) = 13.3318136...
        assert!((isotropic_entropy(616_500.0).unwrap().value() - 13.331_813_6).abs() < 1e-7);
        assert!(isotropic_entropy(0.0).is_err());
        // isotropic metrics agree with the general formula
        let m = metrics(616_500.0, E, 1.0);
        assert!((entropy(&m).value() - 616_500f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn network_rates() {
        let unit = metrics(3.0, 3.0, 1.0);
        assert!((network_rate(0.42, &unit) - 0.42).abs() < 1e-15);
        let brain = metrics(1e11, 2.49, 0.53);
        assert!((network_rate(100.0, &brain) - 1471.0).abs() < 1.0);
        let actors = metrics(225_226.0, 3.65, 0.79);
        assert!((network_rate(1.0, &actors) - 7.52).abs() < 0.01);
    }

    #[test]
    fn generations() {
        assert!((cluster_generations(2.5f64.powi(3), 2.5).unwrap() - 3.0).abs() < 1e-12);
        assert!((cluster_generations(225_226.0, 3.65).unwrap() - 9.519).abs() < 0.005);
        assert_eq!(cluster_generations(1.0, 7.0).unwrap(), 0.0);
        assert!(cluster_generations(10.0, 0.9).is_err());
    }

    #[test]
    fn derivative() {
        assert_eq!(receive_capacity_derivative(E, 0.0).unwrap(), 1.0);
        let d = receive_capacity_derivative(E, 10f64.ln()).unwrap();
        assert!((d - 0.1).abs() < 1e-12);
        assert!(receive_capacity_derivative(1.0, 1.0).is_err());
    }

    #[test]
    fn isotropy_gaps() {
        assert_eq!(isotropy_gap(E).unwrap(), 0.0);
        assert!((isotropy_gap(2.67).unwrap() - 0.0483).abs() < 1e-4);
        assert!((isotropy_gap(3.65).unwrap() - 0.932).abs() < 1e-3);
    }

    #[test]
    fn averaging_then_product() {
        let y = |v| YearCE::new(v).unwrap();
        let pop = |n| metrics(n, 3.65, 0.79);
        let lex = |n| metrics(n, 2.67, 0.437);
        let p = average_eta(y(1150.0), &pop(2.3e6), y(1989.0), &pop(3.5e8));
        let l = average_eta(y(1150.0), &lex(34_020.0), y(1989.0), &lex(616_500.0));
        assert!((p.eta_avg - 10.47).abs() < 0.01);
        assert!((l.eta_avg - 5.29).abs() < 0.01);
        let product = eta_product(&[p.eta_avg, l.eta_avg]).unwrap();
        assert!((product - 55.37).abs() < 0.05);
        // multiplying first and averaging after gives a different number
        let other = (p.eta_start * l.eta_start + p.eta_end * l.eta_end) / 2.0;
        assert!((other - 56.34).abs() < 0.05);

        let same = average_eta(y(1.0), &pop(9e5), y(1.0), &pop(9e5));
        assert_eq!(same.eta_avg, same.eta_start);
    }

    #[test]
    fn products() {
        assert!((eta_product(&[10.47, 5.29]).unwrap() - 55.37).abs() < 0.05);
        // the rounded averages multiply to 60.8896; the published 60.94
        // comes from the unrounded ones
        assert!((eta_product(&[10.72, 5.68]).unwrap() - 60.8896).abs() < 1e-9);
        assert_eq!(eta_product(&[3.25]).unwrap(), 3.25);
        assert!(matches!(eta_product(&[]), Err(Error::EmptyInput(_))));
        assert!(eta_product(&[-1.0]).is_err());
    }

    #[test]
    fn comparisons() {
        let modern = [metrics(3.5e8, 3.65, 0.79), metrics(616_500.0, 2.67, 0.437)];
        let primitive = [metrics(150.0, 3.65, 0.79), metrics(100.0, 2.67, 0.437)];
        let ratio = compare_eta_products(&modern, &primitive).unwrap();
        assert!((ratio - 11.37).abs() < 0.02);
        assert_eq!(compare_eta_products(&modern, &modern).unwrap(), 1.0);
        let brain = [metrics(1e11, 2.49, 0.53)];
        let worm = [metrics(282.0, 2.65, 0.28)];
        assert!((compare_eta_products(&brain, &worm).unwrap() - 9.08).abs() < 0.02);
        let flat = [metrics(50.0, 2.0, 0.0)];
        assert!(matches!(
            compare_eta_products(&brain, &flat),
            Err(Error::DivisionByZero(_))
        ));
        assert!(compare_eta_products(&[], &brain).is_err());
    }
}
