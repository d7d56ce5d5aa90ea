//! Growth-rate estimation, network entropy and small-world graph metrics.
//!
//! The crate estimates exponential growth rates from dated counts, measures
//! the sensitivity of those estimates, computes the network entropy
//! `eta = C * log_S(n)` with the rate and dating models built on it, measures
//! path length and clustering on explicit graphs, and ships the reference
//! datasets needed to regenerate the published tables ([`repro`]).

pub mod datastore;
pub mod error;
pub mod graphmetrics;
pub mod growthkit;
pub mod netentropy;
pub mod repro;
pub mod theorems;

pub use error::{Error, Result};

/// Names of the public operations, used by front ends to check that each
/// one is reachable.
pub const OPERATIONS: &[&str] = &[
    "accumulate_linear",
    "accumulate_exponential",
    "estimate_rate",
    "rate_from_ratio",
    "rate_error",
    "error_table",
    "shortest_path_matrix",
    "path_length",
    "clustering_coefficient",
    "generate_small_world",
    "measure",
    "entropy",
    "isotropic_entropy",
    "network_rate",
    "cluster_generations",
    "receive_capacity_derivative",
    "isotropy_gap",
    "average_eta",
    "eta_product",
    "compare_eta_products",
    "innate_rate",
    "adjusted_swadesh",
    "date_origin",
    "economic_growth",
    "productivity_proportionality",
    "longevity_rates",
    "distribution_count",
    "divergence_from_branches",
    "builtin_registry",
    "load_series",
    "load_metrics",
    "reproduce",
];
