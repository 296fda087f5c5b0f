//! Node degree, graph density and the degree distribution.

use std::collections::BTreeMap;

use crate::snapshot::Snapshot;

/// Number of incident edges per node.
pub fn degree_vector(s: &Snapshot) -> Vec<u32> {
    (0..s.node_count() as u32)
        .map(|i| s.degree(i) as u32)
        .collect()
}

/// Edges over the maximum possible `n(n-1)/2`; undefined below two nodes.
pub fn graph_density(s: &Snapshot) -> Option<f64> {
    let n = s.node_count();
    if n < 2 {
        return None;
    }
    let max_edges = n as f64 * (n as f64 - 1.0) / 2.0;
    Some(s.edge_count() as f64 / max_edges)
}

/// Exact degree histogram plus an optional power-law exponent estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    pub histogram: BTreeMap<u32, usize>,
    /// Discrete maximum-likelihood estimate of gamma in P(k) ~ k^-gamma over
    /// degrees >= 2; absent when fewer than 50 nodes qualify or the
    /// qualifying degrees are all equal (degenerate support).
    pub powerlaw_gamma: Option<f64>,
}

/// Minimum degree entering the exponent fit.
pub const GAMMA_K_MIN: u32 = 2;
/// Minimum qualifying sample size for the exponent fit.
pub const GAMMA_MIN_SAMPLES: usize = 50;

pub fn degree_distribution(s: &Snapshot) -> DegreeDistribution {
    let degrees = degree_vector(s);
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    for d in &degrees {
        *histogram.entry(*d).or_insert(0) += 1;
    }
    DegreeDistribution {
        powerlaw_gamma: powerlaw_gamma_mle(&degrees, GAMMA_K_MIN, GAMMA_MIN_SAMPLES),
        histogram,
    }
}

/// Discrete power-law MLE (Clauset-Shalizi-Newman approximation):
/// gamma = 1 + n / sum(ln(k_i / (k_min - 1/2))) over k_i >= k_min.
pub fn powerlaw_gamma_mle(degrees: &[u32], k_min: u32, min_samples: usize) -> Option<f64> {
    let tail: Vec<u32> = degrees.iter().copied().filter(|&d| d >= k_min).collect();
    if tail.len() < min_samples {
        return None;
    }
    let first = tail[0];
    if tail.iter().all(|&d| d == first) {
        return None;
    }
    let shift = k_min as f64 - 0.5;
    let log_sum: f64 = tail.iter().map(|&d| (d as f64 / shift).ln()).sum();
    Some(1.0 + tail.len() as f64 / log_sum)
}
