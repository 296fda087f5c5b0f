//! Per-snapshot graph metrics.
