//! Temporal VANET communication-graph analysis engine.
//!
//! Turns vehicle mobility traces into per-second communication graphs and
//! computes network, centrality, cluster and link-level metrics, plus a
//! discrete-time carry-and-forward routing co-simulation (VADD and GPCR,
//! with and without graph knowledge).
//!
//! The pipeline stages mirror the data flow:
//!
//! 1. [`trace`] — parse or synthesize trajectories, project GPS, clip,
//!    resample to a fixed tick, apply penetration sampling, load RSUs.
//! 2. [`snapshot`] — build the undirected communication graph `G(t)` per
//!    tick from positions, radio range and optional line-of-sight occlusion.
//! 3. [`metrics`] — per-snapshot graph metrics (degree, density, effective
//!    diameter, separation, betweenness, lobby index, triangles, clusters,
//!    communities/modularity, degree distribution).
//! 4. [`link`] — fold the snapshot stream into per-pair connectivity
//!    timelines (connected periods, link duration, re-healing time).
//! 5. [`routing`] — packet routing over the snapshot stream.
//!
//! [`pipeline`] orchestrates per-tick metric jobs (parallel via rayon).

pub mod error;
pub mod link;
pub mod metrics;
pub mod pipeline;
pub mod road;
pub mod routing;
pub mod snapshot;
pub mod stats;
pub mod trace;

pub use error::{Error, Result};
