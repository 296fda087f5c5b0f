//! Clipping and resampling of trajectories onto a fixed tick grid.

use super::{Region, Sample, Trajectory};
use crate::error::{Error, Result};

/// Interpolates trajectories onto the grid `t = k * dt`, drops points
/// outside `region`, and splits each vehicle into region-resident segments.
///
/// Every output trajectory has consecutive timestamps exactly `dt` apart;
/// a vehicle that exits and re-enters the region appears as several
/// segments with the same `vehicle_id` (the vehicle is simply absent from
/// the gap ticks). Empty trajectories are removed.
pub fn clip_and_resample(
    trajs: &[Trajectory],
    region: &Region,
    dt: f64,
) -> Result<Vec<Trajectory>> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("tick {dt} must be positive")));
    }
    let mut out = Vec::new();
    for traj in trajs {
        let samples = &traj.samples;
        if samples.is_empty() {
            continue;
        }
        let t0 = samples[0].t;
        let t1 = samples[samples.len() - 1].t;
        // Absorb float noise at the grid edges.
        let k_start = (t0 / dt - 1e-9).ceil() as i64;
        let k_end = (t1 / dt + 1e-9).floor() as i64;
        let mut segment: Vec<Sample> = Vec::new();
        let mut cursor = 0usize;
        for k in k_start..=k_end {
            let t = k as f64 * dt;
            while cursor + 1 < samples.len() && samples[cursor + 1].t < t {
                cursor += 1;
            }
            let (x, y) = interpolate(samples, cursor, t);
            if region.contains(x, y) {
                segment.push(Sample { t, x, y });
            } else if !segment.is_empty() {
                out.push(Trajectory::new(
                    traj.vehicle_id.clone(),
                    std::mem::take(&mut segment),
                )?);
            }
        }
        if !segment.is_empty() {
            out.push(Trajectory::new(traj.vehicle_id.clone(), segment)?);
        }
    }
    Ok(out)
}

/// Linear interpolation at time `t`, with `hint` pointing at a sample no
/// later than the segment containing `t`.
fn interpolate(samples: &[Sample], hint: usize, t: f64) -> (f64, f64) {
    let mut i = hint;
    while i + 1 < samples.len() && samples[i + 1].t < t {
        i += 1;
    }
    if i + 1 >= samples.len() {
        let s = samples[samples.len() - 1];
        return (s.x, s.y);
    }
    let (a, b) = (samples[i], samples[i + 1]);
    if t <= a.t {
        return (a.x, a.y);
    }
    let f = (t - a.t) / (b.t - a.t);
    (a.x + f * (b.x - a.x), a.y + f * (b.y - a.y))
}
