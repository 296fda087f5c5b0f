//! Trajectory acquisition: trace parsing, GPS projection, clipping and
//! resampling, penetration sampling, RSU catalogs and synthetic grid
//! mobility.

mod parse;
mod penetration;
mod project;
mod resample;
mod synth;

pub use parse::{load_rsus, parse_trace, write_trace, RsuCoords, TraceFormat};
pub use penetration::{sample_penetration, PenetrationSample};
pub use project::{project_gps, EARTH_RADIUS_M};
pub use resample::clip_and_resample;
pub use synth::{generate_grid_scenario, GridScenarioConfig};

use std::sync::Arc;

use crate::error::{Error, Result};

/// One position fix of a vehicle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    /// Seconds.
    pub t: f64,
    /// Meters.
    pub x: f64,
    /// Meters.
    pub y: f64,
}

/// One vehicle's time-ordered position samples.
///
/// Timestamps are strictly increasing and all coordinates finite. After
/// [`clip_and_resample`] a trajectory is one region-resident segment with
/// consecutive timestamps exactly one tick apart; a vehicle that leaves and
/// re-enters the region yields several segments sharing its `vehicle_id`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub vehicle_id: Arc<str>,
    pub samples: Vec<Sample>,
}

impl Trajectory {
    /// Builds a trajectory, enforcing strictly increasing timestamps and
    /// finite coordinates.
    pub fn new(vehicle_id: Arc<str>, samples: Vec<Sample>) -> Result<Self> {
        for s in &samples {
            if !(s.t.is_finite() && s.x.is_finite() && s.y.is_finite()) {
                return Err(Error::Validation(format!(
                    "vehicle {vehicle_id}: non-finite sample"
                )));
            }
        }
        for w in samples.windows(2) {
            if w[1].t <= w[0].t {
                return Err(Error::Validation(format!(
                    "vehicle {vehicle_id}: timestamps not strictly increasing ({} then {})",
                    w[0].t, w[1].t
                )));
            }
        }
        Ok(Trajectory {
            vehicle_id,
            samples,
        })
    }

    pub fn start_time(&self) -> Option<f64> {
        self.samples.first().map(|s| s.t)
    }

    pub fn end_time(&self) -> Option<f64> {
        self.samples.last().map(|s| s.t)
    }
}

/// Axis-aligned clipping rectangle, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl Region {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Result<Self> {
        if !(x_min.is_finite() && y_min.is_finite() && x_max.is_finite() && y_max.is_finite()) {
            return Err(Error::Validation("region bounds must be finite".into()));
        }
        if x_min >= x_max || y_min >= y_max {
            return Err(Error::Validation(format!(
                "degenerate region [{x_min},{x_max}]x[{y_min},{y_max}]"
            )));
        }
        Ok(Region {
            x_min,
            y_min,
            x_max,
            y_max,
        })
    }

    /// Boundary points count as inside.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }

    pub fn area(&self) -> f64 {
        (self.x_max - self.x_min) * (self.y_max - self.y_min)
    }

    pub fn center(&self) -> (f64, f64) {
        (
            (self.x_min + self.x_max) / 2.0,
            (self.y_min + self.y_max) / 2.0,
        )
    }
}

/// A stationary roadside unit.
#[derive(Debug, Clone, PartialEq)]
pub struct Rsu {
    pub id: Arc<str>,
    pub x: f64,
    pub y: f64,
}

/// Catalog of roadside units with unique ids.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RsuSet {
    pub rsus: Vec<Rsu>,
}

impl RsuSet {
    /// Builds a set, rejecting duplicate ids and non-finite positions.
    pub fn new(rsus: Vec<Rsu>) -> Result<Self> {
        let mut ids: Vec<&str> = rsus.iter().map(|r| r.id.as_ref()).collect();
        ids.sort_unstable();
        for w in ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Validation(format!("duplicate rsu id {}", w[0])));
            }
        }
        for r in &rsus {
            if !(r.x.is_finite() && r.y.is_finite()) {
                return Err(Error::Validation(format!(
                    "rsu {}: non-finite position",
                    r.id
                )));
            }
        }
        Ok(RsuSet { rsus })
    }

    pub fn len(&self) -> usize {
        self.rsus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rsus.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trajectory_rejects_out_of_order_timestamps() {
        let err = Trajectory::new(
            Arc::from("a"),
            vec![
                Sample {
                    t: 1.0,
                    x: 0.0,
                    y: 0.0,
                },
                Sample {
                    t: 0.0,
                    x: 1.0,
                    y: 1.0,
                },
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        assert!(err.to_string().contains('a'));
    }

    #[test]
    fn region_rejects_inverted_bounds() {
        assert!(Region::new(0.0, 0.0, -1.0, 1.0).is_err());
        assert!(Region::new(0.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn region_boundary_is_inside() {
        let r = Region::new(0.0, 0.0, 10.0, 5.0).unwrap();
        assert!(r.contains(0.0, 0.0));
        assert!(r.contains(10.0, 5.0));
        assert!(!r.contains(10.0001, 5.0));
        assert_eq!(r.area(), 50.0);
    }

    #[test]
    fn rsu_set_rejects_duplicates() {
        let err = RsuSet::new(vec![
            Rsu {
                id: Arc::from("r1"),
                x: 0.0,
                y: 0.0,
            },
            Rsu {
                id: Arc::from("r1"),
                x: 1.0,
                y: 1.0,
            },
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }
}
