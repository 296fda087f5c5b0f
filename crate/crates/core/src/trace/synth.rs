//! Synthetic grid mobility: random-turn constant-speed vehicles on a
//! Manhattan street grid, in steady state (the vehicle population is
//! constant over the whole duration).

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Sample, Trajectory};
use crate::error::{Error, Result};
use crate::road::{Dir, RoadGrid};

/// Parameters of the synthetic scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct GridScenarioConfig {
    /// Streets per axis (same count horizontally and vertically).
    pub grid_size: usize,
    /// Distance between adjacent parallel streets, meters.
    pub road_spacing_m: f64,
    pub vehicle_count: usize,
    /// Per-vehicle constant speed is drawn uniformly from this range, m/s.
    pub speed_range_mps: (f64, f64),
    pub duration_s: f64,
    pub tick_s: f64,
    pub seed: u64,
}

impl GridScenarioConfig {
    /// The street grid implied by this scenario.
    pub fn road_grid(&self, corridor_width: f64) -> Result<RoadGrid> {
        RoadGrid::square(self.grid_size, self.road_spacing_m, corridor_width)
    }

    fn validate(&self) -> Result<()> {
        if self.grid_size < 2 {
            return Err(Error::Config(format!(
                "grid_size {} leaves no streets to drive on",
                self.grid_size
            )));
        }
        if !(self.road_spacing_m > 0.0) {
            return Err(Error::Config("road_spacing_m must be positive".into()));
        }
        if self.vehicle_count == 0 {
            return Err(Error::Config("vehicle_count must be positive".into()));
        }
        let (lo, hi) = self.speed_range_mps;
        if !(lo >= 1.0 && hi <= 30.0 && lo <= hi) {
            return Err(Error::Config(format!(
                "speed range [{lo},{hi}] must lie within [1,30] m/s"
            )));
        }
        if !(self.duration_s > 0.0) || !(self.tick_s > 0.0) {
            return Err(Error::Config("duration_s and tick_s must be positive".into()));
        }
        Ok(())
    }
}

/// Per-vehicle kinematic state: a position on some street plus a travel
/// direction. `street` is the index of the street being driven, `along` the
/// coordinate along it.
struct VehicleState {
    dir: Dir,
    street: i64,
    along: f64,
    speed: f64,
}

impl VehicleState {
    fn pos(&self, g: &RoadGrid) -> (f64, f64) {
        match self.dir {
            Dir::North | Dir::South => (
                g.origin_x + self.street as f64 * g.spacing,
                g.origin_y + self.along,
            ),
            Dir::East | Dir::West => (
                g.origin_x + self.along,
                g.origin_y + self.street as f64 * g.spacing,
            ),
        }
    }
}

/// Generates trajectories for vehicles driving the grid, choosing a
/// uniformly random turn at each junction (never a U-turn; the grid has no
/// dead ends). Deterministic for a fixed config, including the seed.
pub fn generate_grid_scenario(cfg: &GridScenarioConfig) -> Result<Vec<Trajectory>> {
    cfg.validate()?;
    let grid = RoadGrid::square(cfg.grid_size, cfg.road_spacing_m, cfg.road_spacing_m / 10.0)?;
    let ticks = (cfg.duration_s / cfg.tick_s).round() as i64;
    let width = cfg.vehicle_count.saturating_sub(1).to_string().len();

    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let sub_seeds: Vec<u64> = (0..cfg.vehicle_count).map(|_| master.gen()).collect();

    let mut out = Vec::with_capacity(cfg.vehicle_count);
    for (v, sub_seed) in sub_seeds.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed);
        let mut state = spawn(&grid, cfg, &mut rng);
        let mut samples = Vec::with_capacity(ticks as usize + 1);
        for k in 0..=ticks {
            let (x, y) = state.pos(&grid);
            samples.push(Sample {
                t: k as f64 * cfg.tick_s,
                x,
                y,
            });
            let step = state.speed * cfg.tick_s;
            advance(&grid, &mut state, step, &mut rng);
        }
        let id: Arc<str> = Arc::from(format!("v{v:0width$}").as_str());
        out.push(Trajectory::new(id, samples)?);
    }
    Ok(out)
}

fn spawn(grid: &RoadGrid, cfg: &GridScenarioConfig, rng: &mut ChaCha8Rng) -> VehicleState {
    let (lo, hi) = cfg.speed_range_mps;
    let speed = if lo == hi { lo } else { rng.gen_range(lo..=hi) };
    let vertical = rng.gen_bool(0.5);
    let streets = grid.streets_x as i64;
    let street = rng.gen_range(0..streets);
    // Start strictly between two junctions.
    let cell = rng.gen_range(0..streets - 1) as f64;
    let along = (cell + rng.gen_range(0.1..0.9)) * grid.spacing;
    let forward = rng.gen_bool(0.5);
    let dir = match (vertical, forward) {
        (true, true) => Dir::North,
        (true, false) => Dir::South,
        (false, true) => Dir::East,
        (false, false) => Dir::West,
    };
    VehicleState {
        dir,
        street,
        along,
        speed,
    }
}

/// Moves a vehicle `dist` meters along its street, turning at each junction
/// it reaches.
fn advance(grid: &RoadGrid, state: &mut VehicleState, mut dist: f64, rng: &mut ChaCha8Rng) {
    while dist > 1e-12 {
        let s = grid.spacing;
        let sign = match state.dir {
            Dir::North | Dir::East => 1.0,
            Dir::South | Dir::West => -1.0,
        };
        // Junction coordinate next in the travel direction.
        let cell = state.along / s;
        let next_junction = if sign > 0.0 {
            (cell + 1e-9).floor() + 1.0
        } else {
            (cell - 1e-9).ceil() - 1.0
        };
        let to_junction = (next_junction * s - state.along).abs();
        if dist < to_junction {
            state.along += sign * dist;
            return;
        }
        state.along = next_junction * s;
        dist -= to_junction;
        turn(grid, state, rng);
    }
}

fn turn(grid: &RoadGrid, state: &mut VehicleState, rng: &mut ChaCha8Rng) {
    let junction_idx = (state.along / grid.spacing).round() as i64;
    let (i, j) = match state.dir {
        Dir::North | Dir::South => (state.street, junction_idx),
        Dir::East | Dir::West => (junction_idx, state.street),
    };
    let reverse = state.dir.reverse();
    let options: Vec<Dir> = Dir::ALL
        .into_iter()
        .filter(|&d| d != reverse && grid.can_move(i, j, d))
        .collect();
    // Interior junctions always offer at least two ways forward.
    let dir = options[rng.gen_range(0..options.len())];
    state.dir = dir;
    match dir {
        Dir::North | Dir::South => {
            state.street = i;
            state.along = j as f64 * grid.spacing;
        }
        Dir::East | Dir::West => {
            state.street = j;
            state.along = i as f64 * grid.spacing;
        }
    }
}
