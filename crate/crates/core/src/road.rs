//! Manhattan street grid: junction geometry, corridor membership and
//! line-of-sight clearance between building blocks.

use crate::error::{Error, Result};
use crate::trace::Region;

/// Cardinal street direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::North, Dir::East, Dir::South, Dir::West];

    pub fn reverse(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::East => Dir::West,
            Dir::South => Dir::North,
            Dir::West => Dir::East,
        }
    }

    /// Clockwise successor (right turn when arriving along `self`).
    pub fn right(self) -> Dir {
        match self {
            Dir::North => Dir::East,
            Dir::East => Dir::South,
            Dir::South => Dir::West,
            Dir::West => Dir::North,
        }
    }

    pub fn left(self) -> Dir {
        self.right().reverse()
    }

    pub fn offset(self) -> (i64, i64) {
        match self {
            Dir::North => (0, 1),
            Dir::East => (1, 0),
            Dir::South => (0, -1),
            Dir::West => (-1, 0),
        }
    }
}

/// A rectangular grid of streets. Vertical streets run at
/// `x = origin_x + i * spacing` for `i < streets_x`, horizontal streets at
/// `y = origin_y + j * spacing`. Each street is a corridor of
/// `corridor_width`; the rectangles between corridors are opaque building
/// blocks for line-of-sight purposes. Corridors are modeled as full-length
/// bands, so points outside the grid extent are treated like points between
/// streets.
#[derive(Debug, Clone, PartialEq)]
pub struct RoadGrid {
    pub origin_x: f64,
    pub origin_y: f64,
    pub streets_x: usize,
    pub streets_y: usize,
    pub spacing: f64,
    pub corridor_width: f64,
}

impl RoadGrid {
    pub fn new(
        origin_x: f64,
        origin_y: f64,
        streets_x: usize,
        streets_y: usize,
        spacing: f64,
        corridor_width: f64,
    ) -> Result<Self> {
        if streets_x < 2 || streets_y < 2 {
            return Err(Error::Config(format!(
                "grid needs at least 2 streets per axis, got {streets_x}x{streets_y}"
            )));
        }
        if !(spacing > 0.0) || !(corridor_width > 0.0) || corridor_width >= spacing {
            return Err(Error::Config(format!(
                "need 0 < corridor_width < spacing, got width {corridor_width}, spacing {spacing}"
            )));
        }
        Ok(RoadGrid {
            origin_x,
            origin_y,
            streets_x,
            streets_y,
            spacing,
            corridor_width,
        })
    }

    /// Square grid anchored at the origin.
    pub fn square(streets: usize, spacing: f64, corridor_width: f64) -> Result<Self> {
        RoadGrid::new(0.0, 0.0, streets, streets, spacing, corridor_width)
    }

    pub fn extent_x(&self) -> f64 {
        (self.streets_x - 1) as f64 * self.spacing
    }

    pub fn extent_y(&self) -> f64 {
        (self.streets_y - 1) as f64 * self.spacing
    }

    /// Bounding region of the street grid.
    pub fn region(&self) -> Region {
        Region::new(
            self.origin_x,
            self.origin_y,
            self.origin_x + self.extent_x(),
            self.origin_y + self.extent_y(),
        )
        .expect("grid has at least 2 streets per axis")
    }

    pub fn junction_pos(&self, i: i64, j: i64) -> (f64, f64) {
        (
            self.origin_x + i as f64 * self.spacing,
            self.origin_y + j as f64 * self.spacing,
        )
    }

    pub fn junction_in_grid(&self, i: i64, j: i64) -> bool {
        i >= 0 && j >= 0 && (i as usize) < self.streets_x && (j as usize) < self.streets_y
    }

    /// Junction closest to a point.
    pub fn nearest_junction(&self, x: f64, y: f64) -> (i64, i64) {
        let clamp = |v: f64, n: usize| -> i64 {
            let k = v.round() as i64;
            k.clamp(0, n as i64 - 1)
        };
        (
            clamp((x - self.origin_x) / self.spacing, self.streets_x),
            clamp((y - self.origin_y) / self.spacing, self.streets_y),
        )
    }

    /// Whether moving from junction `(i, j)` toward `dir` stays on the grid.
    pub fn can_move(&self, i: i64, j: i64, dir: Dir) -> bool {
        let (di, dj) = dir.offset();
        self.junction_in_grid(i + di, j + dj)
    }

    fn vertical_streets_near(&self, lo: f64, hi: f64) -> std::ops::RangeInclusive<i64> {
        let h = self.corridor_width / 2.0;
        let a = ((lo - h - self.origin_x) / self.spacing).floor() as i64;
        let b = ((hi + h - self.origin_x) / self.spacing).ceil() as i64;
        a.max(0)..=b.min(self.streets_x as i64 - 1)
    }

    fn horizontal_streets_near(&self, lo: f64, hi: f64) -> std::ops::RangeInclusive<i64> {
        let h = self.corridor_width / 2.0;
        let a = ((lo - h - self.origin_y) / self.spacing).floor() as i64;
        let b = ((hi + h - self.origin_y) / self.spacing).ceil() as i64;
        a.max(0)..=b.min(self.streets_y as i64 - 1)
    }

    /// Whether a point lies on some street corridor.
    pub fn on_corridor(&self, x: f64, y: f64) -> bool {
        let h = self.corridor_width / 2.0;
        for i in self.vertical_streets_near(x, x) {
            if (x - (self.origin_x + i as f64 * self.spacing)).abs() <= h {
                return true;
            }
        }
        for j in self.horizontal_streets_near(y, y) {
            if (y - (self.origin_y + j as f64 * self.spacing)).abs() <= h {
                return true;
            }
        }
        false
    }

    /// Line-of-sight test: the open segment `p -> q` must stay inside the
    /// union of street corridors. Implemented as interval coverage of the
    /// segment parameter by the per-street corridor bands.
    pub fn segment_clear(&self, p: (f64, f64), q: (f64, f64)) -> bool {
        let mut clear: Vec<(f64, f64)> = Vec::new();
        let h = self.corridor_width / 2.0;
        let (px, py) = p;
        let (dx, dy) = (q.0 - px, q.1 - py);

        let mut band = |pos: f64, delta: f64, center: f64| {
            // Parameter interval where pos + t*delta lies within +-h of center.
            if delta.abs() < 1e-12 {
                if (pos - center).abs() <= h {
                    clear.push((0.0, 1.0));
                }
                return;
            }
            let t0 = (center - h - pos) / delta;
            let t1 = (center + h - pos) / delta;
            let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
            let (lo, hi) = (lo.max(0.0), hi.min(1.0));
            if lo <= hi {
                clear.push((lo, hi));
            }
        };

        let (xlo, xhi) = if px <= q.0 { (px, q.0) } else { (q.0, px) };
        for i in self.vertical_streets_near(xlo, xhi) {
            band(px, dx, self.origin_x + i as f64 * self.spacing);
        }
        let (ylo, yhi) = if py <= q.1 { (py, q.1) } else { (q.1, py) };
        for j in self.horizontal_streets_near(ylo, yhi) {
            band(py, dy, self.origin_y + j as f64 * self.spacing);
        }

        // Merge and test coverage of [0, 1].
        clear.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut covered = 0.0f64;
        const EPS: f64 = 1e-9;
        for (lo, hi) in clear {
            if lo > covered + EPS {
                return false;
            }
            covered = covered.max(hi);
            if covered >= 1.0 - EPS {
                return true;
            }
        }
        covered >= 1.0 - EPS
    }
}
