//! Trace and RSU file parsing.
//!
//! Trace CSV: header `#format,cartesian|gps` (plus `#ref,<lat>,<lon>` for
//! gps), then `t,vehicle_id,x,y` rows. UTF-8, `\n` line endings.
//! RSU CSV: header `#coords,xy|gps` (plus `#ref` for gps), rows `rsu_id,a,b`.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::sync::Arc;

use super::{project_gps, Region, Rsu, RsuSet, Sample, Trajectory};
use crate::error::{Error, Result};

/// On-disk trace coordinate format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceFormat {
    /// Rows are `t,vehicle_id,x,y` in meters.
    CartesianCsv,
    /// Rows are `t,vehicle_id,lat,lon`; projected against the `#ref` header.
    GpsCsv,
}

impl TraceFormat {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "cartesian" => Some(TraceFormat::CartesianCsv),
            "gps" => Some(TraceFormat::GpsCsv),
            _ => None,
        }
    }
}

fn parse_f64(field: &str, what: &str, line: usize) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::parse(line, format!("invalid {what} `{field}`")))
}

/// Parses a trace stream into one [`Trajectory`] per distinct vehicle id,
/// sorted by id.
///
/// The declared `format` must agree with any `#format` header present.
/// Timestamps must be strictly increasing per vehicle; violations are
/// reported as validation errors naming the vehicle.
pub fn parse_trace(reader: impl BufRead, format: TraceFormat) -> Result<Vec<Trajectory>> {
    let mut reference: Option<(f64, f64)> = None;
    // Insertion order preserved separately so ids intern once.
    let mut order: Vec<Arc<str>> = Vec::new();
    let mut by_vehicle: HashMap<Arc<str>, Vec<Sample>> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let fields: Vec<&str> = rest.split(',').collect();
            match fields[0].trim() {
                "format" => {
                    let declared = fields
                        .get(1)
                        .and_then(|f| TraceFormat::parse(f.trim()))
                        .ok_or_else(|| Error::parse(line_no, "bad #format header"))?;
                    if declared != format {
                        return Err(Error::parse(
                            line_no,
                            format!("file declares {:?} but {:?} was requested", declared, format),
                        ));
                    }
                }
                "ref" => {
                    if fields.len() != 3 {
                        return Err(Error::parse(line_no, "expected #ref,<lat>,<lon>"));
                    }
                    let lat = parse_f64(fields[1], "reference latitude", line_no)?;
                    let lon = parse_f64(fields[2], "reference longitude", line_no)?;
                    reference = Some((lat, lon));
                }
                // Unrecognized # lines are comments.
                _ => {}
            }
            continue;
        }

        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::parse(
                line_no,
                format!("expected 4 fields, got {}", fields.len()),
            ));
        }
        let t = parse_f64(fields[0], "timestamp", line_no)?;
        let id = fields[1].trim();
        if id.is_empty() {
            return Err(Error::parse(line_no, "empty vehicle id"));
        }
        let (x, y) = match format {
            TraceFormat::CartesianCsv => (
                parse_f64(fields[2], "x", line_no)?,
                parse_f64(fields[3], "y", line_no)?,
            ),
            TraceFormat::GpsCsv => {
                let lat = parse_f64(fields[2], "latitude", line_no)?;
                let lon = parse_f64(fields[3], "longitude", line_no)?;
                let r = reference
                    .ok_or_else(|| Error::parse(line_no, "gps row before #ref header"))?;
                project_gps(lat, lon, r)?
            }
        };
        let key: Arc<str> = match by_vehicle.get_key_value(id) {
            Some((k, _)) => k.clone(),
            None => {
                let k: Arc<str> = Arc::from(id);
                order.push(k.clone());
                k
            }
        };
        by_vehicle.entry(key).or_default().push(Sample { t, x, y });
    }

    let mut out = Vec::with_capacity(order.len());
    for id in order {
        let samples = by_vehicle.remove(&id).unwrap();
        out.push(Trajectory::new(id, samples)?);
    }
    out.sort_by(|a, b| a.vehicle_id.cmp(&b.vehicle_id));
    Ok(out)
}

/// Writes trajectories in the cartesian trace format. Numeric fields use the
/// shortest round-trip decimal representation.
pub fn write_trace(mut w: impl Write, trajs: &[Trajectory]) -> Result<()> {
    writeln!(w, "#format,cartesian")?;
    for traj in trajs {
        for s in &traj.samples {
            writeln!(w, "{},{},{},{}", s.t, traj.vehicle_id, s.x, s.y)?;
        }
    }
    Ok(())
}

/// Coordinate convention declared by an RSU catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsuCoords {
    Xy,
    Gps,
}

/// Loads an RSU catalog, projecting GPS rows and dropping units outside
/// `region`.
pub fn load_rsus(reader: impl BufRead, region: &Region) -> Result<RsuSet> {
    let mut coords: Option<RsuCoords> = None;
    let mut reference: Option<(f64, f64)> = None;
    let mut rsus: Vec<Rsu> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let fields: Vec<&str> = rest.split(',').collect();
            match fields[0].trim() {
                "coords" => {
                    coords = match fields.get(1).map(|f| f.trim()) {
                        Some("xy") => Some(RsuCoords::Xy),
                        Some("gps") => Some(RsuCoords::Gps),
                        _ => return Err(Error::parse(line_no, "bad #coords header")),
                    };
                }
                "ref" => {
                    if fields.len() != 3 {
                        return Err(Error::parse(line_no, "expected #ref,<lat>,<lon>"));
                    }
                    reference = Some((
                        parse_f64(fields[1], "reference latitude", line_no)?,
                        parse_f64(fields[2], "reference longitude", line_no)?,
                    ));
                }
                _ => {}
            }
            continue;
        }

        let declared = coords
            .ok_or_else(|| Error::parse(line_no, "rsu row before #coords header"))?;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::parse(
                line_no,
                format!("expected 3 fields, got {}", fields.len()),
            ));
        }
        let id = fields[0].trim();
        if id.is_empty() {
            return Err(Error::parse(line_no, "empty rsu id"));
        }
        let (x, y) = match declared {
            RsuCoords::Xy => (
                parse_f64(fields[1], "x", line_no)?,
                parse_f64(fields[2], "y", line_no)?,
            ),
            RsuCoords::Gps => {
                let lat = parse_f64(fields[1], "latitude", line_no)?;
                let lon = parse_f64(fields[2], "longitude", line_no)?;
                let r = reference
                    .ok_or_else(|| Error::parse(line_no, "gps row before #ref header"))?;
                project_gps(lat, lon, r)?
            }
        };
        if region.contains(x, y) {
            rsus.push(Rsu {
                id: Arc::from(id),
                x,
                y,
            });
        }
    }
    RsuSet::new(rsus)
}
