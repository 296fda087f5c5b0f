//! Local equirectangular projection from GPS to plane coordinates.

use crate::error::{Error, Result};

/// Mean Earth radius, meters.
pub const EARTH_RADIUS_M: f64 = 6_371_000.0;

/// Projects a GPS fix onto a local tangent plane anchored at `reference`.
///
/// x = R * (lon - lon0) * pi/180 * cos(lat0 * pi/180)
/// y = R * (lat - lat0) * pi/180
///
/// The reference itself maps to exactly (0, 0). Adequate for regions up to
/// a few kilometers across, where the projection error is far below radio
/// range granularity.
pub fn project_gps(lat: f64, lon: f64, reference: (f64, f64)) -> Result<(f64, f64)> {
    let (lat0, lon0) = reference;
    for (name, v, bound) in [
        ("lat", lat, 90.0),
        ("lon", lon, 180.0),
        ("reference lat", lat0, 90.0),
        ("reference lon", lon0, 180.0),
    ] {
        if !v.is_finite() || v.abs() > bound {
            return Err(Error::Domain(format!("{name} {v} out of range (+-{bound})")));
        }
    }
    let rad = std::f64::consts::PI / 180.0;
    let x = EARTH_RADIUS_M * (lon - lon0) * rad * (lat0 * rad).cos();
    let y = EARTH_RADIUS_M * (lat - lat0) * rad;
    Ok((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent evaluation of the projection formula: one arc-degree of a
    // great circle on a 6371 km sphere is 6_371_000 * pi / 180 m, so 0.01
    // degrees spans 1111.9492664... m.
    const METERS_PER_HUNDREDTH_DEG: f64 = EARTH_RADIUS_M * std::f64::consts::PI / 180.0 * 0.01;

    #[test]
    fn reference_maps_to_exact_origin() {
        let (x, y) = project_gps(31.23, 121.47, (31.23, 121.47)).unwrap();
        assert_eq!(x, 0.0);
        assert_eq!(y, 0.0);
    }

    #[test]
    fn equatorial_longitude_step_matches_arc_length() {
        let (x, y) = project_gps(0.0, 10.01, (0.0, 10.0)).unwrap();
        assert!((x - 1111.95).abs() < 0.01, "x = {x}");
        assert!((x - METERS_PER_HUNDREDTH_DEG).abs() < 1e-6);
        assert_eq!(y, 0.0);
    }

    #[test]
    fn latitude_step_matches_arc_length_at_any_longitude() {
        for lon0 in [-170.0, 0.0, 55.5] {
            let (x, y) = project_gps(40.01, lon0, (40.0, lon0)).unwrap();
            assert_eq!(x, 0.0);
            assert!((y - 1111.95).abs() < 0.01, "y = {y}");
            assert!((y - METERS_PER_HUNDREDTH_DEG).abs() < 1e-6);
        }
    }

    #[test]
    fn out_of_range_coordinates_are_domain_errors() {
        assert!(matches!(
            project_gps(200.0, 0.0, (0.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            project_gps(0.0, -180.5, (0.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            project_gps(0.0, 0.0, (91.0, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn projection_is_linear_in_offsets() {
        let r = (10.0, 20.0);
        let (x1, y1) = project_gps(10.02, 20.06, r).unwrap();
        let (x2, y2) = project_gps(10.01, 20.03, r).unwrap();
        assert!((x1 - 2.0 * x2).abs() < 1e-9);
        assert!((y1 - 2.0 * y2).abs() < 1e-9);
    }
}
