//! Convex hull of node positions and its area, for the geographic size of
//! clusters.

/// Convex hull via Andrew's monotone chain; returns hull vertices in
/// counter-clockwise order. Degenerate inputs (under 3 points, collinear
/// sets) return the reduced chain.
pub fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("NaN position"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| -> f64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(pts.len() * 2);
    for &p in pts.iter().chain(pts.iter().rev()) {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    // The backward sweep re-pushes the first point when the lower hull has
    // length 1 (all points collinear); dedup keeps the chain proper.
    hull.dedup();
    hull
}

/// Shoelace area of a simple polygon given in vertex order.
pub fn polygon_area(vertices: &[(f64, f64)]) -> f64 {
    if vertices.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..vertices.len() {
        let (x0, y0) = vertices[i];
        let (x1, y1) = vertices[(i + 1) % vertices.len()];
        acc += x0 * y1 - x1 * y0;
    }
    acc.abs() / 2.0
}

/// Area of the convex hull of a point set.
pub fn hull_area(points: &[(f64, f64)]) -> f64 {
    polygon_area(&convex_hull(points))
}
