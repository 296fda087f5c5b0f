//! Per-tick communication graphs.
//!
//! A [`Snapshot`] is the undirected graph `G(t)`: vehicles and RSUs as
//! nodes, an edge wherever two nodes can communicate directly under the
//! configured [`RadioModel`]. Snapshots are immutable once built and cheap
//! to share across workers.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::road::RoadGrid;
use crate::trace::{PenetrationSample, RsuSet, Trajectory};

/// Node species in the communication graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Vehicle,
    Rsu,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Vehicle => "vehicle",
            NodeKind::Rsu => "rsu",
        }
    }
}

/// A positioned node at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotNode {
    pub id: Arc<str>,
    pub kind: NodeKind,
    pub x: f64,
    pub y: f64,
}

/// Radio reachability model.
#[derive(Debug, Clone, PartialEq)]
pub struct RadioModel {
    /// Transmission range, meters. Edges are inclusive: distance == range
    /// still connects.
    pub range: f64,
    pub los: LosMode,
}

/// Line-of-sight handling.
#[derive(Debug, Clone, PartialEq)]
pub enum LosMode {
    /// Pure unit-disk: distance alone decides.
    UnitDisk,
    /// Unit-disk plus occlusion by the blocks of a street grid.
    ManhattanLos(RoadGrid),
}

impl RadioModel {
    pub fn unit_disk(range: f64) -> Result<Self> {
        if !(range > 0.0) {
            return Err(Error::Validation(format!("range {range} must be positive")));
        }
        Ok(RadioModel {
            range,
            los: LosMode::UnitDisk,
        })
    }

    pub fn manhattan(range: f64, grid: RoadGrid) -> Result<Self> {
        if !(range > 0.0) {
            return Err(Error::Validation(format!("range {range} must be positive")));
        }
        Ok(RadioModel {
            range,
            los: LosMode::ManhattanLos(grid),
        })
    }

    fn reaches(&self, a: (f64, f64), b: (f64, f64)) -> bool {
        let d2 = (a.0 - b.0) * (a.0 - b.0) + (a.1 - b.1) * (a.1 - b.1);
        if d2 > self.range * self.range {
            return false;
        }
        match &self.los {
            LosMode::UnitDisk => true,
            LosMode::ManhattanLos(grid) => grid.segment_clear(a, b),
        }
    }
}

/// The undirected communication graph at one instant.
///
/// Nodes are sorted by id; node indices are positions in that order and are
/// only meaningful within this snapshot. Edges are stored once as `(u, v)`
/// with `u < v`, plus a CSR adjacency for traversals.
#[derive(Debug, Clone)]
pub struct Snapshot {
    t: f64,
    nodes: Vec<SnapshotNode>,
    edges: Vec<(u32, u32)>,
    adj_offsets: Vec<u32>,
    adj_targets: Vec<u32>,
}

impl Snapshot {
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn nodes(&self) -> &[SnapshotNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn node(&self, i: u32) -> &SnapshotNode {
        &self.nodes[i as usize]
    }

    pub fn pos(&self, i: u32) -> (f64, f64) {
        let n = &self.nodes[i as usize];
        (n.x, n.y)
    }

    /// Neighbor indices of `i`, ascending.
    pub fn neighbors(&self, i: u32) -> &[u32] {
        let a = self.adj_offsets[i as usize] as usize;
        let b = self.adj_offsets[i as usize + 1] as usize;
        &self.adj_targets[a..b]
    }

    pub fn degree(&self, i: u32) -> usize {
        self.neighbors(i).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Index of a node by external id.
    pub fn index_of(&self, id: &str) -> Option<u32> {
        self.nodes
            .binary_search_by(|n| n.id.as_ref().cmp(id))
            .ok()
            .map(|i| i as u32)
    }

    pub fn euclidean(&self, u: u32, v: u32) -> f64 {
        let (ax, ay) = self.pos(u);
        let (bx, by) = self.pos(v);
        ((ax - bx) * (ax - bx) + (ay - by) * (ay - by)).sqrt()
    }
}

/// Uniform-cell spatial hash used for neighbor candidate generation. Cell
/// size equals the radio range, so all nodes within range of a point sit in
/// the 3x3 neighborhood of its cell.
struct SpatialGrid {
    cell: f64,
    cells: HashMap<(i64, i64), Vec<u32>>,
}

impl SpatialGrid {
    fn build(nodes: &[SnapshotNode], cell: f64) -> Self {
        let mut cells: HashMap<(i64, i64), Vec<u32>> = HashMap::new();
        for (i, n) in nodes.iter().enumerate() {
            cells
                .entry(Self::key(cell, n.x, n.y))
                .or_default()
                .push(i as u32);
        }
        SpatialGrid { cell, cells }
    }

    fn key(cell: f64, x: f64, y: f64) -> (i64, i64) {
        ((x / cell).floor() as i64, (y / cell).floor() as i64)
    }

    /// Visits every stored index in the 3x3 cells around `(x, y)`.
    fn for_candidates(&self, x: f64, y: f64, mut f: impl FnMut(u32)) {
        let (cx, cy) = Self::key(self.cell, x, y);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(v) = self.cells.get(&(cx + dx, cy + dy)) {
                    for &i in v {
                        f(i);
                    }
                }
            }
        }
    }
}

impl Snapshot {
    /// Assembles a snapshot from an explicit edge list, without any radio
    /// model. Used to reload dumps and to drive metric oracles on arbitrary
    /// graphs; [`build_snapshot`] is the normal construction path.
    pub fn from_parts(
        t: f64,
        mut nodes: Vec<SnapshotNode>,
        edge_ids: &[(String, String)],
    ) -> Result<Snapshot> {
        nodes.sort_by(|a, b| a.id.cmp(&b.id));
        for w in nodes.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::Validation(format!("duplicate node id {}", w[0].id)));
            }
        }
        let index = |id: &str| -> Result<u32> {
            nodes
                .binary_search_by(|n| n.id.as_ref().cmp(id))
                .map(|i| i as u32)
                .map_err(|_| Error::Validation(format!("edge references unknown node {id}")))
        };
        let mut edges = Vec::with_capacity(edge_ids.len());
        for (a, b) in edge_ids {
            let (u, v) = (index(a)?, index(b)?);
            if u == v {
                return Err(Error::Validation(format!("self-loop on {a}")));
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(assemble(t, nodes, edges))
    }
}

/// Builds `G(t)` from positioned nodes. Nodes are re-sorted by id; duplicate
/// ids or non-finite positions are validation errors.
pub fn build_snapshot(t: f64, mut nodes: Vec<SnapshotNode>, model: &RadioModel) -> Result<Snapshot> {
    for n in &nodes {
        if !(n.x.is_finite() && n.y.is_finite()) {
            return Err(Error::Validation(format!("node {}: non-finite position", n.id)));
        }
    }
    nodes.sort_by(|a, b| a.id.cmp(&b.id));
    for w in nodes.windows(2) {
        if w[0].id == w[1].id {
            return Err(Error::Validation(format!("duplicate node id {}", w[0].id)));
        }
    }

    let grid = SpatialGrid::build(&nodes, model.range);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (i, n) in nodes.iter().enumerate() {
        let i = i as u32;
        grid.for_candidates(n.x, n.y, |j| {
            if j > i {
                let m = &nodes[j as usize];
                if model.reaches((n.x, n.y), (m.x, m.y)) {
                    edges.push((i, j));
                }
            }
        });
    }
    edges.sort_unstable();
    Ok(assemble(t, nodes, edges))
}

/// CSR assembly from a sorted half-edge list.
fn assemble(t: f64, nodes: Vec<SnapshotNode>, edges: Vec<(u32, u32)>) -> Snapshot {
    let n = nodes.len();
    let mut deg = vec![0u32; n];
    for &(u, v) in &edges {
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    let mut offsets = vec![0u32; n + 1];
    for i in 0..n {
        offsets[i + 1] = offsets[i] + deg[i];
    }
    let mut fill = offsets.clone();
    let mut targets = vec![0u32; edges.len() * 2];
    for &(u, v) in &edges {
        targets[fill[u as usize] as usize] = v;
        fill[u as usize] += 1;
        targets[fill[v as usize] as usize] = u;
        fill[v as usize] += 1;
    }
    for i in 0..n {
        targets[offsets[i] as usize..offsets[i + 1] as usize].sort_unstable();
    }

    Snapshot {
        t,
        nodes,
        edges,
        adj_offsets: offsets,
        adj_targets: targets,
    }
}

/// A vehicle segment resampled onto integer ticks.
#[derive(Debug)]
struct TickSegment {
    id: Arc<str>,
    start_tick: i64,
    positions: Vec<(f64, f64)>,
}

/// Prepared snapshot series over a window: positions indexed by tick, the
/// penetration-selected vehicles, RSUs fixed in every tick.
///
/// Snapshots for distinct ticks are independent; [`SnapshotSource::build`]
/// may be called from parallel workers.
#[derive(Debug)]
pub struct SnapshotSource {
    segments: Vec<TickSegment>,
    rsus: Vec<SnapshotNode>,
    model: RadioModel,
    dt: f64,
    start_tick: i64,
    tick_count: usize,
}

/// Prepares one snapshot per tick in the half-open window
/// `[window.0, window.1)`.
///
/// Trajectories must already be resampled to `dt`; only vehicles in
/// `sample` appear. The window must lie within trajectory coverage.
pub fn snapshot_series(
    trajs: &[Trajectory],
    rsus: &RsuSet,
    sample: &PenetrationSample,
    model: &RadioModel,
    window: (f64, f64),
    dt: f64,
) -> Result<SnapshotSource> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("tick {dt} must be positive")));
    }
    let (w_start, w_end) = window;
    if !(w_end > w_start) {
        return Err(Error::Domain(format!(
            "window [{w_start},{w_end}) is empty"
        )));
    }

    let mut segments = Vec::new();
    let mut coverage: Option<(i64, i64)> = None;
    for traj in trajs {
        let seg = to_tick_segment(traj, dt)?;
        let last = seg.start_tick + seg.positions.len() as i64 - 1;
        coverage = Some(match coverage {
            None => (seg.start_tick, last),
            Some((a, b)) => (a.min(seg.start_tick), b.max(last)),
        });
        if sample.is_selected(&seg.id) {
            segments.push(seg);
        }
    }

    let start_tick = (w_start / dt).round() as i64;
    let tick_count = ((w_end - w_start) / dt).round() as usize;
    let (cov_start, cov_end) =
        coverage.ok_or_else(|| Error::Domain("no trajectories given".into()))?;
    let last_tick = start_tick + tick_count as i64 - 1;
    if start_tick < cov_start || last_tick > cov_end {
        return Err(Error::Domain(format!(
            "window ticks [{start_tick},{last_tick}] outside trajectory coverage [{cov_start},{cov_end}]"
        )));
    }

    let rsu_nodes: Vec<SnapshotNode> = rsus
        .rsus
        .iter()
        .map(|r| SnapshotNode {
            id: r.id.clone(),
            kind: NodeKind::Rsu,
            x: r.x,
            y: r.y,
        })
        .collect();

    // Vehicle/RSU id collisions would poison every snapshot; reject now.
    let mut all_ids: Vec<&str> = segments
        .iter()
        .map(|s| s.id.as_ref())
        .chain(rsu_nodes.iter().map(|n| n.id.as_ref()))
        .collect();
    all_ids.sort_unstable();
    all_ids.dedup();
    let distinct_vehicles: std::collections::HashSet<&str> =
        segments.iter().map(|s| s.id.as_ref()).collect();
    if all_ids.len() != distinct_vehicles.len() + rsu_nodes.len() {
        return Err(Error::Validation(
            "vehicle and rsu ids must be disjoint".into(),
        ));
    }

    Ok(SnapshotSource {
        segments,
        rsus: rsu_nodes,
        model: model.clone(),
        dt,
        start_tick,
        tick_count,
    })
}

fn to_tick_segment(traj: &Trajectory, dt: f64) -> Result<TickSegment> {
    let mut positions = Vec::with_capacity(traj.samples.len());
    let mut start_tick = 0i64;
    for (i, s) in traj.samples.iter().enumerate() {
        let k = (s.t / dt).round() as i64;
        if ((k as f64) * dt - s.t).abs() > 1e-6 {
            return Err(Error::Validation(format!(
                "vehicle {}: sample time {} not on the {dt}-second grid",
                traj.vehicle_id, s.t
            )));
        }
        if i == 0 {
            start_tick = k;
        } else if k != start_tick + i as i64 {
            return Err(Error::Validation(format!(
                "vehicle {}: tick gap before t={}",
                traj.vehicle_id, s.t
            )));
        }
        positions.push((s.x, s.y));
    }
    if positions.is_empty() {
        return Err(Error::Validation(format!(
            "vehicle {}: empty trajectory",
            traj.vehicle_id
        )));
    }
    Ok(TickSegment {
        id: traj.vehicle_id.clone(),
        start_tick,
        positions,
    })
}

impl SnapshotSource {
    pub fn tick_count(&self) -> usize {
        self.tick_count
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn model(&self) -> &RadioModel {
        &self.model
    }

    pub fn tick_time(&self, k: usize) -> f64 {
        (self.start_tick + k as i64) as f64 * self.dt
    }

    /// Builds the snapshot for the `k`-th tick of the window.
    pub fn build(&self, k: usize) -> Snapshot {
        assert!(k < self.tick_count, "tick {k} out of window");
        let tick = self.start_tick + k as i64;
        let mut nodes: Vec<SnapshotNode> = Vec::with_capacity(self.segments.len() + self.rsus.len());
        for seg in &self.segments {
            let idx = tick - seg.start_tick;
            if idx >= 0 && (idx as usize) < seg.positions.len() {
                let (x, y) = seg.positions[idx as usize];
                nodes.push(SnapshotNode {
                    id: seg.id.clone(),
                    kind: NodeKind::Vehicle,
                    x,
                    y,
                });
            }
        }
        nodes.extend(self.rsus.iter().cloned());
        build_snapshot(self.tick_time(k), nodes, &self.model)
            .expect("series inputs validated at construction")
    }

    /// Ordered stream of snapshots over the window.
    pub fn iter(&self) -> impl Iterator<Item = Snapshot> + '_ {
        (0..self.tick_count).map(|k| self.build(k))
    }
}

/// Writes the debug dump of one snapshot: node block then edge list.
pub fn write_snapshot_dump(mut w: impl Write, s: &Snapshot) -> Result<()> {
    writeln!(w, "#t {}", s.t())?;
    writeln!(w, "#nodes")?;
    for n in s.nodes() {
        writeln!(w, "{} {} {} {}", n.id, n.kind.as_str(), n.x, n.y)?;
    }
    writeln!(w, "#edges")?;
    for &(u, v) in s.edges() {
        writeln!(w, "{} {}", s.node(u).id, s.node(v).id)?;
    }
    Ok(())
}

/// Reads a dump back; the edge list is cross-checked against `model` when
/// provided (used by tests and external oracles).
pub fn read_snapshot_dump(reader: impl BufRead) -> Result<(f64, Vec<SnapshotNode>, Vec<(String, String)>)> {
    let mut t = 0.0;
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Nodes,
        Edges,
    }
    let mut section = Section::Preamble;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#t ") {
            t = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, "bad #t value"))?;
        } else if line == "#nodes" {
            section = Section::Nodes;
        } else if line == "#edges" {
            section = Section::Edges;
        } else {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match section {
                Section::Nodes => {
                    if fields.len() != 4 {
                        return Err(Error::parse(line_no, "expected `id kind x y`"));
                    }
                    let kind = match fields[1] {
                        "vehicle" => NodeKind::Vehicle,
                        "rsu" => NodeKind::Rsu,
                        other => {
                            return Err(Error::parse(line_no, format!("unknown kind {other}")))
                        }
                    };
                    nodes.push(SnapshotNode {
                        id: Arc::from(fields[0]),
                        kind,
                        x: fields[2]
                            .parse()
                            .map_err(|_| Error::parse(line_no, "bad x"))?,
                        y: fields[3]
                            .parse()
                            .map_err(|_| Error::parse(line_no, "bad y"))?,
                    });
                }
                Section::Edges => {
                    if fields.len() != 2 {
                        return Err(Error::parse(line_no, "expected `u v`"));
                    }
                    edges.push((fields[0].to_string(), fields[1].to_string()));
                }
                Section::Preamble => {
                    return Err(Error::parse(line_no, "data before #nodes header"))
                }
            }
        }
    }
    Ok((t, nodes, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{sample_penetration, Sample};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn node(id: &str, x: f64, y: f64) -> SnapshotNode {
        SnapshotNode {
            id: Arc::from(id),
            kind: NodeKind::Vehicle,
            x,
            y,
        }
    }

    #[test]
    fn boundary_distance_is_inclusive() {
        let model = RadioModel::unit_disk(300.0).unwrap();
        let s = build_snapshot(
            0.0,
            vec![node("a", 0.0, 0.0), node("b", 300.0, 0.0)],
            &model,
        )
        .unwrap();
        assert_eq!(s.edge_count(), 1);
        let s = build_snapshot(
            0.0,
            vec![node("a", 0.0, 0.0), node("b", 300.001, 0.0)],
            &model,
        )
        .unwrap();
        assert_eq!(s.edge_count(), 0);
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let model = RadioModel::unit_disk(10.0).unwrap();
        let err = build_snapshot(
            0.0,
            vec![node("a", 0.0, 0.0), node("a", 1.0, 0.0)],
            &model,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    /// Brute-force all-pairs oracle for the spatial hash.
    fn brute_force_edges(nodes: &[SnapshotNode], model: &RadioModel) -> Vec<(String, String)> {
        let mut sorted: Vec<&SnapshotNode> = nodes.iter().collect();
        sorted.sort_by(|a, b| a.id.cmp(&b.id));
        let mut out = Vec::new();
        for i in 0..sorted.len() {
            for j in (i + 1)..sorted.len() {
                let (a, b) = (sorted[i], sorted[j]);
                let d2 = (a.x - b.x).powi(2) + (a.y - b.y).powi(2);
                let within = d2 <= model.range * model.range;
                let clear = match &model.los {
                    LosMode::UnitDisk => true,
                    LosMode::ManhattanLos(g) => g.segment_clear((a.x, a.y), (b.x, b.y)),
                };
                if within && clear {
                    out.push((a.id.to_string(), b.id.to_string()));
                }
            }
        }
        out
    }

    #[test]
    fn spatial_hash_matches_all_pairs_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for case in 0..20 {
            let n = 200;
            let nodes: Vec<SnapshotNode> = (0..n)
                .map(|i| {
                    node(
                        &format!("n{i:03}"),
                        rng.gen_range(0.0..2000.0),
                        rng.gen_range(0.0..2000.0),
                    )
                })
                .collect();
            let model = if case % 2 == 0 {
                RadioModel::unit_disk(rng.gen_range(50.0..400.0)).unwrap()
            } else {
                RadioModel::manhattan(
                    rng.gen_range(50.0..400.0),
                    RoadGrid::square(11, 200.0, 20.0).unwrap(),
                )
                .unwrap()
            };
            let snap = build_snapshot(0.0, nodes.clone(), &model).unwrap();
            let got: Vec<(String, String)> = snap
                .edges()
                .iter()
                .map(|&(u, v)| (snap.node(u).id.to_string(), snap.node(v).id.to_string()))
                .collect();
            assert_eq!(got, brute_force_edges(&nodes, &model), "case {case}");
        }
    }

    #[test]
    fn edges_grow_with_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let nodes: Vec<SnapshotNode> = (0..120)
            .map(|i| {
                node(
                    &format!("n{i:03}"),
                    rng.gen_range(0.0..1000.0),
                    rng.gen_range(0.0..1000.0),
                )
            })
            .collect();
        let small = build_snapshot(0.0, nodes.clone(), &RadioModel::unit_disk(75.0).unwrap())
            .unwrap();
        let large = build_snapshot(0.0, nodes, &RadioModel::unit_disk(300.0).unwrap()).unwrap();
        let small_set: std::collections::BTreeSet<_> = small.edges().iter().copied().collect();
        let large_set: std::collections::BTreeSet<_> = large.edges().iter().copied().collect();
        assert!(small_set.is_subset(&large_set));
    }

    fn fixed_traj(id: &str, x: f64, y: f64, ticks: usize) -> Trajectory {
        Trajectory::new(
            Arc::from(id),
            (0..ticks)
                .map(|k| Sample {
                    t: k as f64,
                    x,
                    y,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn window_tick_arithmetic() {
        let trajs: Vec<Trajectory> = (0..3)
            .map(|i| fixed_traj(&format!("v{i}"), i as f64 * 10.0, 0.0, 5000))
            .collect();
        let ids: Vec<Arc<str>> = trajs.iter().map(|t| t.vehicle_id.clone()).collect();
        let sample = sample_penetration(&ids, 1.0, 1).unwrap();
        let model = RadioModel::unit_disk(300.0).unwrap();
        let src = snapshot_series(
            &trajs,
            &RsuSet::default(),
            &sample,
            &model,
            (1000.0, 4600.0),
            1.0,
        )
        .unwrap();
        assert_eq!(src.tick_count(), 3600);
        assert_eq!(src.tick_time(0), 1000.0);
        assert_eq!(src.tick_time(3599), 4599.0);
        let snap = src.build(0);
        assert_eq!(snap.node_count(), 3);
        assert_eq!(snap.t(), 1000.0);
    }

    #[test]
    fn window_outside_coverage_is_domain_error() {
        let trajs = vec![fixed_traj("v0", 0.0, 0.0, 10)];
        let ids = vec![trajs[0].vehicle_id.clone()];
        let sample = sample_penetration(&ids, 1.0, 1).unwrap();
        let model = RadioModel::unit_disk(300.0).unwrap();
        let err = snapshot_series(
            &trajs,
            &RsuSet::default(),
            &sample,
            &model,
            (5.0, 20.0),
            1.0,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn only_selected_vehicles_appear_and_rsus_always_do() {
        let trajs: Vec<Trajectory> = (0..10)
            .map(|i| fixed_traj(&format!("v{i}"), i as f64 * 50.0, 0.0, 10))
            .collect();
        let ids: Vec<Arc<str>> = trajs.iter().map(|t| t.vehicle_id.clone()).collect();
        let small = sample_penetration(&ids, 0.3, 7).unwrap();
        let rsus = RsuSet::new(vec![crate::trace::Rsu {
            id: Arc::from("r0"),
            x: 100.0,
            y: 0.0,
        }])
        .unwrap();
        let model = RadioModel::unit_disk(60.0).unwrap();
        let src = snapshot_series(&trajs, &rsus, &small, &model, (0.0, 10.0), 1.0).unwrap();
        let snap = src.build(3);
        assert_eq!(snap.node_count(), 4);
        assert!(snap.index_of("r0").is_some());
        for n in snap.nodes() {
            if n.kind == NodeKind::Vehicle {
                assert!(small.is_selected(&n.id));
            }
        }
    }

    #[test]
    fn nested_samples_give_induced_edge_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let trajs: Vec<Trajectory> = (0..40)
            .map(|i| {
                fixed_traj(
                    &format!("v{i:02}"),
                    rng.gen_range(0.0..500.0),
                    rng.gen_range(0.0..500.0),
                    4,
                )
            })
            .collect();
        let ids: Vec<Arc<str>> = trajs.iter().map(|t| t.vehicle_id.clone()).collect();
        let model = RadioModel::unit_disk(120.0).unwrap();
        let rsus = RsuSet::default();
        let small = sample_penetration(&ids, 0.3, 5).unwrap();
        let large = sample_penetration(&ids, 0.8, 5).unwrap();
        let src_small =
            snapshot_series(&trajs, &rsus, &small, &model, (0.0, 3.0), 1.0).unwrap();
        let src_large =
            snapshot_series(&trajs, &rsus, &large, &model, (0.0, 3.0), 1.0).unwrap();
        for k in 0..3 {
            let a = src_small.build(k);
            let b = src_large.build(k);
            let a_edges: std::collections::BTreeSet<(String, String)> = a
                .edges()
                .iter()
                .map(|&(u, v)| (a.node(u).id.to_string(), a.node(v).id.to_string()))
                .collect();
            let b_edges: std::collections::BTreeSet<(String, String)> = b
                .edges()
                .iter()
                .map(|&(u, v)| (b.node(u).id.to_string(), b.node(v).id.to_string()))
                .collect();
            assert!(a_edges.is_subset(&b_edges), "tick {k}");
        }
    }

    #[test]
    fn empty_rsu_set_means_vehicle_only_snapshots() {
        let trajs = vec![fixed_traj("v0", 0.0, 0.0, 3)];
        let ids = vec![trajs[0].vehicle_id.clone()];
        let sample = sample_penetration(&ids, 1.0, 1).unwrap();
        let model = RadioModel::unit_disk(10.0).unwrap();
        let src = snapshot_series(
            &trajs,
            &RsuSet::default(),
            &sample,
            &model,
            (0.0, 3.0),
            1.0,
        )
        .unwrap();
        let snap = src.build(0);
        assert!(snap.nodes().iter().all(|n| n.kind == NodeKind::Vehicle));
    }

    #[test]
    fn manhattan_los_blocks_around_corners() {
        let grid = RoadGrid::square(3, 200.0, 20.0).unwrap();
        let model = RadioModel::manhattan(300.0, grid).unwrap();
        // One on a vertical street, one on a horizontal street, both far
        // from the shared junction: blocked despite being within range.
        let s = build_snapshot(
            0.0,
            vec![node("a", 200.0, 80.0), node("b", 80.0, 200.0)],
            &model,
        )
        .unwrap();
        assert_eq!(s.edge_count(), 0);
        // Same street: connected.
        let s = build_snapshot(
            0.0,
            vec![node("a", 200.0, 80.0), node("b", 200.0, 280.0)],
            &model,
        )
        .unwrap();
        assert_eq!(s.edge_count(), 1);
    }

    #[test]
    fn dump_round_trips() {
        let model = RadioModel::unit_disk(150.0).unwrap();
        let s = build_snapshot(
            7.0,
            vec![
                node("a", 0.0, 0.0),
                node("b", 100.0, 0.0),
                node("c", 500.0, 0.0),
            ],
            &model,
        )
        .unwrap();
        let mut buf = Vec::new();
        write_snapshot_dump(&mut buf, &s).unwrap();
        let (t, nodes, edges) = read_snapshot_dump(std::io::Cursor::new(buf)).unwrap();
        assert_eq!(t, 7.0);
        assert_eq!(nodes.len(), 3);
        assert_eq!(edges, vec![("a".to_string(), "b".to_string())]);
    }
}
