//! Connected clusters: membership, the per-cluster clustering coefficient,
//! geographic extent of the biggest cluster, and triangle counts.

use std::sync::Arc;

use super::hull::hull_area;
use crate::snapshot::Snapshot;
use crate::trace::Region;

/// One connected cluster of the snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterReport {
    /// Sorted external ids of the members.
    pub member_ids: Vec<Arc<str>>,
    pub size: usize,
    /// Clustering coefficient `2|E_k| / (|N_k| (|N_k|-1))`; absent for
    /// singletons.
    pub coefficient: Option<f64>,
    /// Convex-hull area of member positions over the region area.
    pub hull_area_fraction: f64,
}

/// Maximal connected node groups as index sets, each sorted ascending;
/// groups ordered by their smallest member.
pub fn component_sets(s: &Snapshot) -> Vec<Vec<u32>> {
    let n = s.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue: Vec<u32> = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        queue.clear();
        queue.push(start);
        let mut members = vec![start];
        while let Some(u) = queue.pop() {
            for &v in s.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push(v);
                    members.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Clustering coefficient of a member set per the cluster-density formula;
/// `None` for singletons.
pub fn cluster_coefficient(members: &[u32], s: &Snapshot) -> Option<f64> {
    let k = members.len();
    if k < 2 {
        return None;
    }
    // Intra-cluster edge count. Members of a connected component have no
    // edges leaving it, so summing degrees double-counts exactly the
    // internal edges; for arbitrary member sets count pairwise.
    let mut internal = 0usize;
    for &u in members {
        for &v in s.neighbors(u) {
            if v > u && members.binary_search(&v).is_ok() {
                internal += 1;
            }
        }
    }
    Some(2.0 * internal as f64 / (k as f64 * (k as f64 - 1.0)))
}

fn report_for(members: &[u32], s: &Snapshot, region: &Region) -> ClusterReport {
    let mut member_ids: Vec<Arc<str>> =
        members.iter().map(|&i| s.node(i).id.clone()).collect();
    member_ids.sort();
    let points: Vec<(f64, f64)> = members.iter().map(|&i| s.pos(i)).collect();
    ClusterReport {
        size: members.len(),
        coefficient: cluster_coefficient(members, s),
        hull_area_fraction: hull_area(&points) / region.area(),
        member_ids,
    }
}

/// All clusters of the snapshot with size, coefficient and geographic
/// extent, ordered by smallest member index.
pub fn connected_components(s: &Snapshot, region: &Region) -> Vec<ClusterReport> {
    component_sets(s)
        .iter()
        .map(|members| report_for(members, s, region))
        .collect()
}

/// The cluster with the most members; ties go to the one containing the
/// smallest node id. `None` only for empty snapshots.
pub fn biggest_cluster_report(s: &Snapshot, region: &Region) -> Option<ClusterReport> {
    // component_sets orders groups by smallest member, and node index order
    // is id order, so the first maximal group wins ties by smallest id.
    let sets = component_sets(s);
    let best = sets.iter().max_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| b[0].cmp(&a[0]))
    })?;
    Some(report_for(best, s, region))
}

/// Number of unordered node triples with all three edges present. Counted
/// by merging sorted forward-neighbor lists.
pub fn triangle_count(s: &Snapshot) -> u64 {
    let mut count = 0u64;
    for &(u, v) in s.edges() {
        // Common neighbors w with w > v (> u) close a triangle exactly once.
        let (mut a, mut b) = (s.neighbors(u), s.neighbors(v));
        if let Ok(i) = a.binary_search(&v) {
            a = &a[i + 1..];
        }
        if let Ok(i) = b.binary_search(&v) {
            b = &b[i + 1..];
        }
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    count
}
