//! Market-penetration sampling of equipped vehicles.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// The subset of vehicles equipped with radios at a given penetration ratio.
///
/// Selections are prefixes of one seed-determined permutation, so for a
/// fixed seed the selection at a lower ratio is always a subset of the
/// selection at any higher ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct PenetrationSample {
    pub ratio: f64,
    pub seed: u64,
    pub selected: BTreeSet<Arc<str>>,
}

impl PenetrationSample {
    pub fn is_selected(&self, id: &str) -> bool {
        self.selected.contains(id)
    }
}

/// Selects `round(ratio * n)` ids as the prefix of the seeded permutation of
/// the sorted id list. Input order does not matter.
pub fn sample_penetration(ids: &[Arc<str>], ratio: f64, seed: u64) -> Result<PenetrationSample> {
    if !(ratio > 0.0 && ratio <= 1.0) {
        return Err(Error::Domain(format!("penetration ratio {ratio} not in (0,1]")));
    }
    let mut sorted: Vec<Arc<str>> = ids.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sorted.shuffle(&mut rng);
    let take = (ratio * sorted.len() as f64).round() as usize;
    let selected: BTreeSet<Arc<str>> = sorted.into_iter().take(take).collect();
    Ok(PenetrationSample {
        ratio,
        seed,
        selected,
    })
}
