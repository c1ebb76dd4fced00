//! Partitioned sweeps over a family, tracking the extremal graphs of several objectives at once.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::engine::{leaf_poly, Family, Leaf, Prefix, Prune, Slots, Walk};
use super::Objective;

/// Execution knobs shared by every search entry point.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` runs sequentially.
    pub jobs: Option<usize>,
    pub prune: Prune,
    /// Resumable progress file for long sweeps.
    pub checkpoint: Option<PathBuf>,
}

/// Best value seen for one objective and the edge masks of the graphs attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct Tracker {
    pub maximize: bool,
    pub keep_all: bool,
    pub best: Option<u128>,
    pub masks: Vec<u64>,
}

impl Tracker {
    fn new(objective: Objective, keep_all: bool) -> Tracker {
        Tracker {
            maximize: objective != Objective::MinEdges,
            keep_all,
            best: None,
            masks: Vec::new(),
        }
    }

    fn better(&self, a: u128, b: u128) -> bool {
        if self.maximize {
            a > b
        } else {
            a < b
        }
    }

    #[inline]
    fn offer(&mut self, value: u128, mask: u64) {
        match self.best {
            Some(b) if self.better(b, value) => {}
            Some(b) if b == value => {
                if self.keep_all {
                    self.masks.push(mask);
                } else if mask < self.masks[0] {
                    self.masks[0] = mask;
                }
            }
            _ => {
                self.best = Some(value);
                self.masks.clear();
                self.masks.push(mask);
            }
        }
    }

    fn merge(mut self, other: Tracker) -> Tracker {
        match (self.best, other.best) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a == b => {
                if self.keep_all {
                    self.masks.extend(other.masks);
                } else {
                    self.masks[0] = self.masks[0].min(other.masks[0]);
                }
                self
            }
            (Some(a), Some(b)) => {
                if self.better(a, b) {
                    self
                } else {
                    other
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct Partial {
    pub trackers: Vec<Tracker>,
    pub examined: u128,
    pub pruned: u128,
    /// Number of graphs that satisfied the hypothesis.
    pub members: u128,
}

impl Partial {
    fn empty(objectives: &[Objective], keep_all: bool) -> Partial {
        Partial {
            trackers: objectives.iter().map(|&o| Tracker::new(o, keep_all)).collect(),
            examined: 0,
            pruned: 0,
            members: 0,
        }
    }

    fn merge(self, other: Partial) -> Partial {
        Partial {
            trackers: self
                .trackers
                .into_iter()
                .zip(other.trackers)
                .map(|(a, b)| a.merge(b))
                .collect(),
            examined: self.examined + other.examined,
            pruned: self.pruned + other.pruned,
            members: self.members + other.members,
        }
    }
}

fn needs_poly(objectives: &[Objective]) -> bool {
    objectives.iter().any(|o| matches!(o, Objective::Total | Objective::Size(_)))
}

fn run_partition(
    fam: Family,
    slots: &Slots,
    objectives: &[Objective],
    keep_all: bool,
    prune: Prune,
    prefix: Prefix,
) -> Partial {
    let mut part = Partial::empty(objectives, keep_all);
    let poly = needs_poly(objectives);
    let trackers = &mut part.trackers;
    let mut members = 0u128;
    let mut walk = Walk::new(fam, slots, prune, prefix, |leaf: &Leaf<'_>| {
        members += 1;
        let coeffs = if poly { leaf_poly(leaf.adj) } else { Vec::new() };
        for (tr, obj) in trackers.iter_mut().zip(objectives) {
            let value = match *obj {
                Objective::Total => coeffs.iter().sum(),
                Objective::Size(t) => coeffs.get(t).copied().unwrap_or(0),
                Objective::MinEdges => leaf.edges as u128,
            };
            tr.offer(value, leaf.mask);
        }
    });
    walk.run();
    let (examined, pruned) = (walk.examined, walk.pruned);
    drop(walk);
    part.examined = examined;
    part.pruned = pruned;
    part.members = members;
    part
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    key: String,
    partitions: usize,
    next: usize,
    state: Partial,
}

fn load_checkpoint(path: &Path, key: &str, partitions: usize) -> Result<Option<Checkpoint>> {
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(path).map_err(|e| Error::Checkpoint(e.to_string()))?;
    let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| Error::Checkpoint(e.to_string()))?;
    if cp.key != key || cp.partitions != partitions {
        return Err(Error::Checkpoint(format!(
            "{} belongs to a different search ({})",
            path.display(),
            cp.key
        )));
    }
    Ok(Some(cp))
}

fn save_checkpoint(path: &Path, cp: &Checkpoint) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let text = serde_json::to_string(cp).map_err(|e| Error::Checkpoint(e.to_string()))?;
    fs::write(&tmp, text).map_err(|e| Error::Checkpoint(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| Error::Checkpoint(e.to_string()))
}

const PARTITION_BITS: usize = 10;
const CHUNK: usize = 64;

/// Sweeps every labeled graph of `fam`, splitting the work on the first slots.
///
/// The merge is associative and commutative, so the outcome does not depend on the number
/// of partitions or threads; tie lists are unordered until the caller sorts them.
pub(crate) fn sweep(
    fam: Family,
    objectives: &[Objective],
    keep_all: bool,
    opts: &SearchOptions,
) -> Result<Partial> {
    let slots = Slots::new(fam.n);
    let bits = slots.len().min(PARTITION_BITS);
    let partitions = 1usize << bits;
    let prefix = |p: usize| Prefix {
        bits: p as u64,
        len: bits,
    };
    let work = |range: std::ops::Range<usize>| -> Partial {
        let run = |p: usize| run_partition(fam, &slots, objectives, keep_all, opts.prune, prefix(p));
        let empty = || Partial::empty(objectives, keep_all);
        if opts.jobs == Some(1) {
            range.map(run).fold(empty(), Partial::merge)
        } else {
            range.into_par_iter().map(run).reduce(empty, Partial::merge)
        }
    };
    let pool = match opts.jobs {
        Some(j) if j > 1 => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?,
        ),
        _ => None,
    };
    let exec = |range: std::ops::Range<usize>| match &pool {
        Some(p) => p.install(|| work(range)),
        None => work(range),
    };

    let Some(path) = &opts.checkpoint else {
        return Ok(exec(0..partitions));
    };
    let key = format!("{fam:?} {objectives:?} keep_all={keep_all} {:?}", opts.prune);
    let mut cp = match load_checkpoint(path, &key, partitions)? {
        Some(cp) => cp,
        None => Checkpoint {
            key,
            partitions,
            next: 0,
            state: Partial::empty(objectives, keep_all),
        },
    };
    while cp.next < partitions {
        let end = (cp.next + CHUNK).min(partitions);
        let done = exec(cp.next..end);
        cp.state = std::mem::replace(&mut cp.state, Partial::empty(objectives, keep_all)).merge(done);
        cp.next = end;
        save_checkpoint(path, &cp)?;
    }
    Ok(cp.state)
}
