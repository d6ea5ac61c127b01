//! Biactive branch-resolving sets and the enumeration of all smallest
//! ones.

use serde::Serialize;

use super::CactusAnalyzer;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of the BBR predicate, carrying the violated constraint when
/// the set fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BbrStatus {
    Bbr,
    /// Fewer than two S-active vertices on this cycle.
    NotBiactive { cycle: usize },
    /// Two S-free threads hang at this anchor.
    FreeThreadClash { anchor: usize },
}

impl BbrStatus {
    pub fn is_bbr(&self) -> bool {
        matches!(self, BbrStatus::Bbr)
    }
}

/// A biactive branch-resolving set together with its per-cycle S-active
/// vertices and counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BbrSet {
    pub set: Vec<usize>,
    pub active: Vec<Vec<usize>>,
    pub a_counts: Vec<usize>,
}

/// Checks biactivity and branch-resolution of `set` on the cactus `g`.
pub fn is_bbr(g: &Graph, set: &[usize]) -> Result<BbrStatus> {
    let analyzer = CactusAnalyzer::new(g)?;
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(analyzer.bbr_status(&sorted))
}

impl CactusAnalyzer {
    /// `set` must be sorted.
    pub fn bbr_status(&self, set: &[usize]) -> BbrStatus {
        for cycle in 0..self.cycle_count() {
            if self.active_positions(cycle, set).len() < 2 {
                return BbrStatus::NotBiactive { cycle };
            }
        }
        for (&anchor, thread_ids) in self.threads_at_iter() {
            if thread_ids.len() < 2 {
                continue;
            }
            let free = thread_ids
                .iter()
                .filter(|&&t| {
                    self.profile().threads.threads[t]
                        .vertices
                        .iter()
                        .all(|v| set.binary_search(v).is_err())
                })
                .count();
            if free >= 2 {
                return BbrStatus::FreeThreadClash { anchor };
            }
        }
        BbrStatus::Bbr
    }

    /// Builds the [`BbrSet`] record for a sorted set already known to be
    /// BBR.
    pub fn bbr_set_record(&self, set: &[usize]) -> BbrSet {
        let mut active = Vec::with_capacity(self.cycle_count());
        let mut a_counts = Vec::with_capacity(self.cycle_count());
        for cycle in 0..self.cycle_count() {
            let verts: Vec<usize> = {
                let mut v: Vec<usize> = self
                    .active_positions(cycle, set)
                    .into_iter()
                    .map(|p| self.profile().cycles[cycle].vertices[p])
                    .collect();
                v.sort_unstable();
                v
            };
            a_counts.push(verts.len());
            active.push(verts);
        }
        BbrSet {
            set: set.to_vec(),
            active,
            a_counts,
        }
    }

    /// All BBR sets of the smallest size L(G) + B(G), in lexicographic
    /// order, after asserting that no BBR set one vertex smaller exists.
    pub fn smallest_bbr_sets(&self, caps: &Caps) -> Result<Vec<BbrSet>> {
        if self.cycle_count() == 0 {
            return Err(Error::TreeInput {
                op: "enumerate_smallest_bbr",
            });
        }
        let target = self.smallest_bbr_size();
        let mut budget = caps.bbr_cap;
        if target >= 1 {
            let smaller = self.bbr_sets_of_size(target - 1, &mut budget, caps, true)?;
            if let Some(s) = smaller.first() {
                return Err(Error::Verification(format!(
                    "BBR set {:?} is smaller than L+B = {target}",
                    s.set
                )));
            }
        }
        let sets = self.bbr_sets_of_size(target, &mut budget, caps, false)?;
        if sets.is_empty() {
            return Err(Error::Verification(format!(
                "no BBR set of the predicted smallest size L+B = {target}"
            )));
        }
        Ok(sets)
    }

    fn bbr_sets_of_size(
        &self,
        k: usize,
        budget: &mut usize,
        caps: &Caps,
        stop_at_first: bool,
    ) -> Result<Vec<BbrSet>> {
        let n = self.graph().n();
        let mut found = Vec::new();
        let mut current: Vec<usize> = Vec::with_capacity(k);
        self.subset_search(0, k, n, &mut current, &mut found, budget, caps, stop_at_first)?;
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn subset_search(
        &self,
        next: usize,
        k: usize,
        n: usize,
        current: &mut Vec<usize>,
        found: &mut Vec<BbrSet>,
        budget: &mut usize,
        caps: &Caps,
        stop_at_first: bool,
    ) -> Result<()> {
        if stop_at_first && !found.is_empty() {
            return Ok(());
        }
        if current.len() == k {
            if *budget == 0 {
                return Err(Error::BbrCapExceeded {
                    nodes: caps.bbr_cap,
                    cap: caps.bbr_cap,
                });
            }
            *budget -= 1;
            caps.check_deadline()?;
            if self.bbr_status(current).is_bbr() {
                found.push(self.bbr_set_record(current));
            }
            return Ok(());
        }
        if n - next < k - current.len() {
            return Ok(());
        }
        for v in next..n {
            current.push(v);
            self.subset_search(v + 1, k, n, current, found, budget, caps, stop_at_first)?;
            current.pop();
            if stop_at_first && !found.is_empty() {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Free-function wrapper over [`CactusAnalyzer::smallest_bbr_sets`].
pub fn enumerate_smallest_bbr(g: &Graph, caps: &Caps) -> Result<Vec<BbrSet>> {
    CactusAnalyzer::new(g)?.smallest_bbr_sets(caps)
}
