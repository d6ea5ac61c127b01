//! Structural analysis of cactus graphs: branch activity, BBR sets,
//! cycle configurations, critical incidences, and the exact dimension
//! formula built from them.

mod bbr;
mod config;
mod formula;

pub use bbr::{enumerate_smallest_bbr, is_bbr, BbrSet, BbrStatus};
pub use config::{Config, ConfigReport, CycleFrame, CycleLabeling, ABC, ADE};
pub use formula::{
    extremal_classification, extremal_classification_with, structural_dimensions,
    structural_dimensions_with, vertex_cover_number, BreakdownRecord, CorollaryStatus,
    CycleClassification, DimensionBreakdown, ExtremalClassification, NiceBbr, WitnessBundle,
};

use std::collections::BTreeMap;

use crate::blocks::block_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threads::{thread_profile, ThreadProfile};

/// One cycle of a cactus, as a block traced in cyclic order starting at
/// its smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    pub vertices: Vec<usize>,
    pub girth: usize,
    /// Sorted branch-active vertices: degree at least 4, or the
    /// off-cycle component contains another vertex of degree at least 3.
    pub branch_active: Vec<usize>,
    pub b_count: usize,
    /// Exactly one branch-active vertex.
    pub is_end_cycle: bool,
}

/// The structural skeleton of a cactus: its cycles with branch-activity
/// counts, the thread profile, and the derived quantities B(G) and L(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusProfile {
    pub cycles: Vec<CycleInfo>,
    /// B(G) = Σ over cycles of max(0, 2 − b(C)).
    pub b_total: usize,
    pub threads: ThreadProfile,
    /// L(G), copied out of the thread profile.
    pub l_total: usize,
}

/// `true` iff every block of the connected graph is a single edge or a
/// cycle.
pub fn is_cactus(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected { op: "is_cactus" });
    }
    let d = block_decomposition(g)?;
    Ok(d.blocks.iter().all(|b| !b.non_trivial || b.is_cycle))
}

pub fn cactus_profile(g: &Graph) -> Result<CactusProfile> {
    Ok(CactusAnalyzer::new(g)?.profile().clone())
}

/// Precomputed context every cactus operation works from: the cycles,
/// the attachment of each vertex to each cycle, and the threads.
pub struct CactusAnalyzer {
    g: Graph,
    profile: CactusProfile,
    /// `attach[i][u]`: position on cycle `i` of the cycle vertex whose
    /// component of `G − E(C_i)` contains `u`.
    attach: Vec<Vec<usize>>,
    /// anchor vertex -> indices into `profile.threads.threads`
    threads_at: BTreeMap<usize, Vec<usize>>,
    /// shared vertex of each pair of cycles that meet (cacti share at
    /// most one vertex per pair)
    shared: BTreeMap<(usize, usize), usize>,
}

impl CactusAnalyzer {
    pub fn new(g: &Graph) -> Result<CactusAnalyzer> {
        if !g.is_connected() {
            return Err(Error::Disconnected {
                op: "cactus analysis",
            });
        }
        let decomposition = block_decomposition(g)?;
        if decomposition
            .blocks
            .iter()
            .any(|b| b.non_trivial && !b.is_cycle)
        {
            return Err(Error::NotCactus);
        }

        let mut cycles = Vec::new();
        for block in decomposition.blocks.iter().filter(|b| b.is_cycle) {
            cycles.push(trace_cycle(block.vertices.clone(), &block.edges));
        }

        let threads = match thread_profile(g) {
            Ok(p) => p,
            Err(Error::NoThreadAnchors) => ThreadProfile::empty(),
            Err(e) => return Err(e),
        };

        let mut attach = Vec::with_capacity(cycles.len());
        for ring in &cycles {
            attach.push(attachment_map(g, ring)?);
        }

        let mut branch_data = Vec::with_capacity(cycles.len());
        for (i, ring) in cycles.iter().enumerate() {
            let mut active = Vec::new();
            for (pos, &v) in ring.iter().enumerate() {
                let hit = g.degree(v) >= 4
                    || (0..g.n())
                        .any(|u| u != v && attach[i][u] == pos && g.degree(u) >= 3);
                if hit {
                    active.push(v);
                }
            }
            branch_data.push(active);
        }

        let cycle_infos: Vec<CycleInfo> = cycles
            .into_iter()
            .zip(branch_data)
            .map(|(vertices, branch_active)| {
                let b_count = branch_active.len();
                CycleInfo {
                    girth: vertices.len(),
                    vertices,
                    branch_active,
                    b_count,
                    is_end_cycle: b_count == 1,
                }
            })
            .collect();

        let b_total = cycle_infos
            .iter()
            .map(|c| 2usize.saturating_sub(c.b_count))
            .sum();

        let mut threads_at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (t, thread) in threads.threads.iter().enumerate() {
            threads_at.entry(thread.anchor).or_default().push(t);
        }

        let mut shared = BTreeMap::new();
        for i in 0..cycle_infos.len() {
            for j in i + 1..cycle_infos.len() {
                let common: Vec<usize> = cycle_infos[i]
                    .vertices
                    .iter()
                    .filter(|v| cycle_infos[j].vertices.contains(v))
                    .copied()
                    .collect();
                match common.as_slice() {
                    [] => {}
                    [v] => {
                        shared.insert((i, j), *v);
                    }
                    _ => {
                        return Err(Error::Verification(
                            "two cycles of a cactus share more than one vertex".into(),
                        ))
                    }
                }
            }
        }

        let l_total = threads.l;
        Ok(CactusAnalyzer {
            g: g.clone(),
            profile: CactusProfile {
                cycles: cycle_infos,
                b_total,
                threads,
                l_total,
            },
            attach,
            threads_at,
            shared,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn profile(&self) -> &CactusProfile {
        &self.profile
    }

    pub fn cycle_count(&self) -> usize {
        self.profile.cycles.len()
    }

    /// Smallest BBR set size predicted by the structure: L(G) + B(G).
    pub fn smallest_bbr_size(&self) -> usize {
        self.profile.l_total + self.profile.b_total
    }

    pub(crate) fn attachment(&self, cycle: usize, vertex: usize) -> usize {
        self.attach[cycle][vertex]
    }

    pub(crate) fn threads_at(&self, anchor: usize) -> &[usize] {
        self.threads_at
            .get(&anchor)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub(crate) fn threads_at_iter(&self) -> impl Iterator<Item = (&usize, &Vec<usize>)> {
        self.threads_at.iter()
    }

    pub(crate) fn shared_vertex(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.shared.get(&key).copied()
    }

    /// Positions on cycle `i` that are S-active for `set`, sorted.
    pub(crate) fn active_positions(&self, cycle: usize, set: &[usize]) -> Vec<usize> {
        let mut positions: Vec<usize> = set
            .iter()
            .map(|&s| self.attach[cycle][s])
            .collect();
        positions.sort_unstable();
        positions.dedup();
        positions
    }
}

/// Orders a cycle block's vertices cyclically, starting at the smallest
/// vertex and moving toward its smaller neighbor.
fn trace_cycle(vertices: Vec<usize>, edges: &[(usize, usize)]) -> Vec<usize> {
    let start = vertices[0];
    let nbrs = |v: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };
    let first = nbrs(start).into_iter().min().expect("cycle vertex degree 2");
    let mut ring = vec![start, first];
    loop {
        let cur = *ring.last().unwrap();
        let prev = ring[ring.len() - 2];
        let next = nbrs(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("cycle vertex degree 2");
        if next == start {
            break;
        }
        ring.push(next);
    }
    ring
}

/// Components of `G − E(C)` each contain exactly one cycle vertex; map
/// every vertex to that cycle position.
fn attachment_map(g: &Graph, ring: &[usize]) -> Result<Vec<usize>> {
    let n = g.n();
    let mut cycle_edge = std::collections::HashSet::new();
    for i in 0..ring.len() {
        let a = ring[i];
        let b = ring[(i + 1) % ring.len()];
        cycle_edge.insert((a.min(b), a.max(b)));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for &(u, v) in g.edges() {
        if !cycle_edge.contains(&(u, v)) {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
    }
    let mut pos_of_root = vec![usize::MAX; n];
    for (pos, &v) in ring.iter().enumerate() {
        let r = find(&mut parent, v);
        if pos_of_root[r] != usize::MAX {
            return Err(Error::Verification(
                "two cycle vertices share an off-cycle component".into(),
            ));
        }
        pos_of_root[r] = pos;
    }
    let mut attach = vec![usize::MAX; n];
    for u in 0..n {
        let r = find(&mut parent, u);
        if pos_of_root[r] == usize::MAX {
            return Err(Error::Verification(
                "off-cycle component misses the cycle".into(),
            ));
        }
        attach[u] = pos_of_root[r];
    }
    Ok(attach)
}
