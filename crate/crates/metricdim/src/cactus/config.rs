//! Cycle labelings relative to a BBR set, the five obstruction
//! configurations, and critical vertices of S-paths.

use super::CactusAnalyzer;
use crate::dimension::DimensionMode;
use crate::error::{Error, Result};

/// One way of writing a cycle as `v_0 .. v_{g-1}`: a starting position
/// and a direction of travel along the stored cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleLabeling {
    pub start: usize,
    pub forward: bool,
}

impl CycleLabeling {
    /// Position on the cycle of the vertex labeled `label`.
    pub fn position(&self, label: usize, girth: usize) -> usize {
        if self.forward {
            (self.start + label) % girth
        } else {
            (self.start + girth - label) % girth
        }
    }

    /// Label given to the vertex at `pos`.
    pub fn label(&self, pos: usize, girth: usize) -> usize {
        if self.forward {
            (pos + girth - self.start) % girth
        } else {
            (self.start + girth - pos) % girth
        }
    }
}

/// The minimal-`k` labeling data of one cycle with respect to a set:
/// `v_0` is S-active and `k`, the largest S-active label, is as small as
/// possible. All labelings achieving the minimum are retained; the first
/// is the canonical one (least labeled S-active positions, then least
/// starting position, forward before backward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFrame {
    pub cycle: usize,
    pub girth: usize,
    pub k: usize,
    pub a_count: usize,
    pub labelings: Vec<CycleLabeling>,
    /// Graph vertices `v_1 .. v_k` under the canonical labeling.
    pub s_path: Vec<usize>,
}

/// The five obstruction configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Config {
    A,
    B,
    C,
    D,
    E,
}

pub const ABC: [Config; 3] = [Config::A, Config::B, Config::C];
pub const ADE: [Config; 3] = [Config::A, Config::D, Config::E];

impl Config {
    fn index(self) -> usize {
        match self {
            Config::A => 0,
            Config::B => 1,
            Config::C => 2,
            Config::D => 3,
            Config::E => 4,
        }
    }
}

/// Flags for the five configurations on one cycle with respect to one
/// BBR set. A flag is raised when any minimal-k labeling exhibits the
/// configuration; `disagreement` marks flags on which distinct minimal
/// labelings differ (reported, not resolved).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigReport {
    pub flags: [bool; 5],
    /// Anchor of a witnessing S-free thread (B-E), or the far S-active
    /// vertex (A).
    pub witnesses: [Option<usize>; 5],
    pub disagreement: [bool; 5],
}

impl ConfigReport {
    pub fn contains(&self, c: Config) -> bool {
        self.flags[c.index()]
    }

    pub fn contains_any(&self, cs: &[Config]) -> bool {
        cs.iter().any(|&c| self.contains(c))
    }

    pub fn any_disagreement(&self) -> bool {
        self.disagreement.iter().any(|&d| d)
    }
}

impl CactusAnalyzer {
    /// Minimal-k labeling frame of `cycle` with respect to the sorted
    /// set `set`; requires the set to be biactive on the cycle.
    pub fn cycle_frame(&self, cycle: usize, set: &[usize]) -> Result<CycleFrame> {
        let girth = self.profile().cycles[cycle].girth;
        let active = self.active_positions(cycle, set);
        if active.len() < 2 {
            return Err(Error::NotBiactive { cycle });
        }
        let mut best_k = usize::MAX;
        let mut minimal: Vec<(Vec<usize>, CycleLabeling)> = Vec::new();
        for &start in &active {
            for forward in [true, false] {
                let labeling = CycleLabeling { start, forward };
                let labels: Vec<usize> = {
                    let mut ls: Vec<usize> = active
                        .iter()
                        .map(|&p| labeling.label(p, girth))
                        .collect();
                    ls.sort_unstable();
                    ls
                };
                let k = *labels.last().expect("at least two active positions");
                if k < best_k {
                    best_k = k;
                    minimal.clear();
                }
                if k == best_k {
                    minimal.push((labels, labeling));
                }
            }
        }
        minimal.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then(a.1.start.cmp(&b.1.start))
                .then(b.1.forward.cmp(&a.1.forward))
        });
        let canonical = minimal[0].1;
        let s_path: Vec<usize> = (1..=best_k)
            .map(|label| self.profile().cycles[cycle].vertices[canonical.position(label, girth)])
            .collect();
        Ok(CycleFrame {
            cycle,
            girth,
            k: best_k,
            a_count: active.len(),
            labelings: minimal.into_iter().map(|(_, l)| l).collect(),
            s_path,
        })
    }

    /// Maximum S-free thread length (in vertices) hanging at each cycle
    /// position, under the given labeling. `None` where no S-free thread
    /// hangs.
    fn free_thread_by_label(
        &self,
        cycle: usize,
        set: &[usize],
        labeling: CycleLabeling,
        girth: usize,
    ) -> Vec<Option<usize>> {
        let mut out = vec![None; girth];
        for label in 0..girth {
            let v = self.profile().cycles[cycle].vertices[labeling.position(label, girth)];
            let mut best: Option<usize> = None;
            for &t in self.threads_at(v) {
                let thread = &self.profile().threads.threads[t];
                let s_free = thread
                    .vertices
                    .iter()
                    .all(|u| set.binary_search(u).is_err());
                if s_free {
                    let len = thread.vertices.len();
                    best = Some(best.map_or(len, |b: usize| b.max(len)));
                }
            }
            out[label] = best;
        }
        out
    }

    /// Evaluates the five configurations on `cycle` with respect to
    /// `set`, over every minimal-k labeling of `frame`.
    pub fn detect_configs(&self, cycle: usize, set: &[usize], frame: &CycleFrame) -> ConfigReport {
        let g = frame.girth;
        let k = frame.k;
        let a = frame.a_count;
        let fl = g / 2;
        let ce = g.div_ceil(2);
        let mut report = ConfigReport::default();
        let mut seen = [0usize; 5];
        for labeling in &frame.labelings {
            let free = self.free_thread_by_label(cycle, set, *labeling, g);
            let vertex_at = |label: usize| {
                self.profile().cycles[cycle].vertices[labeling.position(label, g)]
            };
            let mut flags = [false; 5];
            let mut wit = [None; 5];

            // A: two S-active vertices sit antipodally on an even cycle
            if a == 2 && g % 2 == 0 && k == g / 2 {
                flags[0] = true;
                wit[0] = Some(vertex_at(k));
            }
            // B: k small and an S-free thread in the forbidden index band
            if k + 1 <= fl {
                let in_range =
                    |i: usize| (i >= k && i + 1 <= fl) || (i >= ce + k + 1 && i < g) || i == 0;
                if let Some(i) = (0..g).find(|&i| in_range(i) && free[i].is_some()) {
                    flags[1] = true;
                    wit[1] = Some(vertex_at(i));
                }
            }
            // C: even cycle, two active vertices, and a long S-free
            // thread inside the S-path span
            if a == 2 && g % 2 == 0 && k <= g / 2 {
                let need = g / 2 - k;
                if let Some(i) = (0..=k).find(|&i| free[i].is_some_and(|len| len >= need)) {
                    flags[2] = true;
                    wit[2] = Some(vertex_at(i));
                }
            }
            // D: the edge-mode analog of B with ceiling bounds
            if k + 1 <= ce {
                let in_range =
                    |i: usize| (i >= k && i + 1 <= ce) || (i >= fl + k + 1 && i < g) || i == 0;
                if let Some(i) = (0..g).find(|&i| in_range(i) && free[i].is_some()) {
                    flags[3] = true;
                    wit[3] = Some(vertex_at(i));
                }
            }
            // E: two active vertices and a long S-free thread; on even
            // cycles a second S-free thread must face it across the cycle
            if a == 2 && fl + 1 >= k {
                let need = fl + 1 - k;
                let hit = (0..=k.min(g - 1)).find(|&i| {
                    free[i].is_some_and(|len| len >= need)
                        && (g % 2 == 1 || free[(g / 2 + k - i) % g].is_some())
                });
                if let Some(i) = hit {
                    flags[4] = true;
                    wit[4] = Some(vertex_at(i));
                }
            }

            for c in 0..5 {
                if flags[c] {
                    seen[c] += 1;
                    if !report.flags[c] {
                        report.flags[c] = true;
                        report.witnesses[c] = wit[c];
                    }
                }
            }
        }
        for c in 0..5 {
            report.disagreement[c] = report.flags[c] && seen[c] != frame.labelings.len();
        }
        report
    }

    /// End-vertices of the S-path that satisfy the mode's length bound:
    /// `k <= floor(g/2) - 1` for the vertex dimension, `k <= ceil(g/2) -
    /// 1` for the edge dimension. The union over all minimal-k labelings
    /// is returned, sorted.
    pub fn critical_vertices(
        &self,
        cycle: usize,
        frame: &CycleFrame,
        mode: DimensionMode,
    ) -> Result<Vec<usize>> {
        let g = frame.girth;
        let bound = match mode {
            DimensionMode::Vertex => g / 2 - 1,
            DimensionMode::Edge => g.div_ceil(2) - 1,
            DimensionMode::Mixed => {
                return Err(Error::InvalidGraph(
                    "criticality is defined for the vertex and edge dimensions only".into(),
                ))
            }
        };
        if frame.k > bound || frame.k == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for labeling in &frame.labelings {
            for label in [1, frame.k] {
                out.push(self.profile().cycles[cycle].vertices[labeling.position(label, g)]);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::dimension::{undistinguished_pairs, DimensionMode};
    use crate::graph::{cycle_graph, daisy_graph, Graph};

    fn frame_for(g: &Graph, set: &[usize], cycle: usize) -> (CactusAnalyzer, CycleFrame) {
        let a = CactusAnalyzer::new(g).unwrap();
        let f = a.cycle_frame(cycle, set).unwrap();
        (a, f)
    }

    #[test]
    fn frame_c6_span_two() {
        let g = cycle_graph(6);
        let (_, f) = frame_for(&g, &[0, 2], 0);
        assert_eq!(f.k, 2);
        assert_eq!(f.a_count, 2);
        assert_eq!(f.s_path.len(), 2);
        // canonical labeling starts at 2 moving toward 0: v_1 = 1, v_2 = 0
        assert!(f.s_path.contains(&1));
    }

    #[test]
    fn frame_c6_antipodal() {
        let g = cycle_graph(6);
        let (_, f) = frame_for(&g, &[0, 3], 0);
        assert_eq!(f.k, 3);
        // four minimal labelings: both starts, both directions
        assert_eq!(f.labelings.len(), 4);
    }

    #[test]
    fn frame_c5_adjacent() {
        let g = cycle_graph(5);
        let (_, f) = frame_for(&g, &[0, 1], 0);
        assert_eq!(f.k, 1);
        assert_eq!(f.s_path.len(), 1);
    }

    #[test]
    fn frame_requires_biactivity() {
        let g = cycle_graph(5);
        let a = CactusAnalyzer::new(&g).unwrap();
        assert!(matches!(
            a.cycle_frame(0, &[2]),
            Err(Error::NotBiactive { .. })
        ));
    }

    #[test]
    fn leafless_cycles_can_only_contain_a() {
        let g = daisy_graph(&[4, 6]);
        let a = CactusAnalyzer::new(&g).unwrap();
        for set in [[1, 4], [2, 6], [3, 8]] {
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            for cycle in 0..2 {
                let frame = a.cycle_frame(cycle, &sorted).unwrap();
                let report = a.detect_configs(cycle, &sorted, &frame);
                assert!(!report.contains(Config::B));
                assert!(!report.contains(Config::C));
                assert!(!report.contains(Config::D));
                assert!(!report.contains(Config::E));
            }
        }
    }

    #[test]
    fn antipodal_pair_on_even_cycle_is_config_a() {
        let g = cycle_graph(6);
        let (a, f) = frame_for(&g, &[0, 3], 0);
        let report = a.detect_configs(0, &[0, 3], &f);
        assert!(report.contains(Config::A));
        assert!(!report.contains_any(&[Config::B, Config::C, Config::D, Config::E]));

        let (a, f) = frame_for(&g, &[0, 2], 0);
        let report = a.detect_configs(0, &[0, 2], &f);
        assert!(!report.contains(Config::A));
    }

    #[test]
    fn b_implies_d_and_not_conversely_on_odd_cycles() {
        // C_5 with S = {0, 1} and a pendant vertex: hanging the pendant
        // at vertex 0 lands in both index bands, hanging it two steps
        // from the active pair lands only in the ceiling band
        let b_and_d = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let (a, f) = frame_for(&b_and_d, &[0, 1], 0);
        let report = a.detect_configs(0, &[0, 1], &f);
        assert!(report.contains(Config::B));
        assert!(report.contains(Config::D));

        let d_not_b =
            Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]).unwrap();
        let (a, f) = frame_for(&d_not_b, &[0, 1], 0);
        let report = a.detect_configs(0, &[0, 1], &f);
        assert!(!report.contains(Config::B));
        assert!(report.contains(Config::D));

        // D obstructs the edge dimension but not the vertex dimension
        assert!(
            undistinguished_pairs(&d_not_b, &[0, 1], DimensionMode::Vertex)
                .unwrap()
                .is_empty()
        );
        assert!(
            !undistinguished_pairs(&d_not_b, &[0, 1], DimensionMode::Edge)
                .unwrap()
                .is_empty()
        );
        // B obstructs the vertex dimension
        assert!(
            !undistinguished_pairs(&b_and_d, &[0, 1], DimensionMode::Vertex)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn config_c_needs_a_long_thread() {
        // C_6, S-active pair at distance 2, thread hanging at an S-path
        // vertex: length >= g/2 - k = 1 raises C
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6)]).unwrap();
        let (a, f) = frame_for(&g, &[0, 2], 0);
        let report = a.detect_configs(0, &[0, 2], &f);
        assert!(report.contains(Config::C), "{report:?}");
        // with the same shape but S on the thread, nothing is S-free
        let (a2, f2) = frame_for(&g, &[2, 6], 0);
        let report = a2.detect_configs(0, &[2, 6], &f2);
        assert!(!report.contains(Config::C));
    }

    #[test]
    fn config_e_even_cycle_needs_opposite_thread() {
        // C_4 with pendants at 1 and at the facing vertex 3; S = {0, 2}
        // puts k = 2 = g/2... choose S = {0} impossible; use S-active
        // pair at distance 1 instead: cycle 0..3, pendants at 2 and 3,
        // S = {0, 1}: k = 1, need length >= floor(4/2) - 1 + 1 = 2
        let g = Graph::new(
            8,
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (3, 6), (6, 7)],
        )
        .unwrap();
        let (a, f) = frame_for(&g, &[0, 1], 0);
        let report = a.detect_configs(0, &[0, 1], &f);
        assert!(report.contains(Config::E), "{report:?}");

        // removing the facing thread kills E on the even cycle
        let g2 = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5)]).unwrap();
        let (a2, f2) = frame_for(&g2, &[0, 1], 0);
        let report = a2.detect_configs(0, &[0, 1], &f2);
        assert!(!report.contains(Config::E), "{report:?}");
    }

    #[test]
    fn critical_vertices_respect_mode_bounds() {
        // C_5 cactus with S-path of two vertices: edge-critical but not
        // vertex-critical (2 > floor(5/2)-1 = 1, 2 <= ceil(5/2)-1 = 2)
        let g = cycle_graph(5);
        let (a, f) = frame_for(&g, &[0, 2], 0);
        assert_eq!(f.k, 2);
        assert!(a
            .critical_vertices(0, &f, DimensionMode::Vertex)
            .unwrap()
            .is_empty());
        let crit = a.critical_vertices(0, &f, DimensionMode::Edge).unwrap();
        assert!(!crit.is_empty());
        assert!(crit.contains(&0) && crit.contains(&2));

        // even girth 4 with S-path of one vertex: critical in both modes
        let g = cycle_graph(4);
        let (a, f) = frame_for(&g, &[0, 1], 0);
        assert_eq!(f.k, 1);
        assert!(!a
            .critical_vertices(0, &f, DimensionMode::Vertex)
            .unwrap()
            .is_empty());
        assert!(!a
            .critical_vertices(0, &f, DimensionMode::Edge)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn smallest_bbr_frames_are_consistent() {
        let g = daisy_graph(&[4, 4]);
        let a = CactusAnalyzer::new(&g).unwrap();
        for s in a.smallest_bbr_sets(&Caps::default()).unwrap() {
            for cycle in 0..2 {
                let f = a.cycle_frame(cycle, &s.set).unwrap();
                assert!(f.k == 1 || f.k == 2);
                assert_eq!(f.a_count, 2);
            }
        }
    }
}
