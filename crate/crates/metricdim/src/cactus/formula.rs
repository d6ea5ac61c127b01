//! Cycle classification over the smallest-BBR stream, nice sets,
//! incidence graphs, vertex covers, and the assembled dimension formula
//! with its extremal consequences.

use serde::Serialize;

use super::bbr::BbrSet;
use super::config::{Config, ConfigReport, ABC, ADE};
use super::CactusAnalyzer;
use crate::caps::Caps;
use crate::dimension::{exact_dimension_with, DimensionMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-set, per-cycle data computed once over the whole smallest-BBR
/// stream and shared by every downstream classification.
struct BbrScan {
    sets: Vec<BbrSet>,
    /// reports[set][cycle]
    reports: Vec<Vec<ConfigReport>>,
    /// crit[mode][set][cycle]: sorted critical vertices
    crit_vertex: Vec<Vec<Vec<usize>>>,
    crit_edge: Vec<Vec<Vec<usize>>>,
}

impl CactusAnalyzer {
    fn scan_smallest_bbr(&self, caps: &Caps) -> Result<BbrScan> {
        let sets = self.smallest_bbr_sets(caps)?;
        let c = self.cycle_count();
        let mut reports = Vec::with_capacity(sets.len());
        let mut crit_vertex = Vec::with_capacity(sets.len());
        let mut crit_edge = Vec::with_capacity(sets.len());
        for s in &sets {
            let mut row_reports = Vec::with_capacity(c);
            let mut row_cv = Vec::with_capacity(c);
            let mut row_ce = Vec::with_capacity(c);
            for cycle in 0..c {
                let frame = self.cycle_frame(cycle, &s.set)?;
                row_reports.push(self.detect_configs(cycle, &s.set, &frame));
                row_cv.push(self.critical_vertices(cycle, &frame, DimensionMode::Vertex)?);
                row_ce.push(self.critical_vertices(cycle, &frame, DimensionMode::Edge)?);
            }
            reports.push(row_reports);
            crit_vertex.push(row_cv);
            crit_edge.push(row_ce);
        }
        Ok(BbrScan {
            sets,
            reports,
            crit_vertex,
            crit_edge,
        })
    }
}

fn mode_configs(mode: DimensionMode) -> Result<&'static [Config; 3]> {
    match mode {
        DimensionMode::Vertex => Ok(&ABC),
        DimensionMode::Edge => Ok(&ADE),
        DimensionMode::Mixed => Err(Error::InvalidGraph(
            "the structural formula covers the vertex and edge dimensions only".into(),
        )),
    }
}

/// Positive/negative labels for every cycle: a cycle is negative when
/// some smallest BBR set avoids the mode's three configurations on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClassification {
    pub mode_positive: Vec<bool>,
    /// One smallest BBR set keeps all negative cycles configuration-free
    /// simultaneously (expected always; a violation is diagnosed).
    pub simultaneous_ok: bool,
    pub diagnostics: Vec<String>,
}

impl CycleClassification {
    pub fn positive_count(&self) -> usize {
        self.mode_positive.iter().filter(|&&p| p).count()
    }
}

fn classify(scan: &BbrScan, mode: DimensionMode) -> Result<CycleClassification> {
    let configs = mode_configs(mode)?;
    let c = scan.reports.first().map_or(0, Vec::len);
    let mut positive = vec![true; c];
    for row in &scan.reports {
        for (cycle, report) in row.iter().enumerate() {
            if !report.contains_any(configs) {
                positive[cycle] = false;
            }
        }
    }
    let simultaneous_ok = scan.reports.iter().any(|row| {
        row.iter()
            .enumerate()
            .all(|(cycle, report)| positive[cycle] || !report.contains_any(configs))
    });
    let mut diagnostics = Vec::new();
    if !simultaneous_ok {
        diagnostics.push(format!(
            "no single smallest BBR set clears every {mode:?}-negative cycle at once",
            mode = mode
        ));
    }
    for row in &scan.reports {
        for (cycle, report) in row.iter().enumerate() {
            if report.any_disagreement() {
                diagnostics.push(format!(
                    "cycle {cycle}: minimal-k labelings disagree on {:?}",
                    report.disagreement
                ));
            }
        }
    }
    diagnostics.sort();
    diagnostics.dedup();
    Ok(CycleClassification {
        mode_positive: positive,
        simultaneous_ok,
        diagnostics,
    })
}

/// A nice smallest BBR set: all negative cycles configuration-free and
/// the number of critically incident cycle pairs minimal; ties go to the
/// lexicographically least set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceBbr {
    pub set: BbrSet,
    /// (cycle_i, cycle_j, shared vertex) critically incident pairs with
    /// respect to the nice set, all cycle pairs counted.
    pub incident_pairs: Vec<(usize, usize, usize)>,
    pub positive: Vec<bool>,
}

fn incident_pairs_for(
    analyzer: &CactusAnalyzer,
    crit: &[Vec<usize>],
) -> Vec<(usize, usize, usize)> {
    let c = crit.len();
    let mut pairs = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            if let Some(v) = analyzer.shared_vertex(i, j) {
                if crit[i].binary_search(&v).is_ok() && crit[j].binary_search(&v).is_ok() {
                    pairs.push((i, j, v));
                }
            }
        }
    }
    pairs
}

fn nice_from_scan(
    analyzer: &CactusAnalyzer,
    scan: &BbrScan,
    classification: &CycleClassification,
    mode: DimensionMode,
) -> Result<NiceBbr> {
    let configs = mode_configs(mode)?;
    let crit = match mode {
        DimensionMode::Vertex => &scan.crit_vertex,
        DimensionMode::Edge => &scan.crit_edge,
        DimensionMode::Mixed => unreachable!("mode_configs rejected mixed"),
    };
    let positive = &classification.mode_positive;
    let clears_negatives = |row: &Vec<ConfigReport>| {
        row.iter()
            .enumerate()
            .all(|(cycle, report)| positive[cycle] || !report.contains_any(configs))
    };
    // fall back to every set when the simultaneity expectation fails,
    // so a diagnosable answer still comes back
    let candidates: Vec<usize> = if classification.simultaneous_ok {
        (0..scan.sets.len())
            .filter(|&s| clears_negatives(&scan.reports[s]))
            .collect()
    } else {
        (0..scan.sets.len()).collect()
    };
    let best = candidates
        .into_iter()
        .min_by_key(|&s| incident_pairs_for(analyzer, &crit[s]).len())
        .ok_or_else(|| Error::Verification("empty smallest-BBR stream".into()))?;
    Ok(NiceBbr {
        set: scan.sets[best].clone(),
        incident_pairs: incident_pairs_for(analyzer, &crit[best]),
        positive: positive.clone(),
    })
}

/// Incidence graph on one vertex per cycle: edges join negative,
/// critically incident cycle pairs with respect to the nice set.
fn incidence_graph_from(nice: &NiceBbr, cycle_count: usize) -> Graph {
    let edges: Vec<(usize, usize)> = nice
        .incident_pairs
        .iter()
        .filter(|&&(i, j, _)| !nice.positive[i] && !nice.positive[j])
        .map(|&(i, j, _)| (i, j))
        .collect();
    Graph::new(cycle_count.max(1), edges).expect("incidence graph is simple")
}

/// Exact minimum vertex cover with the lexicographically least witness.
/// Meant for the tiny incidence graphs; exhaustive by size.
pub fn vertex_cover_number(h: &Graph) -> (usize, Vec<usize>) {
    if h.m() == 0 {
        return (0, Vec::new());
    }
    let n = h.n();
    for k in 1..=n {
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        if let Some(cover) = cover_search(h, 0, k, &mut chosen) {
            return (k, cover);
        }
    }
    unreachable!("the full vertex set covers everything");
}

fn cover_search(h: &Graph, next: usize, k: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
    if chosen.len() == k {
        let covers = h
            .edges()
            .iter()
            .all(|&(u, v)| chosen.binary_search(&u).is_ok() || chosen.binary_search(&v).is_ok());
        return covers.then(|| chosen.clone());
    }
    if h.n() - next < k - chosen.len() {
        return None;
    }
    for v in next..h.n() {
        chosen.push(v);
        if let Some(found) = cover_search(h, v + 1, k, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Corollary-style bound status: `dim <= L + 2c` with equality exactly
/// when every cycle is a positive end-cycle (meaningful for c >= 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryStatus {
    pub bound: usize,
    pub dim_equality: bool,
    pub edim_equality: bool,
    pub all_abc_positive_end_cycles: bool,
    pub all_ade_positive_end_cycles: bool,
}

/// The four summands of the exact formula for both dimensions, with the
/// witnesses that produced them.
#[derive(Debug, Clone)]
pub struct DimensionBreakdown {
    pub l: usize,
    pub b: usize,
    pub b_per_cycle: Vec<usize>,
    pub c_abc: usize,
    pub c_ade: usize,
    pub tau_vi: usize,
    pub tau_ei: usize,
    pub dim_formula: usize,
    pub edim_formula: usize,
    pub nice_vertex: NiceBbr,
    pub nice_edge: NiceBbr,
    pub incidence_vertex: Graph,
    pub incidence_edge: Graph,
    pub cover_vertex: Vec<usize>,
    pub cover_edge: Vec<usize>,
    pub corollary: Option<CorollaryStatus>,
    pub diagnostics: Vec<String>,
}

/// Evaluates `dim = L + B + c_ABC + tau(G_vi)` and the edge analog with
/// a full per-summand breakdown.
pub fn structural_dimensions(g: &Graph) -> Result<DimensionBreakdown> {
    structural_dimensions_with(g, &Caps::default())
}

pub fn structural_dimensions_with(g: &Graph, caps: &Caps) -> Result<DimensionBreakdown> {
    let analyzer = CactusAnalyzer::new(g)?;
    analyzer.structural_dimensions(caps)
}

impl CactusAnalyzer {
    pub fn structural_dimensions(&self, caps: &Caps) -> Result<DimensionBreakdown> {
        if self.cycle_count() == 0 {
            return Err(Error::TreeInput {
                op: "structural_dimensions",
            });
        }
        let scan = self.scan_smallest_bbr(caps)?;
        let class_v = classify(&scan, DimensionMode::Vertex)?;
        let class_e = classify(&scan, DimensionMode::Edge)?;
        let nice_v = nice_from_scan(self, &scan, &class_v, DimensionMode::Vertex)?;
        let nice_e = nice_from_scan(self, &scan, &class_e, DimensionMode::Edge)?;
        let c = self.cycle_count();
        let incidence_vertex = incidence_graph_from(&nice_v, c);
        let incidence_edge = incidence_graph_from(&nice_e, c);
        let (tau_vi, cover_vertex) = vertex_cover_number(&incidence_vertex);
        let (tau_ei, cover_edge) = vertex_cover_number(&incidence_edge);
        let profile = self.profile();
        let l = profile.l_total;
        let b = profile.b_total;
        let c_abc = class_v.positive_count();
        let c_ade = class_e.positive_count();
        let dim_formula = l + b + c_abc + tau_vi;
        let edim_formula = l + b + c_ade + tau_ei;
        let mut diagnostics = class_v.diagnostics.clone();
        diagnostics.extend(class_e.diagnostics.clone());
        diagnostics.sort();
        diagnostics.dedup();
        let corollary = (c >= 2).then(|| {
            let bound = l + 2 * c;
            let end = |i: usize| profile.cycles[i].is_end_cycle;
            CorollaryStatus {
                bound,
                dim_equality: dim_formula == bound,
                edim_equality: edim_formula == bound,
                all_abc_positive_end_cycles: (0..c)
                    .all(|i| class_v.mode_positive[i] && end(i)),
                all_ade_positive_end_cycles: (0..c)
                    .all(|i| class_e.mode_positive[i] && end(i)),
            }
        });
        Ok(DimensionBreakdown {
            l,
            b,
            b_per_cycle: profile.cycles.iter().map(|cy| cy.b_count).collect(),
            c_abc,
            c_ade,
            tau_vi,
            tau_ei,
            dim_formula,
            edim_formula,
            nice_vertex: nice_v,
            nice_edge: nice_e,
            incidence_vertex,
            incidence_edge,
            cover_vertex,
            cover_edge,
            corollary,
            diagnostics,
        })
    }

    pub fn classify_cycles(&self, mode: DimensionMode, caps: &Caps) -> Result<CycleClassification> {
        let scan = self.scan_smallest_bbr(caps)?;
        classify(&scan, mode)
    }

    pub fn nice_bbr(&self, mode: DimensionMode, caps: &Caps) -> Result<NiceBbr> {
        let scan = self.scan_smallest_bbr(caps)?;
        let classification = classify(&scan, mode)?;
        nice_from_scan(self, &scan, &classification, mode)
    }

    pub fn incidence_graph(&self, nice: &NiceBbr) -> Graph {
        incidence_graph_from(nice, self.cycle_count())
    }
}

/// JSON record carrying the whole breakdown plus exact values, with the
/// field names fixed for the report tooling.
#[derive(Debug, Clone, Serialize)]
pub struct BreakdownRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub c: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "b")]
    pub b_per_cycle: Vec<usize>,
    pub c_abc: usize,
    pub c_ade: usize,
    pub tau_vi: usize,
    pub tau_ei: usize,
    pub dim_formula: usize,
    pub edim_formula: usize,
    pub dim_exact: Option<usize>,
    pub edim_exact: Option<usize>,
    pub extremal: Option<ExtremalClassification>,
    pub witnesses: WitnessBundle,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessBundle {
    pub nice_set_vertex: Vec<usize>,
    pub nice_set_edge: Vec<usize>,
    pub cover_vertex: Vec<usize>,
    pub cover_edge: Vec<usize>,
    pub incidence_vertex_edges: Vec<(usize, usize)>,
    pub incidence_edge_edges: Vec<(usize, usize)>,
    pub dim_witness: Option<Vec<usize>>,
    pub edim_witness: Option<Vec<usize>>,
}

impl BreakdownRecord {
    pub fn assemble(
        g: &Graph,
        breakdown: &DimensionBreakdown,
        dim_exact: Option<&crate::dimension::GeneratorWitness>,
        edim_exact: Option<&crate::dimension::GeneratorWitness>,
        extremal: Option<ExtremalClassification>,
    ) -> BreakdownRecord {
        BreakdownRecord {
            graph6: g.to_graph6(),
            n: g.n(),
            m: g.m(),
            c: g.m() + 1 - g.n(),
            l: breakdown.l,
            b: breakdown.b,
            b_per_cycle: breakdown.b_per_cycle.clone(),
            c_abc: breakdown.c_abc,
            c_ade: breakdown.c_ade,
            tau_vi: breakdown.tau_vi,
            tau_ei: breakdown.tau_ei,
            dim_formula: breakdown.dim_formula,
            edim_formula: breakdown.edim_formula,
            dim_exact: dim_exact.map(|w| w.size),
            edim_exact: edim_exact.map(|w| w.size),
            extremal,
            witnesses: WitnessBundle {
                nice_set_vertex: breakdown.nice_vertex.set.set.clone(),
                nice_set_edge: breakdown.nice_edge.set.set.clone(),
                cover_vertex: breakdown.cover_vertex.clone(),
                cover_edge: breakdown.cover_edge.clone(),
                incidence_vertex_edges: breakdown.incidence_vertex.edges().to_vec(),
                incidence_edge_edges: breakdown.incidence_edge.edges().to_vec(),
                dim_witness: dim_exact.map(|w| w.set.clone()),
                edim_witness: edim_exact.map(|w| w.set.clone()),
            },
        }
    }
}

/// Extremal census of one cactus with c >= 2: daisy structure, the
/// nearly-extremal characterizations in both readings, and the leafless
/// bound, each cross-checked against the exact solver.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalClassification {
    pub c: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub is_daisy: bool,
    pub has_odd_petal: bool,
    pub leafless: bool,
    pub all_end_cycles: bool,
    pub end_cycle_count: usize,
    pub dim_exact: usize,
    pub edim_exact: usize,
    pub dim_nearly_extremal: bool,
    pub edim_nearly_extremal: bool,
    /// statement reading: all end-cycles with the negative cycles
    /// pairwise critically incident, or exactly c-1 end-cycles with all
    /// cycles positive
    pub dim_statement_predicted: bool,
    pub edim_statement_predicted: bool,
    /// proof reading: the summand arithmetic (B, positives, tau) pinned
    /// to the two equality branches
    pub dim_proof_predicted: bool,
    pub edim_proof_predicted: bool,
    pub leafless_dim_extremal_predicted: Option<bool>,
    pub leafless_edim_extremal_predicted: Option<bool>,
    pub findings: Vec<String>,
}

pub fn extremal_classification(g: &Graph) -> Result<ExtremalClassification> {
    extremal_classification_with(g, &Caps::default())
}

pub fn extremal_classification_with(g: &Graph, caps: &Caps) -> Result<ExtremalClassification> {
    let analyzer = CactusAnalyzer::new(g)?;
    let c = analyzer.cycle_count();
    if c < 2 {
        return Err(Error::TooFewCycles {
            op: "extremal_classification",
            required: 2,
            found: c,
        });
    }
    let breakdown = analyzer.structural_dimensions(caps)?;
    let profile = analyzer.profile();
    let dim_exact = exact_dimension_with(g, DimensionMode::Vertex, caps)?.size;
    let edim_exact = exact_dimension_with(g, DimensionMode::Edge, caps)?.size;

    let leafless = (0..g.n()).all(|v| g.degree(v) >= 2);
    let every_edge_on_a_cycle = g.m() == profile.cycles.iter().map(|cy| cy.girth).sum::<usize>();
    let is_daisy = c >= 2
        && every_edge_on_a_cycle
        && (0..g.n()).any(|v| {
            profile
                .cycles
                .iter()
                .all(|cy| cy.vertices.contains(&v))
        });
    let has_odd_petal = is_daisy && profile.cycles.iter().any(|cy| cy.girth % 2 == 1);
    let end_cycle_count = profile.cycles.iter().filter(|cy| cy.is_end_cycle).count();
    let all_end_cycles = end_cycle_count == c;

    let l = profile.l_total;
    let b = profile.b_total;
    let near = l + 2 * c - 1;
    let dim_nearly_extremal = dim_exact == near;
    let edim_nearly_extremal = edim_exact == near;

    // both readings of the nearly-extremal characterization
    let statement = |positive: &[bool], pairs: &[(usize, usize, usize)]| {
        let pos = positive.iter().filter(|&&p| p).count();
        let negatives: Vec<usize> = (0..c).filter(|&i| !positive[i]).collect();
        let pairwise = negatives.iter().enumerate().all(|(a, &i)| {
            negatives[a + 1..]
                .iter()
                .all(|&j| pairs.iter().any(|&(x, y, _)| (x, y) == (i, j)))
        });
        let item1 = all_end_cycles && pos <= c - 1 && pairwise;
        let item2 = end_cycle_count == c - 1 && pos == c;
        item1 || item2
    };
    let dim_statement_predicted = statement(
        &breakdown.nice_vertex.positive,
        &breakdown.nice_vertex.incident_pairs,
    );
    let edim_statement_predicted = statement(
        &breakdown.nice_edge.positive,
        &breakdown.nice_edge.incident_pairs,
    );
    let proof = |pos: usize, tau: usize| {
        (b == c && pos + tau == c - 1) || (b == c - 1 && pos + tau == c)
    };
    let dim_proof_predicted = proof(breakdown.c_abc, breakdown.tau_vi);
    let edim_proof_predicted = proof(breakdown.c_ade, breakdown.tau_ei);

    let leafless_dim_extremal_predicted = leafless.then_some(is_daisy && !has_odd_petal);
    let leafless_edim_extremal_predicted = leafless.then_some(is_daisy);

    let mut findings = Vec::new();
    if dim_statement_predicted != dim_proof_predicted {
        findings.push(format!(
            "statement and proof readings diverge for dim: {dim_statement_predicted} vs {dim_proof_predicted}"
        ));
    }
    if edim_statement_predicted != edim_proof_predicted {
        findings.push(format!(
            "statement and proof readings diverge for edim: {edim_statement_predicted} vs {edim_proof_predicted}"
        ));
    }
    if dim_proof_predicted != dim_nearly_extremal {
        findings.push(format!(
            "proof reading predicts dim equality {dim_proof_predicted} but exact says {dim_nearly_extremal}"
        ));
    }
    if edim_proof_predicted != edim_nearly_extremal {
        findings.push(format!(
            "proof reading predicts edim equality {edim_proof_predicted} but exact says {edim_nearly_extremal}"
        ));
    }
    if leafless {
        if dim_exact > 2 * c - 1 {
            findings.push(format!("leafless bound violated: dim {dim_exact} > {}", 2 * c - 1));
        }
        if edim_exact > 2 * c - 1 {
            findings.push(format!(
                "leafless bound violated: edim {edim_exact} > {}",
                2 * c - 1
            ));
        }
        if let Some(pred) = leafless_dim_extremal_predicted {
            if pred != (dim_exact == 2 * c - 1) {
                findings.push("daisy characterization of dim equality failed".into());
            }
        }
        if let Some(pred) = leafless_edim_extremal_predicted {
            if pred != (edim_exact == 2 * c - 1) {
                findings.push("daisy characterization of edim equality failed".into());
            }
        }
    }

    Ok(ExtremalClassification {
        c,
        l,
        is_daisy,
        has_odd_petal,
        leafless,
        all_end_cycles,
        end_cycle_count,
        dim_exact,
        edim_exact,
        dim_nearly_extremal,
        edim_nearly_extremal,
        dim_statement_predicted,
        edim_statement_predicted,
        dim_proof_predicted,
        edim_proof_predicted,
        leafless_dim_extremal_predicted,
        leafless_edim_extremal_predicted,
        findings,
    })
}
