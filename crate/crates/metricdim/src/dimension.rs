//! Ground truth for metric dimensions: generator predicates and an exact
//! minimum solver formulated as set cover over undistinguished pairs.

use serde::Serialize;

use crate::caps::Caps;
use crate::distance::{all_pairs_distances, DistanceOracle};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which universe the generator must distinguish: vertices, edges, or
/// both together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimensionMode {
    Vertex,
    Edge,
    Mixed,
}

impl DimensionMode {
    pub fn name(self) -> &'static str {
        match self {
            DimensionMode::Vertex => "vertex",
            DimensionMode::Edge => "edge",
            DimensionMode::Mixed => "mixed",
        }
    }
}

/// An element of the distinguished universe. Edges are normalized with
/// the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Vertex(usize),
    Edge(usize, usize),
}

impl Item {
    pub fn edge(u: usize, v: usize) -> Item {
        Item::Edge(u.min(v), u.max(v))
    }
}

/// The mode's universe in canonical order: vertices ascending, then
/// edges in lexicographic order.
pub fn universe(g: &Graph, mode: DimensionMode) -> Vec<Item> {
    let mut items = Vec::new();
    if matches!(mode, DimensionMode::Vertex | DimensionMode::Mixed) {
        items.extend((0..g.n()).map(Item::Vertex));
    }
    if matches!(mode, DimensionMode::Edge | DimensionMode::Mixed) {
        items.extend(g.edges().iter().map(|&(u, v)| Item::Edge(u, v)));
    }
    items
}

fn item_distance(o: &DistanceOracle, s: usize, item: Item) -> Option<u32> {
    match item {
        Item::Vertex(v) => o.get(s, v),
        Item::Edge(u, v) => match (o.get(s, u), o.get(s, v)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        },
    }
}

fn validate_item(o: &DistanceOracle, item: Item) -> Result<()> {
    match item {
        Item::Vertex(v) if v < o.n() => Ok(()),
        Item::Vertex(v) => Err(Error::InvalidGraph(format!("vertex {v} out of range"))),
        Item::Edge(u, v) if u != v && u < o.n() && v < o.n() && o.get(u, v) == Some(1) => Ok(()),
        Item::Edge(u, v) => Err(Error::NotAnEdge { u, v }),
    }
}

/// `true` iff `d(s, x) != d(s, x')`.
pub fn distinguishes(o: &DistanceOracle, s: usize, x: Item, y: Item) -> Result<bool> {
    validate_item(o, x)?;
    validate_item(o, y)?;
    if s >= o.n() {
        return Err(Error::InvalidGraph(format!("vertex {s} out of range")));
    }
    Ok(item_distance(o, s, x) != item_distance(o, s, y))
}

fn check_vertex_set(g: &Graph, set: &[usize]) -> Result<()> {
    if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
    }
    Ok(())
}

/// Does `set` distinguish every pair in the mode's universe?
pub fn is_generator(g: &Graph, set: &[usize], mode: DimensionMode) -> Result<bool> {
    check_vertex_set(g, set)?;
    if !g.is_connected() {
        return Err(Error::Disconnected { op: "is_generator" });
    }
    let o = all_pairs_distances(g);
    let items = universe(g, mode);
    let dists: Vec<Vec<u32>> = set
        .iter()
        .map(|&s| {
            items
                .iter()
                .map(|&it| item_distance(&o, s, it).expect("connected graph"))
                .collect()
        })
        .collect();
    for a in 0..items.len() {
        for b in a + 1..items.len() {
            if !dists.iter().any(|row| row[a] != row[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact sorted list of pairs not distinguished by `set`; empty iff
/// `set` is a generator.
pub fn undistinguished_pairs(
    g: &Graph,
    set: &[usize],
    mode: DimensionMode,
) -> Result<Vec<(Item, Item)>> {
    check_vertex_set(g, set)?;
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "undistinguished_pairs",
        });
    }
    let o = all_pairs_distances(g);
    let items = universe(g, mode);
    let dists: Vec<Vec<u32>> = set
        .iter()
        .map(|&s| {
            items
                .iter()
                .map(|&it| item_distance(&o, s, it).expect("connected graph"))
                .collect()
        })
        .collect();
    let mut failing = Vec::new();
    for a in 0..items.len() {
        for b in a + 1..items.len() {
            if !dists.iter().any(|row| row[a] != row[b]) {
                failing.push((items[a], items[b]));
            }
        }
    }
    Ok(failing)
}

/// A minimum metric generator together with its size and mode. The set
/// is the lexicographically least among all minimum generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorWitness {
    pub size: usize,
    pub set: Vec<usize>,
    pub mode: DimensionMode,
}

struct Bits;

impl Bits {
    fn get(words: &[u64], i: usize) -> bool {
        words[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(words: &mut [u64], i: usize) {
        words[i / 64] |= 1 << (i % 64);
    }
    fn or_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d |= s;
        }
    }
    fn and_not_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d &= !s;
        }
    }
    fn is_empty(words: &[u64]) -> bool {
        words.iter().all(|&w| w == 0)
    }
    fn first(words: &[u64]) -> Option<usize> {
        for (i, &w) in words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
    fn intersects(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).any(|(x, y)| x & y != 0)
    }
    fn iter_set(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
        words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// Set-cover instance: the universe is all unordered item pairs, each
/// vertex covers the pairs it distinguishes.
struct CoverInstance {
    n: usize,
    words: usize,
    num_pairs: usize,
    covers: Vec<Vec<u64>>,
    static_count: Vec<u32>,
    twin_classes: Vec<Vec<usize>>,
}

impl CoverInstance {
    fn build(g: &Graph, mode: DimensionMode, caps: &Caps) -> Result<CoverInstance> {
        let o = all_pairs_distances(g);
        let items = universe(g, mode);
        let t = items.len();
        let num_pairs = t * (t - 1) / 2;
        if num_pairs > caps.pair_cap {
            return Err(Error::PairUniverseExceeded {
                pairs: num_pairs,
                cap: caps.pair_cap,
            });
        }
        let n = g.n();
        let words = num_pairs.div_ceil(64).max(1);
        let mut covers = vec![vec![0u64; words]; n];
        for (v, cover) in covers.iter_mut().enumerate() {
            let dv: Vec<u32> = items
                .iter()
                .map(|&it| item_distance(&o, v, it).expect("connected graph"))
                .collect();
            let mut p = 0;
            for a in 0..t {
                for b in a + 1..t {
                    if dv[a] != dv[b] {
                        Bits::set(cover, p);
                    }
                    p += 1;
                }
            }
        }
        let mut static_count = vec![0u32; num_pairs];
        for cover in &covers {
            for p in Bits::iter_set(cover) {
                static_count[p] += 1;
            }
        }
        if static_count.iter().any(|&c| c == 0) {
            return Err(Error::Verification(
                "a pair is distinguished by no vertex".into(),
            ));
        }
        let twin_classes = if n >= 3 && n <= 300 {
            twin_classes(&o, n)
        } else {
            Vec::new()
        };
        Ok(CoverInstance {
            n,
            words,
            num_pairs,
            covers,
            static_count,
            twin_classes,
        })
    }

    fn all_pairs_mask(&self) -> Vec<u64> {
        let mut mask = vec![0u64; self.words];
        for p in 0..self.num_pairs {
            Bits::set(&mut mask, p);
        }
        mask
    }

    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.all_pairs_mask();
        let mut chosen = Vec::new();
        while !Bits::is_empty(&uncovered) {
            let best = (0..self.n)
                .max_by_key(|&v| {
                    let gain: u32 = self.covers[v]
                        .iter()
                        .zip(&uncovered)
                        .map(|(c, u)| (c & u).count_ones())
                        .sum();
                    (gain, std::cmp::Reverse(v))
                })
                .expect("nonempty vertex set");
            chosen.push(best);
            Bits::and_not_into(&mut uncovered, &self.covers[best]);
        }
        chosen.sort_unstable();
        chosen
    }

    /// Greedy family of uncovered pairs no single vertex covers twice:
    /// its size lower-bounds the remaining cover.
    fn pair_lower_bound(&self, uncovered: &[u64]) -> usize {
        let mut remaining = uncovered.to_vec();
        let mut lb = 0;
        while let Some(p) = Bits::first(&remaining) {
            lb += 1;
            let mut covered_with_p = vec![0u64; self.words];
            for v in 0..self.n {
                if Bits::get(&self.covers[v], p) {
                    Bits::or_into(&mut covered_with_p, &self.covers[v]);
                }
            }
            Bits::and_not_into(&mut remaining, &covered_with_p);
        }
        lb
    }

    fn twin_lower_bound(&self, chosen: &[bool]) -> usize {
        self.twin_classes
            .iter()
            .map(|class| {
                let have = class.iter().filter(|&&v| chosen[v]).count();
                (class.len() - 1).saturating_sub(have)
            })
            .sum()
    }

    fn lower_bound(&self, uncovered: &[u64], chosen: &[bool]) -> usize {
        self.pair_lower_bound(uncovered)
            .max(self.twin_lower_bound(chosen))
    }
}

/// Groups of vertices that pairwise share distance vectors to all other
/// vertices; every generator must contain all but one of each group.
fn twin_classes(o: &DistanceOracle, n: usize) -> Vec<Vec<usize>> {
    let twin = |u: usize, v: usize| {
        (0..n)
            .filter(|&w| w != u && w != v)
            .all(|w| o.get(u, w) == o.get(v, w))
    };
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&v| twin(u, v)))
        {
            Some(class) => class.push(u),
            None => classes.push(vec![u]),
        }
    }
    classes.retain(|c| c.len() >= 2);
    classes
}

struct SizeSearch<'a> {
    inst: &'a CoverInstance,
    caps: &'a Caps,
    best: Vec<usize>,
}

impl<'a> SizeSearch<'a> {
    fn run(inst: &'a CoverInstance, caps: &'a Caps) -> Result<usize> {
        let mut search = SizeSearch {
            inst,
            caps,
            best: inst.greedy(),
        };
        let uncovered = inst.all_pairs_mask();
        let mut chosen = Vec::new();
        let mut chosen_mask = vec![false; inst.n];
        search.branch(&mut chosen, &mut chosen_mask, &uncovered)?;
        Ok(search.best.len())
    }

    fn branch(
        &mut self,
        chosen: &mut Vec<usize>,
        chosen_mask: &mut [bool],
        uncovered: &[u64],
    ) -> Result<()> {
        self.caps.check_deadline()?;
        if Bits::is_empty(uncovered) {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        if chosen.len() + self.inst.lower_bound(uncovered, chosen_mask) >= self.best.len() {
            return Ok(());
        }
        // branch on the uncovered pair with the fewest potential coverers
        let pivot = Bits::iter_set(uncovered)
            .min_by_key(|&p| self.inst.static_count[p])
            .expect("nonempty uncovered set");
        for v in 0..self.inst.n {
            if chosen_mask[v] || !Bits::get(&self.inst.covers[v], pivot) {
                continue;
            }
            let mut next = uncovered.to_vec();
            Bits::and_not_into(&mut next, &self.inst.covers[v]);
            chosen.push(v);
            chosen_mask[v] = true;
            self.branch(chosen, chosen_mask, &next)?;
            chosen.pop();
            chosen_mask[v] = false;
        }
        Ok(())
    }
}

/// Lexicographically least generator of exactly the optimal size:
/// include-first depth-first search over vertices in increasing order.
struct LexSearch<'a> {
    inst: &'a CoverInstance,
    caps: &'a Caps,
    k: usize,
}

impl<'a> LexSearch<'a> {
    fn run(inst: &'a CoverInstance, caps: &'a Caps, k: usize) -> Result<Vec<usize>> {
        let search = LexSearch { inst, caps, k };
        let uncovered = inst.all_pairs_mask();
        let mut chosen = Vec::new();
        let mut chosen_mask = vec![false; inst.n];
        search
            .dfs(0, &mut chosen, &mut chosen_mask, &uncovered)?
            .ok_or_else(|| Error::Verification("no generator at the optimal size".into()))
    }

    fn dfs(
        &self,
        v: usize,
        chosen: &mut Vec<usize>,
        chosen_mask: &mut [bool],
        uncovered: &[u64],
    ) -> Result<Option<Vec<usize>>> {
        self.caps.check_deadline()?;
        if Bits::is_empty(uncovered) {
            debug_assert_eq!(chosen.len(), self.k, "optimal size is the minimum");
            return Ok(Some(chosen.clone()));
        }
        if v == self.inst.n || chosen.len() == self.k {
            return Ok(None);
        }
        if self.inst.n - v < self.k - chosen.len() {
            return Ok(None);
        }
        if chosen.len() + self.inst.lower_bound(uncovered, chosen_mask) > self.k {
            return Ok(None);
        }
        // classes whose unchosen tail cannot reach size-1 any more
        for class in &self.inst.twin_classes {
            let have = class.iter().filter(|&&u| chosen_mask[u]).count();
            let future = class.iter().filter(|&&u| u >= v).count();
            if have + future + 1 < class.len() {
                return Ok(None);
            }
        }
        if Bits::intersects(&self.inst.covers[v], uncovered) {
            let mut next = uncovered.to_vec();
            Bits::and_not_into(&mut next, &self.inst.covers[v]);
            chosen.push(v);
            chosen_mask[v] = true;
            let found = self.dfs(v + 1, chosen, chosen_mask, &next)?;
            chosen.pop();
            chosen_mask[v] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        self.dfs(v + 1, chosen, chosen_mask, uncovered)
    }
}

/// Minimum generator size plus the lexicographically least witness,
/// found by branch-and-bound set cover with a greedy upper bound and a
/// disjoint-pair lower bound.
pub fn exact_dimension(g: &Graph, mode: DimensionMode) -> Result<GeneratorWitness> {
    exact_dimension_with(g, mode, &Caps::default())
}

pub fn exact_dimension_with(
    g: &Graph,
    mode: DimensionMode,
    caps: &Caps,
) -> Result<GeneratorWitness> {
    if g.n() < 2 {
        return Err(Error::TooSmall { required: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "exact_dimension",
        });
    }
    let items = universe(g, mode).len();
    if items < 2 {
        // a universe without pairs is vacuously resolved
        return Ok(GeneratorWitness {
            size: 0,
            set: Vec::new(),
            mode,
        });
    }
    let inst = CoverInstance::build(g, mode, caps)?;
    let k = SizeSearch::run(&inst, caps)?;
    let set = if k == 0 {
        Vec::new()
    } else {
        LexSearch::run(&inst, caps, k)?
    };
    Ok(GeneratorWitness { size: k, set, mode })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, daisy_graph, path_graph, Graph};

    #[test]
    fn distinguishes_examples() {
        let o = all_pairs_distances(&cycle_graph(4));
        let x = Item::Vertex(1);
        assert!(!distinguishes(&o, 0, x, x).unwrap());
        assert!(!distinguishes(&o, 0, Item::Vertex(1), Item::Vertex(3)).unwrap());
        assert!(distinguishes(&o, 1, Item::Vertex(1), Item::Vertex(3)).unwrap());
        assert!(distinguishes(&o, 0, Item::edge(0, 1), Item::edge(2, 3)).unwrap());
        assert!(distinguishes(&o, 0, Item::Vertex(5), Item::Vertex(0)).is_err());
        assert!(distinguishes(&o, 0, Item::edge(0, 2), Item::Vertex(0)).is_err());
    }

    #[test]
    fn generator_examples_on_c6() {
        let g = cycle_graph(6);
        assert!(!is_generator(&g, &[0, 3], DimensionMode::Vertex).unwrap());
        assert!(is_generator(&g, &[0, 2], DimensionMode::Vertex).unwrap());
        assert!(!is_generator(&g, &[], DimensionMode::Vertex).unwrap());
        let fails = undistinguished_pairs(&g, &[0, 3], DimensionMode::Vertex).unwrap();
        assert!(fails.contains(&(Item::Vertex(1), Item::Vertex(5))));
        assert!(
            undistinguished_pairs(&g, &[0, 2], DimensionMode::Vertex)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn all_but_one_vertex_always_generates() {
        // every vertex/edge pair is distinguished by at least two
        // vertices, so deleting one from V(G) keeps a generator; the
        // mixed universe needs the full set (a vertex and its edge
        // toward the deleted vertex can share all coordinates)
        for g in [
            cycle_graph(5),
            complete_graph(4),
            daisy_graph(&[3, 4]),
            path_graph(6),
        ] {
            let set: Vec<usize> = (0..g.n() - 1).collect();
            let full: Vec<usize> = (0..g.n()).collect();
            for mode in [DimensionMode::Vertex, DimensionMode::Edge] {
                assert!(is_generator(&g, &set, mode).unwrap(), "{g:?} {mode:?}");
            }
            assert!(is_generator(&g, &full, DimensionMode::Mixed).unwrap());
        }
        assert!(!is_generator(&complete_graph(4), &[0, 1, 2], DimensionMode::Mixed).unwrap());
    }

    #[test]
    fn k2_edge_universe_is_vacuous() {
        let g = path_graph(2);
        let fails = undistinguished_pairs(&g, &[], DimensionMode::Vertex).unwrap();
        assert_eq!(fails, vec![(Item::Vertex(0), Item::Vertex(1))]);
        let w = exact_dimension(&g, DimensionMode::Edge).unwrap();
        assert_eq!(w.size, 0);
    }

    #[test]
    fn paths_have_dimension_one() {
        for n in [2, 3, 5, 9] {
            let w = exact_dimension(&path_graph(n), DimensionMode::Vertex).unwrap();
            assert_eq!(w.size, 1);
            assert_eq!(w.set, vec![0]);
        }
    }

    #[test]
    fn cycles_have_dimension_two() {
        for n in 3..=10 {
            let g = cycle_graph(n);
            assert_eq!(exact_dimension(&g, DimensionMode::Vertex).unwrap().size, 2);
            assert_eq!(exact_dimension(&g, DimensionMode::Edge).unwrap().size, 2);
        }
    }

    #[test]
    fn daisy_examples() {
        let d44 = daisy_graph(&[4, 4]);
        assert_eq!(
            exact_dimension(&d44, DimensionMode::Vertex).unwrap().size,
            3
        );
        assert_eq!(exact_dimension(&d44, DimensionMode::Edge).unwrap().size, 3);

        let d34 = daisy_graph(&[3, 4]);
        assert_eq!(
            exact_dimension(&d34, DimensionMode::Vertex).unwrap().size,
            2
        );
        assert_eq!(exact_dimension(&d34, DimensionMode::Edge).unwrap().size, 3);
    }

    #[test]
    fn k4_dimension() {
        let w = exact_dimension(&complete_graph(4), DimensionMode::Vertex).unwrap();
        assert_eq!(w.size, 3);
        assert_eq!(w.set, vec![0, 1, 2]);
    }

    #[test]
    fn witness_is_a_generator_and_lex_least() {
        let g = daisy_graph(&[4, 4]);
        let w = exact_dimension(&g, DimensionMode::Vertex).unwrap();
        assert!(is_generator(&g, &w.set, DimensionMode::Vertex).unwrap());
        // verify no lexicographically smaller set of the same size works
        let smaller: Vec<Vec<usize>> = subsets_of_size(g.n(), w.size)
            .into_iter()
            .take_while(|s| s < &w.set)
            .collect();
        for s in smaller {
            assert!(!is_generator(&g, &s, DimensionMode::Vertex).unwrap());
        }
    }

    #[test]
    fn mixed_dominates_vertex_and_edge() {
        for g in [cycle_graph(5), daisy_graph(&[3, 4]), complete_graph(4)] {
            let dim = exact_dimension(&g, DimensionMode::Vertex).unwrap().size;
            let edim = exact_dimension(&g, DimensionMode::Edge).unwrap().size;
            let mdim = exact_dimension(&g, DimensionMode::Mixed).unwrap().size;
            assert!(mdim >= dim.max(edim));
        }
    }

    #[test]
    fn pair_cap_is_enforced() {
        let caps = Caps::new(10, 1_000_000, None);
        let err = exact_dimension_with(&cycle_graph(8), DimensionMode::Vertex, &caps)
            .unwrap_err();
        assert!(matches!(err, Error::PairUniverseExceeded { .. }));
    }

    fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(v + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }
}
