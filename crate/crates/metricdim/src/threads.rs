//! Threads (pendant paths) and the leaf correction term L(G).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A pendant path `u_1 ... u_k`: `vertices[0]` is a leaf of the graph,
/// the last vertex is adjacent to `anchor`, and `anchor` has degree at
/// least 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    pub vertices: Vec<usize>,
    pub anchor: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreadProfile {
    pub threads: Vec<Thread>,
    /// ℓ(v): number of threads hanging at each anchor (only anchors with
    /// at least one thread appear).
    pub ell: BTreeMap<usize, usize>,
    /// L(G) = Σ over anchors with ℓ(v) > 1 of (ℓ(v) − 1).
    pub l: usize,
}

impl ThreadProfile {
    pub fn empty() -> ThreadProfile {
        ThreadProfile {
            threads: Vec::new(),
            ell: BTreeMap::new(),
            l: 0,
        }
    }
}

/// Extracts all threads by walking from each leaf through degree-2
/// vertices to the first vertex of degree ≥ 3. A path (or a single
/// vertex) has no such anchor and is rejected; the caller decides how to
/// treat paths.
pub fn thread_profile(g: &Graph) -> Result<ThreadProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "thread_profile",
        });
    }
    let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if max_degree <= 2 && !leaves.is_empty() || g.n() == 1 {
        return Err(Error::NoThreadAnchors);
    }
    let mut threads = Vec::new();
    for &leaf in &leaves {
        let mut path = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0];
        while g.degree(cur) == 2 {
            let next = if g.neighbors(cur)[0] == prev {
                g.neighbors(cur)[1]
            } else {
                g.neighbors(cur)[0]
            };
            path.push(cur);
            prev = cur;
            cur = next;
        }
        debug_assert!(g.degree(cur) >= 3);
        threads.push(Thread {
            vertices: path,
            anchor: cur,
        });
    }
    threads.sort_by(|a, b| a.vertices[0].cmp(&b.vertices[0]));
    let mut ell: BTreeMap<usize, usize> = BTreeMap::new();
    for t in &threads {
        *ell.entry(t.anchor).or_insert(0) += 1;
    }
    let l = ell.values().filter(|&&c| c > 1).map(|&c| c - 1).sum();
    Ok(ThreadProfile { threads, ell, l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, Graph};

    #[test]
    fn leafless_graph_has_no_threads() {
        let p = thread_profile(&cycle_graph(7)).unwrap();
        assert!(p.threads.is_empty());
        assert_eq!(p.l, 0);
    }

    #[test]
    fn star_k13() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let p = thread_profile(&g).unwrap();
        assert_eq!(p.threads.len(), 3);
        assert_eq!(p.ell.get(&0), Some(&3));
        assert_eq!(p.l, 2);
    }

    #[test]
    fn triangle_with_pendant_path() {
        // triangle 0-1-2 with pendant path 0-3-4
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let p = thread_profile(&g).unwrap();
        assert_eq!(p.threads.len(), 1);
        assert_eq!(p.threads[0].vertices, vec![4, 3]);
        assert_eq!(p.threads[0].anchor, 0);
        assert_eq!(p.ell.get(&0), Some(&1));
        assert_eq!(p.l, 0);
    }

    #[test]
    fn paths_are_rejected() {
        assert_eq!(thread_profile(&path_graph(5)), Err(Error::NoThreadAnchors));
        assert_eq!(thread_profile(&path_graph(1)), Err(Error::NoThreadAnchors));
        assert_eq!(thread_profile(&path_graph(2)), Err(Error::NoThreadAnchors));
    }

    #[test]
    fn thread_first_vertex_is_a_leaf() {
        let g = Graph::new(
            8,
            vec![(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (4, 5), (2, 6), (6, 7)],
        )
        .unwrap();
        let p = thread_profile(&g).unwrap();
        for t in &p.threads {
            assert_eq!(g.degree(t.vertices[0]), 1);
            assert!(g.degree(t.anchor) >= 3);
            let last = *t.vertices.last().unwrap();
            assert!(g.has_edge(last, t.anchor));
        }
        // two threads at vertex 0 (the pendant 3 and the path 5-4), one at 2
        assert_eq!(p.ell.get(&0), Some(&2));
        assert_eq!(p.ell.get(&2), Some(&1));
        assert_eq!(p.l, 1);
    }
}
