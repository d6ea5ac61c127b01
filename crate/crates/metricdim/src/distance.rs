//! BFS all-pairs hop distances.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs shortest-path table. Unreachable pairs hold `None` rather
/// than a magic large value, so consistency checks can skip them
/// explicitly.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceOracle {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }
}

/// BFS from every vertex. Accepts disconnected inputs; unreachable pairs
/// come back as `None`.
pub fn all_pairs_distances(g: &Graph) -> DistanceOracle {
    let n = g.n();
    let mut dist = vec![None; n * n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        let row = &mut dist[source * n..(source + 1) * n];
        row[source] = Some(0);
        queue.clear();
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = row[v].expect("queued vertices have distances");
            for &w in g.neighbors(v) {
                if row[w].is_none() {
                    row[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceOracle { n, dist }
}

/// `d(u, e) = min(d(u, v), d(u, w))` for an edge `e = vw`. The oracle
/// itself certifies edge-ness: `dist[v][w]` must be exactly 1.
pub fn vertex_edge_distance(
    o: &DistanceOracle,
    u: usize,
    e: (usize, usize),
) -> Result<Option<u32>> {
    let (v, w) = e;
    if v == w || v >= o.n() || w >= o.n() || o.get(v, w) != Some(1) {
        return Err(Error::NotAnEdge { u: v, v: w });
    }
    Ok(match (o.get(u, v), o.get(u, w)) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, Graph};

    #[test]
    fn path_distances() {
        let g = path_graph(3);
        let o = all_pairs_distances(&g);
        assert_eq!(o.get(0, 2), Some(2));
        assert_eq!(o.get(2, 0), Some(2));
        assert_eq!(o.get(1, 1), Some(0));
    }

    #[test]
    fn even_cycle_antipodal() {
        let o = all_pairs_distances(&cycle_graph(6));
        assert_eq!(o.get(0, 3), Some(3));
        assert_eq!(o.get(1, 4), Some(3));
        assert_eq!(o.get(0, 5), Some(1));
    }

    #[test]
    fn disconnected_pairs_are_none() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let o = all_pairs_distances(&g);
        assert_eq!(o.get(0, 2), None);
        assert_eq!(o.get(0, 1), Some(1));
    }

    #[test]
    fn vertex_edge_examples() {
        // endpoint of the edge
        let o = all_pairs_distances(&cycle_graph(5));
        assert_eq!(vertex_edge_distance(&o, 2, (2, 3)).unwrap(), Some(0));
        // C_5, u = 0, e = (2,3): min(2, 2)
        assert_eq!(vertex_edge_distance(&o, 0, (2, 3)).unwrap(), Some(2));
        // path 0-1-2-3, u = 0, e = (2,3): min(2, 3)
        let o = all_pairs_distances(&path_graph(4));
        assert_eq!(vertex_edge_distance(&o, 0, (2, 3)).unwrap(), Some(2));
        // non-edge rejected
        assert!(vertex_edge_distance(&o, 0, (0, 2)).is_err());
        assert!(vertex_edge_distance(&o, 0, (1, 1)).is_err());
    }
}
