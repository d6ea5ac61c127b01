//! Simple undirected graphs on vertex labels `0..n-1`, with bit-exact
//! graph6 serialization.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted by the graph6 codec. The format itself
/// allows far larger orders, but everything in this crate targets graphs
/// of at most a few thousand vertices.
pub const MAX_GRAPH6_VERTICES: usize = 16_384;

/// An immutable simple undirected graph. Vertices are `0..n-1`; the edge
/// list is stored sorted with `u < v` in every pair, and the adjacency
/// lists are sorted. No self-loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, normalizing pair order.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} out of range for {n} vertices"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("parallel edge in input".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `vertices` (deduplicated, sorted). Returns the
    /// subgraph together with the map from subgraph labels back to labels
    /// in `self`.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidGraph("subgraph vertex out of range".into()));
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        Ok((Graph::new(vs.len(), edges)?, vs))
    }

    /// Decodes a graph6 line. Bit-exact inverse of [`Graph::to_graph6`];
    /// rejects malformed headers, truncation, trailing bytes, characters
    /// outside `63..=126`, and nonzero padding bits.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Graph6("empty input".into()));
        }
        if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte {bad} outside 63..=126")));
        }
        let (n, data) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                if bytes.len() < 8 {
                    return Err(Error::Graph6("truncated 8-byte order header".into()));
                }
                let mut n: u64 = 0;
                for &b in &bytes[2..8] {
                    n = (n << 6) | u64::from(b - 63);
                }
                if n < 258_048 {
                    return Err(Error::Graph6("non-minimal order header".into()));
                }
                (n as usize, &bytes[8..])
            } else {
                if bytes.len() < 4 {
                    return Err(Error::Graph6("truncated 4-byte order header".into()));
                }
                let mut n: u64 = 0;
                for &b in &bytes[1..4] {
                    n = (n << 6) | u64::from(b - 63);
                }
                if !(63..258_048).contains(&n) {
                    return Err(Error::Graph6("non-minimal order header".into()));
                }
                (n as usize, &bytes[4..])
            }
        } else {
            ((bytes[0] - 63) as usize, &bytes[1..])
        };
        if n == 0 {
            return Err(Error::Graph6("graph of order 0 is not supported".into()));
        }
        if n > MAX_GRAPH6_VERTICES {
            return Err(Error::Graph6(format!(
                "order {n} exceeds the supported maximum {MAX_GRAPH6_VERTICES}"
            )));
        }
        let nbits = n * (n - 1) / 2;
        let nbytes = nbits.div_ceil(6);
        if data.len() < nbytes {
            return Err(Error::Graph6(format!(
                "expected {nbytes} data bytes, found {}",
                data.len()
            )));
        }
        if data.len() > nbytes {
            return Err(Error::Graph6(format!(
                "{} trailing bytes after graph data",
                data.len() - nbytes
            )));
        }
        let mut edges = Vec::new();
        let mut bit = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = data[bit / 6] - 63;
                if (byte >> (5 - bit % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        // remaining bits in the last byte must be zero padding
        while bit < nbytes * 6 {
            let byte = data[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
            bit += 1;
        }
        Graph::new(n, edges)
    }

    /// Encodes the graph in graph6 with the vertex labeling as given.
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        assert!(
            n <= MAX_GRAPH6_VERTICES,
            "graph too large for the graph6 codec"
        );
        let mut out: Vec<u8> = Vec::new();
        if n <= 62 {
            out.push(63 + n as u8);
        } else if n < 258_048 {
            out.push(126);
            out.push(63 + ((n >> 12) & 0x3f) as u8);
            out.push(63 + ((n >> 6) & 0x3f) as u8);
            out.push(63 + (n & 0x3f) as u8);
        } else {
            out.push(126);
            out.push(126);
            for shift in (0..36).step_by(6).rev() {
                out.push(63 + ((n >> shift) & 0x3f) as u8);
            }
        }
        let nbits = n * (n - 1) / 2;
        let mut cur: u8 = 0;
        let mut filled = 0usize;
        for j in 1..n {
            for i in 0..j {
                cur <<= 1;
                if self.has_edge(i, j) {
                    cur |= 1;
                }
                filled += 1;
                if filled == 6 {
                    out.push(63 + cur);
                    cur = 0;
                    filled = 0;
                }
            }
        }
        if nbits % 6 != 0 {
            cur <<= 6 - nbits % 6;
            out.push(63 + cur);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// Minimum degree, maximum degree, and the sorted leaf set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub leaves: Vec<usize>,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    DegreeStats {
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        leaves: (0..g.n()).filter(|&v| degrees[v] == 1).collect(),
    }
}

/// Convenience builders used across tests and the harness.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is a valid graph")
}

pub fn path_graph(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is a valid graph")
}

pub fn complete_graph(n: usize) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete graph is valid")
}

/// Daisy graph: `petals[i]` cycles of the given lengths all sharing
/// vertex 0.
pub fn daisy_graph(petals: &[usize]) -> Graph {
    assert!(petals.iter().all(|&g| g >= 3));
    let n = 1 + petals.iter().map(|&g| g - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &g in petals {
        let ring: Vec<usize> = std::iter::once(0)
            .chain(next..next + (g - 1))
            .collect();
        for i in 0..g {
            edges.push((ring[i], ring[(i + 1) % g]));
        }
        next += g - 1;
    }
    Graph::new(n, edges).expect("daisy is a valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
        assert!(Graph::new(0, Vec::new()).is_err());
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::new(4, vec![(2, 0), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(2), &[0]);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn graph6_k2() {
        let g = Graph::from_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.to_graph6(), "A_");
    }

    #[test]
    fn graph6_triangle_encodes_bw() {
        // hand-encoded: three upper-triangle bits 111, padded to 111000
        assert_eq!(cycle_graph(3).to_graph6(), "Bw");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), cycle_graph(3));
    }

    #[test]
    fn graph6_five_vertex_example() {
        // 'D' gives n=5; data '?{' unpacks to bits 000000 111100, whose
        // first ten positions are pairs (0,1),(0,2),(1,2),(0,3),(1,3),
        // (2,3),(0,4),(1,4),(2,4),(3,4) column-major: the star K_{1,4}
        // centered at vertex 4.
        let g = Graph::from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(g.to_graph6(), "D?{");
    }

    #[test]
    fn graph6_known_petgraph_vector() {
        // published encoding of the 5-vertex graph with edges
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, vec![(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("D?").is_err()); // truncated data
        assert!(Graph::from_graph6("A_~").is_err()); // trailing byte
        assert!(Graph::from_graph6("A \t").is_err()); // bytes below 63
        assert!(Graph::from_graph6("?").is_err()); // order 0
        assert!(Graph::from_graph6("A`").is_err()); // nonzero padding bit
    }

    #[test]
    fn graph6_multibyte_header_roundtrip() {
        let g = path_graph(80);
        let s = g.to_graph6();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn degree_stats_examples() {
        let c6 = cycle_graph(6);
        let s = degree_stats(&c6);
        assert_eq!((s.min_degree, s.max_degree), (2, 2));
        assert!(s.leaves.is_empty());

        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = degree_stats(&star);
        assert_eq!(s.min_degree, 1);
        assert_eq!(s.max_degree, 3);
        assert_eq!(s.leaves.len(), 3);

        let k4 = complete_graph(4);
        let s = degree_stats(&k4);
        assert_eq!((s.min_degree, s.max_degree), (3, 3));
        assert!(s.leaves.is_empty());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (sub, map) = g.induced(&[1, 2, 3]).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
    }
}
