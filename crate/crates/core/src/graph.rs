//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which keeps the
//! structural queries (degree, connectivity, eccentricity) branch-free and
//! makes relabeling cheap. Graphs are immutable once built; every constructor
//! checks the no-loop and symmetry invariants.

use std::fmt;

use thiserror::Error;

use crate::matrix::IntMatrix;

/// Hard cap on the vertex count: one adjacency row per machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("family {family} is not defined for n = {n}")]
    FamilyRange { family: &'static str, n: usize },
    #[error("canonicalization supports at most {max} vertices, got {n}")]
    CanonBound { n: usize, max: usize },
}

/// Eccentricity/diameter values, with a sentinel for disconnected graphs.
///
/// `Finite(d) < Infinite` under the derived ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }

    /// True when the diameter is strictly greater than `k` (always true for
    /// the infinite sentinel).
    pub fn exceeds(self, k: usize) -> bool {
        match self {
            Diameter::Finite(d) => d > k,
            Diameter::Infinite => true,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// A simple undirected graph with labeled vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == MAX_VERTICES {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// Degree sequence sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let mut visited = 1u64;
        loop {
            let mut next = visited;
            let mut frontier = visited;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.adj[v];
            }
            if next == visited {
                break;
            }
            visited = next;
        }
        visited == full_mask(self.n)
    }

    /// Maximum over all vertex pairs of the shortest-path length;
    /// `Diameter::Infinite` when the graph is disconnected.
    pub fn diameter(&self) -> Diameter {
        let all = full_mask(self.n);
        let mut max = 0usize;
        for start in 0..self.n {
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            let mut dist = 0usize;
            while seen != all {
                let mut next = 0u64;
                let mut cur = frontier;
                while cur != 0 {
                    let v = cur.trailing_zeros() as usize;
                    cur &= cur - 1;
                    next |= self.adj[v];
                }
                next &= !seen;
                if next == 0 {
                    return Diameter::Infinite;
                }
                dist += 1;
                seen |= next;
                frontier = next;
            }
            max = max.max(dist);
        }
        Diameter::Finite(max)
    }

    /// Laplacian matrix `D - A`: degrees on the diagonal, `-1` per edge.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                self.degree(i) as i64
            } else if self.has_edge(i, j) {
                -1
            } else {
                0
            }
        })
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = self.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Extends the graph by one vertex adjacent to the set in `neighbors`.
    pub fn with_vertex_added(&self, neighbors: u64) -> Graph {
        assert!(self.n < MAX_VERTICES);
        assert_eq!(neighbors & !full_mask(self.n), 0);
        let new = self.n;
        let mut adj = self.adj.clone();
        adj.push(neighbors);
        let mut rest = neighbors;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            adj[v] |= 1 << new;
        }
        Graph { n: self.n + 1, adj }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == 0 || b == 0 {
            return Err(GraphError::VertexCount(0));
        }
        let n = a + b;
        let mut g = Graph::empty(n)?;
        let left = full_mask(a);
        let right = full_mask(n) & !left;
        for v in 0..a {
            g.adj[v] = right;
        }
        for v in a..n {
            g.adj[v] = left;
        }
        Ok(g)
    }

    #[cfg(debug_assertions)]
    pub(crate) fn check_invariants(&self) {
        assert!(self.n >= 1 && self.n <= MAX_VERTICES);
        for u in 0..self.n {
            assert_eq!(self.adj[u] & !full_mask(self.n), 0);
            assert_eq!(self.adj[u] >> u & 1, 0, "self-loop at {u}");
            for v in 0..self.n {
                assert_eq!(self.adj[u] >> v & 1, self.adj[v] >> u & 1, "asymmetry at ({u},{v})");
            }
        }
    }
}

/// Named graph constructions used as classification targets and test vectors.
///
/// Each variant fixes a deterministic labeled layout (the roles are noted on
/// `build`); identity up to isomorphism is checked separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `K_n`.
    Complete,
    /// `K_n` minus one edge.
    CompleteMinusEdge,
    /// `K_{n-1}` with a pendant vertex attached by one edge.
    PendantComplete,
    /// `K_5` minus two edges with no common endpoint.
    CompleteMinus2e,
    /// `K_5` minus the edges of a 4-cycle.
    CompleteMinusC4,
    /// `K_n` minus the edges of a triangle (`n` is 5 or 6).
    CompleteMinusTriangle,
    /// `K_7` minus the edges of two vertex-disjoint triangles.
    CompleteMinus2Triangles,
    /// `K_7` minus the 9 edges between two disjoint vertex triples.
    CompleteMinusK33,
    /// `K_5` minus the 3 edges of a path on 4 vertices.
    CompleteMinusP4,
    /// `K_{n-1}` minus an edge, plus a new vertex adjacent to both endpoints
    /// of the missing edge.
    Case7,
    /// `K_{2,3}`.
    K23,
    /// `K_{3,3}`.
    K33,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Complete,
        Family::CompleteMinusEdge,
        Family::PendantComplete,
        Family::CompleteMinus2e,
        Family::CompleteMinusC4,
        Family::CompleteMinusTriangle,
        Family::CompleteMinus2Triangles,
        Family::CompleteMinusK33,
        Family::CompleteMinusP4,
        Family::Case7,
        Family::K23,
        Family::K33,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteMinusEdge => "complete_minus_edge",
            Family::PendantComplete => "pendant_complete",
            Family::CompleteMinus2e => "complete_minus_2e",
            Family::CompleteMinusC4 => "complete_minus_c4",
            Family::CompleteMinusTriangle => "complete_minus_triangle",
            Family::CompleteMinus2Triangles => "complete_minus_2triangles",
            Family::CompleteMinusK33 => "complete_minus_k33",
            Family::CompleteMinusP4 => "complete_minus_p4",
            Family::Case7 => "case7_family",
            Family::K23 => "k23",
            Family::K33 => "k33",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Vertex counts for which the family is defined.
    pub fn vertex_range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::Complete => 1..=MAX_VERTICES,
            Family::CompleteMinusEdge | Family::PendantComplete | Family::Case7 => {
                5..=MAX_VERTICES
            }
            Family::CompleteMinusTriangle => 5..=6,
            Family::CompleteMinus2e
            | Family::CompleteMinusC4
            | Family::CompleteMinusP4
            | Family::K23 => 5..=5,
            Family::CompleteMinus2Triangles | Family::CompleteMinusK33 => 7..=7,
            Family::K33 => 6..=6,
        }
    }

    /// Constructs the family member on `n` vertices.
    pub fn build(self, n: usize) -> Result<Graph, GraphError> {
        if !self.vertex_range().contains(&n) {
            return Err(GraphError::FamilyRange { family: self.name(), n });
        }
        let g = match self {
            Family::Complete => Graph::complete(n)?,
            // missing edge (0,1)
            Family::CompleteMinusEdge => {
                let mut g = Graph::complete(n)?;
                g.remove_edge(0, 1);
                g
            }
            // clique 0..n-1, pendant n-1 attached to 0
            Family::PendantComplete => Graph::complete(n - 1)?.with_vertex_added(1),
            // missing edges (0,1) and (2,3)
            Family::CompleteMinus2e => {
                let mut g = Graph::complete(5)?;
                g.remove_edge(0, 1);
                g.remove_edge(2, 3);
                g
            }
            // missing 4-cycle 0-1-2-3-0; vertex 4 adjacent to all
            Family::CompleteMinusC4 => {
                let mut g = Graph::complete(5)?;
                for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
                    g.remove_edge(u, v);
                }
                g
            }
            // missing triangle on {0,1,2}
            Family::CompleteMinusTriangle => {
                let mut g = Graph::complete(n)?;
                for (u, v) in [(0, 1), (0, 2), (1, 2)] {
                    g.remove_edge(u, v);
                }
                g
            }
            // missing triangles on {0,1,2} and {3,4,5}; vertex 6 adjacent to all
            Family::CompleteMinus2Triangles => {
                let mut g = Graph::complete(7)?;
                for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
                    g.remove_edge(u, v);
                }
                g
            }
            // no edges between triples {0,1,2} and {3,4,5}; vertex 6 adjacent to all
            Family::CompleteMinusK33 => {
                let mut g = Graph::complete(7)?;
                for u in 0..3 {
                    for v in 3..6 {
                        g.remove_edge(u, v);
                    }
                }
                g
            }
            // missing path 0-1-2-3
            Family::CompleteMinusP4 => {
                let mut g = Graph::complete(5)?;
                for (u, v) in [(0, 1), (1, 2), (2, 3)] {
                    g.remove_edge(u, v);
                }
                g
            }
            // 0 and 1 nonadjacent endpoints of the missing clique edge;
            // 2 adjacent to exactly 0 and 1; {0,1} ∪ {3..n} form K_{n-1} - e
            Family::Case7 => {
                let mut g = Graph::empty(n)?;
                for v in 3..n {
                    g.add_edge(0, v)?;
                    g.add_edge(1, v)?;
                    for w in (v + 1)..n {
                        g.add_edge(v, w)?;
                    }
                }
                g.add_edge(0, 2)?;
                g.add_edge(1, 2)?;
                g
            }
            Family::K23 => Graph::complete_bipartite(2, 3)?,
            Family::K33 => Graph::complete_bipartite(3, 3)?,
        };
        #[cfg(debug_assertions)]
        g.check_invariants();
        Ok(g)
    }
}

impl Graph {
    fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
