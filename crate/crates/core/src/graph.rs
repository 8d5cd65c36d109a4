//! Simple undirected graphs with dense vertex labels `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored once, normalized as
//! `(u, v)` with `u < v`, and sorted lexicographically; an [`EdgeId`] is the
//! position of an edge in that sorted list and is stable for the lifetime of
//! the graph.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("operation is undefined on the empty graph")]
    Empty,
    #[error("no edge {0}-{1}")]
    UnknownEdge(Vertex, Vertex),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    // n * n lookup table from vertex pair to edge id.
    index: Vec<u32>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Loops, duplicate edges and labels
    /// outside `0..n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        let mut seen = vec![false; n * n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if seen[u * n + v] {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            seen[u * n + v] = true;
            list.push((u, v));
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        let mut index = vec![NO_EDGE; n * n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            index[u * n + v] = id as u32;
            index[v * n + u] = id as u32;
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            index,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph::from_edges(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// The endpoint of `id` that is not `v`.
    pub fn other_end(&self, id: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.index[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as EdgeId),
        }
    }

    /// Edge ids incident to `v`, in neighbor order.
    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[v].iter().map(move |&u| self.index[v * self.n + u] as EdgeId)
    }

    /// Δ(G). Zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G). Zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// N_Δ(v): neighbors of `v` with degree exactly Δ(G).
    pub fn max_degree_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let delta = self.max_degree();
        self.adj[v]
            .iter()
            .copied()
            .filter(|&u| self.degree(u) == delta)
            .collect()
    }

    /// N_{<Δ}(v): neighbors of `v` with degree below Δ(G).
    pub fn small_degree_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let delta = self.max_degree();
        self.adj[v]
            .iter()
            .copied()
            .filter(|&u| self.degree(u) < delta)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// G − e, keeping the vertex set.
    pub fn without_edge(&self, id: EdgeId) -> Graph {
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| i != id).map(|(_, &e)| e);
        Graph::from_edges(self.n, edges).expect("subgraph of a simple graph is simple")
    }

    /// G − v with the remaining vertices relabeled in increasing order.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let relabel = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)));
        Graph::from_edges(self.n - 1, edges).expect("subgraph of a simple graph is simple")
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph is simple")
    }

    fn require_nonempty(&self) -> Result<(), GraphError> {
        if self.n == 0 {
            Err(GraphError::Empty)
        } else {
            Ok(())
        }
    }

    /// The core G_Δ and its degree extremes.
    pub fn core_info(&self) -> Result<CoreInfo, GraphError> {
        self.require_nonempty()?;
        let delta = self.max_degree();
        let core: Vec<Vertex> = (0..self.n).filter(|&v| self.degree(v) == delta).collect();
        let mut in_core = vec![false; self.n];
        for &v in &core {
            in_core[v] = true;
        }
        let core_degrees: Vec<usize> = core
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&u| in_core[u]).count())
            .collect();
        Ok(CoreInfo {
            core_min_degree: *core_degrees.iter().min().expect("core is nonempty"),
            core_max_degree: *core_degrees.iter().max().expect("core is nonempty"),
            core_vertices: core,
            core_degrees,
        })
    }

    /// `|E| > Δ·⌊n/2⌋`, evaluated in integers.
    pub fn is_overfull(&self) -> Result<bool, GraphError> {
        self.require_nonempty()?;
        Ok(self.edge_count() > self.max_degree() * (self.n / 2))
    }

    /// Vertices of degree Δ whose degree inside the core equals δ(G_Δ).
    pub fn light_vertices(&self) -> Result<Vec<Vertex>, GraphError> {
        let info = self.core_info()?;
        Ok(info
            .core_vertices
            .iter()
            .zip(&info.core_degrees)
            .filter(|&(_, &d)| d == info.core_min_degree)
            .map(|(&v, _)| v)
            .collect())
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue.push_back(u);
                    } else if parent[v] != u {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// The subgraph G_Δ induced by maximum-degree vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreInfo {
    pub core_vertices: Vec<Vertex>,
    /// Degree inside G_Δ, parallel to `core_vertices`.
    pub core_degrees: Vec<usize>,
    pub core_min_degree: usize,
    pub core_max_degree: usize,
}

impl CoreInfo {
    pub fn core_degree(&self, v: Vertex) -> Option<usize> {
        self.core_vertices
            .iter()
            .position(|&x| x == v)
            .map(|i| self.core_degrees[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_non_simple_input() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4), (0, 4)]).unwrap();
        let sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.edge_count());
        for v in 0..5 {
            for &u in g.neighbors(v) {
                assert!(g.neighbors(u).contains(&v));
            }
        }
    }

    #[test]
    fn core_of_c5_is_everything() {
        let info = cycle(5).core_info().unwrap();
        assert_eq!(info.core_vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(info.core_min_degree, 2);
    }

    #[test]
    fn core_of_path_is_middle_vertex() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let info = g.core_info().unwrap();
        assert_eq!(info.core_vertices, vec![1]);
        assert_eq!(info.core_min_degree, 0);
    }

    #[test]
    fn core_of_k4_minus_edge() {
        // K4 minus {0,1}: vertices 2 and 3 have degree 3 and are adjacent.
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let info = g.core_info().unwrap();
        assert_eq!(info.core_vertices, vec![2, 3]);
        assert_eq!(info.core_min_degree, 1);
        assert_eq!(info.core_max_degree, 1);
        assert_eq!(g.light_vertices().unwrap(), vec![2, 3]);
    }

    #[test]
    fn overfull_examples() {
        assert!(cycle(5).is_overfull().unwrap());
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!k4.is_overfull().unwrap());
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = Graph::empty(0);
        assert_eq!(g.core_info(), Err(GraphError::Empty));
        assert_eq!(g.is_overfull(), Err(GraphError::Empty));
        assert_eq!(g.light_vertices(), Err(GraphError::Empty));
    }

    #[test]
    fn light_vertices_of_star() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.light_vertices().unwrap(), vec![0]);
    }

    #[test]
    fn edge_ids_follow_sorted_order() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.edge_id(1, 3), None);
        assert_eq!(g.other_end(2, 3), 2);
    }

    #[test]
    fn vertex_deletion_relabels() {
        let g = cycle(5).without_vertex(0);
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }
}
