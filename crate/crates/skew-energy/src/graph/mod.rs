//! Undirected graphs, oriented graphs, and the structural queries the rest
//! of the crate is built on.
//!
//! Vertices are labelled `0..n`. Both [`Graph`] and [`OrientedGraph`] are
//! immutable after construction; every operation returns a fresh value, so
//! values can be shared freely across threads.

mod bicyclic;
mod cycles;
mod linear;
pub mod io;

pub use bicyclic::{classify_bicyclic, in_class_b, BicyclicShape};
pub use cycles::all_cycles;
pub use linear::{evenly_linear_subgraphs, LinearSubgraph};

use crate::error::{Error, Result};

/// A simple undirected labelled graph: no self-loops, no multi-edges.
///
/// Edges are stored as `(min, max)` pairs in sorted order, and adjacency
/// lists are kept sorted, so all traversals are deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Rejects self-loops, duplicate edges and endpoints `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint >= {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
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
        self.edge_index(u, v).is_some()
    }

    /// Index of edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Greatest distance between any two vertices, by BFS from every vertex.
    ///
    /// Errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        if self.n <= 1 {
            return Ok(0);
        }
        let mut best = 0;
        for v in 0..self.n {
            for &d in &self.bfs_distances(v) {
                if d == usize::MAX {
                    return Err(Error::NotConnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Removes the listed edges, then the listed vertices with all incident
    /// edges. Remaining vertices are relabelled to `0..n'` preserving their
    /// ascending original order.
    pub fn delete(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Graph> {
        let mut drop_edge = vec![false; self.edges.len()];
        for &(u, v) in edges {
            match self.edge_index(u, v) {
                Some(k) => drop_edge[k] = true,
                None => return Err(Error::MissingItem(format!("edge {u}-{v}"))),
            }
        }
        let mut drop_vertex = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(Error::MissingItem(format!("vertex {v}")));
            }
            drop_vertex[v] = true;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !drop_vertex[v] {
                relabel[v] = next;
                next += 1;
            }
        }
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, &(u, v))| !drop_edge[k] && !drop_vertex[u] && !drop_vertex[v])
            .map(|(_, &(u, v))| (relabel[u], relabel[v]));
        Graph::new(next, kept)
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    /// True if every vertex of `cycle` is consecutive-adjacent (cyclically)
    /// and the vertices are distinct; length must be at least 3.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 3 {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in cycle {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..k).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % k]))
    }
}

/// A [`Graph`] plus one chosen arc per edge.
///
/// `forward[k]` says whether edge `(u, v)` (with `u < v`) is oriented
/// `u -> v`. The implied skew-adjacency matrix has `s[i][j] = 1` for the
/// arc `i -> j` and `s[j][i] = -1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrientedGraph {
    base: Graph,
    forward: Vec<bool>,
}

impl OrientedGraph {
    /// Orients `base` with explicit per-edge flags (`forward[k]` applies to
    /// `base.edges()[k]`).
    pub fn with_forward(base: Graph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != base.m() {
            return Err(Error::InvalidGraph(format!(
                "{} direction flags for {} edges",
                forward.len(),
                base.m()
            )));
        }
        Ok(OrientedGraph { base, forward })
    }

    /// Builds an oriented graph on `n` vertices from a list of arcs; each
    /// arc supplies both the edge and its direction.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let base = Graph::new(n, arcs.iter().copied())?;
        let mut forward = vec![false; base.m()];
        for &(t, h) in arcs {
            let k = base.edge_index(t, h).expect("edge was just inserted");
            forward[k] = t < h;
        }
        Ok(OrientedGraph { base, forward })
    }

    /// Orients every edge from its smaller to its larger endpoint.
    pub fn min_to_max(base: Graph) -> Self {
        let m = base.m();
        OrientedGraph {
            base,
            forward: vec![true; m],
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.edges.len()
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// The arc of edge `k` as `(tail, head)`.
    pub fn arc(&self, k: usize) -> (usize, usize) {
        let (u, v) = self.base.edges[k];
        if self.forward[k] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// All arcs in sorted-edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.m()).map(|k| self.arc(k)).collect()
    }

    pub fn is_arc(&self, tail: usize, head: usize) -> bool {
        match self.base.edge_index(tail, head) {
            Some(k) => self.arc(k) == (tail, head),
            None => false,
        }
    }

    /// Entry `s[i][j]` of the skew-adjacency matrix.
    pub fn skew_entry(&self, i: usize, j: usize) -> i64 {
        match self.base.edge_index(i, j) {
            Some(k) => {
                if self.arc(k) == (i, j) {
                    1
                } else {
                    -1
                }
            }
            None => 0,
        }
    }

    /// Same deletion semantics as [`Graph::delete`]; the orientation is
    /// restricted to the surviving edges.
    pub fn delete(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Result<OrientedGraph> {
        let new_base = self.base.delete(vertices, edges)?;
        // Recover each surviving edge's flag from the old labels.
        let mut drop_vertex = vec![false; self.base.n];
        for &v in vertices {
            drop_vertex[v] = true;
        }
        let old_label: Vec<usize> = (0..self.base.n).filter(|&v| !drop_vertex[v]).collect();
        let forward = new_base
            .edges
            .iter()
            .map(|&(u, v)| {
                let k = self
                    .base
                    .edge_index(old_label[u], old_label[v])
                    .expect("surviving edge existed before deletion");
                self.forward[k]
            })
            .collect();
        Ok(OrientedGraph {
            base: new_base,
            forward,
        })
    }

    /// Disjoint union preserving both orientations.
    pub fn disjoint_union(&self, other: &OrientedGraph) -> OrientedGraph {
        let base = self.base.disjoint_union(&other.base);
        // Sorted edge order of the union keeps self's edges first.
        let forward = self
            .forward
            .iter()
            .chain(other.forward.iter())
            .copied()
            .collect();
        OrientedGraph { base, forward }
    }
}
