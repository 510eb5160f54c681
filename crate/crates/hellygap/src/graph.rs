//! Graph substrate: adjacency lists, BFS distances, eccentricities,
//! centers, intervals, powers, pendants and isometric-embedding checks.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Undirected connected simple graph over dense vertex ids `0..n-1`.
///
/// Simplicity, symmetry and connectivity are enforced at construction;
/// every downstream computation relies on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges,
    /// out-of-range endpoints and disconnected inputs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// BFS distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let n = self.n();
        let mut dist = vec![u32::MAX; n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances via one BFS per vertex.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            dist.extend(self.bfs_distances(v));
        }
        DistanceMatrix { n, dist }
    }

    /// The k-th power: same vertices, edge iff `1 <= d_G(u,v) <= k`.
    pub fn graph_power(&self, k: u32) -> Result<Graph> {
        if k < 1 {
            return Err(Error::InvalidPower);
        }
        let dm = self.distance_matrix();
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if dm.get(u, v) <= k {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Adds a new vertex with id `n` adjacent only to `v`.
    pub fn add_pendant(&self, v: usize) -> Result<Graph> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange(v, n));
        }
        let mut edges = self.edges();
        edges.push((v, n));
        Graph::from_edges(n + 1, &edges)
    }
}

/// Full n x n matrix of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Distance from `u` to the closest member of `s`.
    pub fn dist_to_set(&self, u: usize, s: &VertexSubset) -> u32 {
        s.members().iter().map(|&v| self.get(u, v)).min().unwrap_or(u32::MAX)
    }

    /// Max pairwise distance within `s` (0 for singletons).
    pub fn set_diameter(&self, s: &VertexSubset) -> u32 {
        let mut best = 0;
        for (i, &u) in s.members().iter().enumerate() {
            for &v in &s.members()[i + 1..] {
                best = best.max(self.get(u, v));
            }
        }
        best
    }
}

/// Non-empty sorted set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    /// Builds a subset from arbitrary ids; sorts and deduplicates.
    pub fn new(mut members: Vec<usize>) -> Result<VertexSubset> {
        if members.is_empty() {
            return Err(Error::EmptyTargetSet);
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSubset { members })
    }

    pub fn full(n: usize) -> VertexSubset {
        VertexSubset { members: (0..n).collect() }
    }

    pub fn singleton(v: usize) -> VertexSubset {
        VertexSubset { members: vec![v] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }
}

/// Eccentricities with respect to a target set `M`, together with the
/// radius, diameter and per-vertex farthest sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub farthest: Vec<Vec<usize>>,
}

impl EccentricityProfile {
    /// `e^M(v) = max_{u in M} d(v,u)` for every vertex, radius
    /// `min_v e^M(v)`, diameter `max_{v in M} e^M(v)`.
    pub fn new(dm: &DistanceMatrix, m: &VertexSubset) -> Result<EccentricityProfile> {
        if m.is_empty() {
            return Err(Error::EmptyTargetSet);
        }
        let n = dm.n();
        if let Some(&v) = m.members().iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange(v, n));
        }
        let mut ecc = vec![0u32; n];
        let mut farthest = vec![Vec::new(); n];
        for v in 0..n {
            let e = m.members().iter().map(|&u| dm.get(v, u)).max().unwrap();
            ecc[v] = e;
            farthest[v] = m.members().iter().copied().filter(|&u| dm.get(v, u) == e).collect();
        }
        let radius = *ecc.iter().min().unwrap();
        let diameter = m.members().iter().map(|&v| ecc[v]).max().unwrap();
        Ok(EccentricityProfile { ecc, radius, diameter, farthest })
    }

    /// `C^l(M)`: all vertices with `e^M(v) <= rad(M) + l`.
    pub fn center_set(&self, l: u32) -> VertexSubset {
        let members = (0..self.ecc.len())
            .filter(|&v| self.ecc[v] <= self.radius + l)
            .collect();
        VertexSubset { members }
    }
}

/// Interval slice `S_k(x,y)`; `k = None` yields the full interval `I(x,y)`.
pub fn interval_slice(
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
    k: Option<u32>,
) -> Result<VertexSubset> {
    let d = dm.get(x, y);
    if let Some(k) = k {
        if k > d {
            return Err(Error::SliceOutOfRange { k, max: d });
        }
    }
    let members = (0..dm.n())
        .filter(|&u| {
            dm.get(x, u) + dm.get(u, y) == d && k.map_or(true, |k| dm.get(x, u) == k)
        })
        .collect();
    Ok(VertexSubset { members })
}

/// True iff `map` preserves all pairwise distances from `sub` into `host`.
pub fn is_isometric_embedding(sub: &Graph, host: &Graph, map: &[usize]) -> Result<bool> {
    let n = sub.n();
    if map.len() != n {
        return Err(Error::LengthMismatch { got: map.len(), expected: n });
    }
    let mut seen = vec![false; host.n()];
    for &img in map {
        if img >= host.n() {
            return Err(Error::VertexOutOfRange(img, host.n()));
        }
        if seen[img] {
            return Err(Error::NonInjectiveMap);
        }
        seen[img] = true;
    }
    let ds = sub.distance_matrix();
    let dh = host.distance_matrix();
    for u in 0..n {
        for v in u + 1..n {
            if ds.get(u, v) != dh.get(map[u], map[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
