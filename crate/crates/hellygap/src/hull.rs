//! Injective hull construction: enumerate extremal metric functions,
//! connect them under the Chebyshev adjacency rule, and classify real
//! versus Helly vertices.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, EccentricityProfile, Graph, VertexSubset};

/// Default cap on the number of hull vertices. Hull size is not bounded
/// by a polynomial in n, so enumeration fails loudly instead of hanging.
pub const DEFAULT_GUARD: usize = 100_000;

/// A candidate hull vertex: one non-negative integer per original vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetricFunction {
    pub values: Vec<u32>,
}

impl MetricFunction {
    pub fn distance_vector(dm: &DistanceMatrix, z: usize) -> MetricFunction {
        MetricFunction { values: dm.row(z).to_vec() }
    }

    /// Chebyshev distance `max_x |f(x) - g(x)|`.
    pub fn chebyshev(&self, other: &MetricFunction) -> u32 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a.abs_diff(b))
            .max()
            .unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.values.contains(&0)
    }
}

/// True iff `f` satisfies both defining conditions of a hull vertex:
/// `f(x) + f(y) >= d(x,y)` for all pairs, and for every `x` some `y`
/// attains equality.
pub fn is_extremal(g: &Graph, f: &MetricFunction) -> Result<bool> {
    let n = g.n();
    if f.values.len() != n {
        return Err(Error::LengthMismatch { got: f.values.len(), expected: n });
    }
    let dm = g.distance_matrix();
    Ok(is_extremal_dm(&dm, &f.values))
}

fn is_extremal_dm(dm: &DistanceMatrix, values: &[u32]) -> bool {
    let n = dm.n();
    for x in 0..n {
        let mut tight = false;
        for y in 0..n {
            let d = dm.get(x, y);
            let s = values[x] + values[y];
            if s < d {
                return false;
            }
            if s == d {
                tight = true;
            }
        }
        if !tight {
            return false;
        }
    }
    true
}

/// Enumerates every extremal function of `g` in lexicographic order.
///
/// Depth-first assignment in ascending vertex id. The domain of `f(x)`
/// is clipped from below by `d(x,y) - f(y)` for assigned `y` and by
/// `d(x,y) - e(y)` for unassigned `y`, and from above by `e(x)` and the
/// 1-Lipschitz bound `f(y) + d(x,y)`. A branch dies as soon as some
/// assigned coordinate can no longer meet the tightness condition: its
/// equality partner is neither among the assigned values nor reachable
/// by any unassigned one (whose floor already exceeds the required
/// value). A final pass re-checks both conditions.
pub fn enumerate_extremal(g: &Graph, guard: usize) -> Result<Vec<MetricFunction>> {
    let dm = g.distance_matrix();
    let n = g.n();
    let ecc = EccentricityProfile::new(&dm, &VertexSubset::full(n))?.ecc;

    let mut out: Vec<MetricFunction> = Vec::new();
    let mut values = vec![0u32; n];
    dfs(&dm, &ecc, 0, &mut values, guard, &mut out)?;
    Ok(out)
}

/// Whether some extremal function of `g` is strictly positive
/// everywhere. An extremal function with a zero coordinate at `z` is
/// forced down to the distance vector of `z`, so this decides in one
/// search whether the hull contains any vertex beyond the real ones,
/// i.e. whether `g` fails to be Helly.
///
/// Unlike `enumerate_extremal`, no output order is needed here, so the
/// search keeps per-coordinate intervals under full propagation and
/// always branches on a tightest interval. On Helly inputs (where the
/// answer is no) this prunes far earlier than the lexicographic walk.
pub fn has_positive_extremal(g: &Graph) -> Result<bool> {
    let dm = g.distance_matrix();
    let n = g.n();
    let ecc = EccentricityProfile::new(&dm, &VertexSubset::full(n))?.ecc;

    let lo = vec![1u32; n];
    let hi = ecc;
    let mut values = vec![0u32; n];
    Ok(positive_search(&dm, &mut values, lo, hi))
}

/// Tightens all intervals to a fixpoint under `f(y) >= d(y,z) - f(z)`
/// and the 1-Lipschitz property `|f(y) - f(z)| <= d(y,z)` of extremal
/// functions. Returns false on an empty interval.
fn bounds_fixpoint(dm: &DistanceMatrix, lo: &mut [u32], hi: &mut [u32]) -> bool {
    let n = dm.n();
    loop {
        let mut changed = false;
        for y in 0..n {
            for z in 0..n {
                let d = dm.get(y, z);
                let l = hi[z].max(d) - hi[z]; // d - hi[z], clamped
                let l = l.max(lo[z].saturating_sub(d));
                if l > lo[y] {
                    lo[y] = l;
                    changed = true;
                }
                let h = hi[z] + d;
                if h < hi[y] {
                    hi[y] = h;
                    changed = true;
                }
            }
            if lo[y] > hi[y] {
                return false;
            }
        }
        if !changed {
            return true;
        }
    }
}

fn positive_search(
    dm: &DistanceMatrix,
    values: &mut [u32],
    mut lo: Vec<u32>,
    mut hi: Vec<u32>,
) -> bool {
    let n = dm.n();
    if !bounds_fixpoint(dm, &mut lo, &mut hi) {
        return false;
    }
    // Every settled coordinate must still be able to meet the equality
    // condition somewhere in the remaining intervals.
    for x in 0..n {
        if lo[x] != hi[x] {
            continue;
        }
        let tight = (0..n).any(|y| {
            y != x
                && match dm.get(x, y).checked_sub(lo[x]) {
                    Some(t) => lo[y] <= t && t <= hi[y],
                    None => false,
                }
        });
        if !tight {
            return false;
        }
    }
    // Branch on the narrowest undecided interval; none left means the
    // assignment is complete.
    let x = match (0..n).filter(|&x| lo[x] < hi[x]).min_by_key(|&x| hi[x] - lo[x]) {
        Some(x) => x,
        None => {
            values.copy_from_slice(&lo);
            return is_extremal_dm(dm, values);
        }
    };
    for v in lo[x]..=hi[x] {
        let mut next_lo = lo.clone();
        let mut next_hi = hi.clone();
        next_lo[x] = v;
        next_hi[x] = v;
        if positive_search(dm, values, next_lo, next_hi) {
            return true;
        }
    }
    false
}

fn dfs(
    dm: &DistanceMatrix,
    ecc: &[u32],
    depth: usize,
    values: &mut Vec<u32>,
    guard: usize,
    out: &mut Vec<MetricFunction>,
) -> Result<()> {
    let n = dm.n();
    if depth == n {
        if is_extremal_dm(dm, values) {
            if out.len() >= guard {
                return Err(Error::GuardExceeded { guard, found: out.len() });
            }
            out.push(MetricFunction { values: values.clone() });
        }
        return Ok(());
    }
    let mut lo = 0u32;
    let mut hi = ecc[depth];
    for y in 0..n {
        let d = dm.get(depth, y);
        if y < depth {
            lo = lo.max(d.saturating_sub(values[y]));
            hi = hi.min(values[y] + d);
        } else if y > depth {
            lo = lo.max(d.saturating_sub(ecc[y]));
        }
    }
    if hi < lo {
        return Ok(());
    }
    // Floors for the still-unassigned coordinates from the values fixed
    // so far; assigning f(depth) = v raises floor(y) to d(y,depth) - v.
    let base_floor: Vec<i64> = (depth + 1..n)
        .map(|y| {
            (0..depth)
                .map(|u| i64::from(dm.get(y, u)) - i64::from(values[u]))
                .max()
                .unwrap_or(i64::MIN)
        })
        .collect();
    'candidates: for v in lo..=hi {
        values[depth] = v;
        for x in 0..=depth {
            let fx = i64::from(values[x]);
            let tight_assigned = (0..=depth)
                .any(|y| values[x] + values[y] == dm.get(x, y));
            if tight_assigned {
                continue;
            }
            let tight_reachable = (depth + 1..n).any(|y| {
                let t = i64::from(dm.get(x, y)) - fx;
                if t < 0 || t > i64::from(ecc[y]) {
                    return false;
                }
                let floor = base_floor[y - depth - 1]
                    .max(i64::from(dm.get(y, depth)) - i64::from(v));
                floor <= t
            });
            if !tight_reachable {
                continue 'candidates;
            }
        }
        dfs(dm, ecc, depth + 1, values, guard, out)?;
    }
    Ok(())
}

/// The injective hull `H(G)`: host graph over all extremal functions,
/// with real vertices (distance vectors) listed first in original-id
/// order followed by Helly vertices in lexicographic order.
#[derive(Debug, Clone)]
pub struct Hull {
    pub host: Graph,
    pub functions: Vec<MetricFunction>,
    /// hull vertex -> original vertex, for real vertices.
    pub real_of: Vec<Option<usize>>,
    /// original vertex -> hull vertex.
    pub embedding: Vec<usize>,
    dm: OnceLock<DistanceMatrix>,
}

impl Hull {
    pub fn vertex_count(&self) -> usize {
        self.functions.len()
    }

    pub fn is_real(&self, h: usize) -> bool {
        self.real_of[h].is_some()
    }

    /// Hull vertices whose function is strictly positive everywhere.
    pub fn helly_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&h| !self.is_real(h)).collect()
    }

    /// BFS distances in the host graph, computed once on first use.
    pub fn host_distances(&self) -> &DistanceMatrix {
        self.dm.get_or_init(|| self.host.distance_matrix())
    }

    /// The real-vertex image of a subset of `V(G)` inside the hull.
    pub fn embed_subset(&self, m: &VertexSubset) -> VertexSubset {
        VertexSubset::new(m.members().iter().map(|&v| self.embedding[v]).collect())
            .expect("subset is non-empty")
    }
}

/// Builds `H(G)` by enumerating extremal functions and joining pairs at
/// Chebyshev distance exactly 1.
pub fn build_hull(g: &Graph, guard: usize) -> Result<Hull> {
    let n = g.n();
    let dm = g.distance_matrix();
    let mut all = enumerate_extremal(g, guard)?;

    // Real vertices first, ordered by original id; Helly vertices keep
    // their lexicographic order.
    let reals: Vec<MetricFunction> =
        (0..n).map(|z| MetricFunction::distance_vector(&dm, z)).collect();
    all.retain(|f| !f.is_real());
    let mut functions = reals;
    functions.extend(all);

    let h = functions.len();
    let mut edges = Vec::new();
    for a in 0..h {
        for b in a + 1..h {
            if functions[a].chebyshev(&functions[b]) == 1 {
                edges.push((a, b));
            }
        }
    }
    let host = Graph::from_edges(h, &edges)?;

    let mut real_of = vec![None; h];
    let mut embedding = vec![0usize; n];
    for z in 0..n {
        real_of[z] = Some(z);
        embedding[z] = z;
    }
    Ok(Hull { host, functions, real_of, embedding, dm: OnceLock::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isometric_embedding;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn distance_vectors_are_extremal() {
        for g in [path(4), cycle(5), cycle(4).add_pendant(1).unwrap()] {
            let dm = g.distance_matrix();
            for z in 0..g.n() {
                let f = MetricFunction::distance_vector(&dm, z);
                assert!(is_extremal(&g, &f).unwrap());
            }
        }
    }

    #[test]
    fn all_zeros_fails_on_any_edge() {
        let g = path(2);
        let f = MetricFunction { values: vec![0, 0] };
        assert!(!is_extremal(&g, &f).unwrap());
    }

    #[test]
    fn c4_hub_function_is_extremal() {
        let f = MetricFunction { values: vec![1, 1, 1, 1] };
        assert!(is_extremal(&cycle(4), &f).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let f = MetricFunction { values: vec![0, 1] };
        assert!(is_extremal(&path(3), &f).is_err());
    }

    #[test]
    fn p2_has_exactly_its_two_distance_vectors() {
        let fs = enumerate_extremal(&path(2), DEFAULT_GUARD).unwrap();
        assert_eq!(
            fs,
            vec![
                MetricFunction { values: vec![0, 1] },
                MetricFunction { values: vec![1, 0] },
            ]
        );
    }

    #[test]
    fn c4_has_five_extremal_functions() {
        let fs = enumerate_extremal(&cycle(4), DEFAULT_GUARD).unwrap();
        assert_eq!(fs.len(), 5);
        assert!(fs.contains(&MetricFunction { values: vec![1, 1, 1, 1] }));
    }

    // Oracle: brute-force enumeration of all vectors with f(x) <= e(x),
    // independent of the pruned DFS.
    fn brute_force_extremal(g: &Graph) -> Vec<MetricFunction> {
        let dm = g.distance_matrix();
        let n = g.n();
        let ecc = EccentricityProfile::new(&dm, &VertexSubset::full(n)).unwrap().ecc;
        let mut out = Vec::new();
        let mut values = vec![0u32; n];
        fn rec(
            dm: &DistanceMatrix,
            ecc: &[u32],
            i: usize,
            values: &mut Vec<u32>,
            out: &mut Vec<MetricFunction>,
        ) {
            if i == values.len() {
                if super::is_extremal_dm(dm, values) {
                    out.push(MetricFunction { values: values.clone() });
                }
                return;
            }
            for v in 0..=ecc[i] {
                values[i] = v;
                rec(dm, ecc, i + 1, values, out);
            }
        }
        rec(&dm, &ecc, 0, &mut values, &mut out);
        out
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        for g in [path(5), cycle(4), cycle(5), cycle(6), cycle(5).add_pendant(2).unwrap()] {
            let fast = enumerate_extremal(&g, DEFAULT_GUARD).unwrap();
            let slow = brute_force_extremal(&g);
            assert_eq!(fast, slow, "mismatch on graph with n = {}", g.n());
        }
    }

    #[test]
    fn trees_are_their_own_hulls() {
        for g in [path(4), path(6), path(3).add_pendant(1).unwrap()] {
            let fs = enumerate_extremal(&g, DEFAULT_GUARD).unwrap();
            assert_eq!(fs.len(), g.n());
            assert!(fs.iter().all(MetricFunction::is_real));
        }
    }

    #[test]
    fn hull_of_c4_is_a_wheel() {
        let h = build_hull(&cycle(4), DEFAULT_GUARD).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.helly_vertices(), vec![4]);
        assert_eq!(h.functions[4].values, vec![1, 1, 1, 1]);
        // Hub adjacent to all four real vertices; rim is the original C_4.
        for z in 0..4 {
            assert!(h.host.has_edge(4, z));
        }
        for z in 0..4 {
            assert!(h.host.has_edge(z, (z + 1) % 4));
        }
        assert_eq!(h.host.edge_count(), 8);
    }

    #[test]
    fn hull_of_p4_is_p4() {
        let h = build_hull(&path(4), DEFAULT_GUARD).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert!(h.helly_vertices().is_empty());
        assert_eq!(h.host, path(4));
    }

    #[test]
    fn hull_of_c6_has_helly_vertices_close_to_reals() {
        let h = build_hull(&cycle(6), DEFAULT_GUARD).unwrap();
        assert!(h.vertex_count() > 6);
        let dm = h.host_distances();
        // alpha(C_6) = 1: every Helly vertex sits at distance 1 from a real.
        for hv in h.helly_vertices() {
            let nearest = (0..6).map(|z| dm.get(hv, z)).min().unwrap();
            assert_eq!(nearest, 1);
        }
    }

    #[test]
    fn hull_of_c8_has_a_deep_helly_vertex() {
        let h = build_hull(&cycle(8), DEFAULT_GUARD).unwrap();
        let dm = h.host_distances();
        let deep = h
            .helly_vertices()
            .into_iter()
            .map(|hv| (0..8).map(|z| dm.get(hv, z)).min().unwrap())
            .max()
            .unwrap();
        assert_eq!(deep, 2);
    }

    #[test]
    fn positive_extremal_detection() {
        assert!(!has_positive_extremal(&path(5)).unwrap());
        assert!(has_positive_extremal(&cycle(4)).unwrap());
        assert!(has_positive_extremal(&cycle(6)).unwrap());
        // Hulls are Helly, so their hulls gain nothing.
        for g in [cycle(4), cycle(6), cycle(5).add_pendant(0).unwrap()] {
            let h = build_hull(&g, DEFAULT_GUARD).unwrap();
            assert!(!has_positive_extremal(&h.host).unwrap());
        }
        // Agrees with full enumeration on assorted small graphs.
        for g in [path(6), cycle(5), cycle(7), cycle(4).add_pendant(2).unwrap()] {
            let full = enumerate_extremal(&g, DEFAULT_GUARD).unwrap();
            let any_positive = full.iter().any(|f| !f.is_real());
            assert_eq!(has_positive_extremal(&g).unwrap(), any_positive);
        }
    }

    #[test]
    fn real_vertices_embed_isometrically() {
        for g in [cycle(4), cycle(6), path(5), cycle(5).add_pendant(0).unwrap()] {
            let h = build_hull(&g, DEFAULT_GUARD).unwrap();
            assert!(is_isometric_embedding(&g, &h.host, &h.embedding).unwrap());
        }
    }

    #[test]
    fn guard_trips_on_tiny_limits() {
        assert!(matches!(
            enumerate_extremal(&cycle(6), 3),
            Err(Error::GuardExceeded { guard: 3, .. })
        ));
    }
}
