//! Comparison parameters: Gromov hyperbolicity (stored doubled),
//! interval thinness, the alpha_i-metric parameter, chordality, and
//! audits of user-supplied tree decompositions.

use serde::{Deserialize, Serialize};

use crate::graph::{interval_slice, Graph};

/// `2 * delta(G)`. Four-point sums are integers, so doubling keeps the
/// value integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoDelta(pub u32);

/// Exact hyperbolicity by exhaustion over all 4-subsets: the largest
/// difference between the two bigger of the three pairwise distance sums.
pub fn hyperbolicity_2delta(g: &Graph) -> TwoDelta {
    let n = g.n();
    if n < 4 {
        return TwoDelta(0);
    }
    let dm = g.distance_matrix();
    let mut best = 0u32;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s1 = dm.get(a, b) + dm.get(c, d);
                    let s2 = dm.get(a, c) + dm.get(b, d);
                    let s3 = dm.get(a, d) + dm.get(b, c);
                    let mut sums = [s1, s2, s3];
                    sums.sort_unstable();
                    best = best.max(sums[2] - sums[1]);
                }
            }
        }
    }
    TwoDelta(best)
}

/// kappa(G): the largest distance between two vertices sharing an
/// interval slice.
pub fn interval_thinness(g: &Graph) -> u32 {
    let dm = g.distance_matrix();
    let n = g.n();
    let mut kappa = 0u32;
    for x in 0..n {
        for y in x + 1..n {
            for layer in 0..=dm.get(x, y) {
                let slice = interval_slice(&dm, x, y, Some(layer)).expect("layer in range");
                kappa = kappa.max(dm.set_diameter(&slice));
            }
        }
    }
    kappa
}

/// The minimal i such that G has an alpha_i-metric: the worst violation
/// of `d(x,v) >= d(x,y) + d(y,v) - i` over quadruples with `z` strictly
/// between `x,y` and `y` strictly between `z,v` (z = y or y = v would
/// make the parameter positive on any graph with an edge).
pub fn alpha_i_parameter(g: &Graph) -> u32 {
    let dm = g.distance_matrix();
    let n = g.n();
    let mut worst = 0u32;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if z == y || dm.get(x, z) + dm.get(z, y) != dm.get(x, y) {
                    continue;
                }
                for v in 0..n {
                    if v == y || dm.get(z, y) + dm.get(y, v) != dm.get(z, v) {
                        continue;
                    }
                    let lhs = dm.get(x, y) + dm.get(y, v);
                    worst = worst.max(lhs.saturating_sub(dm.get(x, v)));
                }
            }
        }
    }
    worst
}

/// Longest induced cycle found, with a marker when the search was cut
/// off at the guard. Forests report 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chordality {
    pub length: u32,
    pub exceeded: bool,
}

/// Exhaustive induced-cycle search: induced paths grow from their
/// smallest vertex, closing back to it only when no chord exists. Paths
/// never exceed `guard + 1` vertices; a closure at `guard + 1` sets the
/// overflow marker instead of a length.
pub fn chordality(g: &Graph, guard: u32) -> Chordality {
    let guard = guard.max(3);
    let n = g.n();
    let mut result = Chordality { length: 0, exceeded: false };
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend_cycle(g, guard, &mut path, &mut on_path, &mut result);
        on_path[start] = false;
        path.pop();
    }
    result
}

fn extend_cycle(
    g: &Graph,
    guard: u32,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    result: &mut Chordality,
) {
    let start = path[0];
    let last = *path.last().unwrap();
    for &u in g.neighbors(last) {
        // Cycles are enumerated from their smallest vertex.
        if u <= start || on_path[u] {
            continue;
        }
        // Induced: no chord from u to any interior path vertex.
        let interior = if path.len() >= 2 { &path[1..path.len() - 1] } else { &[][..] };
        if interior.iter().any(|&p| g.has_edge(u, p)) {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(u, start);
        if closes {
            let cycle_len = path.len() as u32 + 1;
            if cycle_len > guard {
                result.exceeded = true;
            } else {
                result.length = result.length.max(cycle_len);
            }
        }
        // A chord to the start blocks any longer induced cycle through u.
        if !closes {
            if path.len() as u32 <= guard {
                path.push(u);
                on_path[u] = true;
                extend_cycle(g, guard, path, on_path, result);
                on_path[u] = false;
                path.pop();
            } else {
                // Truncated: longer induced cycles may exist unseen.
                result.exceeded = true;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeDecompositionAudit {
    pub valid: bool,
    pub width: i64,
    pub breadth: u32,
    pub length: u32,
}

/// Checks the three decomposition conditions (vertex coverage, edge
/// coverage, per-vertex subtree connectivity) plus tree-shape of the bag
/// graph, and measures width, breadth and length regardless of validity.
pub fn audit_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> TreeDecompositionAudit {
    let n = g.n();
    let b = td.bags.len();
    let dm = g.distance_matrix();

    let mut valid = b > 0;

    // Bag indices in range and the bag graph is a tree.
    let mut bag_adj = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        if x >= b || y >= b || x == y {
            valid = false;
        } else {
            bag_adj[x].push(y);
            bag_adj[y].push(x);
        }
    }
    if valid && (td.tree_edges.len() + 1 != b || !connected(&bag_adj)) {
        valid = false;
    }
    if td.bags.iter().flatten().any(|&v| v >= n) {
        valid = false;
    }

    if valid {
        // (i) vertex coverage, (iii) subtree connectivity.
        for v in 0..n {
            let holding: Vec<usize> =
                (0..b).filter(|&i| td.bags[i].contains(&v)).collect();
            if holding.is_empty() {
                valid = false;
                break;
            }
            if !subtree_connected(&bag_adj, &holding) {
                valid = false;
                break;
            }
        }
    }
    if valid {
        // (ii) edge coverage.
        for (u, v) in g.edges() {
            if !td.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&v)) {
                valid = false;
                break;
            }
        }
    }

    let width = td.bags.iter().map(|bag| bag.len() as i64).max().unwrap_or(0) - 1;
    let mut breadth = 0u32;
    let mut length = 0u32;
    for bag in &td.bags {
        if bag.iter().any(|&v| v >= n) {
            continue;
        }
        if let Some(rho) = (0..n)
            .map(|v| bag.iter().map(|&u| dm.get(v, u)).max().unwrap_or(0))
            .min()
        {
            breadth = breadth.max(rho);
        }
        let mut lam = 0;
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                lam = lam.max(dm.get(u, v));
            }
        }
        length = length.max(lam);
    }
    TreeDecompositionAudit { valid, width, breadth, length }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let b = adj.len();
    if b == 0 {
        return false;
    }
    let mut seen = vec![false; b];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == b
}

/// The nodes in `holding` induce a connected subgraph of the bag tree.
fn subtree_connected(adj: &[Vec<usize>], holding: &[usize]) -> bool {
    let mut in_set = vec![false; adj.len()];
    for &x in holding {
        in_set[x] = true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![holding[0]];
    seen[holding[0]] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if in_set[y] && !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == holding.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn grid3x3() -> Graph {
        Graph::from_edges(
            9,
            &[
                (0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8),
                (0, 3), (3, 6), (1, 4), (4, 7), (2, 5), (5, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn hyperbolicity_of_trees_is_zero() {
        assert_eq!(hyperbolicity_2delta(&path(7)), TwoDelta(0));
        assert_eq!(hyperbolicity_2delta(&path(4).add_pendant(1).unwrap()), TwoDelta(0));
    }

    #[test]
    fn hyperbolicity_of_small_cycles() {
        // C_4: sums 4/2/2 on the single quadruple.
        assert_eq!(hyperbolicity_2delta(&cycle(4)), TwoDelta(2));
        // C_5: 2delta = 1.
        assert_eq!(hyperbolicity_2delta(&cycle(5)), TwoDelta(1));
    }

    #[test]
    fn thinness_examples() {
        assert_eq!(interval_thinness(&path(6)), 0);
        // Both midpoints of an antipodal pair of C_4 share a slice.
        assert_eq!(interval_thinness(&cycle(4)), 2);
    }

    #[test]
    fn alpha_i_examples() {
        assert_eq!(alpha_i_parameter(&complete(5)), 0);
        // Trees are alpha_0: betweenness chains are additive.
        assert_eq!(alpha_i_parameter(&path(6)), 0);
        // C_4: x=0, z=1, y=2, v=3 gives d(x,y)+d(y,v)-d(x,v) = 2.
        assert_eq!(alpha_i_parameter(&cycle(4)), 2);
        let ladder = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        // Corner quadruple of the 1 x 3 ladder: d(0,7)+d(7,4)-d(0,4) = 6.
        assert!(alpha_i_parameter(&ladder) >= 6);
    }

    #[test]
    fn chordality_examples() {
        assert_eq!(chordality(&path(5), 12), Chordality { length: 0, exceeded: false });
        assert_eq!(chordality(&cycle(6), 12), Chordality { length: 6, exceeded: false });
        // The grid boundary is an induced 8-cycle (no chords cross it).
        assert_eq!(chordality(&grid3x3(), 12), Chordality { length: 8, exceeded: false });
        assert_eq!(chordality(&complete(5), 12), Chordality { length: 3, exceeded: false });
        // Guard cutoff flags instead of reporting a length.
        let c = chordality(&cycle(9), 5);
        assert!(c.exceeded);
        assert_eq!(c.length, 0);
    }

    #[test]
    fn tree_decomposition_audits() {
        let p4 = path(4);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        let audit = audit_tree_decomposition(&p4, &td);
        assert!(audit.valid);
        assert_eq!((audit.width, audit.breadth, audit.length), (1, 1, 1));

        let k4 = complete(4);
        let td = TreeDecomposition { bags: vec![vec![0, 1, 2, 3]], tree_edges: vec![] };
        let audit = audit_tree_decomposition(&k4, &td);
        assert!(audit.valid);
        assert_eq!((audit.width, audit.breadth, audit.length), (3, 1, 1));

        // Edge 1-2 uncovered.
        let p3 = path(3);
        let td = TreeDecomposition { bags: vec![vec![0, 1], vec![2]], tree_edges: vec![(0, 1)] };
        assert!(!audit_tree_decomposition(&p3, &td).valid);

        // Vertex 2 appears in two disconnected bags: subtree condition fails.
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2], vec![1, 2], vec![2, 3]],
            tree_edges: vec![(0, 1), (0, 2)],
        };
        let bad = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2, 3], vec![0, 3]],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        assert!(audit_tree_decomposition(&p4, &td).valid);
        assert!(!audit_tree_decomposition(&p4, &bad).valid);
    }
}
