//! Eccentricity terrain: locality, almost-unimodality, sandwich bounds,
//! farthest-vertex lower bounds, the eccentricity-approximating spanning
//! tree, and up/horizontal/down edge classification along shortest paths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, EccentricityProfile, Graph, VertexSubset};
use crate::hull::Hull;
use crate::invariants::interval_thinness;
use crate::report::TheoremReport;

/// Edge classification counts along one shortest path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerrainProfile {
    pub path: Vec<usize>,
    pub up: u32,
    pub horizontal: u32,
    pub down: u32,
}

impl TerrainProfile {
    pub fn len(&self) -> u32 {
        self.up + self.horizontal + self.down
    }

    pub fn is_empty(&self) -> bool {
        self.path.len() <= 1
    }
}

/// BFS spanning tree rooted at a near-central vertex, together with the
/// worst eccentricity error it introduces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccTree {
    pub parent: Vec<Option<usize>>,
    pub root: usize,
    pub max_error: u32,
    pub error_bound: u32,
}

/// Minimum distance from `v` to a vertex of strictly smaller
/// eccentricity; 0 when none exists (v attains the global minimum).
pub fn locality(g: &Graph, m: &VertexSubset, v: usize) -> Result<u32> {
    let n = g.n();
    if v >= n {
        return Err(Error::VertexOutOfRange(v, n));
    }
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    Ok((0..n)
        .filter(|&u| prof.ecc[u] < prof.ecc[v])
        .map(|u| dm.get(v, u))
        .min()
        .unwrap_or(0))
}

/// Almost-unimodality: every vertex with `e^M(v) > rad(M) + alpha`, and
/// every vertex farther than alpha from `C_H(M)` in the hull, has a
/// strictly better vertex within distance `2 alpha + 1`. Each branch
/// yields one summary row carrying the worst locality observed.
pub fn unimodality_check(
    g: &Graph,
    m: &VertexSubset,
    alpha: u32,
    hull: &Hull,
) -> Result<TheoremReport> {
    let n = g.n();
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    let radius = 2 * alpha + 1;

    let hull_dm = hull.host_distances();
    let hull_m = hull.embed_subset(m);
    let hull_prof = EccentricityProfile::new(hull_dm, &hull_m)?;
    let hull_center = hull_prof.center_set(0);

    let mut report = TheoremReport::new();
    let mut check_branch = |id: &str, candidates: Vec<usize>| {
        let mut worst = 0i64;
        let mut pass = true;
        let mut bad = String::new();
        for v in candidates {
            let loc = (0..n)
                .filter(|&u| prof.ecc[u] < prof.ecc[v])
                .map(|u| dm.get(v, u))
                .min();
            match loc {
                Some(l) if l <= radius => worst = worst.max(i64::from(l)),
                _ => {
                    pass = false;
                    bad = format!(" violated at v={v}");
                    worst = loc.map_or(i64::MAX, i64::from);
                }
            }
        }
        report.push(crate::report::ReportRow {
            id: id.to_string(),
            context: format!("|M|={}{}", m.len(), bad),
            lhs: worst,
            rhs: i64::from(radius),
            pass,
            skipped: false,
        });
    };

    let high_ecc: Vec<usize> =
        (0..n).filter(|&v| prof.ecc[v] > prof.radius + alpha).collect();
    check_branch("unimodality/ecc", high_ecc);

    let far_from_hull_center: Vec<usize> = (0..n)
        .filter(|&v| hull_dm.dist_to_set(hull.embedding[v], &hull_center) > alpha)
        .collect();
    check_branch("unimodality/hull-center", far_from_hull_center);

    Ok(report)
}

/// Per-vertex sandwich `|e^M(x) - d(x, C^a(M)) - rad(M)| <= alpha`, the
/// thinness-refined lower bound via kappa(H), and the center-to-disk
/// inclusion for every level.
pub fn ecc_sandwich_report(
    g: &Graph,
    m: &VertexSubset,
    alpha: u32,
    hull: &Hull,
) -> Result<TheoremReport> {
    let n = g.n();
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    let c_alpha = prof.center_set(alpha);
    let rad = i64::from(prof.radius);
    let a = i64::from(alpha);

    let mut report = TheoremReport::new();
    for x in 0..n {
        let e = i64::from(prof.ecc[x]);
        let d = i64::from(dm.dist_to_set(x, &c_alpha));
        report.check_le("eccentricities/lower", format!("x={x}"), d + rad - a, e);
        report.check_le("eccentricities/upper", format!("x={x}"), e, d + rad + a);
    }

    let kappa_h = interval_thinness(&hull.host);
    let c_kappa = prof.center_set(kappa_h);
    for x in 0..n {
        let e = i64::from(prof.ecc[x]);
        let d = i64::from(dm.dist_to_set(x, &c_kappa));
        report.check_le("eccentricities/kappa-lower", format!("x={x}"), d + rad, e);
    }

    for level in 0..=prof.diameter {
        let c_level = prof.center_set(level);
        let worst = c_level
            .members()
            .iter()
            .map(|&x| dm.dist_to_set(x, &c_alpha))
            .max()
            .unwrap_or(0);
        report.check_le(
            "center-to-disk",
            format!("l={level}"),
            i64::from(worst),
            a + i64::from(level),
        );
    }
    Ok(report)
}

/// Both farthest-vertex lower bounds: for every `x` and every
/// `y in F^M(x)`, `e^M(y) >= 2 rad - diam(C^{2a}) - 2a` and
/// `e^M(y) >= 2 rad - diam(C^a) - 4a`.
pub fn farthest_vertex_check(g: &Graph, m: &VertexSubset, alpha: u32) -> Result<TheoremReport> {
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    let rad = i64::from(prof.radius);
    let a = i64::from(alpha);
    let diam_c2a = i64::from(dm.set_diameter(&prof.center_set(2 * alpha)));
    let diam_ca = i64::from(dm.set_diameter(&prof.center_set(alpha)));

    let mut report = TheoremReport::new();
    let mut min_farthest_ecc = i64::MAX;
    for x in 0..g.n() {
        for &y in &prof.farthest[x] {
            min_farthest_ecc = min_farthest_ecc.min(i64::from(prof.ecc[y]));
        }
    }
    report.check_le(
        "farthest-ecc/2alpha",
        format!("|M|={}", m.len()),
        2 * rad - diam_c2a - 2 * a,
        min_farthest_ecc,
    );
    report.check_le(
        "farthest-ecc/4alpha",
        format!("|M|={}", m.len()),
        2 * rad - diam_ca - 4 * a,
        min_farthest_ecc,
    );
    Ok(report)
}

/// BFS tree rooted at the real vertex closest to the hull's
/// center-of-the-center, with the exact worst eccentricity error and the
/// proven error bound.
pub fn build_ecc_tree(
    g: &Graph,
    m: &VertexSubset,
    hull: &Hull,
    alpha: u32,
) -> Result<EccTree> {
    let n = g.n();
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;

    let hull_dm = hull.host_distances();
    let hull_m = hull.embed_subset(m);
    let center = EccentricityProfile::new(hull_dm, &hull_m)?.center_set(0);
    // The central vertex must itself lie in the hull center: only there
    // does its eccentricity to the center collapse to half its diameter.
    let cprof = EccentricityProfile::new(hull_dm, &center)?;
    let c = center
        .members()
        .iter()
        .copied()
        .min_by_key(|&v| (cprof.ecc[v], v))
        .expect("center set is non-empty");
    // Nearest real vertex, smallest id on ties.
    let c_star = (0..n)
        .min_by_key(|&z| (hull_dm.get(c, hull.embedding[z]), z))
        .expect("graph is non-empty");

    let dist = g.bfs_distances(c_star);
    let mut parent = vec![None; n];
    for v in 0..n {
        if v != c_star {
            parent[v] = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| dist[u] + 1 == dist[v]);
        }
    }

    // Tree distances by BFS over the tree's own adjacency.
    let mut tree_adj = vec![Vec::new(); n];
    for v in 0..n {
        if let Some(p) = parent[v] {
            tree_adj[v].push(p);
            tree_adj[p].push(v);
        }
    }
    let mut max_error = 0u32;
    for v in 0..n {
        let mut td = vec![u32::MAX; n];
        td[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &tree_adj[u] {
                if td[w] == u32::MAX {
                    td[w] = td[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let e_tree = m.members().iter().map(|&u| td[u]).max().unwrap();
        max_error = max_error.max(e_tree - prof.ecc[v]);
    }

    let diam_ca = dm.set_diameter(&prof.center_set(alpha));
    let error_bound = diam_ca.div_ceil(2) + 3 * alpha;
    Ok(EccTree { parent, root: c_star, max_error, error_bound })
}

/// The lexicographically smallest shortest path from `from` to `to`.
pub fn canonical_shortest_path(g: &Graph, dm: &DistanceMatrix, from: usize, to: usize) -> Vec<usize> {
    let mut path = vec![from];
    let mut cur = from;
    while cur != to {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| dm.get(u, to) + 1 == dm.get(cur, to))
            .expect("graph is connected");
        path.push(next);
        cur = next;
    }
    path
}

/// Classifies each edge of `path` against the eccentricity profile.
pub fn classify_path(prof: &EccentricityProfile, path: Vec<usize>) -> TerrainProfile {
    let mut up = 0;
    let mut horizontal = 0;
    let mut down = 0;
    for w in path.windows(2) {
        match prof.ecc[w[0]].cmp(&prof.ecc[w[1]]) {
            std::cmp::Ordering::Less => up += 1,
            std::cmp::Ordering::Equal => horizontal += 1,
            std::cmp::Ordering::Greater => down += 1,
        }
    }
    TerrainProfile { path, up, horizontal, down }
}

/// Terrain profile of the canonical shortest path from `y` to the
/// nearest vertex of `C^alpha(M)` (smallest id on ties). Vertices already
/// in `C^alpha(M)` yield the trivial length-0 profile.
pub fn terrain_profile(
    g: &Graph,
    m: &VertexSubset,
    y: usize,
    alpha: u32,
) -> Result<TerrainProfile> {
    let n = g.n();
    if y >= n {
        return Err(Error::VertexOutOfRange(y, n));
    }
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    let c_alpha = prof.center_set(alpha);
    if c_alpha.contains(y) {
        return Ok(TerrainProfile { path: vec![y], up: 0, horizontal: 0, down: 0 });
    }
    let d = dm.dist_to_set(y, &c_alpha);
    let x = c_alpha
        .members()
        .iter()
        .copied()
        .find(|&x| dm.get(y, x) == d)
        .expect("center set is non-empty");
    Ok(classify_path(&prof, canonical_shortest_path(g, &dm, y, x)))
}

/// Every shortest path from `from` to `to`, failing once more than
/// `guard` paths exist.
pub fn all_shortest_paths(
    g: &Graph,
    dm: &DistanceMatrix,
    from: usize,
    to: usize,
    guard: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut path = vec![from];
    fn rec(
        g: &Graph,
        dm: &DistanceMatrix,
        to: usize,
        guard: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let cur = *path.last().unwrap();
        if cur == to {
            if out.len() >= guard {
                return Err(Error::PathGuardExceeded(out.len()));
            }
            out.push(path.clone());
            return Ok(());
        }
        for &u in g.neighbors(cur) {
            if dm.get(u, to) + 1 == dm.get(cur, to) {
                path.push(u);
                rec(g, dm, to, guard, path, out)?;
                path.pop();
            }
        }
        Ok(())
    }
    rec(g, dm, to, guard, &mut path, &mut out)?;
    Ok(out)
}

/// Terrain theorem rows: both path identities on the canonical shortest
/// path of every ordered vertex pair, and `2U + H <= 2 alpha` on the
/// canonical descent path of every vertex outside `C^alpha(M)`. With
/// `strict_path_guard` set, the descent bound is additionally checked on
/// every shortest path to the chosen center vertex.
pub fn terrain_report(
    g: &Graph,
    m: &VertexSubset,
    alpha: u32,
    strict_path_guard: Option<usize>,
) -> Result<TheoremReport> {
    let n = g.n();
    let dm = g.distance_matrix();
    let prof = EccentricityProfile::new(&dm, m)?;
    let mut report = TheoremReport::new();

    // Identities hold on arbitrary shortest paths, not only descents.
    let mut worst_i = 0i64;
    let mut worst_ii = 0i64;
    let mut identities_ok = true;
    for y in 0..n {
        for x in 0..n {
            let tp = classify_path(&prof, canonical_shortest_path(g, &dm, y, x));
            let ecc_drop = i64::from(prof.ecc[y]) - i64::from(prof.ecc[x]);
            let i_gap = (i64::from(tp.down) - i64::from(tp.up) - ecc_drop).abs();
            let ii_gap = (2 * i64::from(tp.up) + i64::from(tp.horizontal)
                - (i64::from(dm.get(y, x)) - ecc_drop))
                .abs();
            worst_i = worst_i.max(i_gap);
            worst_ii = worst_ii.max(ii_gap);
            identities_ok &= i_gap == 0 && ii_gap == 0;
        }
    }
    report.check_eq("terrain/identity-du", "all pairs", worst_i, 0);
    report.check_eq("terrain/identity-2uh", "all pairs", worst_ii, 0);
    debug_assert!(identities_ok);

    let c_alpha = prof.center_set(alpha);
    let mut worst = 0i64;
    let mut pass = true;
    for y in 0..n {
        if c_alpha.contains(y) {
            continue;
        }
        let d = dm.dist_to_set(y, &c_alpha);
        let x = c_alpha
            .members()
            .iter()
            .copied()
            .find(|&x| dm.get(y, x) == d)
            .unwrap();
        let paths = match strict_path_guard {
            Some(guard) => all_shortest_paths(g, &dm, y, x, guard)?,
            None => vec![canonical_shortest_path(g, &dm, y, x)],
        };
        for p in paths {
            let tp = classify_path(&prof, p);
            let v = 2 * i64::from(tp.up) + i64::from(tp.horizontal);
            worst = worst.max(v);
            pass &= v <= 2 * i64::from(alpha);
        }
    }
    report.push(crate::report::ReportRow {
        id: "terrain/descent-bound".to_string(),
        context: format!("|M|={}", m.len()),
        lhs: worst,
        rhs: 2 * i64::from(alpha),
        pass,
        skipped: false,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gap::gap_from_hull;
    use crate::hull::{build_hull, DEFAULT_GUARD};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn locality_examples() {
        let p5 = path(5);
        let full = VertexSubset::full(5);
        assert_eq!(locality(&p5, &full, 0).unwrap(), 1);
        let c4 = cycle(4);
        assert_eq!(locality(&c4, &VertexSubset::full(4), 1).unwrap(), 0);
    }

    #[test]
    fn unimodality_on_helly_graph() {
        let g = path(6);
        let h = build_hull(&g, DEFAULT_GUARD).unwrap();
        let alpha = gap_from_hull(&h).alpha;
        assert_eq!(alpha, 0);
        let report = unimodality_check(&g, &VertexSubset::full(6), alpha, &h).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn unimodality_vacuous_on_self_centered_cycle() {
        let g = cycle(8);
        let h = build_hull(&g, DEFAULT_GUARD).unwrap();
        let alpha = gap_from_hull(&h).alpha;
        let report = unimodality_check(&g, &VertexSubset::full(8), alpha, &h).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn sandwich_is_exact_on_trees() {
        let g = path(7);
        let h = build_hull(&g, DEFAULT_GUARD).unwrap();
        let m = VertexSubset::full(7);
        let report = ecc_sandwich_report(&g, &m, 0, &h).unwrap();
        assert!(report.all_pass());
        // alpha = 0 collapses the sandwich to an equality.
        let dm = g.distance_matrix();
        let prof = EccentricityProfile::new(&dm, &m).unwrap();
        let c = prof.center_set(0);
        for x in 0..7 {
            assert_eq!(prof.ecc[x], dm.dist_to_set(x, &c) + prof.radius);
        }
    }

    #[test]
    fn farthest_vertex_bounds_on_tree() {
        let g = path(7);
        let report = farthest_vertex_check(&g, &VertexSubset::full(7), 0).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn ecc_tree_of_a_tree_is_exact() {
        let g = path(6);
        let h = build_hull(&g, DEFAULT_GUARD).unwrap();
        let t = build_ecc_tree(&g, &VertexSubset::full(6), &h, 0).unwrap();
        assert_eq!(t.max_error, 0);
        assert!(t.max_error <= t.error_bound);
    }

    #[test]
    fn ecc_tree_of_c4() {
        let g = cycle(4);
        let h = build_hull(&g, DEFAULT_GUARD).unwrap();
        let t = build_ecc_tree(&g, &VertexSubset::full(4), &h, 1).unwrap();
        // The BFS tree of C_4 stretches one antipodal eccentricity by 1.
        assert_eq!(t.max_error, 1);
        assert!(t.max_error <= t.error_bound);
    }

    #[test]
    fn terrain_on_p5_is_all_descent() {
        let g = path(5);
        let tp = terrain_profile(&g, &VertexSubset::full(5), 0, 0).unwrap();
        assert_eq!((tp.up, tp.horizontal, tp.down), (0, 0, 2));
        assert_eq!(tp.path, vec![0, 1, 2]);
    }

    #[test]
    fn terrain_report_on_small_graphs() {
        for (g, alpha) in [(path(6), 0), (cycle(6), 1), (cycle(8), 2)] {
            let n = g.n();
            let report =
                terrain_report(&g, &VertexSubset::full(n), alpha, Some(10_000)).unwrap();
            assert!(report.all_pass(), "failures: {:?}", report.failures());
        }
    }

    #[test]
    fn all_shortest_paths_enumeration() {
        let g = cycle(4);
        let dm = g.distance_matrix();
        let paths = all_shortest_paths(&g, &dm, 0, 2, 100).unwrap();
        assert_eq!(paths.len(), 2);
        assert!(matches!(
            all_shortest_paths(&g, &dm, 0, 2, 1),
            Err(Error::PathGuardExceeded(_))
        ));
    }
}
