//! The Helly-gap alpha(G): hull-based computation, a brute-force disk
//! oracle, disk-system checking, Hellyness, and the subset explorer.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::hull::{build_hull, Hull, MetricFunction};

pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

/// A system of disks: radius `radii[i]` centered at `domain[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusFunction {
    pub domain: Vec<usize>,
    pub radii: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapWitness {
    /// A Helly vertex at hull-distance alpha from the nearest real vertex.
    HullVertex { hull_index: usize, function: MetricFunction },
    /// Pairwise-intersecting disks with empty intersection after
    /// inflating every radius by alpha - 1.
    Disks(RadiusFunction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCertificate {
    pub alpha: u32,
    pub witness: Option<GapWitness>,
}

/// alpha(G) from the built hull: the largest hull-distance from any hull
/// vertex to its nearest real vertex. Cross-checked coordinate-wise:
/// that distance equals `min_v f(v)` for the vertex's function.
pub fn gap_from_hull(h: &Hull) -> GapCertificate {
    let dm = h.host_distances();
    let mut alpha = 0u32;
    let mut witness: Option<(usize, &MetricFunction)> = None;
    for hv in 0..h.vertex_count() {
        let by_bfs = (0..h.embedding.len())
            .map(|z| dm.get(hv, h.embedding[z]))
            .min()
            .expect("graph is non-empty");
        let by_coords = *h.functions[hv].values.iter().min().unwrap();
        assert_eq!(by_bfs, by_coords, "hull distance disagrees with function coordinates");
        let better = by_bfs > alpha
            || (by_bfs == alpha
                && by_bfs > 0
                && witness.as_ref().is_some_and(|(_, f)| h.functions[hv] < **f));
        if better {
            alpha = by_bfs;
            witness = Some((hv, &h.functions[hv]));
        }
    }
    GapCertificate {
        alpha,
        witness: witness.map(|(hull_index, f)| GapWitness::HullVertex {
            hull_index,
            function: f.clone(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSystemReport {
    pub pairwise: bool,
    pub common_after_inflation: bool,
    pub witness_vertex: Option<usize>,
}

/// Checks whether the disks pairwise intersect and whether they share a
/// vertex after inflating every radius by `alpha`.
pub fn check_disk_system(g: &Graph, rf: &RadiusFunction, alpha: u32) -> Result<DiskSystemReport> {
    let n = g.n();
    if let Some(&v) = rf.domain.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange(v, n));
    }
    let dm = g.distance_matrix();
    Ok(check_disk_system_dm(&dm, rf, alpha))
}

fn check_disk_system_dm(dm: &DistanceMatrix, rf: &RadiusFunction, alpha: u32) -> DiskSystemReport {
    let k = rf.domain.len();
    let mut pairwise = true;
    'outer: for i in 0..k {
        for j in i + 1..k {
            if dm.get(rf.domain[i], rf.domain[j]) > rf.radii[i] + rf.radii[j] {
                pairwise = false;
                break 'outer;
            }
        }
    }
    let witness_vertex = (0..dm.n()).find(|&z| {
        (0..k).all(|i| dm.get(z, rf.domain[i]) <= rf.radii[i] + alpha)
    });
    DiskSystemReport { pairwise, common_after_inflation: witness_vertex.is_some(), witness_vertex }
}

/// Brute-force alpha(G) straight from the definition.
///
/// Disks with radius >= diam(G) contain every vertex and constrain
/// nothing, and a center absent from S imposes no constraint either, so
/// scanning S = V(G) with radii in [0, diam(G)] covers all systems. For
/// each pairwise-intersecting radius function the minimal sufficient
/// inflation is computed directly; alpha is the maximum over all of them.
pub fn gap_oracle(g: &Graph) -> Result<GapCertificate> {
    gap_oracle_with_budget(g, DEFAULT_ORACLE_BUDGET)
}

pub fn gap_oracle_with_budget(g: &Graph, budget: u128) -> Result<GapCertificate> {
    let n = g.n();
    let dm = g.distance_matrix();
    let diam = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .map(|(u, v)| dm.get(u, v))
        .max()
        .unwrap();
    let space = (u128::from(diam) + 1).pow(n as u32);
    if space > budget {
        return Err(Error::OracleBudget(space));
    }

    let mut alpha = 0u32;
    let mut witness: Option<Vec<u32>> = None;
    let mut radii = vec![0u32; n];
    loop {
        if pairwise_intersecting(&dm, &radii) {
            // Minimal inflation making the disks share a vertex.
            let needed = (0..n)
                .map(|z| (0..n).map(|v| dm.get(z, v).saturating_sub(radii[v])).max().unwrap())
                .min()
                .unwrap();
            if needed > alpha {
                alpha = needed;
                witness = Some(radii.clone());
            }
        }
        // Lexicographic successor over [0, diam]^n.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(GapCertificate {
                    alpha,
                    witness: witness.map(|radii| {
                        GapWitness::Disks(RadiusFunction { domain: (0..n).collect(), radii })
                    }),
                });
            }
            i -= 1;
            if radii[i] < diam {
                radii[i] += 1;
                for r in &mut radii[i + 1..] {
                    *r = 0;
                }
                break;
            }
        }
    }
}

fn pairwise_intersecting(dm: &DistanceMatrix, radii: &[u32]) -> bool {
    let n = dm.n();
    for u in 0..n {
        for v in u + 1..n {
            if dm.get(u, v) > radii[u] + radii[v] {
                return false;
            }
        }
    }
    true
}

/// True iff the hull contains no Helly vertices, i.e. alpha(G) = 0.
pub fn is_helly(g: &Graph, guard: usize) -> Result<bool> {
    let h = build_hull(g, guard)?;
    Ok(h.helly_vertices().is_empty())
}

/// Polynomial Hellyness test via the classical triple criterion for set
/// families (Berge): the disks pairwise covering a vertex triple have a
/// common vertex for every triple iff every pairwise-intersecting disk
/// family does. The smallest disk at `v` covering two of `{x, y, z}` has
/// radius `median(d(v,x), d(v,y), d(v,z))`, so each triple reduces to
/// one disk system.
pub fn is_helly_by_triples(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return true;
    }
    let dm = g.distance_matrix();
    let mut med = vec![0u32; n];
    // Symmetric graphs resolve most triples with the same vertex.
    let mut hint = 0usize;
    for x in 0..n {
        let rx = dm.row(x);
        for y in x + 1..n {
            let ry = dm.row(y);
            for z in y + 1..n {
                let rz = dm.row(z);
                for v in 0..n {
                    let (a, b, c) = (rx[v], ry[v], rz[v]);
                    med[v] = a.max(b).min(a.max(c)).min(b.max(c));
                }
                let fits = |u: usize| {
                    let ru = dm.row(u);
                    ru[x] <= med[x]
                        && ru[y] <= med[y]
                        && ru[z] <= med[z]
                        && ru.iter().zip(&med).all(|(&d, &r)| d <= r)
                };
                if fits(hint) {
                    continue;
                }
                match (0..n).find(|&u| u != hint && fits(u)) {
                    Some(u) => hint = u,
                    None => return false,
                }
            }
        }
    }
    true
}

/// `max_M floor((2 rad_G(M) - diam_G(M)) / 2)` over all non-empty
/// subsets M; a lower bound on alpha(G) and the conjecture explorer's
/// statistic. Never asserted equal to alpha.
pub fn max_subset_gap_bound(g: &Graph) -> Result<u32> {
    let n = g.n();
    const MAX_N: usize = 20;
    if n > MAX_N {
        return Err(Error::TooManyVertices { n, max: MAX_N });
    }
    let dm = g.distance_matrix();
    let mut best: i64 = 0;
    for mask in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let mut rad = u32::MAX;
        let mut diam = 0u32;
        for v in 0..n {
            let e = members.iter().map(|&u| dm.get(v, u)).max().unwrap();
            rad = rad.min(e);
            if mask & (1 << v) != 0 {
                diam = diam.max(e);
            }
        }
        let bound = (2 * i64::from(rad) - i64::from(diam)).div_euclid(2);
        best = best.max(bound);
    }
    Ok(best as u32)
}

/// All vertices lying in every disk after inflation by `alpha`.
pub fn disks_common_vertices(dm: &DistanceMatrix, rf: &RadiusFunction, alpha: u32) -> Vec<usize> {
    (0..dm.n())
        .filter(|&z| {
            rf.domain
                .iter()
                .zip(&rf.radii)
                .all(|(&v, &r)| dm.get(z, v) <= r + alpha)
        })
        .collect()
}
