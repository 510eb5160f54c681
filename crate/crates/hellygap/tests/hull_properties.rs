//! Structural invariants of built hulls, checked exhaustively on a
//! corpus of small graphs.

use hellygap::generators::{generate, FamilySpec};
use hellygap::graph::{is_isometric_embedding, EccentricityProfile, Graph, VertexSubset};
use hellygap::hull::{build_hull, enumerate_extremal, Hull, MetricFunction, DEFAULT_GUARD};

fn corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 4..=8 {
        out.push(generate(&FamilySpec::Cycle { n }).unwrap());
    }
    out.push(generate(&FamilySpec::Path { n: 5 }).unwrap());
    out.push(generate(&FamilySpec::Cycle { n: 5 }).unwrap().add_pendant(2).unwrap());
    out.push(generate(&FamilySpec::RectGrid { rows: 3, cols: 3 }).unwrap());
    out.push(generate(&FamilySpec::CycleWithTails { k: 1 }).unwrap());
    for seed in [3, 5, 8] {
        out.push(generate(&FamilySpec::RandomConnected { n: 7, p: 0.4, seed }).unwrap());
    }
    out
}

fn hulls() -> Vec<Hull> {
    corpus().iter().map(|g| build_hull(g, DEFAULT_GUARD).unwrap()).collect()
}

/// Target sets used for the per-M lemmas: everything, the reals, and a
/// couple of fixed slices.
fn target_sets(h: &Hull) -> Vec<VertexSubset> {
    let hv = h.vertex_count();
    let n = h.embedding.len();
    let mut out = vec![
        VertexSubset::full(hv),
        h.embed_subset(&VertexSubset::full(n)),
        VertexSubset::singleton(0),
    ];
    if hv >= 4 {
        out.push(VertexSubset::new(vec![0, hv / 2, hv - 1]).unwrap());
    }
    out
}

#[test]
fn hull_distance_to_real_is_the_coordinate() {
    for h in hulls() {
        let dm = h.host_distances();
        for f in 0..h.vertex_count() {
            for (v, &hv) in h.embedding.iter().enumerate() {
                assert_eq!(
                    dm.get(f, hv),
                    h.functions[f].values[v],
                    "coordinate {v} of hull vertex {f}"
                );
            }
        }
    }
}

#[test]
fn real_vertices_embed_isometrically() {
    for (g, h) in corpus().iter().zip(hulls()) {
        assert!(is_isometric_embedding(g, &h.host, &h.embedding).unwrap());
    }
}

#[test]
fn eccentricity_formula_holds_in_hulls() {
    // e^M(v) = d(v, C(M)) + rad(M) for every vertex of a Helly graph.
    for h in hulls() {
        let dm = h.host_distances();
        for m in target_sets(&h) {
            let prof = EccentricityProfile::new(dm, &m).unwrap();
            let center = prof.center_set(0);
            for v in 0..h.vertex_count() {
                assert_eq!(
                    prof.ecc[v],
                    dm.dist_to_set(v, &center) + prof.radius,
                    "|M|={}, v={v}",
                    m.len()
                );
            }
        }
    }
}

#[test]
fn radius_is_half_diameter_in_hulls() {
    // 2 rad(M) - 1 <= diam(M) <= 2 rad(M) in a Helly graph.
    for h in hulls() {
        let dm = h.host_distances();
        for m in target_sets(&h) {
            let prof = EccentricityProfile::new(dm, &m).unwrap();
            assert!(2 * prof.radius <= prof.diameter + 1);
            assert!(prof.diameter <= 2 * prof.radius);
        }
    }
}

#[test]
fn center_levels_are_disks_around_the_center_in_hulls() {
    // C^{k+l}(M) = D(C^k(M), l) in a Helly graph.
    for h in hulls() {
        let dm = h.host_distances();
        for m in target_sets(&h) {
            let prof = EccentricityProfile::new(dm, &m).unwrap();
            for k in 0..=2u32 {
                let ck = prof.center_set(k);
                for l in 0..=2u32 {
                    let ckl = prof.center_set(k + l);
                    for v in 0..h.vertex_count() {
                        assert_eq!(
                            ckl.contains(v),
                            dm.dist_to_set(v, &ck) <= l,
                            "k={k} l={l} v={v}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn hull_pairs_lie_between_real_vertices() {
    // Both endpoints of any shortest hull path are between two real
    // vertices, so the path extends to a real-to-real shortest path.
    for h in hulls() {
        let dm = h.host_distances();
        let hv = h.vertex_count();
        for a in 0..hv {
            for b in a..hv {
                let extended = h.embedding.iter().any(|&u| {
                    h.embedding.iter().any(|&v| {
                        dm.get(u, a) + dm.get(a, b) + dm.get(b, v) == dm.get(u, v)
                    })
                });
                assert!(extended, "hull pair ({a}, {b}) extends to no real pair");
            }
        }
    }
}

#[test]
fn hulls_are_their_own_hulls() {
    for h in hulls() {
        if h.vertex_count() > 50 {
            continue;
        }
        let again = enumerate_extremal(&h.host, DEFAULT_GUARD).unwrap();
        let expected: Vec<MetricFunction> = {
            let mut reals: Vec<MetricFunction> = (0..h.vertex_count())
                .map(|z| MetricFunction::distance_vector(h.host_distances(), z))
                .collect();
            reals.sort();
            reals
        };
        assert_eq!(again, expected);
    }
}
