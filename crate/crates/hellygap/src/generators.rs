//! Deterministic constructors for the example and counterexample graph
//! families, plus a seeded random connected graph generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph family plus its parameters.
///
/// Vertex numbering is fixed per family: grids are row-major, cycles
/// follow cycle order, tails are appended after the cycle. `RectGrid`
/// takes vertex counts per side; `KingGrid` takes path lengths (edge
/// counts) per side so that `KingGrid { 2r, 2r }` is the strong product
/// of two paths of even length 2r.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    RectGrid { rows: usize, cols: usize },
    KingGrid { rows: usize, cols: usize },
    TriangularGrid { side: usize },
    CycleWithTails { k: usize },
    RandomConnected { n: usize, p: f64, seed: u64 },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(Error::InvalidFamilySpec("path requires n >= 1".into()));
            }
            Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidFamilySpec("cycle requires n >= 3".into()));
            }
            Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        FamilySpec::RectGrid { rows, cols } => {
            if rows < 1 || cols < 1 {
                return Err(Error::InvalidFamilySpec("grid sides must be positive".into()));
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            Graph::from_edges(rows * cols, &edges)
        }
        FamilySpec::KingGrid { rows, cols } => {
            if rows < 1 || cols < 1 {
                return Err(Error::InvalidFamilySpec("king grid sides must be positive".into()));
            }
            let (h, w) = (rows + 1, cols + 1);
            let id = |r: usize, c: usize| r * w + c;
            let mut edges = Vec::new();
            for r in 0..h {
                for c in 0..w {
                    if c + 1 < w {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < h {
                        edges.push((id(r, c), id(r + 1, c)));
                        if c + 1 < w {
                            edges.push((id(r, c), id(r + 1, c + 1)));
                        }
                        if c > 0 {
                            edges.push((id(r, c), id(r + 1, c - 1)));
                        }
                    }
                }
            }
            Graph::from_edges(h * w, &edges)
        }
        FamilySpec::TriangularGrid { side } => triangular_grid(side),
        FamilySpec::CycleWithTails { k } => {
            if k < 1 {
                return Err(Error::InvalidFamilySpec("cycle-with-tails requires k >= 1".into()));
            }
            let n = 4 * k;
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            // Tail of length k at vertex 0, then one at the antipode 2k.
            let mut prev = 0;
            for t in 0..k {
                edges.push((prev, n + t));
                prev = n + t;
            }
            prev = 2 * k;
            for t in 0..k {
                edges.push((prev, n + k + t));
                prev = n + k + t;
            }
            Graph::from_edges(n + 2 * k, &edges)
        }
        FamilySpec::RandomConnected { n, p, seed } => random_connected(n, p, seed),
    }
}

/// Triangle of the unit triangular lattice with `side + 1` rows: vertex
/// (i, j) for 0 <= j <= i <= side, id = i(i+1)/2 + j, with edges to
/// (i, j+1), (i+1, j) and (i+1, j+1).
fn triangular_grid(side: usize) -> Result<Graph> {
    if side < 1 {
        return Err(Error::InvalidFamilySpec("triangular grid side must be positive".into()));
    }
    let id = |i: usize, j: usize| i * (i + 1) / 2 + j;
    let mut edges = Vec::new();
    for i in 0..=side {
        for j in 0..=i {
            if j + 1 <= i {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 <= side {
                edges.push((id(i, j), id(i + 1, j)));
                edges.push((id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    Graph::from_edges((side + 1) * (side + 2) / 2, &edges)
}

fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 || !(0.0..=1.0).contains(&p) || (n > 1 && p == 0.0) {
        return Err(Error::InvalidFamilySpec(format!(
            "random graph needs n >= 1 and p in (0, 1], got n = {n}, p = {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = Graph::from_edges(n, &edges) {
            return Ok(g);
        }
    }
    Err(Error::InvalidFamilySpec(format!(
        "no connected sample for n = {n}, p = {p} after 100000 attempts"
    )))
}

/// The bridged counterexample: a triangular grid of side 4k and its
/// three corners at pairwise distance 4k. The radius-2k disks around the
/// corners pairwise intersect, yet share no vertex until every radius is
/// inflated by k.
#[derive(Debug, Clone)]
pub struct BridgedWitness {
    pub graph: Graph,
    pub corners: [usize; 3],
}

pub fn bridged_witness(k: usize) -> Result<BridgedWitness> {
    if k < 1 {
        return Err(Error::InvalidFamilySpec("bridged witness requires k >= 1".into()));
    }
    let side = 4 * k;
    if side > 60 {
        return Err(Error::InvalidFamilySpec("bridged witness side exceeds size limit".into()));
    }
    let graph = triangular_grid(side)?;
    let base = side * (side + 1) / 2;
    Ok(BridgedWitness { graph, corners: [0, base, base + side] })
}
