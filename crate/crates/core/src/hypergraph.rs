//! Uniform hypergraphs and the four structured families.
//!
//! All four families are `d`-uniform with a fixed overlap `alpha` between
//! adjacent edges (`d = 2`, `alpha = 1` for the plain-graph families):
//!
//! * **hyperline** — `n` edges in a row, consecutive edges sharing `alpha`
//!   vertices: `n*d - (n-1)*alpha` vertices.
//! * **hypercycle** — `n >= 3` edges in a ring, cyclically consecutive edges
//!   sharing `alpha` vertices: `n*(d - alpha)` vertices.
//! * **hyperstar** — `n` edges through a common core of `alpha` vertices,
//!   otherwise disjoint: `n*(d - alpha) + alpha` vertices.
//! * **wheel** — the graph on `n + 1` vertices made of an `n`-cycle plus a
//!   hub adjacent to every rim vertex.
//!
//! The line and cycle layouts require `2*alpha <= d`: with a larger overlap
//! the edges two apart would be forced to intersect, which is a different
//! (unsupported) shape.  Vertices are numbered `0..vertex_count` and each
//! edge is kept as a sorted vertex list.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// The supported families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Hyperline,
    Hypercycle,
    Hyperstar,
    LineGraph,
    CycleGraph,
    Wheel,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Hyperline => "hyperline",
            Family::Hypercycle => "hypercycle",
            Family::Hyperstar => "hyperstar",
            Family::LineGraph => "line-graph",
            Family::CycleGraph => "cycle-graph",
            Family::Wheel => "wheel",
        };
        f.write_str(name)
    }
}

/// A validated parameter choice for one family instance.
///
/// `n` counts edges for the hyper-families and the line/cycle graphs, and
/// rim vertices for the wheel.  The plain-graph families pin `d = 2`,
/// `alpha = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
}

impl FamilySpec {
    /// Checks the parameter ranges for `family` and returns the instance.
    ///
    /// Errors: `n = 0`; `n < 3` for the cycle-shaped families; `alpha = 0`
    /// or `alpha >= d`; `2*alpha > d` for line/cycle layouts; `d != 2` or
    /// `alpha != 1` for the plain-graph families.
    pub fn new(family: Family, n: usize, d: usize, alpha: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("family size n must be positive".into()));
        }
        if alpha == 0 || alpha >= d {
            return Err(Error::UnsupportedParameter(format!(
                "overlap must satisfy 1 <= alpha < d, got alpha={alpha}, d={d}"
            )));
        }
        match family {
            Family::Hyperline | Family::Hypercycle => {
                if 2 * alpha > d {
                    return Err(Error::UnsupportedParameter(format!(
                        "line/cycle layouts need 2*alpha <= d, got alpha={alpha}, d={d}"
                    )));
                }
            }
            Family::Hyperstar => {}
            Family::LineGraph | Family::CycleGraph | Family::Wheel => {
                if d != 2 || alpha != 1 {
                    return Err(Error::UnsupportedParameter(format!(
                        "{family} is a plain graph family; it requires d=2, alpha=1"
                    )));
                }
            }
        }
        if matches!(family, Family::Hypercycle | Family::CycleGraph | Family::Wheel) && n < 3 {
            return Err(Error::OutOfRange(format!(
                "{family} needs n >= 3, got n={n}"
            )));
        }
        Ok(FamilySpec { family, n, d, alpha })
    }

    pub fn hyperline(n: usize, d: usize, alpha: usize) -> Result<Self> {
        FamilySpec::new(Family::Hyperline, n, d, alpha)
    }

    pub fn hypercycle(n: usize, d: usize, alpha: usize) -> Result<Self> {
        FamilySpec::new(Family::Hypercycle, n, d, alpha)
    }

    pub fn hyperstar(n: usize, d: usize, alpha: usize) -> Result<Self> {
        FamilySpec::new(Family::Hyperstar, n, d, alpha)
    }

    pub fn line_graph(n: usize) -> Result<Self> {
        FamilySpec::new(Family::LineGraph, n, 2, 1)
    }

    pub fn cycle_graph(n: usize) -> Result<Self> {
        FamilySpec::new(Family::CycleGraph, n, 2, 1)
    }

    pub fn wheel(n: usize) -> Result<Self> {
        FamilySpec::new(Family::Wheel, n, 2, 1)
    }

    /// Number of vertices the instance will have.
    pub fn vertex_count(&self) -> usize {
        let FamilySpec { n, d, alpha, .. } = *self;
        match self.family {
            Family::Hyperline | Family::LineGraph => n * d - (n - 1) * alpha,
            Family::Hypercycle | Family::CycleGraph => n * (d - alpha),
            Family::Hyperstar => n * (d - alpha) + alpha,
            Family::Wheel => n + 1,
        }
    }

    /// Number of edges the instance will have.
    pub fn edge_count(&self) -> usize {
        match self.family {
            Family::Wheel => 2 * self.n,
            _ => self.n,
        }
    }

    /// Embedding dimension of the edge algebra (same as the vertex count).
    pub fn embedding_dimension(&self) -> usize {
        self.vertex_count()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} (d={}, alpha={})",
            self.family, self.n, self.d, self.alpha
        )
    }
}

/// A hypergraph on vertices `0..vertex_count`, edges as sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Checks ranges, sorts each edge, and rejects empty or duplicated
    /// vertices within an edge.  Duplicate edges are allowed here (the
    /// family validator reports them through the intersection pattern).
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.is_empty() {
                return Err(Error::InvalidInput("empty edge".into()));
            }
            let set: BTreeSet<usize> = edge.iter().copied().collect();
            if set.len() != edge.len() {
                return Err(Error::InvalidInput(format!(
                    "edge {edge:?} repeats a vertex"
                )));
            }
            if let Some(&v) = set.last() {
                if v >= vertex_count {
                    return Err(Error::InvalidInput(format!(
                        "edge {edge:?} mentions vertex {v} but there are only {vertex_count} vertices"
                    )));
                }
            }
            sorted_edges.push(set.into_iter().collect());
        }
        Ok(Hypergraph {
            vertex_count,
            edges: sorted_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as vertex bitmasks; requires at most 63 vertices.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.vertex_count > 63 {
            return Err(Error::SizeLimit(format!(
                "bitmask representation supports at most 63 vertices, got {}",
                self.vertex_count
            )));
        }
        Ok(self
            .edges
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }

    /// True when every edge has exactly `d` vertices.
    pub fn is_uniform(&self, d: usize) -> bool {
        self.edges.iter().all(|e| e.len() == d)
    }

    /// The monomial generators of the edge ideal: one squarefree monomial
    /// per edge, identified with its sorted vertex set, in edge order.
    pub fn edge_ideal(&self) -> Vec<Vec<usize>> {
        self.edges.clone()
    }
}

// JSON shape: {"vertices": 5, "edges": [[0,1,2],[2,3,4]]}.
#[derive(Serialize, Deserialize)]
struct HypergraphDto {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphDto {
            vertices: self.vertex_count,
            edges: self.edges.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = HypergraphDto::deserialize(d)?;
        Hypergraph::new(dto.vertices, dto.edges)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

/// Builds the canonical labeled instance of a family.
///
/// Layouts (all 0-based):
/// * hyperline: edge `i` covers `[i*(d-alpha), i*(d-alpha) + d)`.
/// * hypercycle: the same, wrapping modulo `n*(d-alpha)`.
/// * hyperstar: the core is `[0, alpha)`; edge `i` adds the block
///   `[alpha + i*(d-alpha), alpha + (i+1)*(d-alpha))`.
/// * wheel: hub `0`; rim `1..=n`; rim edges first, then spokes.
pub fn build_family(spec: &FamilySpec) -> Result<Hypergraph> {
    let FamilySpec { n, d, alpha, .. } = *spec;
    let vertex_count = spec.vertex_count();
    let edges: Vec<Vec<usize>> = match spec.family {
        Family::Hyperline | Family::LineGraph => (0..n)
            .map(|i| (i * (d - alpha)..i * (d - alpha) + d).collect())
            .collect(),
        Family::Hypercycle | Family::CycleGraph => (0..n)
            .map(|i| {
                (0..d)
                    .map(|k| (i * (d - alpha) + k) % vertex_count)
                    .collect()
            })
            .collect(),
        Family::Hyperstar => (0..n)
            .map(|i| {
                let mut e: Vec<usize> = (0..alpha).collect();
                e.extend(alpha + i * (d - alpha)..alpha + (i + 1) * (d - alpha));
                e
            })
            .collect(),
        Family::Wheel => {
            let rim = (0..n).map(|i| vec![1 + i, 1 + (i + 1) % n]);
            let spokes = (0..n).map(|i| vec![0, 1 + i]);
            rim.chain(spokes).collect()
        }
    };
    Hypergraph::new(vertex_count, edges)
}

/// Outcome of checking a hypergraph against a family's required shape.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub spec: FamilySpec,
    /// Every edge has exactly `d` vertices.
    pub uniform: bool,
    /// Vertex count matches the family formula.
    pub vertex_count_ok: bool,
    /// Actual overlap sizes `|e_i /\ e_j|` for `i < j` that differ from the
    /// required pattern, as `(i, j, actual, required)`.
    pub intersection_mismatches: Vec<(usize, usize, usize, usize)>,
    /// Expected number of edges was found.
    pub edge_count_ok: bool,
    /// Every vertex lies on at least one edge.
    pub covered: bool,
    /// For each edge, whether it owns a vertex on no other edge.
    /// Informational: interior edges of `2*alpha = d` lines/cycles and the
    /// graph families legitimately have none.
    pub free_vertex: Vec<bool>,
    pub pass: bool,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "validation of {}:", self.spec)?;
        writeln!(f, "  uniform (d={}): {}", self.spec.d, self.uniform)?;
        writeln!(f, "  vertex count: {}", self.vertex_count_ok)?;
        writeln!(f, "  edge count: {}", self.edge_count_ok)?;
        writeln!(f, "  all vertices covered: {}", self.covered)?;
        if self.intersection_mismatches.is_empty() {
            writeln!(f, "  pairwise overlaps match the family pattern")?;
        } else {
            for (i, j, actual, required) in &self.intersection_mismatches {
                writeln!(
                    f,
                    "  overlap mismatch: |e_{i} * e_{j}| = {actual}, required {required}"
                )?;
            }
        }
        writeln!(
            f,
            "  edges owning a free vertex: {:?}",
            self.free_vertex
        )?;
        write!(f, "  pass: {}", self.pass)
    }
}

/// Required overlap size `|e_i /\ e_j|` (for `i < j`) in the canonical edge
/// order of [`build_family`].
fn required_overlap(spec: &FamilySpec, i: usize, j: usize) -> usize {
    let FamilySpec { n, alpha, .. } = *spec;
    match spec.family {
        Family::Hyperline | Family::LineGraph => {
            if j - i == 1 {
                alpha
            } else {
                0
            }
        }
        Family::Hypercycle | Family::CycleGraph => {
            if j - i == 1 || (i == 0 && j == n - 1) {
                alpha
            } else {
                0
            }
        }
        Family::Hyperstar => alpha,
        Family::Wheel => {
            // Rim edges occupy indices 0..n, spokes n..2n; rim edge i is
            // {1+i, 1+(i+1 mod n)}, spoke i is {0, 1+i}.
            let rim = |k: usize| k < n;
            match (rim(i), rim(j)) {
                (true, true) => {
                    if j - i == 1 || (i == 0 && j == n - 1) {
                        1
                    } else {
                        0
                    }
                }
                (false, false) => 1, // spokes share the hub
                (true, false) => {
                    let s = j - n;
                    if s == i || s == (i + 1) % n {
                        1
                    } else {
                        0
                    }
                }
                (false, true) => unreachable!("i < j and rim edges precede spokes"),
            }
        }
    }
}

/// Compares a hypergraph against the canonical shape of `spec`, field by
/// field.  Failures are reported, not raised.
pub fn validate_family(h: &Hypergraph, spec: &FamilySpec) -> ValidationReport {
    let uniform = h.is_uniform(spec.d);
    let vertex_count_ok = h.vertex_count() == spec.vertex_count();
    let edge_count_ok = h.edge_count() == spec.edge_count();

    let sets: Vec<BTreeSet<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().collect())
        .collect();
    let mut intersection_mismatches = Vec::new();
    if edge_count_ok {
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let actual = sets[i].intersection(&sets[j]).count();
                let required = required_overlap(spec, i, j);
                if actual != required {
                    intersection_mismatches.push((i, j, actual, required));
                }
            }
        }
    }

    let mut degree = vec![0usize; h.vertex_count()];
    for e in h.edges() {
        for &v in e {
            degree[v] += 1;
        }
    }
    let covered = degree.iter().all(|&d| d > 0);
    let free_vertex = h
        .edges()
        .iter()
        .map(|e| e.iter().any(|&v| degree[v] == 1))
        .collect();

    let pass = uniform
        && vertex_count_ok
        && edge_count_ok
        && covered
        && intersection_mismatches.is_empty();
    ValidationReport {
        spec: *spec,
        uniform,
        vertex_count_ok,
        intersection_mismatches,
        edge_count_ok,
        covered,
        free_vertex,
        pass,
    }
}
