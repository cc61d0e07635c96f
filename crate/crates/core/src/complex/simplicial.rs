//! Simplicial complexes stored by their facets, with bitmask vertex sets.
//!
//! The central construction is the independence complex of a hypergraph:
//! faces are the vertex subsets containing no edge.  Its Stanley-Reisner
//! ring is exactly the edge algebra, so face counts give the Hilbert
//! series and induced subcomplexes drive the Betti-number oracle.

use crate::exactalg::{Polynomial, RationalFunction};
use crate::hypergraph::Hypergraph;
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::HashSet;

/// Enumeration guard: facet and face enumeration is exponential in the
/// vertex count, so complexes are capped well below the bitmask limit.
const MAX_VERTICES: usize = 24;

/// A simplicial complex on vertices `0..vertex_count`, represented by its
/// facets (maximal faces) as bitmasks.
///
/// Two degenerate shapes are distinguished: the *void* complex with no
/// faces at all (no facets), and the `{empty set}` complex whose single
/// facet is the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from candidate facets given as vertex lists.
    /// Sets that are contained in another candidate are dropped, so the
    /// facet invariant holds for any input.
    pub fn from_facets(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "complexes support at most {MAX_VERTICES} vertices, got {vertex_count}"
            )));
        }
        let mut masks = Vec::with_capacity(facets.len());
        for f in &facets {
            let mut m = 0u64;
            for &v in f {
                if v >= vertex_count {
                    return Err(Error::InvalidInput(format!(
                        "facet {f:?} mentions vertex {v} but there are only {vertex_count} vertices"
                    )));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(SimplicialComplex::from_facet_masks(vertex_count, masks))
    }

    fn from_facet_masks(vertex_count: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u64> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&other| other != m && other & m == m))
            .copied()
            .collect();
        SimplicialComplex {
            vertex_count,
            facets: maximal,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Facets as sorted vertex lists, in ascending mask order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| mask_to_vec(m)).collect()
    }

    /// True for the complex with no faces at all.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// A vertex contained in every facet, if one exists.  Complexes with
    /// such an apex are cones, hence have no reduced homology.
    pub fn cone_apex(&self) -> Option<usize> {
        if self.facets.is_empty() {
            return None;
        }
        let common = self.facets.iter().fold(!0u64, |acc, &m| acc & m);
        (common != 0).then(|| common.trailing_zeros() as usize)
    }

    /// The cone over this complex: one new apex vertex joined to every
    /// facet (to the empty face when the complex is void).
    pub fn cone(&self) -> Result<SimplicialComplex> {
        if self.vertex_count + 1 > MAX_VERTICES {
            return Err(Error::SizeLimit(format!(
                "coning would exceed the {MAX_VERTICES}-vertex limit"
            )));
        }
        let apex = 1u64 << self.vertex_count;
        let facets = if self.facets.is_empty() {
            vec![apex]
        } else {
            self.facets.iter().map(|&m| m | apex).collect()
        };
        Ok(SimplicialComplex {
            vertex_count: self.vertex_count + 1,
            facets,
        })
    }

    /// All faces grouped by cardinality: entry `c` lists the masks of the
    /// `c`-vertex faces in ascending order.  The void complex gives an
    /// empty vector; otherwise entry 0 is `[0]`, the empty face.
    pub fn faces_by_card(&self) -> Vec<Vec<u64>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let mut seen: HashSet<u64> = HashSet::new();
        for &facet in &self.facets {
            // Standard submask walk: visits every subset of `facet` once.
            let mut s = facet;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & facet;
            }
        }
        let max_card = self
            .facets
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); max_card + 1];
        for &m in &seen {
            by_card[m.count_ones() as usize].push(m);
        }
        for group in &mut by_card {
            group.sort_unstable();
        }
        by_card
    }

    /// Face counts by cardinality (the f-vector, starting at the empty face).
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_card()
            .iter()
            .map(|g| g.len() as u64)
            .collect()
    }

    /// The reduced Euler characteristic: the alternating sum
    /// `-f_0 + f_1 - f_2 + ...` counting the empty face with sign -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(c, &f)| if c % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }
}

fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

/// The independence complex of a hypergraph: faces are the vertex subsets
/// containing no edge.
pub fn independence_complex(h: &Hypergraph) -> Result<SimplicialComplex> {
    if h.vertex_count() > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "independence complex enumeration supports at most {MAX_VERTICES} vertices, got {}",
            h.vertex_count()
        )));
    }
    let edges = h.edge_masks()?;
    let n = h.vertex_count();
    let mut independent: Vec<u64> = Vec::new();
    // Depth-first over vertices; a set stays independent as long as adding
    // a vertex completes no edge, so only edges through the new vertex
    // need checking.
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((next, current)) = stack.pop() {
        if next == n {
            independent.push(current);
            continue;
        }
        stack.push((next + 1, current));
        let with = current | (1 << next);
        let completes_edge = edges
            .iter()
            .any(|&e| e & (1 << next) != 0 && e & with == e);
        if !completes_edge {
            stack.push((next + 1, with));
        }
    }
    // Maximal independent sets only: m is maximal iff no vertex outside m
    // can be added while staying independent.
    let independent_set: HashSet<u64> = independent.iter().copied().collect();
    let facets: Vec<u64> = independent
        .into_iter()
        .filter(|&m| {
            (0..n).all(|v| m & (1 << v) != 0 || !independent_set.contains(&(m | (1 << v))))
        })
        .collect();
    Ok(SimplicialComplex::from_facet_masks(n, facets))
}

/// The Hilbert series of the Stanley-Reisner ring of a complex, by face
/// counting: `H(t) = sum over faces F of (t/(1-t))^{|F|}`, put over the
/// common denominator `(1-t)^{max face size}` and canonicalized.
pub fn hilbert_from_complex(k: &SimplicialComplex) -> Result<RationalFunction> {
    let f = k.f_vector();
    if f.is_empty() {
        return Ok(RationalFunction::zero());
    }
    let top = f.len() - 1;
    let mut numerator = Polynomial::zero();
    for (c, &count) in f.iter().enumerate() {
        let term = &Polynomial::monomial(BigInt::from(count), c)
            * &Polynomial::one_minus_t().pow((top - c) as u32);
        numerator = &numerator + &term;
    }
    RationalFunction::new(numerator, Polynomial::one_minus_t().pow(top as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{build_family, FamilySpec};

    fn complex_of(spec: FamilySpec) -> SimplicialComplex {
        independence_complex(&build_family(&spec).unwrap()).unwrap()
    }

    #[test]
    fn dominated_facets_are_dropped() {
        let k =
            SimplicialComplex::from_facets(3, vec![vec![0], vec![0, 1], vec![2], vec![0, 1]])
                .unwrap();
        assert_eq!(k.facets(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn four_cycle_independence_is_two_diagonals() {
        let k = complex_of(FamilySpec::cycle_graph(4).unwrap());
        assert_eq!(k.facets(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(k.f_vector(), vec![1, 4, 2]);
    }

    #[test]
    fn wheel_complex_is_cycle_complex_plus_hub() {
        for n in 3..=7 {
            let cycle = complex_of(FamilySpec::cycle_graph(n).unwrap());
            let wheel = complex_of(FamilySpec::wheel(n).unwrap());
            // Wheel vertices: hub 0, rim 1..=n; the rim part of the wheel
            // complex is the cycle complex shifted up by one, and the hub
            // stands alone because it meets every spoke.
            let mut expected: Vec<Vec<usize>> = vec![vec![0]];
            expected.extend(
                cycle
                    .facets()
                    .into_iter()
                    .map(|f| f.into_iter().map(|v| v + 1).collect::<Vec<_>>()),
            );
            expected.sort();
            let mut actual = wheel.facets();
            actual.sort();
            assert_eq!(actual, expected, "wheel n={n}");
        }
    }

    #[test]
    fn single_edge_gives_two_points() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let k = independence_complex(&h).unwrap();
        assert_eq!(k.facets(), vec![vec![0], vec![1]]);
        assert_eq!(k.reduced_euler_characteristic(), 1); // -1 + 2
    }

    #[test]
    fn empty_set_complex_and_void_complex_are_distinct() {
        let empty_only = SimplicialComplex::from_facets(0, vec![vec![]]).unwrap();
        assert!(!empty_only.is_void());
        assert_eq!(empty_only.f_vector(), vec![1]);
        assert_eq!(empty_only.reduced_euler_characteristic(), -1);

        let void = SimplicialComplex::from_facets(0, vec![]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.f_vector(), Vec::<u64>::new());
        assert_eq!(void.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn cone_detection_and_construction() {
        let hollow = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap();
        assert_eq!(hollow.cone_apex(), None);
        let cone = hollow.cone().unwrap();
        assert_eq!(cone.cone_apex(), Some(3));
        assert_eq!(cone.f_vector(), vec![1, 4, 6, 3]);
        // Coning shifts the reduced Euler characteristic to 0.
        assert_eq!(cone.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn one_vertex_simplex_hilbert_is_single_variable_ring() {
        let k = SimplicialComplex::from_facets(1, vec![vec![0]]).unwrap();
        let h = hilbert_from_complex(&k).unwrap();
        assert_eq!(
            h,
            RationalFunction::new(Polynomial::one(), Polynomial::one_minus_t()).unwrap()
        );
    }

    #[test]
    fn four_cycle_hilbert_series_from_faces() {
        let k = complex_of(FamilySpec::cycle_graph(4).unwrap());
        let h = hilbert_from_complex(&k).unwrap();
        // 1 + 4t/(1-t) + 2t^2/(1-t)^2 = (1 + 2t - t^2)/(1-t)^2.
        let expected = RationalFunction::new(
            Polynomial::from_coeffs(vec![1.into(), 2.into(), (-1).into()]),
            Polynomial::one_minus_t().pow(2),
        )
        .unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn five_cycle_hilbert_denominator_exponent_is_two() {
        // Face counts of the pentagon's independence complex: 5 vertices,
        // 5 independent pairs, nothing larger.
        let k = complex_of(FamilySpec::cycle_graph(5).unwrap());
        assert_eq!(k.f_vector(), vec![1, 5, 5]);
        let h = hilbert_from_complex(&k).unwrap();
        let expected = RationalFunction::new(
            Polynomial::from_coeffs(vec![1.into(), 3.into(), 1.into()]),
            Polynomial::one_minus_t().pow(2),
        )
        .unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn void_complex_has_zero_hilbert_series() {
        let void = SimplicialComplex::from_facets(0, vec![]).unwrap();
        assert!(hilbert_from_complex(&void).unwrap().is_zero());
    }

    #[test]
    fn vertex_cap_is_enforced() {
        assert!(matches!(
            SimplicialComplex::from_facets(25, vec![]),
            Err(Error::SizeLimit(_))
        ));
    }
}
