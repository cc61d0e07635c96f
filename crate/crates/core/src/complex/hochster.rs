//! Graded Betti numbers of edge algebras from reduced homology of induced
//! subcomplexes: `beta_{i,j} = sum over j-vertex subsets S of
//! dim H~_{j-i-1} of the independence complex restricted to S`.

use super::homology::{homology_dims_from_faces, FieldChar};
use super::BettiTable;
use crate::hypergraph::Hypergraph;
use crate::{Error, Result};

/// The subset loop is exponential in the vertex count; past 20 vertices
/// the enumeration stops being a practical oracle.
const MAX_VERTICES: usize = 20;

/// Computes the full graded Betti table of the edge algebra of `h` over a
/// field of the given characteristic, by homology of induced subcomplexes.
///
/// Only subsets that are exactly a union of edges can contribute: any
/// vertex not covered by an edge inside the subset is an apex of the
/// restricted complex, which is then a cone and has no reduced homology.
/// The empty subset contributes the mandatory `(0, 0) = 1` cell.
pub fn hochster_betti(h: &Hypergraph, field: &FieldChar) -> Result<BettiTable> {
    let n = h.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "Betti enumeration supports at most {MAX_VERTICES} vertices, got {n}"
        )));
    }
    let edges = h.edge_masks()?;
    let mut table = BettiTable::new();
    for s in 0u64..(1u64 << n) {
        let inside: Vec<u64> = edges.iter().copied().filter(|&e| e & s == e).collect();
        let union = inside.iter().fold(0u64, |acc, &e| acc | e);
        if union != s {
            continue;
        }
        let faces = faces_within(s, &inside);
        let dims = homology_dims_from_faces(&faces, field);
        let j = s.count_ones() as usize;
        for (c, &dim) in dims.iter().enumerate() {
            // dims[c] = dim H~_{c-1}, and j - i - 1 = c - 1 gives i = j - c.
            if dim > 0 {
                table.add(j - c, j, dim as u64);
            }
        }
    }
    Ok(table)
}

/// Faces of the independence complex restricted to the vertex set `s`,
/// grouped by cardinality.  `edges` must already be filtered to the edges
/// inside `s`.
fn faces_within(s: u64, edges: &[u64]) -> Vec<Vec<u64>> {
    let vertex_bits: Vec<u64> = {
        let mut bits = Vec::with_capacity(s.count_ones() as usize);
        let mut rest = s;
        while rest != 0 {
            bits.push(rest & rest.wrapping_neg());
            rest &= rest - 1;
        }
        bits
    };
    let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); vertex_bits.len() + 1];
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((next, current)) = stack.pop() {
        if next == vertex_bits.len() {
            by_card[current.count_ones() as usize].push(current);
            continue;
        }
        stack.push((next + 1, current));
        let with = current | vertex_bits[next];
        let completes_edge = edges
            .iter()
            .any(|&e| e & vertex_bits[next] != 0 && e & with == e);
        if !completes_edge {
            stack.push((next + 1, with));
        }
    }
    while by_card.len() > 1 && by_card.last().is_some_and(|g| g.is_empty()) {
        by_card.pop();
    }
    for group in &mut by_card {
        group.sort_unstable();
    }
    by_card
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{build_family, FamilySpec};

    fn betti_of(spec: FamilySpec) -> BettiTable {
        let h = build_family(&spec).unwrap();
        hochster_betti(&h, &FieldChar::Zero).unwrap()
    }

    fn cells(table: &BettiTable) -> Vec<(usize, usize, u64)> {
        table.entries().collect()
    }

    #[test]
    fn triangle_table() {
        let t = betti_of(FamilySpec::cycle_graph(3).unwrap());
        assert_eq!(cells(&t), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn four_cycle_table() {
        let t = betti_of(FamilySpec::cycle_graph(4).unwrap());
        assert_eq!(
            cells(&t),
            vec![(0, 0, 1), (1, 2, 4), (2, 3, 4), (3, 4, 1)]
        );
    }

    #[test]
    fn seven_cycle_table() {
        // Frozen from an independent hand enumeration of the subset types:
        // 3 consecutive vertices give the only H~_0 contributions (7 of
        // them per strand position), squares of two separated edges carry
        // H~_1, and the full vertex set carries the top class.
        let t = betti_of(FamilySpec::cycle_graph(7).unwrap());
        assert_eq!(
            cells(&t),
            vec![
                (0, 0, 1),
                (1, 2, 7),
                (2, 3, 7),
                (2, 4, 7),
                (3, 5, 14),
                (4, 6, 7),
                (5, 7, 1)
            ]
        );
    }

    #[test]
    fn star_graph_total_betti_numbers_are_binomial() {
        let t = betti_of(FamilySpec::hyperstar(3, 2, 1).unwrap());
        assert_eq!(
            cells(&t),
            vec![(0, 0, 1), (1, 2, 3), (2, 3, 3), (3, 4, 1)]
        );
    }

    #[test]
    fn single_edge_is_a_hypersurface() {
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let t = hochster_betti(&h, &FieldChar::Zero).unwrap();
        assert_eq!(cells(&t), vec![(0, 0, 1), (1, 2, 1)]);
    }

    #[test]
    fn hyperline_two_overlapping_triples() {
        // Edges {0,1,2}, {2,3,4}: two generators, one shared vertex.
        let t = betti_of(FamilySpec::hyperline(2, 3, 1).unwrap());
        assert_eq!(cells(&t), vec![(0, 0, 1), (1, 3, 2), (2, 5, 1)]);
    }

    #[test]
    fn characteristic_two_agrees_on_small_families() {
        for spec in [
            FamilySpec::cycle_graph(5).unwrap(),
            FamilySpec::hyperstar(3, 2, 1).unwrap(),
            FamilySpec::hyperline(2, 3, 1).unwrap(),
            FamilySpec::wheel(4).unwrap(),
        ] {
            let h = build_family(&spec).unwrap();
            let char0 = hochster_betti(&h, &FieldChar::Zero).unwrap();
            let char2 = hochster_betti(&h, &FieldChar::Prime(2)).unwrap();
            assert_eq!(char0, char2, "{spec}");
        }
    }

    #[test]
    fn vertex_cap_is_a_hard_error() {
        // 5 edges of size 5 overlapping in 1 vertex: 21 vertices.
        let spec = FamilySpec::hyperline(5, 5, 1).unwrap();
        let h = build_family(&spec).unwrap();
        assert!(matches!(
            hochster_betti(&h, &FieldChar::Zero),
            Err(Error::SizeLimit(_))
        ));
    }
}
