//! Brute-force Hilbert coefficients by direct monomial counting.
//!
//! This is the crate's most primitive oracle: it never touches rational
//! functions, recursions, resolutions, or homology.  A monomial survives in
//! the quotient iff its support contains no edge, so the coefficient of
//! `t^k` is a sum over independent vertex sets weighted by compositions.

use crate::hypergraph::Hypergraph;
use crate::{Error, Result};
use num_bigint::BigInt;

/// Hard cap on vertices: independent sets are enumerated explicitly.
const MAX_VERTICES: usize = 24;
/// Hard cap on the expansion order.
const MAX_ORDER: usize = 30;

/// Coefficients `0..=order` of the Hilbert series of the edge-ideal quotient
/// of `h`, by counting monomials directly.
///
/// Coefficient `k` is the number of degree-`k` monomials whose support is an
/// independent set of `h` (a squarefree generator divides a monomial iff the
/// monomial's support contains every one of its vertices).  The count is
/// assembled from the number `c_s` of independent sets of each size `s`:
/// there are `C(k-1, s-1)` monomials of degree `k` with a prescribed support
/// of size `s`, so coefficient `k > 0` equals `sum_s c_s * C(k-1, s-1)`.
pub fn hilbert_bruteforce(h: &Hypergraph, order: usize) -> Result<Vec<BigInt>> {
    if h.vertex_count() > MAX_VERTICES {
        return Err(Error::SizeLimit(format!(
            "brute-force counting supports at most {MAX_VERTICES} vertices, got {}",
            h.vertex_count()
        )));
    }
    if order > MAX_ORDER {
        return Err(Error::SizeLimit(format!(
            "brute-force counting supports expansion order at most {MAX_ORDER}, got {order}"
        )));
    }
    let n = h.vertex_count();
    let edge_masks = h.edge_masks()?;

    // Any edge that is a singleton {v} kills the variable outright, and an
    // empty edge would kill the whole ring; both are handled by the same
    // subset test below, so no special-casing is needed.
    let mut sizes = vec![BigInt::from(0); n + 1];
    count_independent_sets(0, 0u64, 0, n, &edge_masks, &mut sizes);

    // Stars and bars: C(k-1, s-1) monomials of degree k on s fixed variables.
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k == 0 {
            // The empty support: 1 if the empty set is independent (no empty
            // edge), which `sizes[0]` records.
            coeffs.push(sizes[0].clone());
            continue;
        }
        let mut total = BigInt::from(0);
        for (s, count) in sizes.iter().enumerate().take(n.min(k) + 1).skip(1) {
            if *count != BigInt::from(0) {
                total +=
                    count * num_integer::binomial(BigInt::from(k - 1), BigInt::from(s - 1));
            }
        }
        coeffs.push(total);
    }
    Ok(coeffs)
}

/// Depth-first enumeration of independent sets, bumping `sizes[|S|]` for
/// each one.  A set stays independent when adding `v` iff no edge becomes a
/// subset of the new mask, which only needs checking for edges through `v`.
fn count_independent_sets(
    v: usize,
    mask: u64,
    size: usize,
    n: usize,
    edge_masks: &[u64],
    sizes: &mut [BigInt],
) {
    if v == n {
        sizes[size] += 1;
        return;
    }
    // Exclude v.
    count_independent_sets(v + 1, mask, size, n, edge_masks, sizes);
    // Include v if no edge lands inside the enlarged set.
    let bit = 1u64 << v;
    let enlarged = mask | bit;
    let blocked = edge_masks
        .iter()
        .any(|&e| e & bit != 0 && e & enlarged == e);
    if !blocked {
        count_independent_sets(v + 1, enlarged, size + 1, n, edge_masks, sizes);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{build_family, FamilySpec};

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn one_edge_two_vertices() {
        // k[x,y]/(xy): 1, 2, 2, 2, ... = (1+t)/(1-t).
        let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(hilbert_bruteforce(&h, 3).unwrap(), ints(&[1, 2, 2, 2]));
    }

    #[test]
    fn edgeless_single_vertex() {
        let h = Hypergraph::new(1, vec![]).unwrap();
        assert_eq!(hilbert_bruteforce(&h, 3).unwrap(), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn four_cycle_has_six_quadrics() {
        // C_4: four squares plus the two diagonal products.
        let spec = FamilySpec::cycle_graph(4).unwrap();
        let h = build_family(&spec).unwrap();
        let coeffs = hilbert_bruteforce(&h, 2).unwrap();
        assert_eq!(coeffs, ints(&[1, 4, 6]));
    }

    #[test]
    fn five_cycle_counts_select_the_squared_denominator() {
        // 5 squares + 5 non-edges = 10 quadrics; the series with denominator
        // (1-t)^3 would demand 16.
        let spec = FamilySpec::cycle_graph(5).unwrap();
        let h = build_family(&spec).unwrap();
        let coeffs = hilbert_bruteforce(&h, 4).unwrap();
        assert_eq!(coeffs, ints(&[1, 5, 10, 15, 20]));
    }

    #[test]
    fn matches_closed_line_series() {
        use crate::closedforms::hilbert_line_closed;
        for n in 1..=6i64 {
            let spec = FamilySpec::line_graph(n as usize).unwrap();
            let h = build_family(&spec).unwrap();
            let brute = hilbert_bruteforce(&h, 10).unwrap();
            let closed = hilbert_line_closed(n).unwrap().series.series(10).unwrap();
            assert_eq!(brute, closed, "n = {n}");
        }
    }

    #[test]
    fn matches_face_count_oracle_on_a_hypercycle() {
        use crate::complex::{hilbert_from_complex, independence_complex};
        let spec = FamilySpec::hypercycle(3, 3, 1).unwrap();
        let h = build_family(&spec).unwrap();
        let brute = hilbert_bruteforce(&h, 8).unwrap();
        let complex = independence_complex(&h).unwrap();
        let series = hilbert_from_complex(&complex).unwrap();
        assert_eq!(brute, series.series(8).unwrap());
    }

    #[test]
    fn size_caps_are_hard_errors() {
        let h = Hypergraph::new(25, vec![]).unwrap();
        assert!(matches!(
            hilbert_bruteforce(&h, 5),
            Err(Error::SizeLimit(_))
        ));
        let small = Hypergraph::new(2, vec![]).unwrap();
        assert!(matches!(
            hilbert_bruteforce(&small, 31),
            Err(Error::SizeLimit(_))
        ));
    }
}
