//! Reduced simplicial homology dimensions via exact ranks of boundary
//! matrices.
//!
//! Ranks are computed sparsely with unit pivots (boundary matrices start
//! with entries +-1, and unit-pivot elimination keeps everything integral),
//! falling back to dense exact rational elimination for whatever small
//! block survives without a unit — which is precisely where integral
//! torsion would live.  Entries are machine integers with checked
//! arithmetic; on overflow the whole computation restarts with big
//! integers, so results are exact unconditionally.

use crate::complex::SimplicialComplex;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

/// The coefficient field for homology: the rationals (`Zero`) or a prime
/// field (`Prime(p)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChar {
    Zero,
    Prime(u64),
}

impl FieldChar {
    /// Validates the characteristic: 0, or a prime below `2^31`.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(FieldChar::Zero);
        }
        if characteristic > i32::MAX as u64 {
            return Err(Error::OutOfRange(format!(
                "prime characteristics above {} are not supported",
                i32::MAX
            )));
        }
        if !is_prime(characteristic) {
            return Err(Error::InvalidInput(format!(
                "field characteristic must be 0 or a prime, got {characteristic}"
            )));
        }
        Ok(FieldChar::Prime(characteristic))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Reduced homology dimensions over the rationals, indexed from degree -1:
/// entry `c` is `dim H~_{c-1}`.  The `{empty set}` complex reports
/// `H~_{-1} = 1`; the void complex reports an empty list.
pub fn reduced_homology_dims(k: &SimplicialComplex) -> Vec<usize> {
    reduced_homology_dims_over(k, &FieldChar::Zero)
}

/// [`reduced_homology_dims`] over an arbitrary coefficient field.
pub fn reduced_homology_dims_over(k: &SimplicialComplex, field: &FieldChar) -> Vec<usize> {
    homology_dims_from_faces(&k.faces_by_card(), field)
}

/// Core computation shared with the Betti-number enumeration: takes faces
/// grouped by cardinality (entry `c` = masks of `c`-vertex faces, entry 0
/// containing the empty face for any nonvoid complex).
pub(crate) fn homology_dims_from_faces(faces: &[Vec<u64>], field: &FieldChar) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.len() - 1;
    // ranks[c] = rank of the boundary map from c-vertex faces to
    // (c-1)-vertex faces (the c = 1 map is the augmentation to the empty
    // face, which makes every dimension below reduced homology).
    let mut ranks = vec![0usize; top + 2];
    for c in 1..=top {
        let index: HashMap<u64, usize> = faces[c - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let rows: Vec<Vec<(usize, i64)>> = faces[c]
            .iter()
            .map(|&m| {
                let mut row = Vec::with_capacity(c);
                let mut rest = m;
                let mut sign = 1i64;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    let sub = m & !(1u64 << v);
                    row.push((index[&sub], sign));
                    sign = -sign;
                    rest &= rest - 1;
                }
                row.sort_unstable_by_key(|&(col, _)| col);
                row
            })
            .collect();
        ranks[c] = matrix_rank(rows, faces[c - 1].len(), field);
    }
    (0..=top)
        .map(|c| {
            let cycles = faces[c].len() - ranks[c];
            debug_assert!(ranks[c + 1] <= cycles, "boundary ranks exceed cycle space");
            cycles - ranks[c + 1]
        })
        .collect()
}

/// Exact rank of a sparse integer matrix over the chosen field.  Rows are
/// `(column, entry)` lists sorted by column.
pub(crate) fn matrix_rank(rows: Vec<Vec<(usize, i64)>>, ncols: usize, field: &FieldChar) -> usize {
    match field {
        FieldChar::Prime(p) => {
            let p = *p;
            let converted: Vec<Vec<(usize, Fp)>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .filter_map(|&(c, v)| {
                            let r = v.rem_euclid(p as i64) as u64;
                            (r != 0).then_some((c, Fp { v: r, p }))
                        })
                        .collect()
                })
                .collect();
            let (rank, remainder) =
                unit_pivot_rank(converted, ncols).expect("modular arithmetic never overflows");
            debug_assert!(
                remainder.is_empty(),
                "every nonzero entry of a field is a unit"
            );
            rank
        }
        FieldChar::Zero => match unit_pivot_rank(rows.clone(), ncols) {
            Some((rank, remainder)) => {
                let remainder: Vec<Vec<(usize, BigInt)>> = remainder
                    .into_iter()
                    .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                    .collect();
                rank + dense_rational_rank(remainder)
            }
            None => {
                // Machine integers overflowed: redo everything with big
                // integers, which cannot fail.
                let big: Vec<Vec<(usize, BigInt)>> = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                    .collect();
                let (rank, remainder) =
                    unit_pivot_rank(big, ncols).expect("big integers never overflow");
                rank + dense_rational_rank(remainder)
            }
        },
    }
}

/// Matrix entries the sparse eliminator can work with.  Arithmetic returns
/// `None` on overflow so the caller can escalate to a wider type.
trait Coeff: Clone {
    fn is_zero_elt(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Multiplicative inverse; only called when `is_unit()`.
    fn unit_recip(&self) -> Self;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Coeff for i64 {
    fn is_zero_elt(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn unit_recip(&self) -> Self {
        *self // +-1 are their own inverses
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Coeff for BigInt {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn unit_recip(&self) -> Self {
        self.clone()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// An element of the prime field F_p, kept reduced.
#[derive(Clone, Copy)]
struct Fp {
    v: u64,
    p: u64,
}

impl Coeff for Fp {
    fn is_zero_elt(&self) -> bool {
        self.v == 0
    }
    fn is_unit(&self) -> bool {
        self.v != 0
    }
    fn unit_recip(&self) -> Self {
        Fp {
            v: mod_pow(self.v, self.p - 2, self.p),
            p: self.p,
        }
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(Fp {
            v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64,
            p: self.p,
        })
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(Fp {
            v: (self.v + self.p - other.v) % self.p,
            p: self.p,
        })
    }
    fn neg(&self) -> Option<Self> {
        Some(Fp {
            v: (self.p - self.v) % self.p,
            p: self.p,
        })
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// `a - f*b` on sparse rows sorted by column.  Also reports which columns
/// appeared and disappeared, for incremental column bookkeeping.
#[allow(clippy::type_complexity)]
fn row_sub_mul<C: Coeff>(
    a: &[(usize, C)],
    f: &C,
    b: &[(usize, C)],
) -> Option<(Vec<(usize, C)>, Vec<usize>, Vec<usize>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut added = Vec::new();
    let mut removed = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let val = f.mul(&b[j].1)?.neg()?;
            if !val.is_zero_elt() {
                added.push(b[j].0);
                out.push((b[j].0, val));
            }
            j += 1;
        } else {
            let val = a[i].1.sub(&f.mul(&b[j].1)?)?;
            if val.is_zero_elt() {
                removed.push(a[i].0);
            } else {
                out.push((a[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    Some((out, added, removed))
}

/// Sparse elimination restricted to unit pivots.
///
/// Pivot rows are taken shortest-first from a heap (entries go stale when
/// a row changes and are skipped by version check); within a row the unit
/// entry in the sparsest live column wins.  Rows without a unit entry are
/// left alone until an elimination touches them; whatever remains at the
/// end is returned for the caller's fallback.  Returns `None` if `C`'s
/// arithmetic overflowed.
#[allow(clippy::type_complexity)]
fn unit_pivot_rank<C: Coeff>(
    input: Vec<Vec<(usize, C)>>,
    ncols: usize,
) -> Option<(usize, Vec<Vec<(usize, C)>>)> {
    let mut rows: Vec<Option<Vec<(usize, C)>>> = Vec::with_capacity(input.len());
    let mut version = vec![0u32; input.len()];
    let mut col_count = vec![0u32; ncols];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    let mut heap = BinaryHeap::new();
    for (id, row) in input.into_iter().enumerate() {
        if row.is_empty() {
            rows.push(None);
            continue;
        }
        for &(c, _) in &row {
            col_count[c] += 1;
            col_rows[c].push(id);
        }
        heap.push(Reverse((row.len(), id, 0u32)));
        rows.push(Some(row));
    }

    let mut rank = 0usize;
    while let Some(Reverse((_, rid, ver))) = heap.pop() {
        if version[rid] != ver || rows[rid].is_none() {
            continue;
        }
        let pivot_col = {
            let row = rows[rid].as_ref().expect("liveness checked above");
            row.iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|&&(c, _)| col_count[c])
                .map(|&(c, _)| c)
        };
        let Some(pcol) = pivot_col else {
            continue; // parked: re-enters the heap if an elimination changes it
        };
        let pivot_row = rows[rid].clone().expect("liveness checked above");
        let recip = pivot_row
            .iter()
            .find(|&&(c, _)| c == pcol)
            .expect("pivot column comes from this row")
            .1
            .unit_recip();

        for rid2 in std::mem::take(&mut col_rows[pcol]) {
            if rid2 == rid {
                continue;
            }
            let Some(row2) = rows[rid2].as_ref() else {
                continue;
            };
            let Ok(pos) = row2.binary_search_by_key(&pcol, |&(c, _)| c) else {
                continue; // stale candidate: the entry was already cancelled
            };
            let factor = row2[pos].1.mul(&recip)?;
            let (new_row, added, removed) = row_sub_mul(row2, &factor, &pivot_row)?;
            debug_assert!(removed.contains(&pcol));
            for &c in &removed {
                col_count[c] -= 1;
            }
            for &c in &added {
                col_count[c] += 1;
                col_rows[c].push(rid2);
            }
            version[rid2] += 1;
            if new_row.is_empty() {
                rows[rid2] = None;
            } else {
                heap.push(Reverse((new_row.len(), rid2, version[rid2])));
                rows[rid2] = Some(new_row);
            }
        }

        for &(c, _) in &pivot_row {
            col_count[c] -= 1;
        }
        rows[rid] = None;
        rank += 1;
    }

    let remainder: Vec<Vec<(usize, C)>> = rows.into_iter().flatten().collect();
    Some((rank, remainder))
}

/// Dense exact rank over the rationals, for the (tiny) unit-free remainder.
fn dense_rational_rank(rows: Vec<Vec<(usize, BigInt)>>) -> usize {
    let rows: Vec<Vec<(usize, BigInt)>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    if rows.is_empty() {
        return 0;
    }
    let mut cols: Vec<usize> = rows.iter().flat_map(|r| r.iter().map(|&(c, _)| c)).collect();
    cols.sort_unstable();
    cols.dedup();
    let col_index: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut mat: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![BigRational::zero(); cols.len()];
            for (c, v) in r {
                dense[col_index[c]] = BigRational::from_integer(v.clone());
            }
            dense
        })
        .collect();

    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let pivot_row = mat[rank].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                *entry -= &factor * p;
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex;
    use crate::hypergraph::{build_family, FamilySpec};

    fn rank0(rows: Vec<Vec<(usize, i64)>>, ncols: usize) -> usize {
        matrix_rank(rows, ncols, &FieldChar::Zero)
    }

    #[test]
    fn field_char_validation() {
        assert_eq!(FieldChar::new(0).unwrap(), FieldChar::Zero);
        assert_eq!(FieldChar::new(2).unwrap(), FieldChar::Prime(2));
        assert_eq!(FieldChar::new(101).unwrap(), FieldChar::Prime(101));
        assert!(FieldChar::new(1).is_err());
        assert!(FieldChar::new(91).is_err()); // 7 * 13
        assert!(FieldChar::new(1 << 40).is_err());
    }

    #[test]
    fn small_matrix_ranks() {
        assert_eq!(rank0(vec![], 5), 0);
        let identity = vec![vec![(0, 1)], vec![(1, 1)], vec![(2, 1)]];
        assert_eq!(rank0(identity, 3), 3);
        let dependent = vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]];
        assert_eq!(rank0(dependent, 2), 1);
    }

    #[test]
    fn unit_free_matrix_uses_the_dense_fallback() {
        // No +-1 anywhere: rank must come from the rational elimination.
        let rows = vec![vec![(0, 2), (1, 4)], vec![(0, 6), (1, 8)]];
        assert_eq!(rank0(rows.clone(), 2), 2);
        // Over F_2 the same matrix vanishes entirely.
        assert_eq!(matrix_rank(rows, 2, &FieldChar::Prime(2)), 0);
    }

    #[test]
    fn overflow_escalates_to_big_integers() {
        let huge = 3_000_000_000_000_000_000i64; // 3e18; 3 * huge overflows i64
        let rows = vec![
            vec![(0, 1), (1, huge)],
            vec![(0, 3), (1, huge)],
            vec![(2, 1)],
        ];
        assert_eq!(rank0(rows, 3), 3);
    }

    #[test]
    fn two_points_have_one_extra_component() {
        let k = SimplicialComplex::from_facets(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology_dims(&k), vec![0, 1]);
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let k =
            SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(reduced_homology_dims(&k), vec![0, 0, 1]);
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let k = SimplicialComplex::from_facets(4, facets).unwrap();
        assert_eq!(reduced_homology_dims(&k), vec![0, 0, 0, 1]);
    }

    #[test]
    fn empty_set_complex_has_minus_one_homology() {
        let k = SimplicialComplex::from_facets(0, vec![vec![]]).unwrap();
        assert_eq!(reduced_homology_dims(&k), vec![1]);
        let void = SimplicialComplex::from_facets(0, vec![]).unwrap();
        assert_eq!(reduced_homology_dims(&void), Vec::<usize>::new());
    }

    #[test]
    fn cones_are_acyclic() {
        let hollow =
            SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let cone = hollow.cone().unwrap();
        assert!(reduced_homology_dims(&cone).iter().all(|&d| d == 0));
        let two_points = SimplicialComplex::from_facets(2, vec![vec![0], vec![1]]).unwrap();
        let cone = two_points.cone().unwrap();
        assert!(reduced_homology_dims(&cone).iter().all(|&d| d == 0));
    }

    #[test]
    fn cycle_independence_complexes_match_known_homotopy_types() {
        // Pentagon: circle.  Hexagon: wedge of two circles.  Square: two
        // points.
        let dims = |n: usize| {
            let h = build_family(&FamilySpec::cycle_graph(n).unwrap()).unwrap();
            reduced_homology_dims(&independence_complex(&h).unwrap())
        };
        assert_eq!(dims(4), vec![0, 1, 0]);
        assert_eq!(dims(5), vec![0, 0, 1]);
        assert_eq!(dims(6), vec![0, 0, 2, 0]);
        assert_eq!(dims(7), vec![0, 0, 1, 0]);
    }

    #[test]
    fn projective_plane_separates_characteristics() {
        // The 6-vertex triangulation of the real projective plane: no
        // rational homology, but one dimension each in degrees 1 and 2
        // over F_2.  This also drives the dense fallback: the top boundary
        // matrix runs out of unit pivots exactly at the torsion block.
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 4],
            vec![0, 3, 5],
            vec![0, 4, 5],
            vec![1, 2, 5],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
        ];
        let k = SimplicialComplex::from_facets(6, facets).unwrap();
        assert_eq!(reduced_homology_dims(&k), vec![0, 0, 0, 0]);
        assert_eq!(
            reduced_homology_dims_over(&k, &FieldChar::Prime(2)),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_homology_dims_over(&k, &FieldChar::Prime(3)),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        for facets in [
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            vec![vec![0, 1, 2], vec![2, 3], vec![4]],
            vec![vec![0, 2], vec![1, 3]],
        ] {
            let k = SimplicialComplex::from_facets(5, facets).unwrap();
            let dims = reduced_homology_dims(&k);
            let alternating: i64 = dims
                .iter()
                .enumerate()
                .map(|(c, &d)| if c % 2 == 0 { -(d as i64) } else { d as i64 })
                .sum();
            assert_eq!(alternating, k.reduced_euler_characteristic());
        }
    }
}
