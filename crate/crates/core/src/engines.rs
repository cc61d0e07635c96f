//! Family-agnostic Poincare-series engines.
//!
//! Three classical mechanisms produce every Poincare series in this crate:
//!
//! * the **Koszul reciprocal** `P(t) = 1/H(-t)` for Koszul algebras (all
//!   quadratic squarefree quotients, i.e. the graph families);
//! * the **Golod formula** `(1+t)^e / (1 - sum beta_i t^{i+1})` when the
//!   ring attains the Serre bound;
//! * the **Koszul-homology quotient** `(1+t)^e / D(t)` where `D` collects
//!   the surviving monomial basis of the Koszul homology with sign
//!   `(-1)^r` and exponent `t^{w+r}` for a length-`r` product of total
//!   weight `w`.
//!
//! For the line and cycle families that monomial basis is counted by
//! [`disjoint_path_counts`]: products of classes indexed by runs of
//! consecutive edges, nonzero exactly when the runs are vertex-disjoint —
//! which for interval index sets means separated by at least one unused
//! edge slot.

use crate::exactalg::{Polynomial, RationalFunction};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse census of a bigraded monomial basis: `(r, w) -> count` where `r`
/// is the product length and `w` the total weight.  The unit class sits at
/// `(0, 0)` with count exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedCounts {
    counts: BTreeMap<(usize, usize), u64>,
}

impl BigradedCounts {
    /// A census holding only the unit class.
    pub fn unit() -> Self {
        let mut counts = BTreeMap::new();
        counts.insert((0, 0), 1);
        BigradedCounts { counts }
    }

    /// Validated construction from raw cells; the `(0, 0) = 1` unit cell
    /// must be present and every other cell needs `1 <= r <= w`.
    pub fn from_cells(cells: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (r, w, value) in cells {
            if value == 0 {
                continue;
            }
            if (r, w) != (0, 0) && (r < 1 || w < r) {
                return Err(Error::InvalidInput(format!(
                    "bigraded cell ({r}, {w}) violates 1 <= r <= w"
                )));
            }
            if counts.insert((r, w), value).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate bigraded cell ({r}, {w})"
                )));
            }
        }
        match counts.get(&(0, 0)) {
            Some(1) => Ok(BigradedCounts { counts }),
            _ => Err(Error::InvalidInput(
                "the unit cell (0, 0) must be present with count 1".into(),
            )),
        }
    }

    pub fn get(&self, r: usize, w: usize) -> u64 {
        self.counts.get(&(r, w)).copied().unwrap_or(0)
    }

    /// All cells in `(r, w)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts.iter().map(|(&(r, w), &v)| (r, w, v))
    }

    fn add(&mut self, r: usize, w: usize, value: u64) {
        if value > 0 {
            *self.counts.entry((r, w)).or_insert(0) += value;
        }
    }
}

impl fmt::Display for BigradedCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(r, w), &v) in &self.counts {
            if !first {
                writeln!(f)?;
            }
            write!(f, "count(r={r}, w={w}) = {v}")?;
            first = false;
        }
        Ok(())
    }
}

// JSON shape: {"counts": [{"r": 1, "w": 2, "value": 3}, ...]} sorted by (r, w).
#[derive(Serialize, Deserialize)]
struct CountCellDto {
    r: usize,
    w: usize,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct CountsDto {
    counts: Vec<CountCellDto>,
}

impl Serialize for BigradedCounts {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CountsDto {
            counts: self
                .counts
                .iter()
                .map(|(&(r, w), &value)| CountCellDto { r, w, value })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigradedCounts {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = CountsDto::deserialize(d)?;
        BigradedCounts::from_cells(dto.counts.into_iter().map(|c| (c.r, c.w, c.value)))
            .map_err(serde::de::Error::custom)
    }
}

/// Index geometry for [`disjoint_path_counts`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathShape {
    /// Edge indices `0..n` in a row.
    Line,
    /// Edge indices `0..n` around a circle.
    Cycle,
}

/// Enumeration guard for the `2^n` subset loop.
const MAX_PATH_EDGES: usize = 20;

/// Counts tuples of vertex-disjoint edge runs: cell `(r, w)` is the number
/// of ways to pick `r` runs of consecutive edge indices, pairwise separated
/// by at least one unused index, with `w` edges in total.
///
/// Equivalently: subsets of edge indices, grouped by their number of
/// maximal runs (in the cyclic sense for [`PathShape::Cycle`], where the
/// full index set forms the single run `(1, n)`).
pub fn disjoint_path_counts(shape: PathShape, n: usize) -> Result<BigradedCounts> {
    let minimum = match shape {
        PathShape::Line => 1,
        PathShape::Cycle => 3,
    };
    if n < minimum {
        return Err(Error::OutOfRange(format!(
            "{shape:?} shape needs at least {minimum} edges, got {n}"
        )));
    }
    if n > MAX_PATH_EDGES {
        return Err(Error::SizeLimit(format!(
            "run enumeration supports at most {MAX_PATH_EDGES} edges, got {n}"
        )));
    }
    let mut counts = BigradedCounts::unit();
    for subset in 1u64..(1 << n) {
        let w = subset.count_ones() as usize;
        let runs = match shape {
            PathShape::Line => (0..n)
                .filter(|&i| {
                    subset & (1 << i) != 0 && (i == 0 || subset & (1 << (i - 1)) == 0)
                })
                .count(),
            PathShape::Cycle => {
                let boundaries = (0..n)
                    .filter(|&i| {
                        let prev = (i + n - 1) % n;
                        subset & (1 << i) != 0 && subset & (1 << prev) == 0
                    })
                    .count();
                // The full circle has no boundary; it is one run.
                boundaries.max(1)
            }
        };
        counts.add(runs, w, 1);
    }
    Ok(counts)
}

/// `P(t) = 1/H(-t)` for a Koszul algebra.  The caller vouches for
/// Koszulness; this engine only checks that `H` looks like the Hilbert
/// series of a connected graded algebra (constant term 1).
pub fn koszul_poincare(h_series: &RationalFunction) -> Result<RationalFunction> {
    let num0 = h_series.num().coeff(0);
    let den0 = h_series.den().coeff(0);
    if num0 != den0 || num0 == BigInt::from(0) {
        return Err(Error::InvalidInput(format!(
            "Koszul reciprocal needs a series with constant term 1, got {h_series}"
        )));
    }
    h_series.at_neg_t().recip()
}

/// The Serre-bound Poincare series `(1+t)^embdim / (1 - sum beta_i t^{i+1})`
/// of a Golod ring with total Betti numbers `beta_1, beta_2, ...`
/// (`total_betti[k]` is `beta_{k+1}`).
pub fn golod_poincare(embdim: usize, total_betti: &[u64]) -> Result<RationalFunction> {
    if embdim == 0 {
        return Err(Error::InvalidInput(
            "embedding dimension must be positive".into(),
        ));
    }
    if total_betti.is_empty() {
        return Err(Error::InvalidInput(
            "at least one total Betti number is required".into(),
        ));
    }
    let mut den = vec![BigInt::from(0); total_betti.len() + 2];
    den[0] = BigInt::from(1);
    for (k, &beta) in total_betti.iter().enumerate() {
        den[k + 2] -= BigInt::from(beta);
    }
    RationalFunction::new(
        Polynomial::one_plus_t().pow(embdim as u32),
        Polynomial::from_coeffs(den),
    )
}

/// The Koszul-homology quotient `(1+t)^embdim / D(t)` with
/// `D(t) = sum over cells (r, w) of count * (-1)^r * t^{w+r}`.
///
/// `ensure_top_cycle`: the cycle families carry one extra basis class —
/// the full circle of edges at `(1, n)`.  Callers whose counts came from
/// the run enumerator already have it; callers reconstructing counts from
/// Betti parameters (which stop at `w < n`) pass `Some(n)` to splice it
/// in.  The flag is idempotent: nothing changes when the cell is present.
pub fn froberg_poincare(
    embdim: usize,
    counts: &BigradedCounts,
    ensure_top_cycle: Option<usize>,
) -> Result<RationalFunction> {
    if embdim == 0 {
        return Err(Error::InvalidInput(
            "embedding dimension must be positive".into(),
        ));
    }
    let mut cells: Vec<(usize, usize, u64)> = counts.entries().collect();
    if let Some(n) = ensure_top_cycle {
        if counts.get(1, n) == 0 {
            cells.push((1, n, 1));
        }
    }
    let top = cells.iter().map(|&(r, w, _)| w + r).max().unwrap_or(0);
    let mut den = vec![BigInt::from(0); top + 1];
    for (r, w, count) in cells {
        let term = BigInt::from(count);
        if r % 2 == 0 {
            den[w + r] += term;
        } else {
            den[w + r] -= term;
        }
    }
    if den[0] != BigInt::from(1) {
        return Err(Error::Internal(
            "Koszul-homology denominator lost its unit constant term".into(),
        ));
    }
    RationalFunction::new(
        Polynomial::one_plus_t().pow(embdim as u32),
        Polynomial::from_coeffs(den),
    )
}

/// Guard for the subset loop in [`taylor_is_minimal`].
const MAX_TAYLOR_GENERATORS: usize = 20;

/// Whether the Taylor resolution of the squarefree monomial ideal with the
/// given generator supports is minimal: every generator must contribute a
/// new vertex to every subset it belongs to.  Checked by enumerating all
/// subsets of generators.
pub fn taylor_is_minimal(generators: &[Vec<usize>]) -> Result<bool> {
    if generators.len() > MAX_TAYLOR_GENERATORS {
        return Err(Error::SizeLimit(format!(
            "subset enumeration supports at most {MAX_TAYLOR_GENERATORS} generators, got {}",
            generators.len()
        )));
    }
    let mut masks = Vec::with_capacity(generators.len());
    for g in generators {
        let mut m = 0u64;
        for &v in g {
            if v >= 64 {
                return Err(Error::SizeLimit(format!(
                    "vertex index {v} exceeds the bitmask range"
                )));
            }
            if m & (1 << v) != 0 {
                return Err(Error::InvalidInput(format!(
                    "generator {g:?} repeats a vertex"
                )));
            }
            m |= 1 << v;
        }
        if masks.contains(&m) {
            return Err(Error::InvalidInput(format!(
                "duplicate generator {g:?}"
            )));
        }
        masks.push(m);
    }
    let g = masks.len();
    // union[s] = union of the supports of the generators in subset s.
    let mut union = vec![0u64; 1 << g];
    for s in 1usize..(1 << g) {
        let low = s.trailing_zeros() as usize;
        union[s] = union[s & (s - 1)] | masks[low];
    }
    for s in 1usize..(1 << g) {
        let mut rest = s;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = s & !(1 << k);
            if masks[k] & !union[others] == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn ratfun(num: Vec<i64>, den: Vec<i64>) -> RationalFunction {
        RationalFunction::new(
            Polynomial::from_coeffs(num.into_iter().map(BigInt::from).collect()),
            Polynomial::from_coeffs(den.into_iter().map(BigInt::from).collect()),
        )
        .unwrap()
    }

    #[test]
    fn three_cycle_counts_have_no_disjoint_pairs() {
        let c = disjoint_path_counts(PathShape::Cycle, 3).unwrap();
        assert_eq!(
            c.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 3), (1, 2, 3), (1, 3, 1)]
        );
    }

    #[test]
    fn line_of_three_has_one_disjoint_pair() {
        let c = disjoint_path_counts(PathShape::Line, 3).unwrap();
        assert_eq!(c.get(2, 2), 1); // {first}, {third}
        assert_eq!(
            c.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 3), (1, 2, 2), (1, 3, 1), (2, 2, 1)]
        );
    }

    #[test]
    fn five_cycle_separated_pairs() {
        let c = disjoint_path_counts(PathShape::Cycle, 5).unwrap();
        assert_eq!(c.get(2, 2), 5);
        assert_eq!(c.get(1, 5), 1); // the full circle
    }

    #[test]
    fn line_counts_match_the_binomial_product() {
        for n in 1..=12usize {
            let c = disjoint_path_counts(PathShape::Line, n).unwrap();
            for r in 1..=n {
                for w in 1..=n {
                    let expected = if w >= r {
                        binomial(w as u64 - 1, r as u64 - 1) * binomial((n - w + 1) as u64, r as u64)
                    } else {
                        0
                    };
                    assert_eq!(c.get(r, w), expected, "line n={n} r={r} w={w}");
                }
            }
        }
    }

    #[test]
    fn cycle_counts_match_the_binomial_product() {
        for n in 3..=12usize {
            let c = disjoint_path_counts(PathShape::Cycle, n).unwrap();
            for r in 1..=n {
                for w in 1..n {
                    let expected = if w >= r && n > w {
                        binomial(w as u64 - 1, r as u64 - 1)
                            * binomial((n - w - 1) as u64, r as u64 - 1)
                            * n as u64
                            / r as u64
                    } else {
                        0
                    };
                    assert_eq!(c.get(r, w), expected, "cycle n={n} r={r} w={w}");
                }
            }
            assert_eq!(c.get(1, n), 1);
            // n generators in every weight below n.
            for w in 1..n {
                assert_eq!(c.get(1, w), n as u64, "cycle n={n} weight {w}");
            }
        }
    }

    #[test]
    fn koszul_reciprocal_on_listed_series() {
        // (1+2t)/(1-t) -> (1+t)/(1-2t).
        let h = ratfun(vec![1, 2], vec![1, -1]);
        assert_eq!(koszul_poincare(&h).unwrap(), ratfun(vec![1, 1], vec![1, -2]));
        // 1/(1-t) -> 1+t.
        let h = ratfun(vec![1], vec![1, -1]);
        assert_eq!(koszul_poincare(&h).unwrap(), ratfun(vec![1, 1], vec![1]));
        // (1+t)/(1-t) is its own reciprocal at -t.
        let h = ratfun(vec![1, 1], vec![1, -1]);
        assert_eq!(koszul_poincare(&h).unwrap(), h);
    }

    #[test]
    fn koszul_rejects_bad_constant_terms() {
        let h = ratfun(vec![2, 1], vec![1, -1]);
        assert!(koszul_poincare(&h).is_err());
        assert!(koszul_poincare(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn golod_examples() {
        assert_eq!(
            golod_poincare(3, &[2, 1]).unwrap(),
            ratfun(vec![1, 3, 3, 1], vec![1, 0, -2, -1])
        );
        for d in 1..=5usize {
            let expected = RationalFunction::new(
                Polynomial::one_plus_t().pow(d as u32),
                Polynomial::from_coeffs(vec![1.into(), 0.into(), (-1).into()]),
            )
            .unwrap();
            assert_eq!(golod_poincare(d, &[1]).unwrap(), expected);
        }
        assert_eq!(
            golod_poincare(4, &[3, 3, 1]).unwrap(),
            ratfun(vec![1, 4, 6, 4, 1], vec![1, 0, -3, -3, -1])
        );
        assert!(golod_poincare(0, &[1]).is_err());
        assert!(golod_poincare(3, &[]).is_err());
    }

    #[test]
    fn froberg_on_unit_counts_is_a_pure_power() {
        let p = froberg_poincare(4, &BigradedCounts::unit(), None).unwrap();
        assert_eq!(p, ratfun(vec![1, 4, 6, 4, 1], vec![1]));
    }

    #[test]
    fn froberg_matches_hand_built_denominators() {
        let line2 = disjoint_path_counts(PathShape::Line, 2).unwrap();
        assert_eq!(
            froberg_poincare(5, &line2, None).unwrap(),
            ratfun(vec![1, 5, 10, 10, 5, 1], vec![1, 0, -2, -1])
        );
        let cycle3 = disjoint_path_counts(PathShape::Cycle, 3).unwrap();
        assert_eq!(
            froberg_poincare(6, &cycle3, None).unwrap(),
            ratfun(vec![1, 6, 15, 20, 15, 6, 1], vec![1, 0, -3, -3, -1])
        );
    }

    #[test]
    fn froberg_top_cycle_flag_is_idempotent() {
        let full = disjoint_path_counts(PathShape::Cycle, 4).unwrap();
        let with_flag = froberg_poincare(4, &full, Some(4)).unwrap();
        let without = froberg_poincare(4, &full, None).unwrap();
        assert_eq!(with_flag, without);

        // Now strip the top class and let the flag restore it.
        let stripped =
            BigradedCounts::from_cells(full.entries().filter(|&(r, w, _)| (r, w) != (1, 4)))
                .unwrap();
        assert_eq!(froberg_poincare(4, &stripped, Some(4)).unwrap(), without);
    }

    #[test]
    fn golod_and_froberg_agree_when_products_vanish() {
        // Counts with only r <= 1 cells, as for a Golod ring.
        let counts =
            BigradedCounts::from_cells(vec![(0, 0, 1), (1, 1, 3), (1, 2, 3), (1, 3, 1)]).unwrap();
        let betti = [3, 3, 1];
        assert_eq!(
            froberg_poincare(4, &counts, None).unwrap(),
            golod_poincare(4, &betti).unwrap()
        );
    }

    #[test]
    fn taylor_minimality_cases() {
        // Two triples sharing one vertex: free vertices everywhere.
        assert!(taylor_is_minimal(&[vec![0, 1, 2], vec![2, 3, 4]]).unwrap());
        // Triangle: the union of all three edges equals the union of any two.
        assert!(!taylor_is_minimal(&[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap());
        // Single generator.
        assert!(taylor_is_minimal(&[vec![0, 1]]).unwrap());
        // Star: the core is shared but each edge owns its leaf.
        assert!(taylor_is_minimal(&[vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap());
        // Plain 4-cycle: every vertex is covered twice over.
        assert!(!taylor_is_minimal(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap());
    }

    #[test]
    fn taylor_input_validation() {
        assert!(taylor_is_minimal(&[vec![0, 0]]).is_err());
        assert!(taylor_is_minimal(&[vec![0, 1], vec![1, 0]]).is_err());
        let too_many: Vec<Vec<usize>> = (0..21).map(|i| vec![i, i + 21]).collect();
        assert!(taylor_is_minimal(&too_many).is_err());
    }

    #[test]
    fn counts_serde_round_trip() {
        let c = disjoint_path_counts(PathShape::Line, 3).unwrap();
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(
            js,
            r#"{"counts":[{"r":0,"w":0,"value":1},{"r":1,"w":1,"value":3},{"r":1,"w":2,"value":2},{"r":1,"w":3,"value":1},{"r":2,"w":2,"value":1}]}"#
        );
        let back: BigradedCounts = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<BigradedCounts>(r#"{"counts":[]}"#).is_err());
    }
}
