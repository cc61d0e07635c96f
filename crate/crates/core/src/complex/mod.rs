//! Independence complexes, exact simplicial homology, and graded Betti
//! numbers of edge ideals by homology of induced subcomplexes.
//!
//! This module is the ground-truth layer: everything in it is computed by
//! direct linear algebra over exact arithmetic, independent of any closed
//! formula, so the closed forms elsewhere in the crate can be checked
//! against it cell by cell.

mod hochster;
mod homology;
mod simplicial;

pub use hochster::hochster_betti;
pub use homology::{reduced_homology_dims, reduced_homology_dims_over, FieldChar};
pub use simplicial::{hilbert_from_complex, independence_complex, SimplicialComplex};

use crate::exactalg::Polynomial;
use crate::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Graded Betti numbers of a quotient ring: a sparse map from
/// `(homological degree i, internal degree j)` to a positive multiplicity.
///
/// Conventions: the table describes the minimal free resolution of the
/// quotient over the ambient polynomial ring, so `(0, 0) = 1` is always
/// present and `(1, d)` counts the degree-`d` generators of the ideal.
/// Zero cells are absent and `j >= i` throughout.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    /// Adds `value` to the `(i, j)` cell; adding zero is a no-op.
    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    /// Overwrites the `(i, j)` cell (removing it when `value` is zero).
    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    /// The multiplicity at `(i, j)`, zero when the cell is absent.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// All cells in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological degree with a nonzero cell (0 for an empty table).
    pub fn max_homological_degree(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti numbers: index `i` holds the sum over `j` of cell `(i, j)`.
    pub fn totals(&self) -> Vec<u64> {
        let mut totals = vec![0u64; self.max_homological_degree() + 1];
        for (&(i, _), &v) in &self.entries {
            totals[i] += v;
        }
        totals
    }

    /// The alternating sum `sum over cells of (-1)^i * value * t^j`.
    ///
    /// For the Betti table of `R = poly ring / ideal` this equals the
    /// numerator of the Hilbert series of `R` over the denominator
    /// `(1-t)^{vertex count}` — the standard additivity of Hilbert series
    /// along the resolution, used as a cross-check between the homological
    /// and enumerative halves of the crate.
    pub fn hilbert_numerator(&self) -> Polynomial {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(i, j), &v) in &self.entries {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BigInt::from(0));
            }
            let signed = if i % 2 == 0 {
                BigInt::from(v)
            } else {
                -BigInt::from(v)
            };
            coeffs[j] += signed;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "(empty Betti table)");
        }
        let mut first = true;
        for (&(i, j), &v) in &self.entries {
            if !first {
                writeln!(f)?;
            }
            write!(f, "beta({i}, {j}) = {v}")?;
            first = false;
        }
        Ok(())
    }
}

// JSON shape: {"entries": [{"i": 1, "j": 2, "value": 3}, ...]} sorted by (i, j).
#[derive(Serialize, Deserialize)]
struct BettiCellDto {
    i: usize,
    j: usize,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiTableDto {
    entries: Vec<BettiCellDto>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiTableDto {
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &value)| BettiCellDto { i, j, value })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = BettiTableDto::deserialize(d)?;
        BettiTable::from_cells(dto.entries.into_iter().map(|c| (c.i, c.j, c.value)))
            .map_err(serde::de::Error::custom)
    }
}

impl BettiTable {
    fn from_cells(cells: impl Iterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let mut table = BettiTable::new();
        for (i, j, value) in cells {
            if value == 0 {
                return Err(Error::InvalidInput(format!(
                    "Betti cell ({i}, {j}) has zero multiplicity; zero cells must be absent"
                )));
            }
            if j < i {
                return Err(Error::InvalidInput(format!(
                    "Betti cell ({i}, {j}) has internal degree below homological degree"
                )));
            }
            if table.entries.insert((i, j), value).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate Betti cell ({i}, {j})"
                )));
            }
        }
        Ok(table)
    }
}
