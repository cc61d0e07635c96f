//! Closed formulas for the Hilbert series, Poincare series, and graded
//! Betti numbers of the hypergraph families.
//!
//! Everything here evaluates a formula; nothing here counts monomials or
//! computes homology.  The independent ground truth lives in [`crate::oracle`]
//! and [`crate::complex`], and the test suites hold the two sides together.
//!
//! Two of the published recursions circulate with misprints (a wrong sign in
//! the cycle Hilbert recursion, a garbled denominator in the cycle Poincare
//! recursion), and the wheel Betti formulas have two more (a shifted binomial
//! in the generic strand, swapped indices in one top-cell case).  Each such
//! formula takes a [`Variant`] selector: [`Variant::Corrected`] evaluates the
//! reading that the brute-force oracles validate, [`Variant::Printed`]
//! evaluates the misprinted form verbatim so the adjudication is reproducible.
//! The discrepancies themselves are catalogued in [`crate::oracle::typo_ledger`].

mod betti;
mod hilbert;
mod poincare;

pub use betti::{
    betti_hypercycle_closed, betti_hyperline_closed, betti_star_closed, betti_wheel_closed,
    betti_wheel_compose,
};
pub use hilbert::{hilbert_cycle_closed, hilbert_line_closed, hilbert_wheel_closed};
pub use poincare::{
    poincare_cycle_graph, poincare_hypercycle, poincare_hyperline, poincare_hyperstar,
    poincare_line_graph, poincare_wheel,
};

use crate::exactalg::{poly_from_strings, poly_to_strings, RationalFunction};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which reading of a disputed formula to evaluate.
///
/// `Corrected` (the default) is the variant every oracle check selects;
/// `Printed` reproduces the misprinted form for side-by-side comparison.
/// Formulas with no known discrepancy ignore the selector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Corrected,
    Printed,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Corrected => write!(f, "corrected"),
            Variant::Printed => write!(f, "printed"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "corrected" => Ok(Variant::Corrected),
            "printed" => Ok(Variant::Printed),
            other => Err(Error::InvalidInput(format!(
                "unknown variant {other:?}; expected \"corrected\" or \"printed\""
            ))),
        }
    }
}

/// A series computed from a closed formula, together with a record of which
/// formula produced it and which conventions were applied along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    /// The canonical rational function.
    pub series: RationalFunction,
    /// Human-readable name of the producing formula or recursion.
    pub provenance: String,
    /// Applied conventions: base-case extensions, adjudicated signs, factor
    /// decompositions — anything a reader re-deriving the value should know.
    pub notes: Vec<String>,
}

impl SeriesResult {
    pub fn new(
        series: RationalFunction,
        provenance: impl Into<String>,
        notes: Vec<String>,
    ) -> Self {
        SeriesResult {
            series,
            provenance: provenance.into(),
            notes,
        }
    }
}

impl fmt::Display for SeriesResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.series)
    }
}

/// Wire form: the rational function's `num`/`den` string arrays joined with
/// the provenance and notes in one flat object.
#[derive(Serialize, Deserialize)]
struct SeriesResultDto {
    num: Vec<String>,
    den: Vec<String>,
    provenance: String,
    #[serde(default)]
    notes: Vec<String>,
}

impl Serialize for SeriesResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesResultDto {
            num: poly_to_strings(self.series.num()),
            den: poly_to_strings(self.series.den()),
            provenance: self.provenance.clone(),
            notes: self.notes.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SeriesResult {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let dto = SeriesResultDto::deserialize(deserializer)?;
        let num = poly_from_strings(&dto.num).map_err(D::Error::custom)?;
        let den = poly_from_strings(&dto.den).map_err(D::Error::custom)?;
        let series = RationalFunction::new(num, den).map_err(D::Error::custom)?;
        Ok(SeriesResult {
            series,
            provenance: dto.provenance,
            notes: dto.notes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Polynomial;

    #[test]
    fn variant_round_trips_through_strings() {
        assert_eq!("corrected".parse::<Variant>().unwrap(), Variant::Corrected);
        assert_eq!("printed".parse::<Variant>().unwrap(), Variant::Printed);
        assert!("fixed".parse::<Variant>().is_err());
        assert_eq!(Variant::default(), Variant::Corrected);
        assert_eq!(Variant::Printed.to_string(), "printed");
    }

    #[test]
    fn series_result_json_is_flat_and_round_trips() {
        let series = RationalFunction::new(
            Polynomial::from_i64(&[1, 2]),
            Polynomial::from_i64(&[1, -1]),
        )
        .unwrap();
        let result = SeriesResult::new(series, "test formula", vec!["a convention".into()]);
        let json = serde_json::to_string(&result).unwrap();
        assert_eq!(
            json,
            "{\"num\":[\"1\",\"2\"],\"den\":[\"1\",\"-1\"],\
             \"provenance\":\"test formula\",\"notes\":[\"a convention\"]}"
        );
        let back: SeriesResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back, result);
    }

    #[test]
    fn series_result_deserialize_canonicalizes() {
        let json = "{\"num\":[\"2\",\"2\"],\"den\":[\"2\"],\"provenance\":\"p\",\"notes\":[]}";
        let back: SeriesResult = serde_json::from_str(json).unwrap();
        assert_eq!(
            back.series,
            RationalFunction::from_polynomial(Polynomial::from_i64(&[1, 1]))
        );
    }
}
