//! Exact arithmetic for the graded invariants of hypergraph edge algebras.
//!
//! Given a uniform hypergraph `H` on vertices `x_1, ..., x_v`, the edge
//! algebra is the quotient of the polynomial ring `k[x_1, ..., x_v]` by the
//! ideal generated by the edge monomials.  This crate computes three
//! invariants of that quotient, always over exact integers:
//!
//! * the Hilbert series, as a rational function in `t`,
//! * the Poincare series of the residue field, as a rational function in `t`,
//! * the graded Betti numbers over the polynomial ring.
//!
//! Closed formulas are implemented for four structured families — paths,
//! cycles, and stars of overlapping `d`-uniform edges, and wheel graphs —
//! and every formula is backed by an independent brute-force route (monomial
//! counting, simplicial homology via induced subcomplexes, or subset
//! enumeration) so the two can be cross-checked on concrete instances.  A few
//! closed forms circulate in print with sign or index errors; both the
//! printed and the corrected variants are implemented, and the discrepancy
//! ledger in [`oracle::ledger`] records which enumeration settled each one.
//!
//! Module layout mirrors the dependency order:
//!
//! * [`exactalg`] — integer polynomials, canonical rational functions,
//!   power-series expansion, exact evaluation.
//! * [`hypergraph`] — the family constructors and validation.
//! * [`complex`] — independence complexes, rational (and prime-field)
//!   simplicial homology, Betti tables via induced-subcomplex enumeration.
//! * [`closedforms`] — the closed formulas for the four families.
//! * [`engines`] — reusable series engines (Koszul reciprocal, Golod and
//!   Froberg-style denominators, disjoint-path enumeration, Taylor
//!   minimality).
//! * [`oracle`] — brute-force series, adjudication of disputed formula
//!   variants, Betti cross-checks, and the discrepancy ledger.

pub mod closedforms;
pub mod complex;
pub mod engines;
mod error;
pub mod exactalg;
pub mod hypergraph;
pub mod oracle;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
