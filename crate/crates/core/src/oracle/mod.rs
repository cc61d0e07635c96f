//! Independent ground truth and adjudication.
//!
//! Three layers of defense against a wrong formula:
//!
//! 1. [`hilbert_bruteforce`] counts monomials outright — no series algebra,
//!    no homology, nothing shared with the closed forms.
//! 2. The `verify_*` operations check the published identities (Koszul
//!    reciprocity, the Fibonacci evaluation, Betti cross-checks) and return
//!    [`VerificationReport`]s with the evidence spelled out.
//! 3. [`resolve_recursion_sign`] evaluates both readings of each disputed
//!    formula against the brute-force oracle and demands that exactly one
//!    survives; [`typo_ledger`] records the adjudications permanently.

mod bruteforce;
mod ledger;
mod verify;

pub use bruteforce::hilbert_bruteforce;
pub use ledger::{typo_ledger, LedgerEntry};
pub use verify::{
    crosscheck_betti, resolve_recursion_sign, verify_fibonacci, verify_hilbert_consistency,
    verify_koszul_identity, Check, VerificationReport, Verdict,
};
