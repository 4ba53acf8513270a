//! Exact symmetric-function machinery for auditing particle exchange statistics.
//!
//! A candidate statistics for `N` particles is a coefficient vector over the
//! integer partitions of `N`, either in the Schur basis (`C`, multiplicities of
//! `U(m)` irreps in the many-body Hilbert space) or in the monomial basis
//! (`Omega`, microstate counts per occupation-number pattern). The two sides are
//! related by the Kostka matrix. Only bosons and fermions make both sides
//! simultaneously admissible; [`audit`] reports exactly where every other
//! candidate fails.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, caching and the
//! command-line front end live in the `statcheck` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod audit;
pub mod fock;
pub mod linalg;
pub mod microstates;
pub mod partitions;
pub mod scalar;
pub mod symfunc;
pub mod tensor_lab;
pub mod zoo;

pub use audit::{AuditVerdict, Side, StatisticsSpec, Violation, ViolationKind};
pub use partitions::{Partition, PartitionTable};
pub use scalar::{QSqrt2, Rational};
pub use symfunc::{Basis, KostkaMatrix, SymPoly};
