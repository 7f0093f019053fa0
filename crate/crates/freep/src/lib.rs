//! Freeness of rings of integers over associated orders in degree `p`
//! extensions of `p`-adic fields.
//!
//! A degree `p` extension `L/K` of `p`-adic fields carries exactly one
//! Hopf-Galois structure, and the ring of integers of `L` is a module over
//! its associated order inside that structure. Whether the module is free is
//! controlled by four integers: the residue characteristic `p`, the absolute
//! ramification index `e` of `K`, the degree `r` of the normal closure of `L`
//! over `L`, and the ramification jump `t` of that closure. Everything here
//! is exact integer arithmetic; no floating point appears anywhere.
//!
//! The crate is organized around one decision pipeline and the machinery
//! that cross-checks it:
//!
//! * [`params`] validates `(p, e, r, t)` and derives the scalar invariants
//!   `c`, `b`, `ell`, `a` and the ramification regime.
//! * [`contfrac`] supplies continued fractions, convergents, distances to
//!   the nearest integer, and the set `E` of best-approximation indices.
//! * [`exponents`] computes the valuation-exponent tables `nu` and `n`
//!   together with scaffold data and the ring-condition predicates.
//! * [`verdict`] runs the freeness decision and reports which clause fired.
//! * [`structmat`] rebuilds the verdict independently from the zero/unit
//!   patterns of the multiplication matrices in the boundary regime.
//! * [`tateoort`] performs exact computations in truncated group algebras
//!   `(Z/p^N)[C_p]`, recovering the eigenvalue scalars `b_i` and the unit
//!   `epsilon` that appear in the Hopf-algebra presentation.
//! * [`checks`] bundles the exhaustive cross-validation sweeps used by the
//!   test suite and the `verify` subcommand of the CLI.

pub mod checks;
pub mod contfrac;
pub mod exponents;
pub mod params;
pub mod structmat;
pub mod tateoort;
pub mod verdict;

mod error;

pub use contfrac::{ContinuedFraction, ConvergentTable, Frac};
pub use error::{Error, Result};
pub use exponents::ExponentTable;
pub use params::{DerivedInvariants, ExtensionParams, Regime, ValidationReport};
pub use structmat::{EntryPattern, MatrixVerdict, StructureMatrix};
pub use tateoort::{GroupAlgebraElement, TruncatedRing};
pub use verdict::{Clause, FreenessVerdict};
