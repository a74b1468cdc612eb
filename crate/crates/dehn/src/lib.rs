//! Exact-arithmetic analysis of finite-dimensional graded Lie algebras
//! over products of local fields, and the Dehn-function classification of
//! the standard solvable groups they present.
//!
//! Everything here computes over the rationals with arbitrary precision:
//! convex weight geometry with checkable certificates, the degree-zero
//! part of the homology complex, the degree-zero Killing module and its
//! tame variant, the blow-up central extension, the nilpotent group law
//! via the Campbell-Baker-Hausdorff series, and discrete Stokes integrals
//! certifying exponential filling lower bounds for SOL-type groups.
//!
//! Start from an algebra — a fixture from [`corpus`] or a JSON file via
//! [`fileio`] — then:
//!
//! ```
//! use dehn::{corpus, report};
//!
//! let algebra = corpus::abels_a4();
//! let analysis = report::analyze(&algebra).unwrap();
//! assert_eq!(analysis.homology.dim_h2_0, 0);
//! assert_eq!(analysis.killing.dim_kill_0, 0);
//! println!("{}", analysis.to_text());
//! ```
//!
//! The runnable examples cover one capability each: validation, weight
//! diagrams, homology reports, blow-ups, the group law, Stokes lower
//! bounds, and corpus-wide classification. The `dehn` binary exposes the
//! same operations as subcommands (`validate`, `analyze`, `blowup`,
//! `diagram`, `stokes`, `examples`).

pub mod bch;
pub mod blowup;
pub mod classify;
pub mod corpus;
pub mod diagram;
pub mod fileio;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod rat;
pub mod report;
pub mod stokes;
pub mod weights;

pub use lie::{FieldComponent, FieldKind, GradedLieAlgebra, Weight};
pub use rat::Rational;
