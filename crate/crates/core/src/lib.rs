//! Exact fixed-point accounting for holomorphic self-maps through their
//! action on rational homology.
//!
//! Given the integer matrices by which a map acts on the homology of a
//! complex manifold, this crate computes exact Lefschetz number sequences,
//! locates the eigenvalues of the degree-one action relative to the unit
//! circle, and decides which cases of the period-set trichotomy the map can
//! occupy -- producing a finite witness iterate whenever the homology action
//! alone forces infinitely many fixed points. A small dynamics harness
//! cross-checks the Lefschetz inequality `L(f^m) >= #Fix(f^m)` on concrete
//! one-variable holomorphic maps.

pub mod classifier;
pub mod harness;
pub mod homology;
pub mod lefschetz;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod spectrum;

pub use classifier::{classify, ClassificationResult, Verdict};
pub use homology::{validate_action, GradedHomologyAction, ShapeReport};
pub use lefschetz::{lefschetz_number, lefschetz_sequence, LefschetzSequence};
pub use matrix::IntMatrix;
pub use poly::IntPolynomial;
pub use spectrum::{spectrum_summary, SpectrumSummary};
