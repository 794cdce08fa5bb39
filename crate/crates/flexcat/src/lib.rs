//! Exact-arithmetic toolkit for catalytic, flexibly catalytic, and multicopy
//! state transformations.
//!
//! The crate works with three interchangeable views of a "state":
//!
//! * [`GMultiset`] — a finite nonempty multiset over a concrete abelian
//!   group (integer vectors, exact rationals, or magnitude-phase pairs),
//!   composed by convolution;
//! * [`IntPolynomial`] — a sparse big-integer polynomial, linked to
//!   integer multisets by the monoid embedding [`IntPolynomial::iota`];
//! * [`ProbVector`] — an exact probability spectrum (squared Schmidt
//!   coefficients), composed by tensor product and ordered by majorization.
//!
//! On top of these, [`catalysis`] decides and constructs catalytic
//! transformations (single catalyst, extraction, flexible catalyst cycles,
//! multicopy chains), and [`paperbench`] re-verifies a suite of worked
//! examples end to end. All arithmetic is exact; no floating point anywhere.

pub mod catalysis;
pub mod error;
pub mod group;
pub mod json;
pub mod majorization;
pub mod multiset;
pub mod paperbench;
pub mod polynomial;
pub mod rational;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupTag};
pub use majorization::ProbVector;
pub use multiset::GMultiset;
pub use polynomial::{IntPolynomial, NegativityResult};
