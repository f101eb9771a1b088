//! Exact computation with complexity-one graded trinomial algebras.
//!
//! The library constructs graded rings presented by trinomial relations from
//! a defining datum `(A, n, L)`, computes their grading groups and degree
//! maps over exact integer and rational arithmetic, decides factoriality and
//! pointedness, and builds the admissibly downgraded presentations that occur
//! as Cox rings of rational varieties with a torus action of complexity one.
//!
//! Layering, bottom up:
//!
//! * [`lattice`] — integer matrices, Smith/Hermite normal forms, integer
//!   linear solving, and exact rational cone feasibility;
//! * [`abgroup`] — finitely generated abelian groups as quotients of a free
//!   lattice, with canonical element coordinates;
//! * [`poly`] — sparse multivariate polynomials over the rationals with
//!   grading-aware homogeneity tests and linear-span solves;
//! * [`trinomial`] — the ring construction itself: validation, relations,
//!   grading, factoriality, pointedness, and the degree-extremality test;
//! * [`coxring`] — the downgrading construction: block matrices,
//!   admissibility, isotropy orders, and the surface recipe;
//! * [`sweep`] and [`batch`] — bounded enumeration of defining data and
//!   batch evaluation (data-parallel via rayon when the `parallel` feature
//!   is enabled, sequential otherwise).
//!
//! All arithmetic is arbitrary precision; no floating point is used
//! anywhere, so every decision procedure is exact.

pub mod abgroup;
pub mod batch;
pub mod coxring;
pub mod lattice;
pub mod poly;
pub mod sweep;
pub mod trinomial;

pub use abgroup::{ElementOrder, FgAbGroup, GroupElement};
pub use coxring::{AdmissibilityReport, CoxPresentation, DowngradeData};
pub use lattice::{IntMatrix, SmithDecomposition};
pub use poly::{Homogeneity, SparsePoly};
pub use trinomial::{RingPresentation, TripleData};
