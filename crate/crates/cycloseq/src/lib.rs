//! Exact arithmetic for parametric linear recurrence sequences specialized
//! at roots of unity.
//!
//! The crate is organized around a single exact scalar type,
//! [`cyclo::CycloElem`], an element of a cyclotomic field `Q(zeta_m)`:
//!
//! - [`real`] — rigorous real/complex enclosures backing every inexact
//!   quantity (houses, heights, dominance exponents);
//! - [`cyclo`] — cyclotomic fields: Galois conjugates, norms, minimal
//!   polynomials, heights, exact torsion and |.| comparisons;
//! - [`lrs`] — parametric sequences `U_n(X) = sum f_i(X) alpha_i(X)^n`,
//!   specialization at roots of unity, dominance analysis, term evaluation
//!   by closed form and by recurrence;
//! - [`ideals`] — prime ideals of `Z[zeta_m]`, factorization of principal
//!   ideals, greatest prime-ideal norm, radical, and S-parts;
//! - [`scan`] — exclusion machinery: multi-dominant scans over roots of
//!   unity, torsion-coset factor detection, level-set counting;
//! - [`bounds`] — explicit lower bounds for linear forms in logarithms and
//!   the growth/S-part/S-unit constant pipelines;
//! - [`sunit`] — desk-scale solver for `U_n(zeta) = w_1 + ... + w_r` in
//!   S-integers under an epsilon-dominance constraint.

pub mod error;
pub mod ideals;
pub mod intfactor;
pub mod cyclo;
pub mod ratpoly;
pub mod real;

pub use error::{BoundError, CycloError, IdealError, LrsError, ScanError, SolveError};
