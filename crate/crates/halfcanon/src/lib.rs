//! Exact commutative algebra for half-canonical stable curves in P^5.
//!
//! The crate builds and verifies nodal curves in P^5 whose coordinate rings
//! are Gorenstein of codimension 4 with regularity 4, over a prime field.
//! Layers, bottom up:
//!
//! * [`field`] — GF(p) arithmetic;
//! * [`monomial`], [`ring`], [`poly`] — sparse multivariate polynomials under
//!   grevlex / block elimination orders;
//! * [`groebner`], [`ideal`], [`hilbert`] — Buchberger engine and the ideal
//!   toolbox (intersection, colon, saturation, elimination, Hilbert series);
//! * [`modvec`], [`resolution`] — module Groebner bases, Schreyer syzygies,
//!   minimal graded free resolutions, Betti tables;
//! * [`pfaffian`] — skew-symmetric matrices, Pfaffians, Tom/Jerry formats;
//! * [`catalogue`], [`deform`] — seeded constructions of the curve types and
//!   the flat deformation family;
//! * [`verifier`] — machine-checkable reports per constructed bundle;
//! * [`ioformat`] — the `.ideal` text grammar, JSON documents, Betti rendering.

#![allow(clippy::needless_range_loop)]

pub mod catalogue;
pub mod deform;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod ioformat;
pub mod modvec;
pub mod monomial;
pub mod pfaffian;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod univar;
pub mod verifier;

pub use error::{Error, Result};
