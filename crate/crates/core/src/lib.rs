//! Exact symbolic computation for cyclic quotient surface singularities.
//!
//! Given a one-dimensional representation type `1/r (1, a)` with
//! `0 < a < r` and `gcd(r, a) = 1`, this crate computes:
//!
//! * the Hirzebruch–Jung continued fraction data of `r/a` and its dual,
//! * minimal generators of the invariant ring together with the full set
//!   of homogeneous relations cutting it out,
//! * the special monomial modules up to isomorphism and the quiver of
//!   irreducible maps between them, with relations between paths,
//! * the Artin-component deformation of the whole picture: the deformed
//!   ring presentation, the Weyl symmetry that acts on it, lifted module
//!   generators and lifted arrow labels certified by Gröbner-basis
//!   computations.
//!
//! Everything is carried out over exact rational arithmetic; no floating
//! point is used anywhere. The [`groebner`] module contains a
//! self-contained Buchberger implementation that the higher layers use
//! for ideal membership, intersection, and quotient computations.

pub mod error;
pub(crate) mod util;

pub mod numtheory;

pub mod monomial;

pub mod polyring;

pub mod groebner;

pub mod invariant_ring;

pub mod specials;

pub mod quiver;

pub mod deformation;

pub mod fixtures;

pub mod report;

pub use error::{Error, Result};
