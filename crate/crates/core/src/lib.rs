//! Exact computations with finite group schemes and the Hopf algebras around
//! their Drinfeld doubles.
//!
//! The crate builds group algebras and coordinate algebras of finite group
//! schemes (constant groups, Frobenius kernels of the additive and
//! multiplicative groups, restricted enveloping algebras), forms Drinfeld
//! doubles, constructs the Hopf quotients `D(K, H, B)` attached to triples of
//! normal subgroups and an equivariant Hopf pairing, and organises those
//! triples into a lattice with centralizers and intersections.

pub mod appendix;
pub mod double;
pub mod error;
pub mod group;
pub mod hopf;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod quotient;
pub mod scalar;

pub use error::{Error, Result};

/// Version tag carried by every JSON document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

pub use scalar::{Field, Scalar};
