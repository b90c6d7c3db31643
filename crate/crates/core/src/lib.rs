//! Inverse Kazhdan-Lusztig polynomials of uniform and paving matroids, the
//! binomial Hadamard transform, and exact certificates for real-rootedness,
//! interlacing, log-concavity and the higher-order Turán inequalities.
//!
//! The polynomial layer ([`exactmath`], [`realroots`]) is generic over the
//! scalar type; everything matroid-specific works over [`Rational`].

pub mod error;
pub mod exactmath;
pub mod inequalities;
pub mod klcore;
pub mod lemmascan;
pub mod realroots;
pub mod report;
pub mod scan;

pub use error::{Error, Result};

/// Arbitrary-precision rational, the scalar for all matroid computations.
pub type Rational = num_rational::BigRational;
/// Dense polynomial over [`Rational`].
pub type RatPoly = exactmath::Poly<Rational>;
/// Isolating interval with [`Rational`] endpoints.
pub type RatInterval = realroots::IsolatingInterval<Rational>;
/// Polynomial over machine floats, for approximate work only.
pub type FloatPoly = exactmath::Poly<f64>;
