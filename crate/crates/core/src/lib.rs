//! Univalent trinomials with fold symmetry.
//!
//! The crate builds the Suffridge polynomials and their fold-symmetric
//! analogues, samples the univalence domain `U_T` of
//! `z + a z^(1+T) + b z^(1+2T)` from its five boundary arcs, certifies
//! univalence numerically, and checks the extremal properties of the corner
//! trinomial against an independent grid search.
//!
//! All numerics are generic over [`Real`]; the `*64` aliases below fix the
//! scalar to `f64`, which is what the stated tolerances assume.

pub mod asymptotics;
pub mod domain;
pub mod error;
pub mod export;
pub mod extremal;
pub mod geometry;
pub mod inequalities;
pub mod poly;
pub mod scalar;
pub mod special;
pub mod suffridge;
pub mod univalence;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type Point64 = geometry::Point<f64>;
pub type SymmetricPolynomial64 = poly::SymmetricPolynomial<f64>;
pub type RealPolynomial64 = poly::RealPolynomial<f64>;
pub type CornerPoint64 = suffridge::CornerPoint<f64>;
pub type CurveSegment64 = domain::CurveSegment<f64>;
pub type DomainBoundary64 = domain::DomainBoundary<f64>;
pub type ProofCurveFunctions64 = domain::ProofCurveFunctions<f64>;
pub type LemmaReport64 = inequalities::LemmaReport<f64>;
pub type UnivalenceReport64 = univalence::UnivalenceReport<f64>;
pub type ClosedFormExtrema64 = extremal::ClosedFormExtrema<f64>;
pub type GridExtrema64 = extremal::GridExtrema<f64>;
pub type MonotonicityReport64 = extremal::MonotonicityReport<f64>;
pub type ExtremalReport64 = extremal::ExtremalReport<f64>;
pub type AsymptoticSample64 = asymptotics::AsymptoticSample<f64>;
