//! Terwilliger-algebra and triple-transitivity analysis of strongly regular graphs.

pub mod autgrp;
pub mod classifier;
pub mod error;
pub mod exactmath;
pub mod families;
pub mod graphcore;
pub mod linalg;
pub mod permgroup;
pub mod reproduce;
pub mod terwilliger;

pub use error::{Error, Result};
pub use graphcore::{Graph, SrgParams};

/// Scalars for the linear algebra, chosen per call.
pub type ModP = exactmath::PrimeField;
pub type Rational = num_rational::BigRational;
pub type RationalField = linalg::Exact<Rational>;
pub type FloatField = linalg::Approx<f64>;
pub type ModPBasis = linalg::SubspaceBasis<ModP>;
pub type RationalBasis = linalg::SubspaceBasis<RationalField>;
pub type ModPMatrix = linalg::MatVec<u64>;

/// Environment variable overriding every construction size guard.
pub const SIZE_GUARD_ENV: &str = "SRGTA_SIZE_GUARD";

/// The active size limit: `SRGTA_SIZE_GUARD` if set and parseable, else `default`.
pub fn size_guard(default: u64) -> u64 {
    std::env::var(SIZE_GUARD_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}
