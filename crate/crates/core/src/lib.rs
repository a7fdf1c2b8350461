pub mod atlas;
pub mod error;
pub mod exterior;
pub mod g2core;
pub mod geometry;
pub mod liealg;
pub mod linalg;
pub mod repanalysis;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{LaurentExp, MultiPoly, QSqrt2, Rational, Ring};
