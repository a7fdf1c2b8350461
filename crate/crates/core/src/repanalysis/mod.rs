//! Structure of matrix representations with an invariant metric:
//! associative envelopes and their radicals, socles, orthogonal
//! indecomposability, holonomy type, and spaces of formal curvature
//! tensors with Berger's criterion.

mod decompose;
mod envelope;
mod kspace;

pub use decompose::{classify_type, indecomposability, HolonomyType, Indecomposability, RepReport};
pub use envelope::{assoc_envelope, radical, socle, Representation};
pub use kspace::{berger_test, curvature_space, BergerResult, CurvatureSpace};
