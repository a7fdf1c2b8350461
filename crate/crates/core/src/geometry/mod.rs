//! Left-invariant pseudo-Riemannian geometry on Lie groups: the
//! Levi-Civita map `Λ : g -> so(g)`, curvature, the differential Bianchi
//! residuals, infinitesimal holonomy, and covariant derivatives of
//! time-dependent tensors on groups of the form `R ⋉ N`.

mod connection;
mod curvature;
mod deform;
mod tdep;

pub use connection::{levi_civita, Connection, MetricLieAlgebra};
pub use curvature::{
    curvature, curvature_of, holonomy, pair_symmetry_defects, second_bianchi, second_bianchi_of,
    CurvatureTensor,
};
pub use deform::{check_deformation_parallel, deformation_generator, DeformationReport};
pub use tdep::{covariant_derivative_t, TDependent, TDependentForm, TDependentVector};
