//! The example family of metric Lie algebras with abelian holonomy, its
//! isometry invariant, and machine checks of the reference bracket tables,
//! the type III curvature table and the displayed proof identities.

mod examples;
mod family_suite;
mod invariant;
mod tables;

pub use examples::{g_eps, g_eps_as_printed, g_eps_brackets, phi_iso, ExampleSpec, TIME_DIRECTION};
pub use family_suite::{closed_form_connection, verify_example_family};
pub use invariant::{epsilon_invariant, epsilon_invariant_with, InvariantFrame, SignConvention};
pub use tables::{
    reference_brackets, run_all_suites, symbolic_connection, symbolic_h3, table1_parameters,
    table1_tensor, verify_bracket_table, verify_bracket_table_against, verify_proof_identities,
    verify_table1, BracketShape, EntryCheck, TableCheckResult,
};
