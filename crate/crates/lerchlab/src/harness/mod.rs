//! The identity-suite runner behind the `lerchlab` command-line tool: config
//! parsing, the quadrature-based operator checks, and the suite itself.

mod checks;
mod config;
mod suite;

pub use checks::{
    adjoint_check, grid_for, lp_bound_check, lp_ratio, norm_identity_check, r_isometry_check, test_function, Exponent,
    MAX_CHECK_M,
};
pub use config::{parse_complex, SuiteConfig};
pub use suite::{describe, plan, run_checks, run_suite, Check, Group, SuiteOutcome};
