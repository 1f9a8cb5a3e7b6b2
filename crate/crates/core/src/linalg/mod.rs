//! Exact integer linear algebra: Smith normal form, kernels, cokernels and
//! subquotients with explicit generators.

mod finab;
mod lattice;
mod matrix;
mod snf;

pub use finab::{FinAb, ParseFinAbError};
pub use lattice::{
    cokernel_invariants, kernel_basis, subquotient, subquotient_mod, LatticeBasis, LinearSolver,
    Subquotient,
};
pub use matrix::{determinant, IntMatrix};
pub use snf::{invariant_factors, smith_normal_form, SnfResult};
