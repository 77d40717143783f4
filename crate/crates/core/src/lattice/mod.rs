//! Exact integer linear algebra: matrices over `BigInt`, Smith and Hermite
//! normal forms, subgroups of `Z^n` in canonical form and quotient
//! presentations.

mod matrix;
mod normal_form;
mod quotient;
mod subgroup;

pub use matrix::{ints, IntMatrix};
pub use normal_form::{
    hermite_rows, inverse_unimodular, smith_normal_form, solve_integral, HermiteForm,
    SmithDecomposition,
};
pub use quotient::{quotient, QuotientPresentation};
pub use subgroup::{kernel_basis, subgroup_intersection, subgroup_sum, Subgroup};
