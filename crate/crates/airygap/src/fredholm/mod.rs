//! Nyström discretization and determinant/resolvent evaluation of the
//! multi-interval Airy operator, with s-derivatives via contour
//! extraction.

mod engine;
mod linalg;
mod partition;
mod scheme;
mod sderiv;

pub use engine::{dlog_f_dx, fredholm_det, resolvent_diag, FredholmResult, NystromOperator};
pub use partition::PartitionSpec;
pub use scheme::{build_scheme, QuadratureScheme, DEFAULT_L_TRUNC, DEFAULT_NODES_PER_UNIT};
pub use sderiv::s_derivatives;

/// Determinant with the default desk-scale resolution.
pub fn fredholm_det_default(p: &PartitionSpec) -> crate::Result<FredholmResult> {
    let scheme = build_scheme(p, DEFAULT_NODES_PER_UNIT, DEFAULT_L_TRUNC)?;
    fredholm_det(p, &scheme)
}
