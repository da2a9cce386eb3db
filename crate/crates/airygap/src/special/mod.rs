//! Self-contained special-function kernel: the Airy pair, the Airy
//! kernel, Gauss-Legendre rules, and orthonormal Hermite polynomials.
//!
//! Everything here is a pure function of its arguments and safe to call
//! from any number of threads.

mod airy;
mod airy_table;
mod gauss;
mod hermite;

pub use airy::{airy_eval, airy_kernel, airy_kernel_du, AiryPair, AIRY_WINDOW, DIAG_SWITCH};
pub use gauss::{gauss_legendre, QuadRule};
pub use hermite::{hermite_orthonormal, hermite_weighted_seq, HERMITE_MAX_DEGREE};
