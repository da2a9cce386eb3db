//! GUE sampling, edge rescaling, finite-n exact determinants, and the
//! Hankel-ratio identity corroborating the Airy-limit formulas.

mod finitedet;
mod gue;
mod hankel;

pub use finitedet::{finite_n_det, FINITE_N_MAX};
pub use gue::{
    empirical_generating, sample_ensemble, sample_gue, GUESample, MCEnsembleReport, GUE_N_MAX,
    GUE_N_MIN,
};
pub use hankel::{erf, hankel_ratio, HANKEL_N_MAX};
