//! Multi-interval Airy-kernel Fredholm determinants, the associated
//! coupled Painlevé II system, and near-extreme eigenvalue statistics
//! of the Airy point process, with GUE Monte Carlo corroboration.

pub mod cli;
pub mod distributions;
pub mod error;
pub mod fredholm;
pub mod painleve;
pub mod rmt_montecarlo;
pub mod special;

pub use error::{Error, Result};
