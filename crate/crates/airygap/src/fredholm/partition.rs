//! Partition of (x_k, +infinity) into the intervals A_j = (x_j, x_{j-1})
//! with x_0 = +infinity, together with the occupancy weights s_j.

use crate::error::{Error, Result};

/// Strictly decreasing partition points x_1 > ... > x_k with weights
/// s_1, ..., s_k in [0, 1]; s_{k+1} = 1 is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionSpec {
    x: Vec<f64>,
    s: Vec<f64>,
}

impl PartitionSpec {
    pub fn new(x: Vec<f64>, s: Vec<f64>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Config("partition needs k >= 1 points".into()));
        }
        if x.len() != s.len() {
            return Err(Error::Config(format!(
                "partition has {} points but {} weights",
                x.len(),
                s.len()
            )));
        }
        if !x.windows(2).all(|p| p[0] > p[1]) {
            return Err(Error::Config(format!(
                "partition points must be strictly decreasing, got {x:?}"
            )));
        }
        if !x.iter().all(|v| v.is_finite()) {
            return Err(Error::Config("partition points must be finite".into()));
        }
        if !s.iter().all(|&v| (0.0..=1.0).contains(&v)) {
            return Err(Error::Config(format!(
                "weights must lie in [0, 1], got {s:?}"
            )));
        }
        Ok(PartitionSpec { x, s })
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn s(&self) -> &[f64] {
        &self.s
    }

    /// s_{j+1} with the convention s_{k+1} = 1 (1-based j).
    pub fn s_next(&self, j: usize) -> f64 {
        if j >= self.k() {
            1.0
        } else {
            self.s[j]
        }
    }

    /// The hypothesis of the Painlevé representation: consecutive
    /// weights distinct (including s_k != s_{k+1} = 1).
    pub fn consecutive_s_distinct(&self) -> bool {
        (0..self.k()).all(|j| self.s[j] != self.s_next(j + 1))
    }
}
