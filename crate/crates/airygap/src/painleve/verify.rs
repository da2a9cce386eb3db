//! Degeneration-rate measurements: each mode solves the full k-system
//! and its (k-1)-component reduction over a sequence of gaps, compares
//! the squared components at xi in {0, 1, 2}, and fits a log-log slope
//! against the expected decay exponent.

use super::{solve_coupled_pii, CoupledPIISolution, DEFAULT_T, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::fredholm::PartitionSpec;
use crate::special::airy_eval;

pub const EVAL_POINTS: [f64; 3] = [0.0, 1.0, 2.0];
pub const SLOPE_BAND: f64 = 0.25;

/// Which coalescence of Theorem-style reductions to measure (1-based
/// component index where one applies).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReductionMode {
    /// s_{j+1} - s_j -> 0; deltas are the weight gaps.
    SCollision(usize),
    /// x_{j-1} - x_j -> 0; deltas are the point gaps.
    XCollision(usize),
    /// x_1 -> +infinity; deltas are the x_1 values themselves.
    X1ToInfinity,
}

/// Fitted decay of the reduction error.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RateReport {
    pub mode: String,
    /// effective small parameters (the gap, or 1/x_1)
    pub deltas: Vec<f64>,
    /// sup over the compared quantities and the evaluation points
    pub sup_errors: Vec<f64>,
    pub slope: f64,
    pub expected_slope: f64,
    pub slope_band: f64,
}

impl RateReport {
    /// Slope within the +-band of the expected exponent.
    pub fn slope_in_band(&self) -> bool {
        (self.slope - self.expected_slope).abs() <= self.slope_band
    }

    /// Error decays at least as fast as the theorem's bound (the
    /// theorem gives upper bounds, so faster decay also verifies it).
    pub fn bound_satisfied(&self) -> bool {
        self.slope >= self.expected_slope - self.slope_band
    }
}

fn fit_slope(deltas: &[f64], errors: &[f64]) -> f64 {
    let n = deltas.len() as f64;
    let lx: Vec<f64> = deltas.iter().map(|d| d.ln()).collect();
    let ly: Vec<f64> = errors.iter().map(|e| e.max(1e-300).ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(&a, &b)| (a - mx) * (b - my)).sum();
    let den: f64 = lx.iter().map(|&a| (a - mx) * (a - mx)).sum();
    num / den
}

fn solve(x: &[f64], s: &[f64]) -> Result<CoupledPIISolution> {
    let p = PartitionSpec::new(x.to_vec(), s.to_vec())?;
    solve_coupled_pii(&p, DEFAULT_T, DEFAULT_TOL)
}

fn drop_idx(v: &[f64], j: usize) -> Vec<f64> {
    v.iter()
        .enumerate()
        .filter(|(i, _)| *i != j - 1)
        .map(|(_, &val)| val)
        .collect()
}

/// Measure the reduction error of the given mode over the gap list and
/// fit the decay slope.
pub fn verify_reduction(p: &PartitionSpec, mode: ReductionMode, deltas: &[f64]) -> Result<RateReport> {
    if deltas.len() < 2 {
        return Err(Error::Config("need at least two gap values".into()));
    }
    if !deltas.iter().all(|&d| d > 0.0 && d.is_finite()) {
        return Err(Error::Config("gap values must be positive and finite".into()));
    }
    let k = p.k();
    let x = p.x();
    let s = p.s();
    match mode {
        ReductionMode::SCollision(j) => {
            if j == 0 || j > k {
                return Err(Error::Config(format!("component index {j} out of 1..={k}")));
            }
            let s_hi = p.s_next(j);
            let dir = (s_hi - s[j - 1]).signum();
            let reduced = solve(&drop_idx(x, j), &drop_idx(s, j))?;
            let mut sup_errors = Vec::new();
            for &d in deltas {
                let mut sj = s.to_vec();
                sj[j - 1] = s_hi - dir * d;
                if !(0.0..=1.0).contains(&sj[j - 1]) {
                    return Err(Error::Config(format!(
                        "gap {d} pushes s_{j} = {} outside [0, 1]",
                        sj[j - 1]
                    )));
                }
                let full = solve(x, &sj)?;
                let mut sup = 0.0_f64;
                for xi in EVAL_POINTS {
                    let uf = full.u_squared(xi)?;
                    let ur = reduced.u_squared(xi)?;
                    // the collapsing component itself decays like d^{1/2}
                    sup = sup.max(full.eval(xi)?.0[j - 1].abs());
                    for l in 1..=k {
                        if l == j {
                            continue;
                        }
                        let lr = if l < j { l } else { l - 1 };
                        sup = sup.max((uf[l - 1] - ur[lr - 1]).abs());
                    }
                }
                sup_errors.push(sup);
            }
            let slope = fit_slope(deltas, &sup_errors);
            Ok(RateReport {
                mode: format!("s-collision j={j}"),
                deltas: deltas.to_vec(),
                sup_errors,
                slope,
                expected_slope: 0.5,
                slope_band: SLOPE_BAND,
            })
        }
        ReductionMode::XCollision(j) => {
            if j < 2 || j > k {
                return Err(Error::Config(format!("component index {j} out of 2..={k}")));
            }
            let reduced = solve(&drop_idx(x, j), &drop_idx(s, j))?;
            let mut sup_errors = Vec::new();
            for &d in deltas {
                let mut xj = x.to_vec();
                xj[j - 1] = x[j - 2] - d;
                let full = solve(&xj, s)?;
                let mut sup = 0.0_f64;
                for xi in EVAL_POINTS {
                    let uf = full.u_squared(xi)?;
                    let ur = reduced.u_squared(xi)?;
                    // the pair u_{j-1}^2 + u_j^2 merges into one component
                    sup = sup.max((uf[j - 2] + uf[j - 1] - ur[j - 2]).abs());
                    for l in 1..=k {
                        if l == j || l == j - 1 {
                            continue;
                        }
                        let lr = if l < j { l } else { l - 1 };
                        sup = sup.max((uf[l - 1] - ur[lr - 1]).abs());
                    }
                }
                sup_errors.push(sup);
            }
            let slope = fit_slope(deltas, &sup_errors);
            Ok(RateReport {
                mode: format!("x-collision j={j}"),
                deltas: deltas.to_vec(),
                sup_errors,
                slope,
                expected_slope: 1.0,
                slope_band: SLOPE_BAND,
            })
        }
        ReductionMode::X1ToInfinity => {
            if k < 2 {
                return Err(Error::Config("x_1 -> infinity needs k >= 2".into()));
            }
            let reduced = solve(&drop_idx(x, 1), &drop_idx(s, 1))?;
            let mut sup_errors = Vec::new();
            let mut eff = Vec::new();
            for &x1 in deltas {
                if x1 <= x[1] {
                    return Err(Error::Config(format!("x_1 = {x1} must exceed x_2 = {}", x[1])));
                }
                let mut xj = x.to_vec();
                xj[0] = x1;
                let full = solve(&xj, s)?;
                let mut sup = 0.0_f64;
                for xi in EVAL_POINTS {
                    let uf = full.u_squared(xi)?;
                    let ur = reduced.u_squared(xi)?;
                    for l in 2..=k {
                        sup = sup.max((uf[l - 1] - ur[l - 2]).abs());
                    }
                    // the escaping component tracks the Airy asymptote
                    let amp = (p.s_next(1) - s[0]).abs().sqrt();
                    let target = amp * airy_eval(xi + x1)?.ai;
                    sup = sup.max((full.eval(xi)?.0[0].abs() - target).abs());
                }
                sup_errors.push(sup);
                eff.push(1.0 / x1);
            }
            let slope = fit_slope(&eff, &sup_errors);
            Ok(RateReport {
                mode: "x1-to-infinity".into(),
                deltas: eff,
                sup_errors,
                slope,
                expected_slope: 0.5,
                slope_band: SLOPE_BAND,
            })
        }
    }
}
