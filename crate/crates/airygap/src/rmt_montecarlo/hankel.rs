//! Hankel-determinant route to the finite-n generating function: the
//! ratio of moment determinants of the discontinuous Gaussian weight
//! over the plain Gaussian one, with error-function-class moment
//! primitives kept in-module.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

use super::finitedet::validate_config;

pub const HANKEL_N_MAX: usize = 12;
const COND_LIMIT: f64 = 1e-8;
const ERF_SERIES_CUT: f64 = 2.5;
const SQRT_PI: f64 = 1.772_453_850_905_516;

/// erf by Maclaurin series below the cut and a Lentz-evaluated
/// continued fraction for erfc above it; relative accuracy ~1e-15.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    if x <= ERF_SERIES_CUT {
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        for k in 1..120 {
            let kf = k as f64;
            term *= -x2 / kf;
            let add = term / (2.0 * kf + 1.0);
            sum += add;
            if add.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        2.0 / SQRT_PI * sum
    } else {
        1.0 - erfc_large(x)
    }
}

/// erfc(x) for x > 0 via the continued fraction
/// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
fn erfc_large(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..200 {
        let a = k as f64 / 2.0;
        d = x + a * d;
        if d == 0.0 {
            d = tiny;
        }
        c = x + a / c;
        if c == 0.0 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / SQRT_PI / f
}

/// I_p(a, b) = int_a^b x^p e^{-x^2/2} dx for p = 0..=pmax, infinite
/// endpoints allowed, by the integration-by-parts recurrence
/// I_p = [-x^{p-1} e^{-x^2/2}] + (p - 1) I_{p-2}.
fn gaussian_moments(pmax: usize, a: f64, b: f64) -> Vec<f64> {
    let bt = |x: f64, p: usize| -> f64 {
        if x.is_infinite() {
            0.0
        } else {
            -x.powi(p as i32) * (-x * x / 2.0).exp()
        }
    };
    let erf_half = |x: f64| -> f64 {
        if x == f64::INFINITY {
            1.0
        } else if x == f64::NEG_INFINITY {
            -1.0
        } else {
            erf(x / std::f64::consts::SQRT_2)
        }
    };
    let mut out = Vec::with_capacity(pmax + 1);
    out.push((std::f64::consts::PI / 2.0).sqrt() * (erf_half(b) - erf_half(a)));
    if pmax >= 1 {
        out.push(bt(b, 0) - bt(a, 0));
    }
    for p in 2..=pmax {
        let v = bt(b, p - 1) - bt(a, p - 1) + (p - 1) as f64 * out[p - 2];
        out.push(v);
    }
    out
}

/// F_n^{GUE} as a ratio of Hankel determinants; the denominator is the
/// closed form (2 pi)^{n/2} prod_{j<n} j!.
pub fn hankel_ratio(n: usize, lambda: &[f64], s: &[f64]) -> Result<f64> {
    validate_config(n, HANKEL_N_MAX, lambda, s)?;
    if s.iter().all(|&v| v == 1.0) {
        return Ok(1.0);
    }
    let k = lambda.len();
    let pmax = 2 * n - 2;

    // moments of e^{-x^2/2} (sum_j s_j chi_{A_j} + chi_{(-inf, lambda_k)})
    let mut mu = vec![0.0; pmax + 1];
    for j in 0..=k {
        let weight = if j < k { s[j] } else { 1.0 };
        if weight == 0.0 {
            continue;
        }
        let hi = if j == 0 { f64::INFINITY } else { lambda[j - 1] };
        let lo = if j == k { f64::NEG_INFINITY } else { lambda[j] };
        for (p, v) in gaussian_moments(pmax, lo, hi).iter().enumerate() {
            mu[p] += weight * v;
        }
    }

    // equilibrated Hankel determinant with a condition-number guard
    let scale: Vec<f64> = (0..n)
        .map(|l| {
            let d = mu[2 * l];
            if d > 0.0 {
                1.0 / d.sqrt()
            } else {
                1.0
            }
        })
        .collect();
    let h = DMatrix::from_fn(n, n, |l, m| scale[l] * scale[m] * mu[l + m]);
    let lu = h.clone().lu();
    let det_scaled = lu.determinant();
    let kappa = match lu.try_inverse() {
        Some(inv) => {
            let norm = |m: &DMatrix<f64>| {
                (0..m.ncols())
                    .map(|c| m.column(c).iter().map(|v| v.abs()).sum::<f64>())
                    .fold(0.0, f64::max)
            };
            norm(&h) * norm(&inv)
        }
        None => f64::INFINITY,
    };
    let rel_err = n as f64 * f64::EPSILON * kappa;
    if !(rel_err <= COND_LIMIT) {
        return Err(Error::Conditioning(format!(
            "Hankel numerator conditioning {kappa:.3e} puts the relative error estimate \
             {rel_err:.3e} above {COND_LIMIT:.0e}"
        )));
    }

    let mut log_denom = 0.5 * n as f64 * (2.0 * std::f64::consts::PI).ln();
    for j in 1..n {
        for q in 1..=j {
            log_denom += (q as f64).ln();
        }
    }
    // undo the row/column equilibration inside the ratio
    let mut log_scale = 0.0;
    for v in &scale {
        log_scale += v.ln();
    }
    Ok(det_scaled * (-2.0 * log_scale - log_denom).exp())
}
