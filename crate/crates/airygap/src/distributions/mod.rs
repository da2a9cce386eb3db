//! Probability laws of the Airy point process evaluated on the
//! Fredholm route: k-th largest and joint particle distributions, gap
//! probabilities, thinned/conditional laws, and the k = 2 spacing and
//! sum laws via the v-kernel.

mod curve;
mod vkernel;

pub use curve::{CurveKind, CurveMeta, DistributionCurve};
pub use vkernel::{
    spacing_survival, sum_two_cdf, tw_curve, v_kernel, v_kernel_cross_check, TwCurve, ZETA_WINDOW,
};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fredholm::{
    build_scheme, fredholm_det_default, s_derivatives, NystromOperator, PartitionSpec,
    DEFAULT_L_TRUNC, DEFAULT_NODES_PER_UNIT,
};

pub const MAX_ORDER: usize = 20;
const IMAG_RESIDUE_TOL: f64 = 1e-9;

/// P(zeta_ell < x): the first ell occupancy coefficients of F(x; s).
pub fn kth_largest_cdf(ell: usize, x: f64) -> Result<f64> {
    if !(1..=MAX_ORDER).contains(&ell) {
        return Err(Error::Config(format!("ell must be in 1..={MAX_ORDER}, got {ell}")));
    }
    let p = PartitionSpec::new(vec![x], vec![0.0])?;
    let scheme = build_scheme(&p, DEFAULT_NODES_PER_UNIT, DEFAULT_L_TRUNC)?;
    let c = s_derivatives(&p, &scheme, 1, ell.max(2) - 1, 1.0)?;
    Ok(c[..ell].iter().sum::<f64>().clamp(0.0, 1.0))
}

/// P(zeta_{m_1} < x_1, ..., zeta_{m_k} < x_k) for strictly increasing
/// ranks m and strictly decreasing thresholds x: the constrained sum of
/// mixed occupancy coefficients, extracted by a tensor-product contour.
pub fn joint_cdf(m: &[usize], x: &[f64]) -> Result<f64> {
    if m.len() != x.len() || m.is_empty() {
        return Err(Error::Config("rank and threshold lists must match and be nonempty".into()));
    }
    if !m.windows(2).all(|w| w[0] < w[1]) || m[0] == 0 {
        return Err(Error::Config(format!("ranks must be strictly increasing and positive: {m:?}")));
    }
    let total: usize = m.iter().sum();
    if total > MAX_ORDER {
        return Err(Error::Config(format!(
            "sum of ranks {total} exceeds the supported bound {MAX_ORDER}"
        )));
    }
    let k = m.len();
    let p = PartitionSpec::new(x.to_vec(), vec![0.0; k])?;
    let scheme = build_scheme(&p, DEFAULT_NODES_PER_UNIT, DEFAULT_L_TRUNC)?;
    let op = NystromOperator::new(&p, &scheme)?;

    // trapezoid points per weight; the coefficients are occupancy
    // probabilities, so aliasing is bounded by P(n_A >= mc), negligible
    let top = m[k - 1];
    let mc = (4 * top).max(16);
    let grid = mc.pow(k as u32);
    let mut values = vec![Complex64::new(0.0, 0.0); grid];
    let mut idx = vec![0usize; k];
    for flat in 0..grid {
        let mut rem = flat;
        for i in (0..k).rev() {
            idx[i] = rem % mc;
            rem /= mc;
        }
        // F(conj s) = conj F(s): mirror of an already-computed point
        let mirror: usize = idx
            .iter()
            .fold(0, |acc, &t| acc * mc + (mc - t) % mc);
        if mirror < flat {
            values[flat] = values[mirror].conj();
            continue;
        }
        let s: Vec<Complex64> = idx
            .iter()
            .map(|&t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / mc as f64))
            .collect();
        values[flat] = op.det_for_s(&s)?;
    }

    // enumerate admissible multi-indices j with partial sums below m
    let mut orders = vec![0usize; k];
    let mut total_prob = 0.0;
    loop {
        let mut ok = true;
        let mut partial = 0;
        for i in 0..k {
            partial += orders[i];
            if partial >= m[i] {
                ok = false;
                break;
            }
        }
        if ok {
            let mut c = Complex64::new(0.0, 0.0);
            for (flat, v) in values.iter().enumerate() {
                let mut rem = flat;
                let mut phase = 0usize;
                for i in (0..k).rev() {
                    phase += (rem % mc) * orders[i];
                    rem /= mc;
                }
                let theta = -2.0 * std::f64::consts::PI * (phase % mc) as f64 / mc as f64;
                c += v * Complex64::from_polar(1.0, theta);
            }
            c /= grid as f64;
            if c.im.abs() > IMAG_RESIDUE_TOL {
                return Err(Error::Tolerance(format!(
                    "imaginary residue {:.3e} in coefficient {orders:?}",
                    c.im
                )));
            }
            total_prob += c.re;
        }
        // next multi-index with every entry below its rank bound
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(total_prob.clamp(0.0, 1.0));
            }
            i -= 1;
            orders[i] += 1;
            if orders[i] < m[i] {
                break;
            }
            orders[i] = 0;
        }
    }
}

/// P(no particles in (x2, x1)) = F(x1, x2; 1, 0).
pub fn gap_probability(x2: f64, x1: f64) -> Result<f64> {
    if !(x2 < x1) {
        return Err(Error::Domain(format!("gap interval needs x2 < x1, got ({x2}, {x1})")));
    }
    let p = PartitionSpec::new(vec![x1, x2], vec![1.0, 0.0])?;
    Ok(fredholm_det_default(&p)?.det)
}

/// P(zeta_1 < x1 | largest s-thinned particle < x2).
pub fn conditional_largest_cdf(x1: f64, x2: f64, s: f64) -> Result<f64> {
    if !(0.0 < s && s < 1.0) {
        return Err(Error::Domain(format!("thinning weight must be in (0, 1), got {s}")));
    }
    let denom = fredholm_det_default(&PartitionSpec::new(vec![x2], vec![s])?)?.det;
    let num = if x1 > x2 {
        fredholm_det_default(&PartitionSpec::new(vec![x1, x2], vec![0.0, s])?)?.det
    } else {
        fredholm_det_default(&PartitionSpec::new(vec![x1], vec![0.0])?)?.det
    };
    Ok(num / denom)
}
