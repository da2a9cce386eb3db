//! Taylor coefficients of F in a single weight s_j by contour
//! extraction. F is entire in the weights, so the trapezoid rule on a
//! circle is spectrally accurate, and the coefficients are exactly the
//! occupancy probabilities of the partition intervals.

use num_complex::Complex64;

use super::engine::NystromOperator;
use super::{PartitionSpec, QuadratureScheme};
use crate::error::{Error, Result};

pub const IMAG_RESIDUE_TOL: f64 = 1e-9;

/// (1/i!) d^i F / d s_j^i at s_j = 0 for i = 0..=max_order, the other
/// weights held at their partition values. 1-based j.
pub fn s_derivatives(
    p: &PartitionSpec,
    scheme: &QuadratureScheme,
    j: usize,
    max_order: usize,
    radius: f64,
) -> Result<Vec<f64>> {
    if !(1..=20).contains(&max_order) {
        return Err(Error::Config(format!(
            "max_order must be in 1..=20, got {max_order}"
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::Config(format!("radius must be positive, got {radius}")));
    }
    if j == 0 || j > p.k() {
        return Err(Error::Config(format!("index {j} out of range 1..={}", p.k())));
    }
    let op = NystromOperator::new(p, scheme)?;
    let mut s: Vec<Complex64> = p.s().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let m_c = 32.max(4 * max_order);
    // F(conj s) = conj F(s): evaluate the upper half circle only
    let mut values = vec![Complex64::new(0.0, 0.0); m_c];
    for m in 0..=m_c / 2 {
        let theta = 2.0 * std::f64::consts::PI * m as f64 / m_c as f64;
        s[j - 1] = Complex64::from_polar(radius, theta);
        values[m] = op.det_for_s(&s)?;
        if m > 0 && m < m_c - m {
            values[m_c - m] = values[m].conj();
        }
    }
    let mut coeffs = Vec::with_capacity(max_order + 1);
    for i in 0..=max_order {
        let mut c = Complex64::new(0.0, 0.0);
        for (m, v) in values.iter().enumerate() {
            let theta = -2.0 * std::f64::consts::PI * (i * m % m_c) as f64 / m_c as f64;
            c += v * Complex64::from_polar(1.0, theta);
        }
        c /= m_c as f64 * radius.powi(i as i32);
        if c.im.abs() > IMAG_RESIDUE_TOL {
            return Err(Error::Tolerance(format!(
                "imaginary residue {:.3e} in s-derivative of order {i}",
                c.im
            )));
        }
        coeffs.push(c.re);
    }
    Ok(coeffs)
}
