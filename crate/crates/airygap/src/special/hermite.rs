//! Hermite polynomials orthonormal with respect to e^{-x^2/2} on R.

use crate::error::{Error, Result};

pub const HERMITE_MAX_DEGREE: usize = 60;

/// p_j(x), orthonormal for the weight e^{-x^2/2}, by the normalized
/// recurrence p_{j+1} = (x p_j - sqrt(j) p_{j-1}) / sqrt(j+1).
pub fn hermite_orthonormal(j: usize, x: f64) -> Result<f64> {
    if j > HERMITE_MAX_DEGREE {
        return Err(Error::Domain(format!(
            "hermite_orthonormal: degree {j} exceeds supported maximum {HERMITE_MAX_DEGREE}"
        )));
    }
    Ok(hermite_weighted_seq(j, x, 0.0)[j])
}

/// The sequence phi_l(x) = p_l(x) e^{-alpha x^2} for l = 0..=jmax.
///
/// With alpha = 1/4 these are the oscillator functions entering the
/// GUE kernel; keeping the Gaussian inside the recurrence avoids
/// overflow of the bare polynomials at large |x| or degree.
pub fn hermite_weighted_seq(jmax: usize, x: f64, alpha: f64) -> Vec<f64> {
    let norm = 1.0 / (2.0 * std::f64::consts::PI).powf(0.25);
    let g = (-alpha * x * x).exp();
    let mut out = Vec::with_capacity(jmax + 1);
    let mut p0 = norm * g;
    out.push(p0);
    if jmax == 0 {
        return out;
    }
    let mut p1 = x * p0;
    out.push(p1);
    for j in 1..jmax {
        let jf = j as f64;
        let p2 = (x * p1 - jf.sqrt() * p0) / (jf + 1.0).sqrt();
        out.push(p2);
        p0 = p1;
        p1 = p2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gauss_legendre;
    use approx::assert_relative_eq;

    #[test]
    fn constant_polynomial_normalization() {
        let expected = (2.0 * std::f64::consts::PI).powf(-0.25);
        for &x in &[-3.0, 0.0, 7.5] {
            assert_relative_eq!(hermite_orthonormal(0, x).unwrap(), expected);
        }
    }

    #[test]
    fn orthonormality_under_gaussian_weight() {
        let rule = gauss_legendre(200, -12.0, 12.0).unwrap();
        let ip = |a: usize, b: usize| {
            rule.integrate(|x| {
                hermite_orthonormal(a, x).unwrap()
                    * hermite_orthonormal(b, x).unwrap()
                    * (-x * x / 2.0).exp()
            })
        };
        assert!(ip(2, 3).abs() < 1e-12);
        assert_relative_eq!(ip(5, 5), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn degree_limit_enforced() {
        assert!(hermite_orthonormal(60, 1.0).is_ok());
        assert!(hermite_orthonormal(61, 1.0).is_err());
    }

    #[test]
    fn weighted_sequence_matches_bare_values() {
        let seq = hermite_weighted_seq(10, 1.7, 0.25);
        let g = (-1.7f64 * 1.7 / 4.0).exp();
        for j in 0..=10 {
            assert_relative_eq!(
                seq[j],
                hermite_orthonormal(j, 1.7).unwrap() * g,
                max_relative = 1e-13
            );
        }
    }
}
