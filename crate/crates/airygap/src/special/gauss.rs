//! Gauss-Legendre rules with nodes from Newton iteration on the
//! Legendre three-term recurrence.

use crate::error::{Error, Result};

/// Quadrature rule on an interval (a, b).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

impl QuadRule {
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Legendre P_n(t) and P_n'(t) on [-1, 1] by the three-term recurrence.
fn legendre(n: usize, t: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = t;
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 1..n {
        let jf = j as f64;
        let p2 = ((2.0 * jf + 1.0) * t * p1 - jf * p0) / (jf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (t * p1 - p0) / (t * t - 1.0);
    (p1, dp)
}

/// An n-point Gauss-Legendre rule on (a, b), exact for polynomials of
/// degree 2n - 1.
pub fn gauss_legendre(n: usize, a: f64, b: f64) -> Result<QuadRule> {
    if n < 1 {
        return Err(Error::Config("gauss_legendre: n must be >= 1".into()));
    }
    if !(a < b) {
        return Err(Error::Config(format!(
            "gauss_legendre: need a < b, got a = {a}, b = {b}"
        )));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = (n + 1) / 2;
    for i in 0..half {
        // Tricomi initial guess, then Newton
        let mut t = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre(n, t);
            let dt = p / dp;
            t -= dt;
            if dt.abs() < 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence(format!(
                "gauss_legendre: Newton failed for n = {n}, node {i}"
            )));
        }
        let (_, dp) = legendre(n, t);
        let w = 2.0 / ((1.0 - t * t) * dp * dp);
        // t is in decreasing order over i; store symmetric pair
        nodes[i] = -t;
        nodes[n - 1 - i] = t;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    let mid = 0.5 * (a + b);
    let len = 0.5 * (b - a);
    for i in 0..n {
        nodes[i] = mid + len * nodes[i];
        weights[i] *= len;
    }
    Ok(QuadRule {
        nodes,
        weights,
        interval: (a, b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::airy_eval;
    use approx::assert_relative_eq;

    #[test]
    fn two_point_rule_is_classical() {
        let r = gauss_legendre(2, -1.0, 1.0).unwrap();
        let inv_sqrt3 = 1.0 / 3.0f64.sqrt();
        assert_relative_eq!(r.nodes[0], -inv_sqrt3, max_relative = 1e-14);
        assert_relative_eq!(r.nodes[1], inv_sqrt3, max_relative = 1e-14);
        assert_relative_eq!(r.weights[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(r.weights[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn exactness_degree() {
        let r = gauss_legendre(8, 0.0, 1.0).unwrap();
        let integral = r.integrate(|x| x.powi(7));
        assert_relative_eq!(integral, 1.0 / 8.0, max_relative = 1e-15);
    }

    #[test]
    fn airy_integral_against_trapezoid_oracle() {
        // independent fine trapezoid oracle for int_0^10 Ai
        let m = 200_000;
        let h = 10.0 / m as f64;
        let mut trap = 0.5 * (airy_eval(0.0).unwrap().ai + airy_eval(10.0).unwrap().ai);
        for i in 1..m {
            trap += airy_eval(i as f64 * h).unwrap().ai;
        }
        trap *= h;
        // the integral is 1/3 minus a superexponentially small tail
        assert_relative_eq!(trap, 0.333_333_333_299_169, max_relative = 1e-9);

        let r = gauss_legendre(50, 0.0, 10.0).unwrap();
        let gl = r.integrate(|x| airy_eval(x).unwrap().ai);
        assert_relative_eq!(gl, trap, max_relative = 1e-9);
    }

    #[test]
    fn weights_positive_and_sum_to_length() {
        for &(n, a, b) in &[(1, 0.0, 2.0), (7, -3.0, 5.0), (40, 0.0, 10.0), (160, -1.0, 1.0)] {
            let r = gauss_legendre(n, a, b).unwrap();
            assert!(r.weights.iter().all(|&w| w > 0.0));
            let sum: f64 = r.weights.iter().sum();
            assert_relative_eq!(sum, b - a, max_relative = 1e-13);
            assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
            assert!(r.nodes.iter().all(|&x| a < x && x < b));
        }
    }

    #[test]
    fn rule_convergence_on_airy() {
        let f = |x: f64| airy_eval(x).unwrap().ai;
        let i40 = gauss_legendre(40, 0.0, 10.0).unwrap().integrate(f);
        let i80 = gauss_legendre(80, 0.0, 10.0).unwrap().integrate(f);
        assert!((i40 - i80).abs() < 1e-12);
    }

    #[test]
    fn large_rules_converge() {
        assert!(gauss_legendre(2000, -1.0, 1.0).is_ok());
    }
}
