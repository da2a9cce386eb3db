//! Embedded Dormand-Prince 5(4) integrator with the classical
//! fourth-order continuous extension, usable in either time direction.

use crate::error::{Error, Result};

/// One accepted step with the dense-output coefficients of the
/// quartic interpolant in theta = (t - t0) / h.
#[derive(Debug, Clone)]
pub struct DenseStep {
    pub t0: f64,
    pub t1: f64,
    rcont: [Vec<f64>; 5],
}

impl DenseStep {
    /// Interpolated state at t, which must lie in the step's span.
    pub fn eval(&self, t: f64) -> Vec<f64> {
        let h = self.t1 - self.t0;
        let theta = (t - self.t0) / h;
        let om = 1.0 - theta;
        let n = self.rcont[0].len();
        let mut y = vec![0.0; n];
        for i in 0..n {
            y[i] = self.rcont[0][i]
                + theta
                    * (self.rcont[1][i]
                        + om * (self.rcont[2][i]
                            + theta * (self.rcont[3][i] + om * self.rcont[4][i])));
        }
        y
    }

    pub fn contains(&self, t: f64) -> bool {
        let (lo, hi) = if self.t0 <= self.t1 {
            (self.t0, self.t1)
        } else {
            (self.t1, self.t0)
        };
        (lo..=hi).contains(&t)
    }
}

/// Dense trajectory of one integration run.
#[derive(Debug, Clone)]
pub struct OdeSolution {
    pub steps: Vec<DenseStep>,
    pub t_end: f64,
    pub y_end: Vec<f64>,
}

impl OdeSolution {
    /// State at t by dense-output interpolation.
    pub fn eval(&self, t: f64) -> Result<Vec<f64>> {
        if let Some(step) = self.steps.iter().find(|s| s.contains(t)) {
            Ok(step.eval(t))
        } else {
            Err(Error::Domain(format!("t = {t} outside the integrated span")))
        }
    }
}

const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// fifth-order minus fourth-order weights, applied to k_1..k_7
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];
// dense-output weights (Hairer-Norsett-Wanner)
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

pub const STEP_FLOOR: f64 = 1e-8;

/// Integrate y' = f(t, y) from t0 to t1 (either direction) with
/// per-component absolute tolerances, a shared relative tolerance, and
/// a hard bound on the solution magnitude.
///
/// Relative control matters here: the backward-shot Painlevé solutions
/// grow by many orders of magnitude from the anchor, and any error
/// committed at the small end is amplified by the same factor, so the
/// absolute floor must scale with the local solution.
pub fn integrate<F>(
    f: F,
    t0: f64,
    t1: f64,
    y0: &[f64],
    atol: &[f64],
    rtol: f64,
    max_abs: f64,
) -> Result<OdeSolution>
where
    F: Fn(f64, &[f64], &mut [f64]),
{
    let n = y0.len();
    assert_eq!(atol.len(), n);
    let dir = (t1 - t0).signum();
    if dir == 0.0 {
        return Ok(OdeSolution {
            steps: vec![],
            t_end: t0,
            y_end: y0.to_vec(),
        });
    }
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k: Vec<Vec<f64>> = (0..7).map(|_| vec![0.0; n]).collect();
    let mut k1 = vec![0.0; n];
    f(t, &y, &mut k1);
    let mut h = dir * 0.01 * (t1 - t0).abs().min(1.0);
    let mut steps = Vec::new();
    let mut ytmp = vec![0.0; n];

    while (t1 - t) * dir > 0.0 {
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        k[0].copy_from_slice(&k1);
        for stage in 0..6 {
            for i in 0..n {
                let mut acc = 0.0;
                for (l, kl) in k.iter().enumerate().take(stage + 1) {
                    acc += A[stage][l] * kl[i];
                }
                ytmp[i] = y[i] + h * acc;
            }
            let tt = t + C[stage] * h;
            let (head, tail) = k.split_at_mut(stage + 1);
            f(tt, &ytmp, &mut tail[0]);
            let _ = head;
        }
        // ytmp now holds the fifth-order solution (stage 6 uses the b row)
        let y1 = ytmp.clone();
        let mut err = 0.0_f64;
        for i in 0..n {
            let mut e = 0.0;
            for (l, kl) in k.iter().enumerate() {
                e += E[l] * kl[i];
            }
            let sc = atol[i] + rtol * y[i].abs().max(y1[i].abs());
            err += (h * e / sc).powi(2);
        }
        err = (err / n as f64).sqrt();

        if err <= 1.0 {
            // accept; k[6] is f at the new point (FSAL)
            let mut rc = [
                y.clone(),
                vec![0.0; n],
                vec![0.0; n],
                vec![0.0; n],
                vec![0.0; n],
            ];
            for i in 0..n {
                let dy = y1[i] - y[i];
                rc[1][i] = dy;
                rc[2][i] = h * k[0][i] - dy;
                rc[3][i] = dy - h * k[6][i] - rc[2][i];
                let mut d = 0.0;
                for (l, kl) in k.iter().enumerate() {
                    d += D[l] * kl[i];
                }
                rc[4][i] = h * d;
            }
            steps.push(DenseStep {
                t0: t,
                t1: t + h,
                rcont: rc,
            });
            t += h;
            y.copy_from_slice(&y1);
            k1.copy_from_slice(&k[6]);
            if y.iter().any(|v| !v.is_finite() || v.abs() > max_abs) {
                return Err(Error::PoleEncountered(format!(
                    "solution magnitude exceeded {max_abs:.1e} at t = {t:.6}"
                )));
            }
        }
        let fac = (0.9 * err.powf(-0.2)).clamp(0.2, 5.0);
        h *= fac;
        if h.abs() < STEP_FLOOR && (t1 - t) * dir > STEP_FLOOR {
            return Err(Error::PoleEncountered(format!(
                "step size underflow at t = {t:.6}"
            )));
        }
    }
    Ok(OdeSolution {
        steps,
        t_end: t,
        y_end: y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exponential_forward_and_backward() {
        let f = |_t: f64, y: &[f64], dy: &mut [f64]| dy[0] = y[0];
        let s = integrate(f, 0.0, 1.0, &[1.0], &[1e-12], 1e-12, 1e6).unwrap();
        assert_relative_eq!(s.y_end[0], 1.0f64.exp(), max_relative = 1e-10);
        let b = integrate(f, 1.0, 0.0, &[1.0f64.exp()], &[1e-12], 1e-12, 1e6).unwrap();
        assert_relative_eq!(b.y_end[0], 1.0, max_relative = 1e-10);
    }

    #[test]
    fn dense_output_matches_cosine() {
        // y'' = -y as a first-order system
        let f = |_t: f64, y: &[f64], dy: &mut [f64]| {
            dy[0] = y[1];
            dy[1] = -y[0];
        };
        let s = integrate(f, 0.0, 6.0, &[1.0, 0.0], &[1e-12, 1e-12], 1e-12, 1e6).unwrap();
        for i in 0..=60 {
            let t = 0.1 * i as f64;
            let y = s.eval(t).unwrap();
            assert_relative_eq!(y[0], t.cos(), epsilon = 1e-9);
            assert_relative_eq!(y[1], -t.sin(), epsilon = 1e-9);
        }
    }

    #[test]
    fn blowup_reported_as_pole() {
        let f = |_t: f64, y: &[f64], dy: &mut [f64]| dy[0] = y[0] * y[0];
        let err = integrate(f, 0.0, 2.0, &[1.0], &[1e-10], 1e-10, 1e6).unwrap_err();
        assert!(matches!(err, Error::PoleEncountered(_)));
    }

    #[test]
    fn out_of_span_eval_rejected() {
        let f = |_t: f64, y: &[f64], dy: &mut [f64]| dy[0] = -y[0];
        let s = integrate(f, 0.0, 1.0, &[1.0], &[1e-10], 1e-10, 1e6).unwrap();
        assert!(s.eval(1.5).is_err());
        assert!(s.eval(-0.1).is_err());
    }
}
