//! The coupled Painlevé II system behind the determinant identity: real
//! reduction, backward shooting from the Airy-anchored boundary data,
//! the Tracy-Widom-type log-integral, and the degeneration-rate checks.

mod rk;
mod verify;

pub use rk::OdeSolution;
pub use verify::{verify_reduction, RateReport, ReductionMode};

use crate::error::{Error, Result};
use crate::fredholm::PartitionSpec;
use crate::special::{airy_eval, gauss_legendre};

pub const DEFAULT_T: f64 = 10.0;
pub const DEFAULT_TOL: f64 = 1e-10;
const T_MIN: f64 = 8.0;
const XK_MIN: f64 = -4.0;
const W_MAX: f64 = 1e6;
const TAIL_WINDOW: f64 = 15.0;

/// Solution of the k-component system in the real reduction
/// w_j'' = (xi + x_j) w_j + 2 w_j sum_l sigma_l w_l^2, where the
/// original components are u_j = w_j for sigma_j = +1 and u_j = i w_j
/// for sigma_j = -1, so u_j^2 = sigma_j w_j^2 is always real.
#[derive(Debug, Clone)]
pub struct CoupledPIISolution {
    pub p: PartitionSpec,
    /// signs of s_{j+1} - s_j (s_{k+1} = 1)
    pub sigma: Vec<f64>,
    /// anchoring point of the Airy boundary data
    pub t_anchor: f64,
    /// accepted-step abscissae, decreasing from T to 0
    pub xi_grid: Vec<f64>,
    /// w_j on the grid, one array per component
    pub w: Vec<Vec<f64>>,
    /// w_j' on the grid
    pub w_prime: Vec<Vec<f64>>,
    dense: OdeSolution,
}

impl CoupledPIISolution {
    pub fn k(&self) -> usize {
        self.p.k()
    }

    /// (w, w') at xi in [0, T] from the dense output.
    pub fn eval(&self, xi: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let y = self.dense.eval(xi)?;
        let k = self.k();
        Ok((y[..k].to_vec(), y[k..].to_vec()))
    }

    /// u_j(xi)^2 = sigma_j w_j(xi)^2, the real quantity the theorems
    /// are stated in.
    pub fn u_squared(&self, xi: f64) -> Result<Vec<f64>> {
        let (w, _) = self.eval(xi)?;
        Ok(w.iter().zip(&self.sigma).map(|(&wj, &s)| s * wj * wj).collect())
    }
}

fn rhs(p: &PartitionSpec, sigma: &[f64]) -> impl Fn(f64, &[f64], &mut [f64]) + 'static {
    let x = p.x().to_vec();
    let sigma = sigma.to_vec();
    move |xi: f64, y: &[f64], dy: &mut [f64]| {
        let k = x.len();
        let mut coupling = 0.0;
        for l in 0..k {
            coupling += sigma[l] * y[l] * y[l];
        }
        for j in 0..k {
            dy[j] = y[k + j];
            dy[k + j] = (xi + x[j]) * y[j] + 2.0 * y[j] * coupling;
        }
    }
}

/// Airy boundary data (w, w') at xi = t for every component.
fn boundary_state(p: &PartitionSpec, t: f64) -> Result<Vec<f64>> {
    let k = p.k();
    let mut y = vec![0.0; 2 * k];
    for j in 0..k {
        let amp = (p.s_next(j + 1) - p.s()[j]).abs().sqrt();
        let a = airy_eval(t + p.x()[j])?;
        y[j] = amp * a.ai;
        y[k + j] = amp * a.aip;
    }
    Ok(y)
}

fn shoot(p: &PartitionSpec, sigma: &[f64], t: f64, tol: f64) -> Result<OdeSolution> {
    let y0 = boundary_state(p, t)?;
    // the absolute floor scales with the boundary amplitude of each
    // component: the solutions grow backward by the Airy ratio, and an
    // absolute error committed near the anchor grows by the same factor
    let atol: Vec<f64> = y0.iter().map(|v| tol * v.abs().max(1e-280)).collect();
    rk::integrate(rhs(p, sigma), t, 0.0, &y0, &atol, tol, W_MAX)
}

/// Solve the system by backward shooting from xi = T with the Airy
/// boundary data, then confirm by re-anchoring at T + 2 that the
/// anchoring point was late enough.
pub fn solve_coupled_pii(p: &PartitionSpec, t: f64, tol: f64) -> Result<CoupledPIISolution> {
    if !p.consecutive_s_distinct() {
        return Err(Error::Config(
            "coupled Painlevé II requires s_j != s_{j+1} for every j (s_{k+1} = 1)".into(),
        ));
    }
    if t < T_MIN {
        return Err(Error::Config(format!(
            "anchoring point T = {t} below the minimum {T_MIN}"
        )));
    }
    if p.x()[p.k() - 1] < XK_MIN {
        return Err(Error::Config(format!(
            "x_k = {} below the stability domain bound {XK_MIN}",
            p.x()[p.k() - 1]
        )));
    }
    if !(tol > 0.0 && tol <= 1e-4) {
        return Err(Error::Config(format!("tol must be in (0, 1e-4], got {tol}")));
    }
    let sigma: Vec<f64> = (0..p.k())
        .map(|j| (p.s_next(j + 1) - p.s()[j]).signum())
        .collect();

    let dense = shoot(p, &sigma, t, tol)?;
    let reanchored = shoot(p, &sigma, t + 2.0, tol)?;
    let k = p.k();
    for j in 0..k {
        let diff = (dense.y_end[j] - reanchored.y_end[j]).abs();
        if diff > 100.0 * tol {
            return Err(Error::BoundaryMismatch(format!(
                "re-anchoring at T + 2 moved w_{}(0) by {diff:.3e} > {:.1e}; \
                 the Airy asymptote is not yet accurate at T = {t}",
                j + 1,
                100.0 * tol
            )));
        }
    }

    let mut xi_grid = vec![t];
    xi_grid.extend(dense.steps.iter().map(|s| s.t1));
    let mut w = vec![Vec::with_capacity(xi_grid.len()); k];
    let mut w_prime = vec![Vec::with_capacity(xi_grid.len()); k];
    let y0 = boundary_state(p, t)?;
    for j in 0..k {
        w[j].push(y0[j]);
        w_prime[j].push(y0[k + j]);
    }
    for step in &dense.steps {
        let y = step.eval(step.t1);
        for j in 0..k {
            w[j].push(y[j]);
            w_prime[j].push(y[k + j]);
        }
    }
    Ok(CoupledPIISolution {
        p: p.clone(),
        sigma,
        t_anchor: t,
        xi_grid,
        w,
        w_prime,
        dense,
    })
}

/// -int_0^inf xi sum_j u_j^2 dxi: Gauss quadrature on the dense output
/// over [0, T], Airy-squared surrogate on [T, T + tail_window].
fn tw_log_integral_with_tail(sol: &CoupledPIISolution, tail_window: f64) -> Result<f64> {
    let k = sol.k();
    let base = gauss_legendre(12, 0.0, 1.0)?;
    let mut main = 0.0;
    for step in &sol.dense.steps {
        let (lo, hi) = (step.t1.min(step.t0), step.t1.max(step.t0));
        let h = hi - lo;
        for (&node, &wt) in base.nodes.iter().zip(&base.weights) {
            let xi = lo + h * node;
            let y = step.eval(xi);
            let mut usq = 0.0;
            for j in 0..k {
                usq += sol.sigma[j] * y[j] * y[j];
            }
            main += wt * h * xi * usq;
        }
    }
    // beyond T the components follow the signed Airy asymptote
    let t = sol.t_anchor;
    let mut tail = 0.0;
    let panels = (tail_window / 5.0).ceil() as usize;
    for c in 0..panels {
        let a = t + tail_window * c as f64 / panels as f64;
        let b = t + tail_window * (c + 1) as f64 / panels as f64;
        let rule = gauss_legendre(20, a, b)?;
        for (&xi, &wt) in rule.nodes.iter().zip(&rule.weights) {
            let mut usq = 0.0;
            for j in 0..k {
                let ds = sol.p.s_next(j + 1) - sol.p.s()[j];
                let a_j = airy_eval(xi + sol.p.x()[j])?;
                usq += ds * a_j.ai * a_j.ai;
            }
            tail += wt * xi * usq;
        }
    }
    Ok(-(main + tail))
}

/// log F(x; s) via the Tracy-Widom-type integral of the solution.
pub fn tw_log_integral(sol: &CoupledPIISolution) -> Result<f64> {
    tw_log_integral_with_tail(sol, TAIL_WINDOW)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fredholm::fredholm_det_default;
    use approx::assert_relative_eq;

    fn part(x: &[f64], s: &[f64]) -> PartitionSpec {
        PartitionSpec::new(x.to_vec(), s.to_vec()).unwrap()
    }

    fn solve(x: &[f64], s: &[f64]) -> CoupledPIISolution {
        solve_coupled_pii(&part(x, s), DEFAULT_T, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn hastings_mcleod_tracks_airy() {
        let sol = solve(&[0.0], &[0.0]);
        let (w, _) = sol.eval(8.0).unwrap();
        let ai = airy_eval(8.0).unwrap().ai;
        assert_relative_eq!(w[0], ai, max_relative = 1e-4);
    }

    #[test]
    fn identity_with_fredholm_k1() {
        let sol = solve(&[0.0], &[0.0]);
        let lhs = tw_log_integral(&sol).unwrap();
        let rhs = fredholm_det_default(&part(&[0.0], &[0.0])).unwrap().log_det;
        assert!((lhs - rhs).abs() <= 1e-6, "pii {lhs} vs fredholm {rhs}");
    }

    #[test]
    fn identity_with_fredholm_k2_gap() {
        let p = part(&[1.0, 0.0], &[1.0, 0.0]);
        let sol = solve_coupled_pii(&p, DEFAULT_T, DEFAULT_TOL).unwrap();
        assert_eq!(sol.sigma, vec![-1.0, 1.0]);
        let lhs = tw_log_integral(&sol).unwrap();
        let rhs = fredholm_det_default(&p).unwrap().log_det;
        assert!((lhs - rhs).abs() <= 1e-6, "pii {lhs} vs fredholm {rhs}");
    }

    #[test]
    fn gap_configuration_sign_dichotomy() {
        // u_1^2 <= 0 <= u_2^2 near the anchor per the signed Airy data
        let sol = solve(&[1.0, 0.0], &[1.0, 0.0]);
        for xi in [6.0, 8.0, 9.5] {
            let usq = sol.u_squared(xi).unwrap();
            assert!(usq[0] <= 0.0 && usq[1] >= 0.0);
        }
    }

    #[test]
    fn shift_consistency_k1() {
        // u(xi; x1, s) = q(xi + x1; s): shifting x trades for shifting xi
        let a = solve(&[1.0], &[0.0]);
        let b = solve(&[0.0], &[0.0]);
        for xi in [0.0, 1.0, 2.0] {
            let (wa, _) = a.eval(xi).unwrap();
            let (wb, _) = b.eval(xi + 1.0).unwrap();
            assert_relative_eq!(wa[0], wb[0], max_relative = 1e-7, epsilon = 1e-12);
        }
    }

    #[test]
    fn boundary_vanishes_as_s_tends_to_one() {
        let sol = solve(&[0.0], &[0.999]);
        let integral = tw_log_integral(&sol).unwrap();
        assert!(integral.abs() < 2e-3, "integral {integral}");
        let rhs = fredholm_det_default(&part(&[0.0], &[0.999])).unwrap().log_det;
        assert!((integral - rhs).abs() <= 1e-6);
    }

    #[test]
    fn tail_window_saturated() {
        let sol = solve(&[0.0], &[0.0]);
        let base = tw_log_integral_with_tail(&sol, TAIL_WINDOW).unwrap();
        let wide = tw_log_integral_with_tail(&sol, 2.0 * TAIL_WINDOW).unwrap();
        assert!((base - wide).abs() < 1e-12);
    }

    #[test]
    fn anchoring_point_irrelevant() {
        let p = part(&[0.5, -1.0], &[0.3, 0.8]);
        let a = solve_coupled_pii(&p, 10.0, DEFAULT_TOL).unwrap();
        let b = solve_coupled_pii(&p, 12.0, DEFAULT_TOL).unwrap();
        for j in 0..2 {
            let wa = a.eval(0.0).unwrap().0[j];
            let wb = b.eval(0.0).unwrap().0[j];
            assert!((wa - wb).abs() <= 1e-8, "component {j}: {wa} vs {wb}");
        }
    }

    #[test]
    fn ode_residual_small_on_dense_output() {
        let sol = solve(&[0.5, -1.0], &[0.7, 0.2]);
        let h = 1e-3;
        for i in 1..sol.xi_grid.len() - 1 {
            let xi = sol.xi_grid[i];
            if !(h..=sol.t_anchor - h).contains(&xi) {
                continue;
            }
            let (wm, _) = sol.eval(xi - h).unwrap();
            let (w0, _) = sol.eval(xi).unwrap();
            let (wp, _) = sol.eval(xi + h).unwrap();
            let coupling: f64 = (0..2).map(|l| sol.sigma[l] * w0[l] * w0[l]).sum();
            for j in 0..2 {
                let second = (wp[j] - 2.0 * w0[j] + wm[j]) / (h * h);
                let rhs = (xi + sol.p.x()[j]) * w0[j] + 2.0 * w0[j] * coupling;
                assert!((second - rhs).abs() <= 1e-6, "residual at xi = {xi}");
            }
        }
    }

    #[test]
    fn preconditions_enforced() {
        let equal_s = part(&[0.0, -1.0], &[0.3, 0.3]);
        assert!(matches!(
            solve_coupled_pii(&equal_s, 10.0, 1e-10),
            Err(Error::Config(_))
        ));
        let s_k_one = part(&[0.0], &[1.0]);
        assert!(solve_coupled_pii(&s_k_one, 10.0, 1e-10).is_err());
        let p = part(&[0.0], &[0.0]);
        assert!(solve_coupled_pii(&p, 7.0, 1e-10).is_err());
        assert!(solve_coupled_pii(&part(&[-5.0], &[0.0]), 10.0, 1e-10).is_err());
        assert!(solve_coupled_pii(&p, 10.0, 0.0).is_err());
    }

    #[test]
    fn identity_on_mixed_grid() {
        let cases: [(&[f64], &[f64]); 3] = [
            (&[-1.0], &[0.3]),
            (&[0.0, -1.0], &[0.7, 0.0]),
            (&[1.0, 0.0, -1.0], &[0.3, 0.7, 0.0]),
        ];
        for (x, s) in cases {
            let p = part(x, s);
            let sol = solve_coupled_pii(&p, DEFAULT_T, DEFAULT_TOL).unwrap();
            let lhs = tw_log_integral(&sol).unwrap();
            let rhs = fredholm_det_default(&p).unwrap().log_det;
            assert!(
                (lhs - rhs).abs() <= 1e-6,
                "x = {x:?}, s = {s:?}: pii {lhs} vs fredholm {rhs}"
            );
        }
    }

    #[test]
    fn grid_decreasing_to_zero() {
        let sol = solve(&[0.0], &[0.5]);
        assert_eq!(sol.xi_grid[0], DEFAULT_T);
        assert_eq!(*sol.xi_grid.last().unwrap(), 0.0);
        assert!(sol.xi_grid.windows(2).all(|p| p[0] > p[1]));
    }
}
