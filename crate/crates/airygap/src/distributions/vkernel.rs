//! The spacing kernel v(x1, x2) and the two k = 2 laws built on it,
//! with a cached Tracy-Widom curve for the outer integrals.
//!
//! Since d/dx1 log F(x1, x2; 0, s2) = s2 R(x1, x1) by the resolvent
//! identity, the mixed derivative d^2 log F / ds2 dx1 at s2 = 0 is
//! exactly the diagonal resolvent at s = (0, 0): the s2-differentiation
//! is analytic, not numerical.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::fredholm::{
    build_scheme, dlog_f_dx, resolvent_diag, s_derivatives, PartitionSpec, DEFAULT_L_TRUNC,
    DEFAULT_NODES_PER_UNIT,
};
use crate::special::gauss_legendre;

/// Integration window in the spectator variable zeta; the integrand is
/// below 1e-12 at both ends for every law here.
pub const ZETA_WINDOW: (f64, f64) = (-8.0, 4.0);
const NODES_PER_PANEL: usize = 10;
/// Regularized gap for the confluent x1 -> x2 limit of v.
const MIN_GAP: f64 = 1e-6;

fn default_scheme(p: &PartitionSpec) -> Result<crate::fredholm::QuadratureScheme> {
    build_scheme(p, DEFAULT_NODES_PER_UNIT, DEFAULT_L_TRUNC)
}

/// v(x1, x2) = d^2 log F(x1, x2; 0, s2) / ds2 dx1 at s2 = 0, the
/// density factor of the spacing and sum laws.
pub fn v_kernel(x1: f64, x2: f64) -> Result<f64> {
    if !(x1 > x2) {
        return Err(Error::Domain(format!("v_kernel requires x1 > x2, got ({x1}, {x2})")));
    }
    let p = PartitionSpec::new(vec![x1, x2], vec![0.0, 0.0])?;
    let scheme = default_scheme(&p)?;
    resolvent_diag(&p, &scheme, 1)
}

/// v by the analytic route next to the finite-difference route
/// (contour s2-derivative of F, centered x1 differences); errs if they
/// disagree beyond 1e-5.
pub fn v_kernel_cross_check(x1: f64, x2: f64) -> Result<(f64, f64)> {
    let analytic = v_kernel(x1, x2)?;
    let h = 1e-4;
    let ds2 = |x: f64| -> Result<(f64, f64)> {
        let p = PartitionSpec::new(vec![x, x2], vec![0.0, 0.0])?;
        let scheme = default_scheme(&p)?;
        let c = s_derivatives(&p, &scheme, 2, 1, 1.0)?;
        Ok((c[0], c[1]))
    };
    let (f0_hi, d_hi) = ds2(x1 + h)?;
    let (f0_lo, d_lo) = ds2(x1 - h)?;
    // dF/ds2 differentiated in x1, divided by F(x2; 0) = F(x; x2; 0, 0)
    let fd = (d_hi - d_lo) / (2.0 * h) / (0.5 * (f0_hi + f0_lo));
    if (analytic - fd).abs() > 1e-5 {
        return Err(Error::Tolerance(format!(
            "v({x1}, {x2}): analytic {analytic} vs finite differences {fd}"
        )));
    }
    Ok((analytic, fd))
}

/// Cached F(zeta; 0) with its exact log-derivative at the nodes,
/// interpolated by cubic Hermite pieces.
pub struct TwCurve {
    lo: f64,
    step: f64,
    logf: Vec<f64>,
    dlogf: Vec<f64>,
}

impl TwCurve {
    pub fn build(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(lo < hi && step > 0.0) {
            return Err(Error::Config("TwCurve needs lo < hi and step > 0".into()));
        }
        let n = ((hi - lo) / step).round() as usize + 1;
        let mut logf = Vec::with_capacity(n);
        let mut dlogf = Vec::with_capacity(n);
        for i in 0..n {
            let z = lo + step * i as f64;
            let p = PartitionSpec::new(vec![z], vec![0.0])?;
            let scheme = default_scheme(&p)?;
            let r = crate::fredholm::fredholm_det(&p, &scheme)?;
            logf.push(r.log_det);
            dlogf.push(dlog_f_dx(&p, &scheme, 1)?);
        }
        Ok(TwCurve {
            lo,
            step,
            logf,
            dlogf,
        })
    }

    pub fn log_cdf(&self, z: f64) -> Result<f64> {
        let n = self.logf.len();
        let hi = self.lo + self.step * (n - 1) as f64;
        if !(self.lo..=hi).contains(&z) {
            return Err(Error::Domain(format!("zeta = {z} outside cached [{}, {hi}]", self.lo)));
        }
        let i = (((z - self.lo) / self.step) as usize).min(n - 2);
        let t = (z - (self.lo + self.step * i as f64)) / self.step;
        let (f0, f1) = (self.logf[i], self.logf[i + 1]);
        let (d0, d1) = (self.dlogf[i] * self.step, self.dlogf[i + 1] * self.step);
        let t2 = t * t;
        let t3 = t2 * t;
        Ok((2.0 * t3 - 3.0 * t2 + 1.0) * f0
            + (t3 - 2.0 * t2 + t) * d0
            + (-2.0 * t3 + 3.0 * t2) * f1
            + (t3 - t2) * d1)
    }

    pub fn cdf(&self, z: f64) -> Result<f64> {
        Ok(self.log_cdf(z)?.exp())
    }
}

static TW_CACHE: OnceLock<std::result::Result<TwCurve, String>> = OnceLock::new();

/// Shared Tracy-Widom curve on a window ample for every law here.
pub fn tw_curve() -> Result<&'static TwCurve> {
    TW_CACHE
        .get_or_init(|| TwCurve::build(-9.0, 6.0, 0.125).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(|e| Error::Numerical(format!("Tracy-Widom cache failed to build: {e}")))
}

fn integrate_law<F>(lo: f64, hi: f64, mut integrand: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) {
        return Ok(0.0);
    }
    let panels = ((hi - lo).ceil() as usize).max(1);
    let mut total = 0.0;
    for c in 0..panels {
        let a = lo + (hi - lo) * c as f64 / panels as f64;
        let b = lo + (hi - lo) * (c + 1) as f64 / panels as f64;
        let rule = gauss_legendre(NODES_PER_PANEL, a, b)?;
        for (&z, &w) in rule.nodes.iter().zip(&rule.weights) {
            total += w * integrand(z)?;
        }
    }
    Ok(total)
}

/// P(zeta_1 - zeta_2 > sigma) by the v-kernel integral over the cached
/// Tracy-Widom curve.
pub fn spacing_survival(sigma: f64) -> Result<f64> {
    if !(sigma >= 0.0) {
        return Err(Error::Domain(format!("sigma must be nonnegative, got {sigma}")));
    }
    let gap = sigma.max(MIN_GAP);
    let tw = tw_curve()?;
    integrate_law(ZETA_WINDOW.0, ZETA_WINDOW.1, |z| {
        Ok(v_kernel(z + gap, z)? * tw.cdf(z)?)
    })
}

/// P(zeta_1 + zeta_2 < sigma); the ordering zeta_1 >= zeta_2 restricts
/// the v-integral to zeta < sigma / 2.
///
/// Splitting the defining integral at zeta = sigma / 2 leaves a
/// boundary term: below the split the joint CDF degenerates to the
/// marginal of zeta_1, whose density integrates to F(sigma / 2; 0).
/// Without that term the right-hand side would vanish as sigma grows
/// instead of tending to 1.
pub fn sum_two_cdf(sigma: f64) -> Result<f64> {
    if !sigma.is_finite() {
        return Err(Error::Domain("sigma must be finite".into()));
    }
    let tw = tw_curve()?;
    let boundary = if sigma / 2.0 > ZETA_WINDOW.1 {
        1.0
    } else if sigma / 2.0 < ZETA_WINDOW.0 {
        0.0
    } else {
        tw.cdf(sigma / 2.0)?
    };
    let hi = ZETA_WINDOW.1.min(sigma / 2.0 - MIN_GAP);
    let integral = integrate_law(ZETA_WINDOW.0, hi, |z| {
        Ok(v_kernel(sigma - z, z)? * tw.cdf(z)?)
    })?;
    Ok(boundary + integral)
}
