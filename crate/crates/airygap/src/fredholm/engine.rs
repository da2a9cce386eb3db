//! Determinant and resolvent evaluation on a fixed Nyström scheme.
//!
//! The kernel matrix is assembled once per scheme, with the symmetrized
//! weights sqrt(w_a) sqrt(w_b); the occupancy weights (1 - s_j) only
//! scale columns, so one operator serves every s (including complex s
//! on the contour-derivative path).

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::linalg::LuFactor;
use super::{PartitionSpec, QuadratureScheme};
use crate::error::{Error, Result};
use crate::special::{airy_eval, airy_kernel, airy_kernel_du};

/// Determinant of the discretized operator together with an embedded
/// error estimate.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FredholmResult {
    pub det: f64,
    pub log_det: f64,
    /// |log det(N) - log det(N/2)| from the half-resolution evaluation.
    pub err_est: f64,
    pub n: usize,
}

pub struct NystromOperator {
    /// sqrt(w_a) sqrt(w_b) K(t_a, t_b), no occupancy weights.
    kernel: DMatrix<f64>,
    sqrt_w: Vec<f64>,
    nodes: Vec<f64>,
    interval_idx: Vec<usize>,
    n: usize,
}

impl NystromOperator {
    pub fn new(p: &PartitionSpec, scheme: &QuadratureScheme) -> Result<Self> {
        let n = scheme.n;
        let _ = p;
        let pairs: Vec<(f64, f64)> = scheme
            .nodes
            .iter()
            .map(|&t| airy_eval(t).map(|a| (a.ai, a.aip)))
            .collect::<Result<_>>()?;
        let mut kernel = DMatrix::zeros(n, n);
        for a in 0..n {
            let ta = scheme.nodes[a];
            let (ai_a, aip_a) = pairs[a];
            for b in 0..=a {
                let tb = scheme.nodes[b];
                let d = ta - tb;
                let k = if d.abs() <= crate::special::DIAG_SWITCH {
                    airy_kernel(ta, tb)?
                } else {
                    let (ai_b, aip_b) = pairs[b];
                    (ai_a * aip_b - aip_a * ai_b) / d
                };
                let v = scheme.weights[a].sqrt() * scheme.weights[b].sqrt() * k;
                kernel[(a, b)] = v;
                kernel[(b, a)] = v;
            }
        }
        Ok(NystromOperator {
            kernel,
            sqrt_w: scheme.weights.iter().map(|w| w.sqrt()).collect(),
            nodes: scheme.nodes.clone(),
            interval_idx: scheme.interval_idx.clone(),
            n,
        })
    }

    fn system_matrix(&self, s: &[Complex64]) -> DMatrix<Complex64> {
        let n = self.n;
        let mut m = DMatrix::zeros(n, n);
        for b in 0..n {
            let mult = Complex64::new(1.0, 0.0) - s[self.interval_idx[b]];
            for a in 0..n {
                m[(a, b)] = -mult * self.kernel[(a, b)];
            }
            m[(b, b)] += 1.0;
        }
        m
    }

    /// det(I - M) for the given (possibly complex) occupancy weights.
    pub fn det_for_s(&self, s: &[Complex64]) -> Result<Complex64> {
        // all-ones weights give the zero operator exactly
        if s.iter().all(|v| *v == Complex64::new(1.0, 0.0)) {
            return Ok(Complex64::new(1.0, 0.0));
        }
        let lu = LuFactor::new(self.system_matrix(s))?;
        Ok(lu.det())
    }

    pub fn log_det_real(&self, s: &[f64]) -> Result<f64> {
        if s.iter().all(|&v| v == 1.0) {
            return Ok(0.0);
        }
        let sc: Vec<Complex64> = s.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let lu = LuFactor::new(self.system_matrix(&sc))?;
        let (phase, logmag) = lu.det_log();
        if phase.re <= 0.0 || phase.im.abs() > 1e-12 {
            return Err(Error::Numerical(format!(
                "determinant is not positive for real weights (phase {phase}); discretization failed"
            )));
        }
        Ok(logmag)
    }

    /// Diagonal resolvent value R(x, x) at the point `x` approached
    /// inside interval A_{side+1} (0-based `side`).
    ///
    /// Solves the two Nyström systems for F = (I-K)^{-1} f and
    /// H = (I-K^t)^{-1} h and forms the confluent limit F'^t(x) H(x).
    pub fn resolvent_diag(&self, s: &[Complex64], x: f64, side: usize) -> Result<Complex64> {
        let n = self.n;
        let one = Complex64::new(1.0, 0.0);
        let lu = LuFactor::new(self.system_matrix(s))?;

        // g = sqrt(w) F at the nodes, two components
        let pairs: Vec<(f64, f64)> = self
            .nodes
            .iter()
            .map(|&t| airy_eval(t).map(|a| (a.ai, a.aip)))
            .collect::<Result<_>>()?;
        let mut g1: Vec<Complex64> = (0..n)
            .map(|a| Complex64::new(self.sqrt_w[a] * pairs[a].0, 0.0))
            .collect();
        let mut g2: Vec<Complex64> = (0..n)
            .map(|a| Complex64::new(self.sqrt_w[a] * pairs[a].1, 0.0))
            .collect();
        lu.solve(&mut g1);
        lu.solve(&mut g2);

        // y = sqrt(w) H at the nodes; system matrix is the transpose,
        // i.e. columns scaled by (1 - s_{j(a)}) on the row index.
        let mut mt = DMatrix::zeros(n, n);
        for a in 0..n {
            let mult = one - s[self.interval_idx[a]];
            for b in 0..n {
                mt[(a, b)] = -mult * self.kernel[(b, a)];
            }
            mt[(a, a)] += 1.0;
        }
        let lut = LuFactor::new(mt)?;
        let mut y1: Vec<Complex64> = (0..n)
            .map(|a| {
                (one - s[self.interval_idx[a]]) * Complex64::new(self.sqrt_w[a] * pairs[a].1, 0.0)
            })
            .collect();
        let mut y2: Vec<Complex64> = (0..n)
            .map(|a| {
                (one - s[self.interval_idx[a]]) * Complex64::new(-self.sqrt_w[a] * pairs[a].0, 0.0)
            })
            .collect();
        lut.solve(&mut y1);
        lut.solve(&mut y2);

        // F'(x) by derivative interpolation of the Nystrom formula
        let px = airy_eval(x)?;
        let mut f1p = Complex64::new(px.aip, 0.0);
        let mut f2p = Complex64::new(x * px.ai, 0.0);
        for b in 0..n {
            let mult = one - s[self.interval_idx[b]];
            let ku = Complex64::new(self.sqrt_w[b] * airy_kernel_du(x, self.nodes[b])?, 0.0);
            f1p += mult * ku * g1[b];
            f2p += mult * ku * g2[b];
        }

        // H(x) approached from the prescribed side
        let mult_side = one - s[side];
        let mut h1 = Complex64::new(px.aip, 0.0);
        let mut h2 = Complex64::new(-px.ai, 0.0);
        for b in 0..n {
            let kv = Complex64::new(self.sqrt_w[b] * airy_kernel(self.nodes[b], x)?, 0.0);
            h1 += kv * y1[b];
            h2 += kv * y2[b];
        }
        h1 *= mult_side;
        h2 *= mult_side;

        Ok(f1p * h1 + f2p * h2)
    }
}

/// det(I - M) with the partition's own weights, plus the embedded
/// half-resolution error estimate.
pub fn fredholm_det(p: &PartitionSpec, scheme: &QuadratureScheme) -> Result<FredholmResult> {
    let op = NystromOperator::new(p, scheme)?;
    let log_det = op.log_det_real(p.s())?;
    let coarse_scheme = super::build_scheme(p, (scheme.nodes_per_unit / 2.0).max(4.0), scheme.l_trunc)?;
    let coarse = NystromOperator::new(p, &coarse_scheme)?;
    let log_coarse = coarse.log_det_real(p.s())?;
    Ok(FredholmResult {
        det: log_det.exp(),
        log_det,
        err_est: (log_det - log_coarse).abs(),
        n: scheme.n,
    })
}

/// Side rule for the diagonal resolvent limit at x_j (1-based j):
/// approach from the right inside A_j unless s_j = 1, in which case the
/// limit is taken from the left inside A_{j+1}.
fn resolvent_side(p: &PartitionSpec, j: usize) -> Result<usize> {
    if j == 0 || j > p.k() {
        return Err(Error::Config(format!("interval index {j} out of range 1..={}", p.k())));
    }
    if p.s()[j - 1] != 1.0 {
        Ok(j - 1)
    } else if j < p.k() && p.s()[j] != 1.0 {
        Ok(j)
    } else {
        Err(Error::Domain(format!(
            "resolvent at x_{j}: s_{j} = 1 requires the limit from the left with weight 1 - s_{}, \
             but that weight vanishes too",
            j + 1
        )))
    }
}

/// R(x_j, x_j) with the one-sided limit prescribed by the side rule.
pub fn resolvent_diag(p: &PartitionSpec, scheme: &QuadratureScheme, j: usize) -> Result<f64> {
    let side = resolvent_side(p, j)?;
    let op = NystromOperator::new(p, scheme)?;
    let s: Vec<Complex64> = p.s().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let r = op.resolvent_diag(&s, p.x()[j - 1], side)?;
    Ok(r.re)
}

/// d/dx_j log F via the exact resolvent identity: the prefactor is
/// (s_{j+1} - s_j) / (1 - s_j), or with 1 - s_{j+1} in the denominator
/// when the left-limit rule applies.
pub fn dlog_f_dx(p: &PartitionSpec, scheme: &QuadratureScheme, j: usize) -> Result<f64> {
    let side = resolvent_side(p, j)?;
    let s_j = p.s()[j - 1];
    let s_next = p.s_next(j);
    let denom = if side == j - 1 { 1.0 - s_j } else { 1.0 - s_next };
    let op = NystromOperator::new(p, scheme)?;
    let s: Vec<Complex64> = p.s().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let r = op.resolvent_diag(&s, p.x()[j - 1], side)?;
    Ok((s_next - s_j) / denom * r.re)
}
