//! Airy function Ai and its derivative on the real line.
//!
//! The accuracy window is [-50, 200]. On [-50, 12.25] the pair (Ai, Ai')
//! is propagated by a local Taylor expansion of y'' = x y around the
//! nearest entry of a precomputed anchor table with spacing 1/2, so the
//! expansion radius never exceeds 1/4 and no cancellation builds up.
//! Beyond the table the exponentially decaying asymptotic expansion is
//! used, truncated at its smallest term.

use super::airy_table::{ANCHORS, ANCHOR_LO, ANCHOR_STEP};
use crate::error::{Error, Result};

/// Value of Ai and Ai' at a common point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryPair {
    pub ai: f64,
    pub aip: f64,
}

pub const AIRY_WINDOW: (f64, f64) = (-50.0, 200.0);

/// Crossover from the anchored Taylor representation to the asymptotic
/// expansion. The table extends to 12, so every point below the switch
/// is within 1/4 of an anchor.
const X_ASYMPTOTIC: f64 = 12.25;

/// Evaluate Ai(x) and Ai'(x).
pub fn airy_eval(x: f64) -> Result<AiryPair> {
    if !(AIRY_WINDOW.0..=AIRY_WINDOW.1).contains(&x) {
        return Err(Error::Domain(format!(
            "airy_eval: x = {x} outside accuracy window [{}, {}]",
            AIRY_WINDOW.0, AIRY_WINDOW.1
        )));
    }
    if x > X_ASYMPTOTIC {
        Ok(airy_asymptotic(x))
    } else {
        Ok(airy_taylor(x))
    }
}

/// Taylor propagation of y'' = x y from the nearest anchor.
///
/// With T_n = y^(n)(a)/n!, the ODE gives
/// (n+2)(n+1) T_{n+2} = a T_n + T_{n-1}.
fn airy_taylor(x: f64) -> AiryPair {
    let idx = ((x - ANCHOR_LO) / ANCHOR_STEP).round() as usize;
    let idx = idx.min(ANCHORS.len() - 1);
    let a = ANCHOR_LO + idx as f64 * ANCHOR_STEP;
    let (ai_a, aip_a) = ANCHORS[idx];
    let h = x - a;

    // T_{n-1}, T_n, T_{n+1} rolling; accumulate value and derivative.
    let mut t_prev = 0.0_f64; // T_{-1}
    let mut t0 = ai_a; // T_0
    let mut t1 = aip_a; // T_1
    let mut val = t0 + t1 * h;
    let mut der = t1;
    let mut hp = h; // h^{n+1}
    // terms alternate in the oscillatory region, so no early exit on a
    // single small term; 34 terms reach machine precision at |h| <= 1/4
    for n in 0..34 {
        let t2 = (a * t0 + t_prev) / (((n + 2) * (n + 1)) as f64);
        der += ((n + 2) as f64) * t2 * hp;
        hp *= h;
        // hp is now h^{n+2}
        val += t2 * hp;
        t_prev = t0;
        t0 = t1;
        t1 = t2;
    }
    AiryPair { ai: val, aip: der }
}

/// Poincaré expansion for large positive x (DLMF 9.7.5-9.7.6),
/// truncated at the smallest term.
fn airy_asymptotic(x: f64) -> AiryPair {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let pre = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let x4 = x.powf(0.25);

    let mut u = 1.0_f64; // u_k
    let mut sum_ai = 1.0_f64;
    let mut sum_aip = 1.0_f64;
    let mut zk = 1.0_f64; // zeta^k
    let mut sign = 1.0_f64;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        u *= (6.0 * kf - 1.0) * (6.0 * kf - 3.0) * (6.0 * kf - 5.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        zk *= zeta;
        sign = -sign;
        let term = u / zk;
        if term > last {
            break; // past the smallest term, stop
        }
        last = term;
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        sum_ai += sign * term;
        sum_aip += sign * v / zk;
        if term < 1e-18 {
            break;
        }
    }
    AiryPair {
        ai: pre / x4 * sum_ai,
        aip: -pre * x4 * sum_aip,
    }
}

/// Separation below which the two-point kernel formula is replaced by
/// the diagonal form evaluated at the midpoint.
pub const DIAG_SWITCH: f64 = 1e-4;

/// The Airy kernel (Ai(u)Ai'(v) - Ai'(u)Ai(v)) / (u - v), with the
/// confluent diagonal form Ai'(m)^2 - m Ai(m)^2 near the diagonal.
pub fn airy_kernel(u: f64, v: f64) -> Result<f64> {
    if (u - v).abs() <= DIAG_SWITCH {
        let m = 0.5 * (u + v);
        let p = airy_eval(m)?;
        Ok(p.aip * p.aip - m * p.ai * p.ai)
    } else {
        let pu = airy_eval(u)?;
        let pv = airy_eval(v)?;
        Ok((pu.ai * pv.aip - pu.aip * pv.ai) / (u - v))
    }
}

/// d/du of the Airy kernel, needed for the diagonal resolvent limit.
///
/// Away from the diagonal this is
///   [Ai'(u)Ai'(v) - u Ai(u)Ai(v)] / (u-v) - K(u,v) / (u-v),
/// using Ai'' = x Ai. Near the diagonal the midpoint expansion
///   K(u,v) = A(m) + B(m) d^2 + O(d^4),  d = u - v,
/// with A = Ai'^2 - m Ai^2, A' = -Ai^2 and
/// B = Ai Ai'/12 + m Ai'^2/6 - m^2 Ai^2/6 gives
///   dK/du = A'(m)/2 + 2 d B(m) + O(d^2).
pub fn airy_kernel_du(u: f64, v: f64) -> Result<f64> {
    let d = u - v;
    if d.abs() <= DIAG_SWITCH {
        let m = 0.5 * (u + v);
        let p = airy_eval(m)?;
        let (ai, aip) = (p.ai, p.aip);
        let b = ai * aip / 12.0 + m * aip * aip / 6.0 - m * m * ai * ai / 6.0;
        Ok(-0.5 * ai * ai + 2.0 * d * b)
    } else {
        let pu = airy_eval(u)?;
        let pv = airy_eval(v)?;
        let k = (pu.ai * pv.aip - pu.aip * pv.ai) / d;
        Ok((pu.aip * pv.aip - u * pu.ai * pv.ai) / d - k / d)
    }
}
