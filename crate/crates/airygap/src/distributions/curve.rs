//! Curve container for the evaluated probability laws, with the
//! monotonicity contract checked at construction.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Cdf,
    Survival,
    Density,
}

/// Parameter record carried alongside a curve so any output file is
/// self-describing.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CurveMeta {
    pub law: String,
    pub params: Vec<(String, f64)>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DistributionCurve {
    pub abscissae: Vec<f64>,
    pub values: Vec<f64>,
    pub kind: CurveKind,
    pub meta: CurveMeta,
}

impl DistributionCurve {
    /// Validate ranges and the direction of monotonicity for the kind;
    /// reports the first offending abscissa.
    pub fn new(
        abscissae: Vec<f64>,
        values: Vec<f64>,
        kind: CurveKind,
        meta: CurveMeta,
    ) -> Result<Self> {
        if abscissae.len() != values.len() || abscissae.is_empty() {
            return Err(Error::Config("curve needs equally many abscissae and values".into()));
        }
        if !abscissae.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("curve abscissae must be strictly increasing".into()));
        }
        // tiny quadrature jitter must not fail a monotone law
        let slack = 1e-9;
        for (i, w) in values.windows(2).enumerate() {
            let bad = match kind {
                CurveKind::Cdf => w[1] < w[0] - slack,
                CurveKind::Survival => w[1] > w[0] + slack,
                CurveKind::Density => false,
            };
            if bad {
                return Err(Error::Tolerance(format!(
                    "curve not monotone at abscissa {}: {} -> {}",
                    abscissae[i + 1],
                    w[0],
                    w[1]
                )));
            }
        }
        if matches!(kind, CurveKind::Cdf | CurveKind::Survival) {
            for (i, &v) in values.iter().enumerate() {
                if !(-slack..=1.0 + slack).contains(&v) {
                    return Err(Error::Tolerance(format!(
                        "probability {v} outside [0, 1] at abscissa {}",
                        abscissae[i]
                    )));
                }
            }
        }
        Ok(DistributionCurve {
            abscissae,
            values,
            kind,
            meta,
        })
    }
}
