//! Multi-interval Nyström discretization of the Airy operator.
//!
//! The unbounded interval A_1 = (x_1, +infinity) is truncated at
//! x_1 + L; the superexponential decay of the Airy kernel makes the
//! truncation error exp(-(4/3)(x_1+L)^{3/2}) once x_1 + L > 0, and that
//! bound is recorded on the scheme.

use super::PartitionSpec;
use crate::error::{Error, Result};
use crate::special::gauss_legendre;

/// Largest Gauss panel; long intervals are split into panels of at most
/// this many nodes.
const MAX_PANEL_NODES: usize = 40;
/// Every finite interval gets at least this many nodes, however short.
const MIN_INTERVAL_NODES: usize = 4;

pub const DEFAULT_NODES_PER_UNIT: f64 = 10.0;
pub const DEFAULT_L_TRUNC: f64 = 14.0;

/// Quadrature layout for one partition: flattened node/weight arrays
/// with the index of the interval A_j (1-based j stored as 0-based)
/// owning each node.
#[derive(Debug, Clone)]
pub struct QuadratureScheme {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// 0-based interval index: nodes in A_{j+1} carry value j.
    pub interval_idx: Vec<usize>,
    pub n: usize,
    pub nodes_per_unit: f64,
    pub l_trunc: f64,
    /// Bound on the tail truncation error, when meaningful.
    pub tail_bound: Option<f64>,
}

/// Lay out Gauss panels on (a, b) with roughly `nodes` nodes total.
fn fill_panels(
    a: f64,
    b: f64,
    nodes: usize,
    idx: usize,
    scheme: &mut QuadratureScheme,
) -> Result<()> {
    let panels = nodes.div_ceil(MAX_PANEL_NODES);
    let per = nodes.div_ceil(panels);
    let step = (b - a) / panels as f64;
    for p in 0..panels {
        let rule = gauss_legendre(per, a + p as f64 * step, a + (p + 1) as f64 * step)?;
        scheme.nodes.extend_from_slice(&rule.nodes);
        scheme.weights.extend_from_slice(&rule.weights);
        scheme.interval_idx.extend(std::iter::repeat_n(idx, per));
    }
    Ok(())
}

/// Build the discretization of the operator for partition `p`.
pub fn build_scheme(p: &PartitionSpec, nodes_per_unit: f64, l_trunc: f64) -> Result<QuadratureScheme> {
    if nodes_per_unit < 4.0 {
        return Err(Error::Config(format!(
            "nodes_per_unit must be >= 4, got {nodes_per_unit}"
        )));
    }
    if l_trunc < 8.0 {
        return Err(Error::Config(format!("L_trunc must be >= 8, got {l_trunc}")));
    }
    let x = p.x();
    let k = p.k();
    let mut scheme = QuadratureScheme {
        nodes: Vec::new(),
        weights: Vec::new(),
        interval_idx: Vec::new(),
        n: 0,
        nodes_per_unit,
        l_trunc,
        tail_bound: None,
    };
    // truncated top interval A_1 = (x_1, x_1 + L)
    let top_nodes = ((l_trunc * nodes_per_unit).ceil() as usize).max(MIN_INTERVAL_NODES);
    fill_panels(x[0], x[0] + l_trunc, top_nodes, 0, &mut scheme)?;
    // finite intervals A_j = (x_j, x_{j-1}), j = 2..=k
    for j in 1..k {
        let (a, b) = (x[j], x[j - 1]);
        let nodes = (((b - a) * nodes_per_unit).ceil() as usize).max(MIN_INTERVAL_NODES);
        if nodes < MIN_INTERVAL_NODES {
            return Err(Error::Config(format!(
                "interval ({a}, {b}) received fewer than {MIN_INTERVAL_NODES} nodes"
            )));
        }
        fill_panels(a, b, nodes, j, &mut scheme)?;
    }
    scheme.n = scheme.nodes.len();
    let edge = x[0] + l_trunc;
    if edge > 0.0 {
        scheme.tail_bound = Some((-4.0 / 3.0 * edge * edge.sqrt()).exp());
    }
    Ok(scheme)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_interval_layout() {
        let p = PartitionSpec::new(vec![0.0], vec![0.0]).unwrap();
        let s = build_scheme(&p, 10.0, 14.0).unwrap();
        assert_eq!(s.n, 140);
        assert!(s.nodes.iter().all(|&t| t > 0.0 && t < 14.0));
        assert!(s.interval_idx.iter().all(|&j| j == 0));
    }

    #[test]
    fn two_interval_layout_avoids_partition_points() {
        let p = PartitionSpec::new(vec![1.0, -1.0], vec![0.3, 0.3]).unwrap();
        let s = build_scheme(&p, 10.0, 14.0).unwrap();
        // panels on (-1, 1) and (1, 15), no node at the junction
        assert!(s.nodes.iter().all(|&t| t > -1.0 && t < 15.0 && t != 1.0));
        let finite: Vec<f64> = s
            .nodes
            .iter()
            .zip(&s.interval_idx)
            .filter(|(_, &j)| j == 1)
            .map(|(&t, _)| t)
            .collect();
        assert!(finite.iter().all(|&t| t < 1.0));
        assert!(!finite.is_empty());
    }

    #[test]
    fn tail_bound_negligible_at_default_truncation() {
        let p = PartitionSpec::new(vec![0.0], vec![0.0]).unwrap();
        let s = build_scheme(&p, 10.0, 14.0).unwrap();
        assert!(s.tail_bound.unwrap() < 1e-30);
    }

    #[test]
    fn preconditions_enforced() {
        let p = PartitionSpec::new(vec![0.0], vec![0.0]).unwrap();
        assert!(build_scheme(&p, 3.0, 14.0).is_err());
        assert!(build_scheme(&p, 10.0, 7.0).is_err());
    }

    #[test]
    fn tiny_interval_still_resolved() {
        let p = PartitionSpec::new(vec![0.0, -1e-6], vec![0.5, 0.1]).unwrap();
        let s = build_scheme(&p, 10.0, 14.0).unwrap();
        let tiny = s.interval_idx.iter().filter(|&&j| j == 1).count();
        assert!(tiny >= 4);
    }

    #[test]
    fn coverage_of_weights() {
        let p = PartitionSpec::new(vec![2.0, 0.5, -1.0], vec![0.1, 0.6, 0.3]).unwrap();
        let s = build_scheme(&p, 10.0, 14.0).unwrap();
        let total: f64 = s.weights.iter().sum();
        // union of panels is (x_k, x_1 + L)
        approx::assert_relative_eq!(total, 14.0 + 3.0, max_relative = 1e-12);
    }
}
