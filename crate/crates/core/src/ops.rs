//! Phase-point operators A_α = Σ_{λ∋α} P(λ) − I and their invariants.

use crate::geometry::PhasePoint;
use crate::linalg::{dagger, identity, max_abs_diff, trace, CMat};
use crate::net::QuantumNet;

/// The d×d grid of Hermitian operators generated by a quantum net.
#[derive(Debug, Clone)]
pub struct PhasePointOperatorSet {
    pub dim: usize,
    ops: Vec<CMat>,
    pub net: QuantumNet,
}

impl PhasePointOperatorSet {
    pub fn at(&self, pt: PhasePoint) -> &CMat {
        &self.ops[pt.q * self.dim + pt.p]
    }

    pub fn points(&self) -> impl Iterator<Item = PhasePoint> + '_ {
        let d = self.dim;
        (0..d).flat_map(move |q| (0..d).map(move |p| PhasePoint::new(q, p)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (PhasePoint, &CMat)> {
        self.points().map(move |pt| (pt, self.at(pt)))
    }
}

/// A_α for every grid point: the sum of the d+1 assigned line projectors
/// through α minus the identity.
pub fn phase_point_operators(net: &QuantumNet) -> PhasePointOperatorSet {
    let d = net.dim();
    let mut ops = Vec::with_capacity(d * d);
    for q in 0..d {
        for p in 0..d {
            let pt = PhasePoint::new(q, p);
            let mut a = -identity(d);
            for (i, j) in net.lines_through(pt) {
                a = a + net.line_projector(i, j);
            }
            ops.push(a);
        }
    }
    PhasePointOperatorSet {
        dim: d,
        ops,
        net: net.clone(),
    }
}

/// Deviations from the operator-set invariants.
#[derive(Debug, Clone)]
pub struct OperatorReport {
    pub dim: usize,
    /// max |A − A†| entrywise.
    pub hermiticity_dev: f64,
    /// max |Tr A_α − 1|.
    pub trace_dev: f64,
    /// max |Tr(A_α A_β) − d·δ_{α,β}|.
    pub orthogonality_dev: f64,
    /// max ‖Σ_{α∈λ} A_α − d·P(λ)‖ over all lines of the net.
    pub line_sum_dev: f64,
}

impl OperatorReport {
    pub fn pass(&self) -> bool {
        self.hermiticity_dev < 1e-12
            && self.trace_dev < 1e-12
            && self.orthogonality_dev < 1e-10
            && self.line_sum_dev < 1e-12
    }
}

/// Check Hermiticity, unit trace, Schmidt orthogonality Tr(A_αA_β) = d·δ and
/// the line-sum identity Σ_{α∈λ} A_α = d·P(λ).
pub fn operator_invariants(ops: &PhasePointOperatorSet) -> OperatorReport {
    let d = ops.dim;
    let df = d as f64;
    let mut herm: f64 = 0.0;
    let mut tr: f64 = 0.0;
    for (_, a) in ops.iter() {
        herm = herm.max(max_abs_diff(a, &dagger(a)));
        let t = trace(a);
        tr = tr.max(((t.re - 1.0).powi(2) + t.im.powi(2)).sqrt());
    }
    let mut orth: f64 = 0.0;
    let pts: Vec<PhasePoint> = ops.points().collect();
    for &a in &pts {
        for &b in &pts {
            let target = if a == b { df } else { 0.0 };
            let prod = trace(&ops.at(a).dot(ops.at(b)));
            orth = orth.max(((prod.re - target).powi(2) + prod.im.powi(2)).sqrt());
        }
    }
    let mut line_sum: f64 = 0.0;
    for (i, striation) in ops.net.space.striations.iter().enumerate() {
        for (j, line) in striation.lines.iter().enumerate() {
            let mut sum = CMat::zeros((d, d));
            for &pt in &line.points {
                sum += ops.at(pt);
            }
            let target = ops.net.line_projector(i, j).mapv(|z| z * crate::linalg::cr(df));
            line_sum = line_sum.max(max_abs_diff(&sum, &target));
        }
    }
    OperatorReport {
        dim: d,
        hermiticity_dev: herm,
        trace_dev: tr,
        orthogonality_dev: orth,
        line_sum_dev: line_sum,
    }
}
