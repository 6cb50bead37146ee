//! Wigner tables, reconstruction and the scalar quantumness measures built
//! on them.
//!
//! Label convention: the printed entry W_{i,j} (1-based row i, column j)
//! sits at phase point (q, p) = (j−1, i−1). [`DwfTable`] stores the printed
//! layout and exposes both addressings.

use crate::error::Error;
use crate::geometry::PhasePoint;
use crate::linalg::{cr, hermiticity_deviation, trace, CMat};
use crate::ops::PhasePointOperatorSet;
use crate::Result;
use serde::Serialize;

/// Real d×d quasi-probability table, normalized to Σ W = 1.
#[derive(Debug, Clone, Serialize)]
pub struct DwfTable {
    pub dim: usize,
    /// Row-major printed layout: `values[(i-1)*d + (j-1)]` is W_{i,j}.
    pub values: Vec<f64>,
}

impl DwfTable {
    pub fn zeros(dim: usize) -> Self {
        DwfTable { dim, values: vec![0.0; dim * dim] }
    }

    /// Entry at the printed position (i, j), 1-based.
    pub fn at_label(&self, i: usize, j: usize) -> f64 {
        self.values[(i - 1) * self.dim + (j - 1)]
    }

    pub fn set_label(&mut self, i: usize, j: usize, w: f64) {
        self.values[(i - 1) * self.dim + (j - 1)] = w;
    }

    /// Entry at a phase point: W_{i,j} with (i, j) = (p+1, q+1).
    pub fn at_point(&self, pt: PhasePoint) -> f64 {
        self.at_label(pt.p + 1, pt.q + 1)
    }

    pub fn set_point(&mut self, pt: PhasePoint, w: f64) {
        self.set_label(pt.p + 1, pt.q + 1, w)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Printed labels in row-major order, paired with values.
    pub fn labeled(&self) -> impl Iterator<Item = (String, f64)> + '_ {
        let d = self.dim;
        (1..=d).flat_map(move |i| {
            (1..=d).map(move |j| (format!("W_{i}_{j}"), self.at_label(i, j)))
        })
    }
}

fn validate_density(rho: &CMat, d: usize, require_psd: bool) -> Result<()> {
    if rho.nrows() != d || rho.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "state is {}x{}, operators are {d}x{d}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    let herm = hermiticity_deviation(rho);
    if herm > 1e-9 {
        return Err(Error::NotHermitian(herm));
    }
    let t = trace(rho);
    if (t.re - 1.0).abs() > 1e-9 || t.im.abs() > 1e-9 {
        return Err(Error::InvalidState(format!("trace is {t}")));
    }
    if require_psd {
        let eig = crate::eigen::eigh(rho)?;
        if eig.values[0] < -1e-7 {
            return Err(Error::NotPsd { min_eig: eig.values[0] });
        }
    }
    Ok(())
}

/// W_α = Tr(A_α ρ)/d for a density matrix.
pub fn dwf(rho: &CMat, ops: &PhasePointOperatorSet) -> Result<DwfTable> {
    validate_density(rho, ops.dim, true)?;
    Ok(dwf_of_hermitian(rho, ops))
}

/// Same map applied to any trace-1 Hermitian matrix; the map is linear, so
/// positivity is not required, and the round-trip invariants are checked on
/// such inputs.
pub fn dwf_of_hermitian(m: &CMat, ops: &PhasePointOperatorSet) -> DwfTable {
    let d = ops.dim as f64;
    let mut table = DwfTable::zeros(ops.dim);
    for (pt, a) in ops.iter() {
        table.set_point(pt, trace(&a.dot(m)).re / d);
    }
    table
}

/// ρ = Σ_α W_α A_α.
pub fn reconstruct(table: &DwfTable, ops: &PhasePointOperatorSet) -> Result<CMat> {
    if table.dim != ops.dim {
        return Err(Error::DimensionMismatch(format!(
            "table d={} vs operators d={}",
            table.dim, ops.dim
        )));
    }
    let d = ops.dim;
    let mut rho = CMat::zeros((d, d));
    for (pt, a) in ops.iter() {
        rho = rho + a.mapv(|z| z * cr(table.at_point(pt)));
    }
    Ok(rho)
}

/// Per-line consistency check: Σ_{α∈λ} W_α = Tr(P(λ) ρ).
#[derive(Debug, Clone, Serialize)]
pub struct LineSumReport {
    pub max_deviation: f64,
    pub threshold: f64,
    /// (striation, line, deviation) triples.
    pub lines: Vec<(usize, usize, f64)>,
}

impl LineSumReport {
    pub fn pass(&self) -> bool {
        self.max_deviation < self.threshold
    }
}

pub fn line_sum_check(table: &DwfTable, ops: &PhasePointOperatorSet, rho: &CMat) -> Result<LineSumReport> {
    validate_density(rho, ops.dim, false)?;
    let net = &ops.net;
    let mut lines = Vec::new();
    let mut max_dev: f64 = 0.0;
    for (i, striation) in net.space.striations.iter().enumerate() {
        for (j, line) in striation.lines.iter().enumerate() {
            let lhs: f64 = line.points.iter().map(|&pt| table.at_point(pt)).sum();
            let rhs = trace(&net.line_projector(i, j).dot(rho)).re;
            let dev = (lhs - rhs).abs();
            max_dev = max_dev.max(dev);
            lines.push((i, j, dev));
        }
    }
    Ok(LineSumReport {
        max_deviation: max_dev,
        threshold: 1e-10,
        lines,
    })
}

/// |N_G(ρ)|: absolute value of the most negative Tr(A_α ρ) (that is d·W_α,
/// not W_α), zero when none is negative.
pub fn negativity(rho: &CMat, ops: &PhasePointOperatorSet) -> Result<f64> {
    validate_density(rho, ops.dim, true)?;
    let min = ops
        .iter()
        .map(|(_, a)| trace(&a.dot(rho)).re)
        .fold(f64::INFINITY, f64::min);
    Ok(if min < 0.0 { -min } else { 0.0 })
}

/// Σ_{α: W_α<0} |W_α|.
pub fn sum_negativity(table: &DwfTable) -> f64 {
    table.values.iter().filter(|w| **w < 0.0).map(|w| -w).sum()
}

/// Mana log Σ_α |W_α| = log(2·Sn + 1), natural logarithm.
pub fn mana(table: &DwfTable) -> f64 {
    table.values.iter().map(|w| w.abs()).sum::<f64>().ln()
}

/// Depolarizing-noise robustness a* = 1 − 1/(D²·|N_G| + 1), prime D only.
pub fn robustness(neg: f64, prime_dim: usize) -> Result<f64> {
    if !matches!(prime_dim, 2 | 3) {
        return Err(Error::RobustnessDimension(prime_dim));
    }
    if neg < 0.0 {
        return Err(Error::InvalidParams(format!("negativity {neg} < 0")));
    }
    let d2 = (prime_dim * prime_dim) as f64;
    Ok(1.0 - 1.0 / (d2 * neg + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::identity;
    use crate::net::default_net;
    use crate::ops::phase_point_operators;

    fn ops(d: usize) -> PhasePointOperatorSet {
        phase_point_operators(&default_net(d).unwrap())
    }

    #[test]
    fn maximally_mixed_is_uniform() {
        for d in [2usize, 3, 4] {
            let rho = identity(d).mapv(|z| z / cr(d as f64));
            let table = dwf(&rho, &ops(d)).unwrap();
            for w in &table.values {
                assert!((w - 1.0 / (d * d) as f64).abs() < 1e-13);
            }
            assert!((table.sum() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_table_multiset() {
        let mut rho = CMat::zeros((2, 2));
        rho[[0, 0]] = cr(1.0);
        let mut values = dwf(&rho, &ops(2)).unwrap().values;
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expect = [0.0, 0.0, 0.5, 0.5];
        for (v, e) in values.iter().zip(expect.iter()) {
            assert!((v - e).abs() < 1e-12, "{values:?}");
        }
    }

    #[test]
    fn caption_qubit_state_has_negative_entry() {
        // Fig.-2 caption Bloch vector (0.50, 0.56, −0.66).
        let rho = crate::states::qubit_from_bloch(&crate::states::QubitBloch {
            a1: 0.50,
            a2: 0.56,
            a3: -0.66,
        })
        .unwrap();
        let table = dwf(&rho, &ops(2)).unwrap();
        assert!(table.min() < 0.0);
        assert!((table.at_label(1, 1) - (-0.18)).abs() < 1e-12);
    }

    #[test]
    fn uniform_table_reconstructs_identity() {
        for d in [2usize, 3, 4] {
            let table = DwfTable {
                dim: d,
                values: vec![1.0 / (d * d) as f64; d * d],
            };
            let rho = reconstruct(&table, &ops(d)).unwrap();
            let expect = identity(d).mapv(|z| z / cr(d as f64));
            assert!(crate::linalg::max_abs_diff(&rho, &expect) < 1e-12);
        }
    }

    #[test]
    fn sum_negativity_direct_example() {
        let table = DwfTable {
            dim: 2,
            values: vec![-0.1, 0.3, 0.4, 0.4],
        };
        assert!((sum_negativity(&table) - 0.1).abs() < 1e-15);
        assert!((mana(&table) - (2f64 * 0.1 + 1.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn robustness_values() {
        assert_eq!(robustness(0.0, 2).unwrap(), 0.0);
        let neg = (3f64.sqrt() - 1.0) / 2.0;
        let a = robustness(neg, 2).unwrap();
        assert!((a - (10.0 - 2.0 * 3f64.sqrt()) / 11.0).abs() < 1e-14);
        assert!(matches!(robustness(0.5, 4), Err(Error::RobustnessDimension(4))));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let rho = identity(3).mapv(|z| z / cr(3.0));
        assert!(matches!(dwf(&rho, &ops(2)), Err(Error::DimensionMismatch(_))));
    }
}
