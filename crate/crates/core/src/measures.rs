//! Quantumness measures: l1 coherence, Wootters concurrence and teleportation
//! fidelity, with the Wigner-table route to the correlation matrix.

use crate::eigen::{eigh, sqrt_psd};
use crate::error::Error;
use crate::linalg::{cr, kron, trace, CMat};
use crate::ops::PhasePointOperatorSet;
use crate::states::{paulis, pauli_y};
use crate::wigner::DwfTable;
use crate::Result;
use serde::Serialize;

/// Sum of absolute off-diagonal entries in the computational basis.
pub fn coherence_l1(rho: &CMat) -> f64 {
    let n = rho.nrows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += rho[[i, j]].norm();
            }
        }
    }
    sum
}

/// ρ̃ = (σy ⊗ σy) ρ* (σy ⊗ σy).
pub fn spin_flip(rho: &CMat) -> Result<CMat> {
    if rho.nrows() != 4 || rho.ncols() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "spin flip expects a two-qubit state, got {}x{}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    let yy = kron(&pauli_y(), &pauli_y());
    Ok(yy.dot(&rho.mapv(|z| z.conj())).dot(&yy))
}

/// Wootters concurrence: max(0, λ₁ − λ₂ − λ₃ − λ₄) with λ_i the descending
/// square roots of the spectrum of √ρ ρ̃ √ρ (identical to the spectrum of
/// ρρ̃; the Hermitian form keeps the eigensolver applicable). Round-off below
/// zero is clipped before the square root.
pub fn concurrence(rho: &CMat) -> Result<f64> {
    let flipped = spin_flip(rho)?;
    let root = sqrt_psd(rho)?;
    let m = root.dot(&flipped).dot(&root);
    let eig = eigh(&m)?;
    // eigenvalues at round-off scale are exact zeros; clipping before the
    // square root keeps them from surfacing as sqrt(eps) artifacts
    let vmax = eig.values.iter().cloned().fold(0.0, f64::max);
    let floor = vmax * 1e-13;
    let mut lambdas: Vec<f64> = eig
        .values
        .iter()
        .map(|&v| if v < floor { 0.0 } else { v.sqrt() })
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

/// t_ij = Tr(ρ σ_i ⊗ σ_j) by direct trace.
pub fn correlation_direct(rho: &CMat) -> Result<[[f64; 3]; 3]> {
    if rho.nrows() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "correlation matrix expects a two-qubit state, got {}x{}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    let sig = paulis();
    let mut t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = trace(&kron(&sig[i], &sig[j]).dot(rho)).re;
        }
    }
    Ok(t)
}

/// Both routes from a two-qubit Wigner table to the correlation matrix.
#[derive(Debug, Clone, Serialize)]
pub struct CorrelationFromDwf {
    /// Production path: reconstruct ρ, then direct traces.
    pub primary: [[f64; 3]; 3],
    /// The nine printed linear combinations, evaluated verbatim.
    pub secondary: [[f64; 3]; 3],
    /// secondary − primary, elementwise (signs included).
    pub deviation: [[f64; 3]; 3],
}

/// The printed extraction formulas: t_ij = 1 − 2·(sum of eight W entries),
/// with the entry lists transcribed as printed. Retained as a diagnostic;
/// the primary path is exact by linearity.
const SECONDARY_ENTRY_LISTS: [[(usize, usize); 8]; 9] = [
    [(1, 1), (1, 2), (1, 3), (1, 4), (4, 1), (4, 2), (4, 3), (4, 4)],
    [(1, 2), (1, 4), (2, 1), (2, 3), (3, 1), (3, 3), (4, 2), (4, 4)],
    [(1, 2), (1, 4), (2, 2), (2, 4), (3, 1), (3, 3), (4, 1), (4, 3)],
    [(1, 1), (1, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 1), (4, 2)],
    [(1, 2), (1, 3), (2, 1), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3)],
    [(1, 2), (1, 3), (2, 2), (2, 3), (3, 1), (3, 4), (4, 1), (4, 4)],
    [(1, 1), (1, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 3), (4, 4)],
    [(1, 2), (1, 3), (2, 1), (2, 4), (3, 2), (3, 3), (4, 1), (4, 4)],
    [(1, 1), (1, 4), (2, 1), (2, 4), (3, 1), (3, 4), (4, 1), (4, 4)],
];

pub fn correlation_from_dwf(
    table: &DwfTable,
    ops: &PhasePointOperatorSet,
) -> Result<CorrelationFromDwf> {
    if table.dim != 4 || ops.dim != 4 {
        return Err(Error::DimensionMismatch(
            "correlation extraction expects d = 4".into(),
        ));
    }
    let rho = crate::wigner::reconstruct(table, ops)?;
    let primary = correlation_direct(&rho)?;
    let mut secondary = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let sum: f64 = SECONDARY_ENTRY_LISTS[3 * i + j]
                .iter()
                .map(|&(r, c)| table.at_label(r, c))
                .sum();
            secondary[i][j] = 1.0 - 2.0 * sum;
        }
    }
    let mut deviation = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            deviation[i][j] = secondary[i][j] - primary[i][j];
        }
    }
    Ok(CorrelationFromDwf { primary, secondary, deviation })
}

/// N_F = Tr√(T†T) (sum of singular values of T) and F = (1 + N_F/3)/2.
pub fn teleportation_fidelity(rho: &CMat) -> Result<(f64, f64)> {
    let t = correlation_direct(rho)?;
    let n_f = singular_value_sum(&t)?;
    Ok((n_f, 0.5 * (1.0 + n_f / 3.0)))
}

fn singular_value_sum(t: &[[f64; 3]; 3]) -> Result<f64> {
    // singular values of T = sqrt of eigenvalues of T^T T
    let mut tt = CMat::zeros((3, 3));
    for i in 0..3 {
        for j in 0..3 {
            let mut val = 0.0;
            for k in 0..3 {
                val += t[k][i] * t[k][j];
            }
            tt[[i, j]] = cr(val);
        }
    }
    let eig = eigh(&tt)?;
    Ok(eig.values.iter().map(|v| v.max(0.0).sqrt()).sum())
}

/// One sampled time point of a sweep: the measures requested plus the
/// fidelity pair, all optional.
#[derive(Debug, Clone, Default, Serialize)]
pub struct MeasureRecord {
    pub t: f64,
    pub coherence: Option<f64>,
    pub concurrence: Option<f64>,
    pub fidelity: Option<f64>,
    pub negativity: Option<f64>,
    pub mana: Option<f64>,
    pub n_f: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, max_abs_diff};
    use crate::states::{bell_state, two_qubit_from_bloch, BellLabel, TwoQubitBloch};

    fn werner(p: f64) -> CMat {
        let bell = bell_state(BellLabel::PhiPlus);
        bell.mapv(|z| z * cr(p)) + identity(4).mapv(|z| z * cr((1.0 - p) / 4.0))
    }

    #[test]
    fn coherence_basics() {
        let mut diag = CMat::zeros((3, 3));
        diag[[0, 0]] = cr(0.5);
        diag[[1, 1]] = cr(0.5);
        assert_eq!(coherence_l1(&diag), 0.0);
        let plus = crate::states::qubit_from_bloch(&crate::states::QubitBloch {
            a1: 1.0,
            a2: 0.0,
            a3: 0.0,
        })
        .unwrap();
        assert!((coherence_l1(&plus) - 1.0).abs() < 1e-14);
        assert!((coherence_l1(&bell_state(BellLabel::PhiPlus)) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn spin_flip_cases() {
        let bell = bell_state(BellLabel::PhiPlus);
        assert!(max_abs_diff(&spin_flip(&bell).unwrap(), &bell) < 1e-14);
        let mixed = identity(4).mapv(|z| z * cr(0.25));
        assert!(max_abs_diff(&spin_flip(&mixed).unwrap(), &mixed) < 1e-14);
        let mut zz = CMat::zeros((4, 4));
        zz[[0, 0]] = cr(1.0); // |00><00|
        let mut oo = CMat::zeros((4, 4));
        oo[[3, 3]] = cr(1.0); // |11><11|
        assert!(max_abs_diff(&spin_flip(&zz).unwrap(), &oo) < 1e-14);
    }

    #[test]
    fn concurrence_reference_points() {
        for label in [BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus] {
            assert!((concurrence(&bell_state(label)).unwrap() - 1.0).abs() < 1e-10);
        }
        // product state
        let b = TwoQubitBloch {
            a: [0.0, 0.0, 1.0],
            s: [0.0, 0.0, -1.0],
            t: [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]],
        };
        let rho = two_qubit_from_bloch(&b).unwrap();
        assert!(concurrence(&rho).unwrap() < 1e-10);
    }

    #[test]
    fn werner_concurrence_matches_analytic_form() {
        for p in [0.0, 0.2, 1.0 / 3.0, 0.4, 0.7, 1.0] {
            let expect = (0.0f64).max((3.0 * p - 1.0) / 2.0);
            let got = concurrence(&werner(p)).unwrap();
            assert!((got - expect).abs() < 1e-10, "p={p}: {got} vs {expect}");
        }
    }

    #[test]
    fn correlation_matrices_of_reference_states() {
        let t = correlation_direct(&bell_state(BellLabel::PhiPlus)).unwrap();
        let expect = [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((t[i][j] - expect[i][j]).abs() < 1e-12);
            }
        }
        let t = correlation_direct(&bell_state(BellLabel::PsiMinus)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { -1.0 } else { 0.0 };
                assert!((t[i][j] - e).abs() < 1e-12);
            }
        }
        let t = correlation_direct(&identity(4).mapv(|z| z * cr(0.25))).unwrap();
        assert!(t.iter().flatten().all(|x| x.abs() < 1e-14));
    }

    #[test]
    fn fidelity_reference_points() {
        let (nf, f) = teleportation_fidelity(&bell_state(BellLabel::PhiPlus)).unwrap();
        assert!((nf - 3.0).abs() < 1e-10 && (f - 1.0).abs() < 1e-10);
        let (nf, f) = teleportation_fidelity(&identity(4).mapv(|z| z * cr(0.25))).unwrap();
        assert!(nf.abs() < 1e-10 && (f - 0.5).abs() < 1e-10);
        let (nf, f) = teleportation_fidelity(&werner(1.0 / 3.0)).unwrap();
        assert!((nf - 1.0).abs() < 1e-10 && (f - 2.0 / 3.0).abs() < 1e-10);
    }
}
