//! The tabulated closed-form Wigner expressions for the qubit, qutrit and
//! two-qubit systems, plus the operator sets they imply.
//!
//! Each family is an affine function of the Bloch parameters; the coefficient
//! tables below are transcribed verbatim. The implied phase-point operators
//! are recovered from the same tables by linearity and feed the net search
//! and the verification diagnostics (the qubit family carries no a₁ term and
//! is analyzed rather than used).

use crate::geometry::PhasePoint;
use crate::linalg::{cr, identity, kron, CMat};
use crate::states::{gell_mann, paulis, QubitBloch, QutritBloch, TwoQubitBloch};
use crate::wigner::DwfTable;

/// Printed qubit coefficients: W_{i,j} = (1 + c₂·a₂ + c₃·a₃)/4 — a₁ absent.
/// Rows in label order (1,1), (1,2), (2,1), (2,2); columns (c₂, c₃).
pub const QUBIT_COEFFS: [(f64, f64); 4] = [(-1.0, 1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, -1.0)];

/// W_{i,j} from a qubit Bloch vector, exactly as printed (note the missing
/// a₁ dependence; see the verification report).
pub fn closed_form_qubit_dwf(a: &QubitBloch) -> DwfTable {
    let mut table = DwfTable::zeros(2);
    let labels = [(1, 1), (1, 2), (2, 1), (2, 2)];
    for (k, &(i, j)) in labels.iter().enumerate() {
        let (c2, c3) = QUBIT_COEFFS[k];
        table.set_label(i, j, 0.25 * (1.0 + c2 * a.a2 + c3 * a.a3));
    }
    table
}

/// Printed qutrit coefficients over (n₁..n₈): W_{i,j} = (1 + Σ c_k n_k)/9.
/// Label order (1,1), (1,2), (1,3), (2,1), ..., (3,3); √3 written as `R`.
fn qutrit_coeffs() -> [[f64; 8]; 9] {
    let r = 3f64.sqrt();
    [
        [0.0, 0.0, r, 0.0, 0.0, -r, -3.0, 1.0],
        [-r, -3.0, -r, 0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, -r, 3.0, 0.0, 0.0, -2.0],
        [0.0, 0.0, r, 0.0, 0.0, -r, 3.0, 1.0],
        [-r, 3.0, -r, 0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, -r, -3.0, 0.0, 0.0, -2.0],
        [0.0, 0.0, r, 0.0, 0.0, 2.0 * r, 0.0, 1.0],
        [2.0 * r, 0.0, -r, 0.0, 0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 0.0, 2.0 * r, 0.0, 0.0, 0.0, -2.0],
    ]
}

/// W_{i,j} from a qutrit Gell-Mann vector; Σ W = 1 identically.
pub fn closed_form_qutrit_dwf(n: &QutritBloch) -> DwfTable {
    let coeffs = qutrit_coeffs();
    let mut table = DwfTable::zeros(3);
    for i in 1..=3 {
        for j in 1..=3 {
            let c = &coeffs[(i - 1) * 3 + (j - 1)];
            let mut w = 1.0;
            for k in 0..8 {
                w += c[k] * n.n[k];
            }
            table.set_label(i, j, w / 9.0);
        }
    }
    table
}

/// Printed two-qubit sign patterns over
/// (a₁,a₂,a₃, s₁,s₂,s₃, t₁₁,t₁₂,t₁₃,t₂₁,t₂₂,t₂₃,t₃₁,t₃₂,t₃₃):
/// W_{i,j} = (1 + Σ ε·x)/16. Label order (1,1), (1,2), ..., (4,4).
pub const TWO_QUBIT_SIGNS: [[i8; 15]; 16] = [
    [-1, -1, 1, -1, 1, 1, 1, -1, -1, 1, -1, -1, -1, 1, 1],
    [-1, -1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, -1],
    [-1, 1, -1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1, -1, -1],
    [-1, 1, -1, -1, -1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1],
    [-1, -1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1],
    [-1, -1, 1, 1, 1, -1, -1, -1, 1, -1, -1, 1, 1, 1, -1],
    [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1],
    [-1, 1, -1, 1, 1, -1, -1, -1, 1, 1, 1, -1, -1, -1, 1],
    [1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1],
    [1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, -1, 1, -1, -1],
    [1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1],
    [1, 1, 1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1],
    [1, -1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1],
    [1, -1, -1, 1, 1, -1, 1, 1, -1, -1, -1, 1, -1, -1, 1],
];

fn two_qubit_params_flat(b: &TwoQubitBloch) -> [f64; 15] {
    let mut x = [0.0; 15];
    x[..3].copy_from_slice(&b.a);
    x[3..6].copy_from_slice(&b.s);
    for i in 0..3 {
        for j in 0..3 {
            x[6 + 3 * i + j] = b.t[i][j];
        }
    }
    x
}

/// W_{i,j} from two-qubit parameters; Σ W = 1 identically.
pub fn closed_form_two_qubit_dwf(b: &TwoQubitBloch) -> DwfTable {
    let x = two_qubit_params_flat(b);
    let mut table = DwfTable::zeros(4);
    for i in 1..=4 {
        for j in 1..=4 {
            let signs = &TWO_QUBIT_SIGNS[(i - 1) * 4 + (j - 1)];
            let mut w = 1.0;
            for k in 0..15 {
                w += signs[k] as f64 * x[k];
            }
            table.set_label(i, j, w / 16.0);
        }
    }
    table
}

/// The phase-point operators implied by a closed-form family, recovered by
/// linearity: W_α(ρ) = Tr(A_α ρ)/d fixes Tr A_α = 1 and the Bloch components
/// of A_α from the printed coefficients. Indexed by phase point (the printed
/// label (i, j) sits at (q, p) = (j−1, i−1)).
pub fn implied_operators(d: usize) -> crate::Result<Vec<(PhasePoint, CMat)>> {
    let mut out = Vec::new();
    match d {
        2 => {
            let [sx, sy, sz] = paulis();
            let _ = sx;
            let labels = [(1usize, 1usize), (1, 2), (2, 1), (2, 2)];
            for (k, &(i, j)) in labels.iter().enumerate() {
                let (c2, c3) = QUBIT_COEFFS[k];
                let a = (identity(2) + sy.mapv(|z| z * cr(c2)) + sz.mapv(|z| z * cr(c3)))
                    .mapv(|z| z * cr(0.5));
                out.push((PhasePoint::new(j - 1, i - 1), a));
            }
        }
        3 => {
            let gm = gell_mann();
            let coeffs = qutrit_coeffs();
            let r3 = 3f64.sqrt();
            for i in 1..=3usize {
                for j in 1..=3usize {
                    let c = &coeffs[(i - 1) * 3 + (j - 1)];
                    let mut a = identity(3).mapv(|z| z / cr(3.0));
                    for k in 0..8 {
                        a = a + gm[k].mapv(|z| z * cr(0.5 * c[k] / r3));
                    }
                    out.push((PhasePoint::new(j - 1, i - 1), a));
                }
            }
        }
        4 => {
            let sig = paulis();
            let i2 = identity(2);
            let mut basis: Vec<CMat> = Vec::with_capacity(15);
            for k in 0..3 {
                basis.push(kron(&sig[k], &i2));
            }
            for k in 0..3 {
                basis.push(kron(&i2, &sig[k]));
            }
            for i in 0..3 {
                for j in 0..3 {
                    basis.push(kron(&sig[i], &sig[j]));
                }
            }
            for i in 1..=4usize {
                for j in 1..=4usize {
                    let signs = &TWO_QUBIT_SIGNS[(i - 1) * 4 + (j - 1)];
                    let mut a = identity(4);
                    for k in 0..15 {
                        a = a + basis[k].mapv(|z| z * cr(signs[k] as f64));
                    }
                    out.push((PhasePoint::new(j - 1, i - 1), a.mapv(|z| z * cr(0.25))));
                }
            }
        }
        other => return Err(crate::error::Error::UnsupportedDimension(other)),
    }
    Ok(out)
}
