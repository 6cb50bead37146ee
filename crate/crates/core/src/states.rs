//! Density matrices from the Bloch parametrizations, Bell states and the
//! figure-caption presets.

use crate::error::Error;
use crate::linalg::{c, cr, identity, kron, trace, CMat};
use crate::Result;
use serde::Serialize;

pub fn pauli_x() -> CMat {
    ndarray::arr2(&[[cr(0.0), cr(1.0)], [cr(1.0), cr(0.0)]])
}

pub fn pauli_y() -> CMat {
    ndarray::arr2(&[[cr(0.0), c(0.0, -1.0)], [c(0.0, 1.0), cr(0.0)]])
}

pub fn pauli_z() -> CMat {
    ndarray::arr2(&[[cr(1.0), cr(0.0)], [cr(0.0), cr(-1.0)]])
}

pub fn paulis() -> [CMat; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// The eight Gell-Mann matrices in the standard order: symmetric and
/// antisymmetric pairs on (1,2), (1,3), (2,3) interleaved as λ1..λ7, then the
/// diagonal λ8 = diag(1, 1, −2)/√3.
pub fn gell_mann() -> [CMat; 8] {
    let z = cr(0.0);
    let o = cr(1.0);
    let i = c(0.0, 1.0);
    let s3 = cr(1.0 / 3f64.sqrt());
    [
        ndarray::arr2(&[[z, o, z], [o, z, z], [z, z, z]]),
        ndarray::arr2(&[[z, -i, z], [i, z, z], [z, z, z]]),
        ndarray::arr2(&[[o, z, z], [z, -o, z], [z, z, z]]),
        ndarray::arr2(&[[z, z, o], [z, z, z], [o, z, z]]),
        ndarray::arr2(&[[z, z, -i], [z, z, z], [i, z, z]]),
        ndarray::arr2(&[[z, z, z], [z, z, o], [z, o, z]]),
        ndarray::arr2(&[[z, z, z], [z, z, -i], [z, i, z]]),
        ndarray::arr2(&[[o, z, z], [z, o, z], [z, z, cr(-2.0)]]).mapv(|x| x * s3),
    ]
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QubitBloch {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl QubitBloch {
    pub fn norm(&self) -> f64 {
        (self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3).sqrt()
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QutritBloch {
    pub n: [f64; 8],
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TwoQubitBloch {
    pub a: [f64; 3],
    pub s: [f64; 3],
    pub t: [[f64; 3]; 3],
}

/// ρ = (I + a·σ)/2; a₃ = +1 is the σz eigenstate |0⟩.
pub fn qubit_from_bloch(b: &QubitBloch) -> Result<CMat> {
    let norm = b.norm();
    if norm > 1.0 + 1e-9 {
        return Err(Error::BlochNormExceeded { norm });
    }
    let [sx, sy, sz] = paulis();
    let mut rho = identity(2);
    rho = rho + sx.mapv(|z| z * cr(b.a1)) + sy.mapv(|z| z * cr(b.a2)) + sz.mapv(|z| z * cr(b.a3));
    Ok(rho.mapv(|z| z * cr(0.5)))
}

/// ρ = (I₃ + √3 n·λ)/3 with the standard Gell-Mann basis.
pub fn qutrit_from_bloch(b: &QutritBloch) -> Result<CMat> {
    let rho = qutrit_matrix(b);
    let eig = crate::eigen::eigh(&rho)?;
    if eig.values[0] < -1e-9 {
        return Err(Error::NotPsd { min_eig: eig.values[0] });
    }
    Ok(rho)
}

fn qutrit_matrix(b: &QutritBloch) -> CMat {
    let gm = gell_mann();
    let mut rho = identity(3);
    let r3 = 3f64.sqrt();
    for (k, lam) in gm.iter().enumerate() {
        rho = rho + lam.mapv(|z| z * cr(r3 * b.n[k]));
    }
    rho.mapv(|z| z / cr(3.0))
}

/// Two-qubit ρ from local Bloch vectors and the correlation matrix.
pub fn two_qubit_from_bloch(b: &TwoQubitBloch) -> Result<CMat> {
    let rho = two_qubit_matrix(b);
    let eig = crate::eigen::eigh(&rho)?;
    if eig.values[0] < -1e-9 {
        return Err(Error::NotPsd { min_eig: eig.values[0] });
    }
    Ok(rho)
}

fn two_qubit_matrix(b: &TwoQubitBloch) -> CMat {
    let sig = paulis();
    let i2 = identity(2);
    let mut rho = identity(4);
    for k in 0..3 {
        rho = rho + kron(&sig[k], &i2).mapv(|z| z * cr(b.a[k]));
        rho = rho + kron(&i2, &sig[k]).mapv(|z| z * cr(b.s[k]));
    }
    for i in 0..3 {
        for j in 0..3 {
            rho = rho + kron(&sig[i], &sig[j]).mapv(|z| z * cr(b.t[i][j]));
        }
    }
    rho.mapv(|z| z / cr(4.0))
}

/// Inverse parametrization by partial traces.
#[derive(Debug, Clone, Serialize)]
pub enum BlochParams {
    Qubit(QubitBloch),
    Qutrit(QutritBloch),
    TwoQubit(TwoQubitBloch),
}

pub fn bloch_from_density(rho: &CMat) -> Result<BlochParams> {
    match rho.nrows() {
        2 => {
            let [sx, sy, sz] = paulis();
            Ok(BlochParams::Qubit(QubitBloch {
                a1: trace(&sx.dot(rho)).re,
                a2: trace(&sy.dot(rho)).re,
                a3: trace(&sz.dot(rho)).re,
            }))
        }
        3 => {
            let gm = gell_mann();
            let mut n = [0.0; 8];
            let half_r3 = 3f64.sqrt() / 2.0;
            for (k, lam) in gm.iter().enumerate() {
                n[k] = half_r3 * trace(&lam.dot(rho)).re;
            }
            Ok(BlochParams::Qutrit(QutritBloch { n }))
        }
        4 => {
            let sig = paulis();
            let i2 = identity(2);
            let mut a = [0.0; 3];
            let mut s = [0.0; 3];
            let mut t = [[0.0; 3]; 3];
            for k in 0..3 {
                a[k] = trace(&kron(&sig[k], &i2).dot(rho)).re;
                s[k] = trace(&kron(&i2, &sig[k]).dot(rho)).re;
            }
            for i in 0..3 {
                for j in 0..3 {
                    t[i][j] = trace(&kron(&sig[i], &sig[j]).dot(rho)).re;
                }
            }
            Ok(BlochParams::TwoQubit(TwoQubitBloch { a, s, t }))
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BellLabel {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl std::str::FromStr for BellLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi_plus" | "phi+" => Ok(BellLabel::PhiPlus),
            "phi_minus" | "phi-" => Ok(BellLabel::PhiMinus),
            "psi_plus" | "psi+" => Ok(BellLabel::PsiPlus),
            "psi_minus" | "psi-" => Ok(BellLabel::PsiMinus),
            other => Err(Error::InvalidBellLabel(other.into())),
        }
    }
}

pub fn bell_state(label: BellLabel) -> CMat {
    let s = cr(1.0 / 2f64.sqrt());
    let mut v = ndarray::Array1::<crate::linalg::C64>::zeros(4);
    match label {
        BellLabel::PhiPlus => {
            v[0] = s;
            v[3] = s;
        }
        BellLabel::PhiMinus => {
            v[0] = s;
            v[3] = -s;
        }
        BellLabel::PsiPlus => {
            v[1] = s;
            v[2] = s;
        }
        BellLabel::PsiMinus => {
            v[1] = s;
            v[2] = -s;
        }
    }
    crate::linalg::projector(&v)
}

/// Clip negative eigenvalues to zero and renormalize the trace. Returns the
/// repaired matrix and the magnitude of the most negative clipped eigenvalue.
pub fn clip_to_psd(rho: &CMat) -> Result<(CMat, f64)> {
    let eig = crate::eigen::eigh(rho)?;
    let clipped = (-eig.values[0]).max(0.0);
    let total: f64 = eig.values.iter().map(|v| v.max(0.0)).sum();
    let d = rho.nrows();
    let mut out = CMat::zeros((d, d));
    for k in 0..d {
        let lam = eig.values[k].max(0.0) / total;
        let col = eig.vectors.column(k);
        for i in 0..d {
            for j in 0..d {
                out[[i, j]] += col[i] * col[j].conj() * cr(lam);
            }
        }
    }
    Ok((out, clipped))
}

/// How a preset state was obtained.
#[derive(Debug, Clone, Serialize)]
pub enum Provenance {
    /// Figure-caption Bloch parameters as printed (rounded by the source).
    Caption {
        figure: String,
        /// Magnitude of eigenvalue clipping applied to reach a valid state;
        /// zero when the printed parameters were already physical.
        clipped: f64,
    },
    /// Standard maximally entangled state.
    Bell,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub state: CMat,
    pub provenance: Provenance,
}

pub const PRESET_NAMES: &[&str] = &[
    "qubit_ns1",
    "qutrit_ns1",
    "twoqubit_ns1",
    "bell_phi_plus",
    "bell_phi_minus",
    "bell_psi_plus",
    "bell_psi_minus",
];

/// Caption qubit NS₁ Bloch vector (figure captions: a = (0.50, 0.56, −0.66)).
pub fn caption_qubit_ns1() -> QubitBloch {
    QubitBloch { a1: 0.50, a2: 0.56, a3: -0.66 }
}

/// Caption qutrit NS₁ Gell-Mann vector.
pub fn caption_qutrit_ns1() -> QutritBloch {
    QutritBloch { n: [0.0, 0.0, -0.5, 0.0, 0.0, 0.4, 0.7, -0.3] }
}

/// Caption two-qubit NS₁ parameters.
pub fn caption_twoqubit_ns1() -> TwoQubitBloch {
    TwoQubitBloch {
        a: [0.14, 0.14, 0.61],
        s: [0.44, -0.44, 0.14],
        t: [
            [0.61, 0.14, -0.44],
            [-0.14, -0.61, -0.44],
            [0.61, -0.61, 0.44],
        ],
    }
}

/// Figure-caption and Bell presets. The caption parametrizations are kept as
/// printed; where the rounded numbers are not a valid state the matrix is
/// clipped onto the nearest state and the amount recorded in the provenance.
/// Exact eigenvector-constructed NS states are produced by
/// [`crate::negstate::negative_state`] instead.
pub fn preset(name: &str) -> Result<Preset> {
    let caption = |figure: &str, rho: CMat| -> Result<(CMat, Provenance)> {
        let eig = crate::eigen::eigh(&rho)?;
        if eig.values[0] >= -1e-6 {
            let (fixed, _) = if eig.values[0] < 0.0 { clip_to_psd(&rho)? } else { (rho, 0.0) };
            Ok((fixed, Provenance::Caption { figure: figure.into(), clipped: 0.0 }))
        } else {
            let (fixed, clipped) = clip_to_psd(&rho)?;
            Ok((fixed, Provenance::Caption { figure: figure.into(), clipped }))
        }
    };
    let (state, provenance) = match name {
        "qubit_ns1" => caption("fig2", {
            let b = caption_qubit_ns1();
            qubit_from_bloch(&b)?
        })?,
        "qutrit_ns1" => caption("fig6", qutrit_matrix(&caption_qutrit_ns1()))?,
        "twoqubit_ns1" => caption("fig8", two_qubit_matrix(&caption_twoqubit_ns1()))?,
        "bell_phi_plus" => (bell_state(BellLabel::PhiPlus), Provenance::Bell),
        "bell_phi_minus" => (bell_state(BellLabel::PhiMinus), Provenance::Bell),
        "bell_psi_plus" => (bell_state(BellLabel::PsiPlus), Provenance::Bell),
        "bell_psi_minus" => (bell_state(BellLabel::PsiMinus), Provenance::Bell),
        other => return Err(Error::UnknownPreset(other.into())),
    };
    Ok(Preset { name: name.into(), state, provenance })
}

pub fn purity(rho: &CMat) -> f64 {
    trace(&rho.dot(rho)).re
}
