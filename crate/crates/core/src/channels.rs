//! Time-dependent Kraus families: random telegraph noise (dephasing, unital)
//! and amplitude damping (dissipative), for qubits and qutrits, plus the
//! local two-qubit lift.
//!
//! Both memory kernels have a trigonometric branch (non-Markovian), a
//! hyperbolic branch (Markovian) and a closed-form limit on the boundary;
//! the branches are analytic continuations of each other and are selected
//! explicitly so no complex arithmetic leaks into the kernels.

use crate::error::Error;
use crate::linalg::{c, cr, dagger, identity, CMat};
use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RtnParams {
    /// Fluctuation rate γ.
    pub gamma: f64,
    /// System–environment coupling strength b.
    pub b: f64,
}

impl RtnParams {
    pub fn new(gamma: f64, b: f64) -> Result<Self> {
        if gamma <= 0.0 || b <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "RTN requires gamma > 0 and b > 0 (got gamma={gamma}, b={b})"
            )));
        }
        Ok(RtnParams { gamma, b })
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AdParams {
    pub gamma: f64,
    pub g: f64,
}

impl AdParams {
    pub fn new(gamma: f64, g: f64) -> Result<Self> {
        if gamma <= 0.0 || g <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "AD requires gamma > 0 and g > 0 (got gamma={gamma}, g={g})"
            )));
        }
        Ok(AdParams { gamma, g })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    Markovian,
    NonMarkovian,
    Boundary,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Markovian => write!(f, "markovian"),
            Regime::NonMarkovian => write!(f, "non-markovian"),
            Regime::Boundary => write!(f, "boundary"),
        }
    }
}

const BRANCH_EPS: f64 = 1e-12;

/// RTN memory kernel Λ(t) = e^{−γt}[cos(ζγt) + sin(ζγt)/ζ] with
/// ζ = √((2b/γ)² − 1); hyperbolic continuation for (2b/γ)² < 1 and the
/// e^{−γt}(1 + γt) limit at 2b = γ. Always in [−1, 1].
pub fn rtn_kernel(t: f64, p: &RtnParams) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let r = (2.0 * p.b / p.gamma).powi(2);
    let gt = p.gamma * t;
    let lambda = if (r - 1.0).abs() < BRANCH_EPS {
        (-gt).exp() * (1.0 + gt)
    } else if r > 1.0 {
        let zeta = (r - 1.0).sqrt();
        let x = zeta * gt;
        (-gt).exp() * (x.cos() + x.sin() / zeta)
    } else {
        // cosh + sinh/ζ in factored form; both exponents are ≤ 0, so no
        // overflow at large t
        let zeta = (1.0 - r).sqrt();
        let x = zeta * gt;
        0.5 * ((x - gt).exp() * (1.0 + 1.0 / zeta) + (-x - gt).exp() * (1.0 - 1.0 / zeta))
    };
    debug_assert!(lambda.abs() <= 1.0 + 1e-12);
    Ok(lambda.clamp(-1.0, 1.0))
}

/// Markovian iff (4bτ)² < 1 with τ = 1/(2γ), i.e. (2b/γ)² < 1.
pub fn classify_rtn(p: &RtnParams) -> Regime {
    let r = (2.0 * p.b / p.gamma).powi(2);
    if (r - 1.0).abs() < BRANCH_EPS {
        Regime::Boundary
    } else if r > 1.0 {
        Regime::NonMarkovian
    } else {
        Regime::Markovian
    }
}

/// AD decay λ(t) = 1 − e^{−gt}[(g/l)sinh(lt/2) + cosh(lt/2)]² with
/// l = √(g² − 2γg); trigonometric continuation for g < 2γ and the
/// 1 − e^{−gt}(1 + gt/2)² limit at g = 2γ. Values within 1e-10 of [0, 1]
/// are clipped; anything further out is a kernel violation.
pub fn ad_decay(t: f64, p: &AdParams) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let lambda = if ((p.g - 2.0 * p.gamma) / p.g).abs() < BRANCH_EPS {
        let bracket = 1.0 + p.g * t / 2.0;
        1.0 - (-p.g * t).exp() * bracket * bracket
    } else if p.g > 2.0 * p.gamma {
        // e^{-gt/2}·[(g/l)sinh(lt/2) + cosh(lt/2)] in factored form; both
        // exponents are ≤ 0, so no overflow at large t
        let l = (p.g * p.g - 2.0 * p.gamma * p.g).sqrt();
        let x = l * t / 2.0;
        let half_gt = p.g * t / 2.0;
        let scaled =
            0.5 * ((x - half_gt).exp() * (1.0 + p.g / l) + (-x - half_gt).exp() * (1.0 - p.g / l));
        1.0 - scaled * scaled
    } else {
        let l = (2.0 * p.gamma * p.g - p.g * p.g).sqrt();
        let bracket = (p.g / l) * (l * t / 2.0).sin() + (l * t / 2.0).cos();
        1.0 - (-p.g * t).exp() * bracket * bracket
    };
    check_decay_range(t, lambda)
}

fn check_decay_range(t: f64, lambda: f64) -> Result<f64> {
    if !(-1e-10..=1.0 + 1e-10).contains(&lambda) {
        return Err(Error::KernelViolation {
            t,
            detail: format!("decay function λ = {lambda} outside [0, 1]"),
        });
    }
    Ok(lambda.clamp(0.0, 1.0))
}

/// Markovian iff 2γ < g (real l), non-Markovian iff 2γ > g.
pub fn classify_ad(p: &AdParams) -> Regime {
    let diff = (p.g - 2.0 * p.gamma) / p.g;
    if diff.abs() < BRANCH_EPS {
        Regime::Boundary
    } else if diff > 0.0 {
        Regime::Markovian
    } else {
        Regime::NonMarkovian
    }
}

/// A set of Kraus operators frozen at one instant.
#[derive(Debug, Clone)]
pub struct KrausSet {
    pub dim: usize,
    pub t: f64,
    pub operators: Vec<CMat>,
}

impl KrausSet {
    /// Max deviation of Σ K†K from the identity.
    pub fn completeness_deviation(&self) -> f64 {
        let mut sum = CMat::zeros((self.dim, self.dim));
        for k in &self.operators {
            sum = sum + dagger(k).dot(k);
        }
        crate::linalg::max_abs_diff(&sum, &identity(self.dim))
    }
}

pub fn spin1_x() -> CMat {
    let s = cr(1.0 / 2f64.sqrt());
    ndarray::arr2(&[
        [cr(0.0), cr(1.0), cr(0.0)],
        [cr(1.0), cr(0.0), cr(1.0)],
        [cr(0.0), cr(1.0), cr(0.0)],
    ])
    .mapv(|z| z * s)
}

pub fn spin1_y() -> CMat {
    let s = cr(1.0 / 2f64.sqrt());
    let i = c(0.0, 1.0);
    ndarray::arr2(&[
        [cr(0.0), -i, cr(0.0)],
        [i, cr(0.0), -i],
        [cr(0.0), i, cr(0.0)],
    ])
    .mapv(|z| z * s)
}

pub fn spin1_z() -> CMat {
    CMat::from_diag(&ndarray::arr1(&[cr(1.0), cr(0.0), cr(-1.0)]))
}

/// S = (SxSx + SySy − SzSz)/2, evaluated from the spin-1 matrices.
pub fn spin1_s() -> CMat {
    let sx = spin1_x();
    let sy = spin1_y();
    let sz = spin1_z();
    (sx.dot(&sx) + sy.dot(&sy) - sz.dot(&sz)).mapv(|z| z * cr(0.5))
}

/// RTN Kraus set at time t: {√((1+Λ)/2)·I, √((1−Λ)/2)·σz} for qubits;
/// {√((1+Λ)/2)·I₃, √((1−Λ)/2)·Sz, √((1−Λ)/2)·S} for qutrits.
pub fn kraus_rtn(d: usize, t: f64, p: &RtnParams) -> Result<KrausSet> {
    let lambda = rtn_kernel(t, p)?;
    kraus_rtn_from_kernel(d, t, lambda)
}

/// Same construction from an explicit kernel value (the |Λ| ≤ 1 check lives
/// here so the violation path is exercisable).
pub fn kraus_rtn_from_kernel(d: usize, t: f64, lambda: f64) -> Result<KrausSet> {
    if lambda.abs() > 1.0 + 1e-10 {
        return Err(Error::KernelViolation {
            t,
            detail: format!("memory kernel Λ = {lambda} outside [-1, 1]"),
        });
    }
    let lambda = lambda.clamp(-1.0, 1.0);
    let c0 = cr(((1.0 + lambda) / 2.0).sqrt());
    let c1 = cr(((1.0 - lambda) / 2.0).sqrt());
    let operators = match d {
        2 => vec![
            identity(2).mapv(|z| z * c0),
            crate::states::pauli_z().mapv(|z| z * c1),
        ],
        3 => vec![
            identity(3).mapv(|z| z * c0),
            spin1_z().mapv(|z| z * c1),
            spin1_s().mapv(|z| z * c1),
        ],
        other => return Err(Error::UnsupportedDimension(other)),
    };
    Ok(KrausSet { dim: d, t, operators })
}

/// AD Kraus set at time t for d ∈ {2, 3}, exactly the printed matrices.
pub fn kraus_ad(d: usize, t: f64, p: &AdParams) -> Result<KrausSet> {
    let lambda = ad_decay(t, p)?;
    kraus_ad_from_decay(d, t, lambda)
}

pub fn kraus_ad_from_decay(d: usize, t: f64, lambda: f64) -> Result<KrausSet> {
    let lambda = check_decay_range(t, lambda)?;
    let keep = cr((1.0 - lambda).sqrt());
    let leak = cr(lambda.sqrt());
    let operators = match d {
        2 => {
            let mut k0 = identity(2);
            k0[[1, 1]] = keep;
            let mut k1 = CMat::zeros((2, 2));
            k1[[0, 1]] = leak;
            vec![k0, k1]
        }
        3 => {
            let mut k0 = identity(3);
            k0[[1, 1]] = keep;
            k0[[2, 2]] = keep;
            let mut k1 = CMat::zeros((3, 3));
            k1[[0, 1]] = leak;
            let mut k2 = CMat::zeros((3, 3));
            k2[[0, 2]] = leak;
            vec![k0, k1, k2]
        }
        other => return Err(Error::UnsupportedDimension(other)),
    };
    Ok(KrausSet { dim: d, t, operators })
}

/// Σ K ρ K†.
pub fn apply_channel(rho: &CMat, ks: &KrausSet) -> Result<CMat> {
    if rho.nrows() != ks.dim {
        return Err(Error::DimensionMismatch(format!(
            "state {}x{} vs channel dimension {}",
            rho.nrows(),
            rho.ncols(),
            ks.dim
        )));
    }
    let mut out = CMat::zeros((ks.dim, ks.dim));
    for k in &ks.operators {
        out = out + k.dot(rho).dot(&dagger(k));
    }
    Ok(out)
}

/// All pairwise tensor products K_i ⊗ K_j for the local two-qubit action.
pub fn lift_two_qubit(ks: &KrausSet) -> Result<KrausSet> {
    if ks.dim != 2 {
        return Err(Error::DimensionMismatch(format!(
            "two-qubit lift expects qubit Kraus operators, got d={}",
            ks.dim
        )));
    }
    let mut operators = Vec::with_capacity(ks.operators.len().pow(2));
    for a in &ks.operators {
        for b in &ks.operators {
            operators.push(crate::linalg::kron(a, b));
        }
    }
    Ok(KrausSet { dim: 4, t: ks.t, operators })
}
