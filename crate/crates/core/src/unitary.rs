//! Unitary conjugation and the qutrit phase-gate conjugation probe.

use crate::error::Error;
use crate::linalg::{dagger, max_abs_diff, unitarity_deviation, CMat, C64};
use crate::Result;

/// U ρ U†.
pub fn apply_unitary(rho: &CMat, u: &CMat) -> Result<CMat> {
    if rho.nrows() != u.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "state {}x{} vs unitary {}x{}",
            rho.nrows(),
            rho.ncols(),
            u.nrows(),
            u.ncols()
        )));
    }
    let dev = unitarity_deviation(u);
    if dev > 1e-12 {
        return Err(Error::NotUnitary(dev));
    }
    Ok(u.dot(rho).dot(&dagger(u)))
}

/// Entrywise test of ρ' = conj(ρ).
pub fn is_conjugate(rho_prime: &CMat, rho: &CMat) -> bool {
    max_abs_diff(rho_prime, &rho.mapv(|z| z.conj())) < 1e-10
}

/// Candidate diagonal qutrit phase gates diag(1, ω^a, ω^b) with ω = e^{2πi/3},
/// excluding the identity. The source cites an external gate without printing
/// the matrix, so the conjugation claim is probed over all of these.
pub fn qutrit_phase_gate_candidates() -> Vec<(String, CMat)> {
    let w = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut out = Vec::new();
    for a in 0..3u32 {
        for b in 0..3u32 {
            if a == 0 && b == 0 {
                continue;
            }
            let m = CMat::from_diag(&ndarray::arr1(&[
                crate::linalg::cr(1.0),
                w.powu(a),
                w.powu(b),
            ]));
            out.push((format!("diag(1, ω^{a}, ω^{b})"), m));
        }
    }
    out
}

/// Which candidate gates conjugate the given state: names of the passing
/// gates. Recorded by the verification report, never asserted.
pub fn conjugating_gates(rho: &CMat) -> Result<Vec<String>> {
    let mut passing = Vec::new();
    for (name, u) in qutrit_phase_gate_candidates() {
        let rho_prime = apply_unitary(rho, &u)?;
        if is_conjugate(&rho_prime, rho) {
            passing.push(name);
        }
    }
    Ok(passing)
}
