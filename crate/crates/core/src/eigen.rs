//! Hermitian eigendecomposition for the small (d ≤ 4) matrices used here.
//!
//! Cyclic complex Jacobi with a fixed sweep order, followed by a canonical
//! re-basing of every eigenvalue cluster, so the output is a deterministic
//! function of the input matrix alone. Eigenvalues are returned in ascending
//! order.
//!
//! Degenerate clusters (gap below [`DEGENERACY_GAP`]) carry a genuine basis
//! freedom. The canonical basis of a cluster is obtained by Gram-Schmidt of
//! the cluster projector applied to the uniform superposition vector and then
//! to the standard basis vectors, with each vector's phase fixed so that its
//! first significant component is real and positive. The `degenerate` flag
//! records that this convention was exercised.

use crate::error::Error;
use crate::linalg::{cr, hermiticity_deviation, CMat, CVec, C64};
use crate::Result;

/// Eigenvalue gap below which two eigenvalues are treated as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;

const HERMITICITY_TOL: f64 = 1e-9;
const MAX_SWEEPS: usize = 100;

/// Result of [`eigh`]: ascending eigenvalues with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Column `k` is the eigenvector of `values[k]`.
    pub vectors: CMat,
    /// True when at least one eigenvalue cluster was degenerate and the
    /// canonical in-cluster basis convention was applied.
    pub degenerate: bool,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> CVec {
        self.vectors.column(k).to_owned()
    }
}

/// Eigendecomposition of a Hermitian matrix.
pub fn eigh(m: &CMat) -> Result<HermitianEigen> {
    let dev = hermiticity_deviation(m);
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.nrows();
    // symmetrize round-off: a <- (m + m†)/2 with a real diagonal
    let mut a = m.clone();
    for i in 0..n {
        a[[i, i]] = cr(a[[i, i]].re);
        for j in 0..i {
            let avg = (a[[i, j]] + a[[j, i]].conj()) * cr(0.5);
            a[[i, j]] = avg;
            a[[j, i]] = avg.conj();
        }
    }
    let mut v = CMat::eye(n);
    let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[[p, q]].norm_sqr())
            .sum();
        if off.sqrt() < 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                let r = apq.norm();
                if r < 1e-18 * scale {
                    continue;
                }
                let phi = apq.arg();
                let app = a[[p, p]].re;
                let aqq = a[[q, q]].re;
                // Rotation angle of the phase-stripped real 2x2 block.
                let theta = 0.5 * (2.0 * r).atan2(app - aqq);
                let (s, cth) = theta.sin_cos();
                let eip = C64::from_polar(1.0, phi);
                // Columns p,q of the plane rotation W with W[p][p]=c,
                // W[p][q]=-s e^{i phi}, W[q][p]=s e^{-i phi}, W[q][q]=c.
                for i in 0..n {
                    let aip = a[[i, p]];
                    let aiq = a[[i, q]];
                    a[[i, p]] = aip * cr(cth) + aiq * eip.conj() * cr(s);
                    a[[i, q]] = -aip * eip * cr(s) + aiq * cr(cth);
                }
                for j in 0..n {
                    let apj = a[[p, j]];
                    let aqj = a[[q, j]];
                    a[[p, j]] = apj * cr(cth) + aqj * eip * cr(s);
                    a[[q, j]] = -apj * eip.conj() * cr(s) + aqj * cr(cth);
                }
                for i in 0..n {
                    let vip = v[[i, p]];
                    let viq = v[[i, q]];
                    v[[i, p]] = vip * cr(cth) + viq * eip.conj() * cr(s);
                    v[[i, q]] = -vip * eip * cr(s) + viq * cr(cth);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[[i, i]].re.partial_cmp(&a[[j, j]].re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a[[i, i]].re).collect();
    let sorted = CMat::from_shape_fn((n, n), |(i, k)| v[[i, order[k]]]);

    let (vectors, degenerate) = canonicalize_clusters(&values, &sorted);
    Ok(HermitianEigen {
        values,
        vectors,
        degenerate,
    })
}

/// Rebuild every eigenvalue cluster's basis from its projector so the output
/// does not depend on the iteration history.
fn canonicalize_clusters(values: &[f64], vectors: &CMat) -> (CMat, bool) {
    let n = values.len();
    let mut out = CMat::zeros((n, n));
    let mut degenerate = false;
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && values[end + 1] - values[start] < DEGENERACY_GAP {
            end += 1;
        }
        let k = end - start + 1;
        if k > 1 {
            degenerate = true;
        }
        // Cluster projector.
        let mut proj = CMat::zeros((n, n));
        for c in start..=end {
            let col = vectors.column(c);
            for i in 0..n {
                for j in 0..n {
                    proj[[i, j]] += col[i] * col[j].conj();
                }
            }
        }
        let mut basis: Vec<CVec> = Vec::with_capacity(k);
        for seed in canonical_seeds(n) {
            let mut w: CVec = proj.dot(&seed);
            for b in &basis {
                let ov: C64 = crate::linalg::inner(b, &w);
                w = &w - &b.mapv(|z| z * ov);
            }
            let nm = crate::linalg::norm(&w);
            if nm > 1e-8 {
                let mut w = w.mapv(|z| z / cr(nm));
                fix_phase(&mut w);
                basis.push(w);
            }
            if basis.len() == k {
                break;
            }
        }
        debug_assert_eq!(basis.len(), k);
        for (offset, b) in basis.iter().enumerate() {
            for i in 0..n {
                out[[i, start + offset]] = b[i];
            }
        }
        start = end + 1;
    }
    (out, degenerate)
}

/// Uniform superposition first, then the standard basis.
fn canonical_seeds(n: usize) -> Vec<CVec> {
    let mut seeds = Vec::with_capacity(n + 1);
    seeds.push(CVec::from_elem(n, cr(1.0 / (n as f64).sqrt())));
    for e in 0..n {
        seeds.push(CVec::from_shape_fn(n, |i| if i == e { cr(1.0) } else { cr(0.0) }));
    }
    seeds
}

/// Multiply by a global phase so the first component with magnitude above
/// 1e-8 is real and positive.
fn fix_phase(v: &mut CVec) {
    if let Some(z) = v.iter().find(|z| z.norm() > 1e-8) {
        let phase = C64::from_polar(1.0, -z.arg());
        v.mapv_inplace(|x| x * phase);
    }
}

#[cfg(test)]
pub(crate) fn reconstruct_from_eigen(e: &HermitianEigen) -> CMat {
    let n = e.values.len();
    let mut m = CMat::zeros((n, n));
    for k in 0..n {
        let col = e.vectors.column(k);
        for i in 0..n {
            for j in 0..n {
                m[[i, j]] += col[i] * col[j].conj() * cr(e.values[k]);
            }
        }
    }
    m
}

/// Hermitian square root via the eigendecomposition; eigenvalue round-off
/// below zero is clipped.
pub fn sqrt_psd(m: &CMat) -> Result<CMat> {
    let e = eigh(m)?;
    let n = e.values.len();
    let mut out = CMat::zeros((n, n));
    for k in 0..n {
        let lam = e.values[k].max(0.0).sqrt();
        let col = e.vectors.column(k);
        for i in 0..n {
            for j in 0..n {
                out[[i, j]] += col[i] * col[j].conj() * cr(lam);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, cr, identity, max_abs_diff};

    #[test]
    fn diagonal_matrix_is_its_own_decomposition() {
        let m = CMat::from_diag(&ndarray::arr1(&[cr(3.0), cr(-1.0), cr(2.0)]));
        let e = eigh(&m).unwrap();
        assert_eq!(e.values.len(), 3);
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[2] - 3.0).abs() < 1e-14);
        assert!(!e.degenerate);
    }

    #[test]
    fn pauli_y_eigensystem() {
        let m = ndarray::arr2(&[[cr(0.0), c(0.0, -1.0)], [c(0.0, 1.0), cr(0.0)]]);
        let e = eigh(&m).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        assert!(max_abs_diff(&reconstruct_from_eigen(&e), &m) < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ndarray::arr2(&[[cr(0.0), cr(1.0)], [cr(0.0), cr(0.0)]]);
        assert!(matches!(eigh(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn degenerate_identity_flags_and_spans() {
        let e = eigh(&identity(3)).unwrap();
        assert!(e.degenerate);
        assert!(max_abs_diff(&reconstruct_from_eigen(&e), &identity(3)) < 1e-13);
    }
}
