//! Small dense complex-matrix helpers shared across the crate.
//!
//! Everything here operates on `ndarray` matrices of [`C64`]; dimensions are
//! tiny (2 to 4) so no effort is spent on blocking or allocation reuse.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat = Array2<C64>;
pub type CVec = Array1<C64>;

pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn identity(d: usize) -> CMat {
    CMat::eye(d)
}

/// Conjugate transpose.
pub fn dagger(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

pub fn trace(m: &CMat) -> C64 {
    m.diag().sum()
}

/// Outer product |v⟩⟨v|.
pub fn projector(v: &CVec) -> CMat {
    let d = v.len();
    CMat::from_shape_fn((d, d), |(i, j)| v[i] * v[j].conj())
}

pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    CMat::from_shape_fn((ra * rb, ca * cb), |(i, j)| {
        a[[i / rb, j / cb]] * b[[i % rb, j % cb]]
    })
}

/// Max absolute entry of `a - b`.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max absolute entry deviation from the Hermitian mirror.
pub fn hermiticity_deviation(m: &CMat) -> f64 {
    max_abs_diff(m, &dagger(m))
}

pub fn is_hermitian(m: &CMat, tol: f64) -> bool {
    hermiticity_deviation(m) <= tol
}

pub fn unitarity_deviation(u: &CMat) -> f64 {
    let d = u.nrows();
    max_abs_diff(&dagger(u).dot(u), &identity(d))
}

/// ⟨u|v⟩ with the physicist's convention (conjugate-linear in the first slot).
pub fn inner(u: &CVec, v: &CVec) -> C64 {
    u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum()
}

pub fn norm(v: &CVec) -> f64 {
    inner(v, v).re.sqrt()
}
