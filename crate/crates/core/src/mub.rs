//! The fixed mutually unbiased bases for d = 2, 3, 4, stored as printed.
//!
//! The d = 4 set has one defect: the third vector of the fifth basis is
//! printed as (1, −i, −i, −i)/2, which is not orthogonal to its neighbours.
//! [`mub_set`] substitutes the unique unit vector that completes the basis
//! and stays unbiased to the other four bases (found by a constrained search
//! over fourth-root-of-unity components) and records the substitution so the
//! verification report can surface it as a warning rather than silently
//! patching the table.

use crate::error::Error;
use crate::linalg::{c, cr, inner, CVec, C64};
use crate::Result;

#[derive(Debug, Clone)]
pub struct Basis {
    pub dim: usize,
    pub vectors: Vec<CVec>,
}

/// Record of the d = 4 basis-5 repair.
#[derive(Debug, Clone)]
pub struct Substitution {
    /// 1-based basis and vector position.
    pub basis: usize,
    pub vector: usize,
    pub printed: CVec,
    pub substituted: CVec,
    /// |⟨v₁|printed⟩|, the orthogonality violation of the printed entry.
    pub printed_violation: f64,
}

#[derive(Debug, Clone)]
pub struct MubSet {
    pub dim: usize,
    pub bases: Vec<Basis>,
    pub substitution: Option<Substitution>,
}

impl MubSet {
    pub fn vector(&self, basis: usize, idx: usize) -> &CVec {
        &self.bases[basis].vectors[idx]
    }
}

fn v2(a: C64, b: C64) -> CVec {
    let s = cr(1.0 / 2f64.sqrt());
    CVec::from(vec![a * s, b * s])
}

fn v3(a: C64, b: C64, d: C64) -> CVec {
    let s = cr(1.0 / 3f64.sqrt());
    CVec::from(vec![a * s, b * s, d * s])
}

fn v4(a: C64, b: C64, d: C64, e: C64) -> CVec {
    let s = cr(0.5);
    CVec::from(vec![a * s, b * s, d * s, e * s])
}

/// The printed (defective) third vector of the d = 4 fifth basis.
pub fn printed_table3_basis5_vector3() -> CVec {
    let i = c(0.0, 1.0);
    v4(cr(1.0), -i, -i, -i)
}

/// The d+1 mutually unbiased bases for d ∈ {2, 3, 4}, in the printed order.
pub fn mub_set(d: usize) -> Result<MubSet> {
    let one = cr(1.0);
    let i = c(0.0, 1.0);
    match d {
        2 => {
            let bases = vec![
                Basis {
                    dim: 2,
                    vectors: vec![
                        CVec::from(vec![cr(0.0), one]),
                        CVec::from(vec![one, cr(0.0)]),
                    ],
                },
                Basis {
                    dim: 2,
                    vectors: vec![v2(one, one), v2(one, -one)],
                },
                Basis {
                    dim: 2,
                    vectors: vec![v2(one, i), v2(one, -i)],
                },
            ];
            Ok(MubSet { dim: 2, bases, substitution: None })
        }
        3 => {
            let w = C64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
            let w2 = w * w;
            let e = |k: usize| {
                CVec::from_shape_fn(3, |j| if j == k { one } else { cr(0.0) })
            };
            let bases = vec![
                Basis { dim: 3, vectors: vec![e(0), e(1), e(2)] },
                Basis {
                    dim: 3,
                    vectors: vec![v3(one, one, one), v3(one, w, w2), v3(one, w2, w)],
                },
                Basis {
                    dim: 3,
                    vectors: vec![v3(one, w2, w2), v3(one, one, w), v3(one, w, one)],
                },
                Basis {
                    dim: 3,
                    vectors: vec![v3(one, w, w), v3(one, w2, one), v3(one, one, w2)],
                },
            ];
            Ok(MubSet { dim: 3, bases, substitution: None })
        }
        4 => {
            let e = |k: usize| {
                CVec::from_shape_fn(4, |j| if j == k { one } else { cr(0.0) })
            };
            let mut bases = vec![
                Basis { dim: 4, vectors: vec![e(0), e(1), e(2), e(3)] },
                Basis {
                    dim: 4,
                    vectors: vec![
                        v4(one, one, one, one),
                        v4(one, -one, one, -one),
                        v4(one, one, -one, -one),
                        v4(one, -one, -one, one),
                    ],
                },
                Basis {
                    dim: 4,
                    vectors: vec![
                        v4(one, -i, i, one),
                        v4(one, i, i, -one),
                        v4(one, -i, -i, -one),
                        v4(one, i, -i, one),
                    ],
                },
                Basis {
                    dim: 4,
                    vectors: vec![
                        v4(one, one, i, -i),
                        v4(one, -one, i, i),
                        v4(one, one, -i, i),
                        v4(one, -one, -i, -i),
                    ],
                },
                Basis {
                    dim: 4,
                    vectors: vec![
                        v4(one, -i, one, i),
                        v4(one, i, one, -i),
                        printed_table3_basis5_vector3(),
                        v4(one, i, -one, i),
                    ],
                },
            ];
            let substitution = repair_basis5(&mut bases)?;
            Ok(MubSet { dim: 4, bases, substitution: Some(substitution) })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

/// Constrained search for the unique unit vector (1, x, y, z)/2 with fourth
/// roots of unity x, y, z that is orthogonal to the other three basis-5
/// vectors and unbiased to bases 1–4. Replaces the printed defective entry.
fn repair_basis5(bases: &mut [Basis]) -> Result<Substitution> {
    let printed = bases[4].vectors[2].clone();
    let roots = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
    let mut found: Vec<CVec> = Vec::new();
    for &x in &roots {
        for &y in &roots {
            for &z in &roots {
                let cand = v4(cr(1.0), x, y, z);
                let orthogonal = [0usize, 1, 3]
                    .iter()
                    .all(|&k| inner(&bases[4].vectors[k], &cand).norm() < 1e-12);
                if !orthogonal {
                    continue;
                }
                let unbiased = bases[..4].iter().all(|b| {
                    b.vectors
                        .iter()
                        .all(|v| (inner(v, &cand).norm_sqr() - 0.25).abs() < 1e-12)
                });
                if unbiased {
                    found.push(cand);
                }
            }
        }
    }
    if found.len() != 1 {
        return Err(Error::InvalidState(format!(
            "basis-5 completion search found {} candidates, expected 1",
            found.len()
        )));
    }
    let substituted = found.pop().unwrap();
    let printed_violation = inner(&bases[4].vectors[0], &printed).norm();
    bases[4].vectors[2] = substituted.clone();
    Ok(Substitution {
        basis: 5,
        vector: 3,
        printed,
        substituted,
        printed_violation,
    })
}

/// Orthonormality / unbiasedness report for a MUB set.
#[derive(Debug, Clone)]
pub struct UnbiasednessReport {
    pub dim: usize,
    /// max |  |⟨β_{i,j}|β_{i,j'}⟩|² − δ_{j,j'} | within bases.
    pub max_orthonormality_dev: f64,
    /// max |  |⟨β_{i,j}|β_{i',j'}⟩|² − 1/d | across bases.
    pub max_unbiasedness_dev: f64,
    pub tolerance: f64,
}

impl UnbiasednessReport {
    pub fn pass(&self) -> bool {
        self.max_orthonormality_dev < self.tolerance && self.max_unbiasedness_dev < self.tolerance
    }
}

/// Exhaustive overlap scan of a MUB set against the δ / (1/d) target.
pub fn check_unbiased(mubs: &MubSet) -> UnbiasednessReport {
    let d = mubs.dim as f64;
    let mut on_dev: f64 = 0.0;
    let mut cross_dev: f64 = 0.0;
    for (bi, b) in mubs.bases.iter().enumerate() {
        for (ci, cb) in mubs.bases.iter().enumerate() {
            for (vi, v) in b.vectors.iter().enumerate() {
                for (wi, w) in cb.vectors.iter().enumerate() {
                    let ov = inner(v, w).norm_sqr();
                    if bi == ci {
                        let target = if vi == wi { 1.0 } else { 0.0 };
                        on_dev = on_dev.max((ov - target).abs());
                    } else {
                        cross_dev = cross_dev.max((ov - 1.0 / d).abs());
                    }
                }
            }
        }
    }
    UnbiasednessReport {
        dim: mubs.dim,
        max_orthonormality_dev: on_dev,
        max_unbiasedness_dev: cross_dev,
        tolerance: 1e-12,
    }
}

/// Each basis must resolve the identity: Σ_j |β⟩⟨β| = I.
pub fn completeness_deviation(basis: &Basis) -> f64 {
    let d = basis.dim;
    let mut sum = crate::linalg::projector(&basis.vectors[0]);
    for v in &basis.vectors[1..] {
        sum = sum + crate::linalg::projector(v);
    }
    crate::linalg::max_abs_diff(&sum, &crate::linalg::identity(d))
}
