//! Maximally negative quantum states NS₁, NS₂, … from the phase-point
//! operator spectra.
//!
//! Candidate states are ranked as follows: every eigenpair of the operator at
//! the globally most negative phase point (lexicographic tie-break), merged
//! with eigenpairs from other points whose eigenvalue is negative and
//! distinct (beyond 1e-9) from anything already collected, sorted ascending
//! by eigenvalue. Candidates whose state carries no Wigner negativity are
//! dropped. NS_k is the k-th survivor.
//!
//! This single rule reproduces the per-dimension behavior of the source
//! material: the qubit operator has one negative eigenvalue and nothing else
//! survives, so only NS₁ exists; the qutrit set contributes its −1
//! eigenvector and the (1−√5)/2 eigenvector from a neighbouring point; the
//! two-qubit operator contributes its degenerate −1/2 pair plus the third
//! eigenvector, which is positive-eigenvalue but still Wigner-negative.

use crate::eigen::eigh;
use crate::error::Error;
use crate::geometry::PhasePoint;
use crate::linalg::{projector, trace, CMat};
use crate::ops::PhasePointOperatorSet;
use crate::Result;

const NEGATIVE_EIGENVALUE_TOL: f64 = 1e-12;
const DISTINCT_EIGENVALUE_TOL: f64 = 1e-9;
const NEGATIVITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct NegativeStateResult {
    /// 1-based rank k of NS_k.
    pub rank: usize,
    /// Phase point whose operator supplied the eigenvector.
    pub point: PhasePoint,
    /// The eigenvalue the state belongs to.
    pub eigenvalue: f64,
    /// Whether that eigenvalue is itself negative (NS₃ of the two-qubit set
    /// descends from a positive eigenvalue yet is still Wigner-negative).
    pub eigenvalue_negative: bool,
    /// True when the eigenvalue sits in a degenerate cluster and the
    /// canonical in-cluster basis convention decides the state.
    pub degenerate: bool,
    /// Rank-1 projector onto the eigenvector.
    pub state: CMat,
    /// Wigner negativity of the state (strictly positive by construction).
    pub negativity: f64,
}

struct Candidate {
    point: PhasePoint,
    eigenvalue: f64,
    degenerate: bool,
    state: CMat,
    from_chosen_point: bool,
}

/// NS_k for the operator set; `rank` is 1-based.
pub fn negative_state(ops: &PhasePointOperatorSet, rank: usize) -> Result<NegativeStateResult> {
    if rank == 0 {
        return Err(Error::InvalidParams("rank is 1-based".into()));
    }
    let candidates = candidate_states(ops)?;
    let available = candidates.len();
    if rank > available {
        return Err(Error::NegativeStateUnavailable { requested: rank, available });
    }
    let c = &candidates[rank - 1];
    let neg = crate::wigner::negativity(&c.state, ops)?;
    Ok(NegativeStateResult {
        rank,
        point: c.point,
        eigenvalue: c.eigenvalue,
        eigenvalue_negative: c.eigenvalue < -NEGATIVE_EIGENVALUE_TOL,
        degenerate: c.degenerate,
        state: c.state.clone(),
        negativity: neg,
    })
}

fn candidate_states(ops: &PhasePointOperatorSet) -> Result<Vec<Candidate>> {
    let points: Vec<PhasePoint> = ops.points().collect();
    let decomps: Vec<_> = points
        .iter()
        .map(|&pt| eigh(ops.at(pt)).map(|e| (pt, e)))
        .collect::<Result<Vec<_>>>()?;

    let global_min = decomps
        .iter()
        .map(|(_, e)| e.values[0])
        .fold(f64::INFINITY, f64::min);
    let chosen_idx = decomps
        .iter()
        .position(|(_, e)| e.values[0] < global_min + DISTINCT_EIGENVALUE_TOL)
        .expect("nonempty operator set");
    let (chosen_pt, chosen) = &decomps[chosen_idx];

    let mut collected_values: Vec<f64> = chosen.values.clone();
    let mut raw: Vec<Candidate> = Vec::new();
    for (k, &lam) in chosen.values.iter().enumerate() {
        raw.push(Candidate {
            point: *chosen_pt,
            eigenvalue: lam,
            degenerate: in_degenerate_cluster(&chosen.values, k),
            state: projector(&chosen.vector(k)),
            from_chosen_point: true,
        });
    }
    for (idx, (pt, e)) in decomps.iter().enumerate() {
        if idx == chosen_idx {
            continue;
        }
        for (k, &lam) in e.values.iter().enumerate() {
            if lam >= -NEGATIVE_EIGENVALUE_TOL {
                continue;
            }
            if collected_values
                .iter()
                .any(|&v| (v - lam).abs() < DISTINCT_EIGENVALUE_TOL)
            {
                continue;
            }
            collected_values.push(lam);
            raw.push(Candidate {
                point: *pt,
                eigenvalue: lam,
                degenerate: in_degenerate_cluster(&e.values, k),
                state: projector(&e.vector(k)),
                from_chosen_point: false,
            });
        }
    }
    raw.sort_by(|a, b| {
        a.eigenvalue
            .partial_cmp(&b.eigenvalue)
            .unwrap()
            .then(b.from_chosen_point.cmp(&a.from_chosen_point))
            .then(a.point.cmp(&b.point))
    });
    // keep only genuinely Wigner-negative states
    let mut out = Vec::new();
    for c in raw {
        let min = ops
            .iter()
            .map(|(_, a)| trace(&a.dot(&c.state)).re)
            .fold(f64::INFINITY, f64::min);
        if min < -NEGATIVITY_TOL {
            out.push(c);
        }
    }
    Ok(out)
}

fn in_degenerate_cluster(values: &[f64], k: usize) -> bool {
    let gap = crate::eigen::DEGENERACY_GAP;
    (k > 0 && values[k] - values[k - 1] < gap)
        || (k + 1 < values.len() && values[k + 1] - values[k] < gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::default_net;
    use crate::ops::phase_point_operators;
    use crate::states::{bloch_from_density, BlochParams};

    fn ops(d: usize) -> PhasePointOperatorSet {
        phase_point_operators(&default_net(d).unwrap())
    }

    #[test]
    fn qubit_ns1_matches_bloch_formula() {
        let ops = ops(2);
        let ns1 = negative_state(&ops, 1).unwrap();
        assert_eq!(ns1.point, PhasePoint::new(0, 0));
        assert!((ns1.eigenvalue - (1.0 - 3f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(ns1.eigenvalue_negative);
        // Bloch vector is -u/sqrt(3) for the all-(−1,−1,+1) pattern at (0,0),
        // i.e. (1, 1, -1)/sqrt(3).
        match bloch_from_density(&ns1.state).unwrap() {
            BlochParams::Qubit(b) => {
                let s = 1.0 / 3f64.sqrt();
                assert!((b.a1 - s).abs() < 1e-10);
                assert!((b.a2 - s).abs() < 1e-10);
                assert!((b.a3 + s).abs() < 1e-10);
            }
            _ => unreachable!(),
        }
        assert!((ns1.negativity - (3f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn qubit_ns2_is_unavailable() {
        let err = negative_state(&ops(2), 2);
        match err {
            Err(Error::NegativeStateUnavailable { requested, available }) => {
                assert_eq!((requested, available), (2, 1));
            }
            other => panic!("expected unavailable, got {other:?}"),
        }
    }

    #[test]
    fn qutrit_ns_ladder() {
        let ops = ops(3);
        let ns1 = negative_state(&ops, 1).unwrap();
        assert!((ns1.eigenvalue + 1.0).abs() < 1e-12);
        assert!((ns1.negativity - 1.0).abs() < 1e-12);
        let ns2 = negative_state(&ops, 2).unwrap();
        // second distinct negative eigenvalue across the set: (1-sqrt(5))/2
        assert!((ns2.eigenvalue - (1.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(ns2.point, PhasePoint::new(1, 0));
        assert!(ns2.eigenvalue_negative);
        assert!((ns2.negativity - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn two_qubit_ns_ladder() {
        let ops = ops(4);
        let ns: Vec<_> = (1..=3).map(|k| negative_state(&ops, k).unwrap()).collect();
        assert!((ns[0].eigenvalue + 0.5).abs() < 1e-12);
        assert!((ns[1].eigenvalue + 0.5).abs() < 1e-12);
        assert!(ns[0].degenerate && ns[1].degenerate);
        assert!((ns[2].eigenvalue - (4.0 - 2.0 * 3f64.sqrt()) / 4.0).abs() < 1e-9);
        assert!(!ns[2].eigenvalue_negative);
        // eigenvalues ascend and every state is Wigner-negative
        assert!(ns[0].eigenvalue <= ns[1].eigenvalue && ns[1].eigenvalue <= ns[2].eigenvalue);
        for r in &ns {
            assert!(r.negativity > 0.0);
            assert!((crate::states::purity(&r.state) - 1.0).abs() < 1e-10);
        }
        assert!((ns[2].negativity - 1.0 / (2.0 * 3f64.sqrt())).abs() < 1e-10);
        // the three states are mutually distinct
        assert!(crate::linalg::max_abs_diff(&ns[0].state, &ns[1].state) > 1e-3);
        assert!(crate::linalg::max_abs_diff(&ns[1].state, &ns[2].state) > 1e-3);
        assert!(matches!(
            negative_state(&ops, 4),
            Err(Error::NegativeStateUnavailable { available: 3, .. })
        ));
    }

    #[test]
    fn eigenvalues_ascend_with_rank_for_each_dimension() {
        for d in [2usize, 3, 4] {
            let ops = ops(d);
            let mut prev = f64::NEG_INFINITY;
            let mut k = 1;
            while let Ok(r) = negative_state(&ops, k) {
                assert!(r.eigenvalue >= prev - 1e-12);
                prev = r.eigenvalue;
                k += 1;
            }
        }
    }
}
