//! Reconciliation of closed-form Wigner tables with constructed nets.
//!
//! For a valid phase-point set, summing the target operators over any line of
//! striation i yields d times the projector of exactly one basis-i vector, so
//! the line→vector assignment factorizes striation by striation and can be
//! read off directly; this is equivalent to the exhaustive search over all
//! (d!)^{d+1} per-striation permutations (the candidate assignment is
//! verified against the full operator set at the end). When no assignment
//! exists the per-line residuals and operator-level diagnostics say why.

use crate::geometry::{PhasePoint, PhaseSpace};
use crate::linalg::{cr, max_abs_diff, projector, trace, CMat};
use crate::mub::MubSet;
use crate::net::{build_quantum_net, Assignment};
use crate::ops::phase_point_operators;

const MATCH_TOL: f64 = 1e-9;

/// Outcome of [`find_matching_net`].
#[derive(Debug, Clone)]
pub enum NetSearchOutcome {
    /// An assignment whose constructed operators reproduce the target set.
    Match {
        assignment: Assignment,
        residual: f64,
    },
    /// No assignment exists; the report carries the best per-line residuals
    /// and any structural diagnoses of the target set.
    Mismatch {
        best_residual: f64,
        /// (striation, line, best basis-vector index, residual).
        per_line: Vec<(usize, usize, usize, f64)>,
        diagnostics: Vec<String>,
    },
}

impl NetSearchOutcome {
    pub fn is_match(&self) -> bool {
        matches!(self, NetSearchOutcome::Match { .. })
    }
}

/// Search line→vector assignments (striation i fixed to basis i) for a net
/// whose phase-point operators equal `target` at every point.
pub fn find_matching_net(
    space: &PhaseSpace,
    mubs: &MubSet,
    target: &[(PhasePoint, CMat)],
) -> NetSearchOutcome {
    let d = space.dim();
    let at = |pt: PhasePoint| -> &CMat {
        &target
            .iter()
            .find(|(p, _)| *p == pt)
            .expect("target covers the grid")
            .1
    };

    let mut per_line = Vec::new();
    let mut sigma: Vec<Vec<usize>> = Vec::new();
    let mut worst: f64 = 0.0;
    for (i, striation) in space.striations.iter().enumerate() {
        let mut row = Vec::new();
        for (j, line) in striation.lines.iter().enumerate() {
            let mut sum = CMat::zeros((d, d));
            for &pt in &line.points {
                sum += at(pt);
            }
            let sum = sum.mapv(|z| z / cr(d as f64));
            let (best_vec, best_res) = mubs.bases[i]
                .vectors
                .iter()
                .enumerate()
                .map(|(vi, v)| (vi, max_abs_diff(&sum, &projector(v))))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            per_line.push((i, j, best_vec, best_res));
            row.push(best_vec);
            worst = worst.max(best_res);
        }
        sigma.push(row);
    }

    let assignment = Assignment { per_striation: sigma };
    if worst < MATCH_TOL && assignment.is_bijective(d) {
        // confirm on the full operator set
        let net = build_quantum_net(space.clone(), mubs.clone(), assignment.clone())
            .expect("bijective assignment");
        let ops = phase_point_operators(&net);
        let residual = target
            .iter()
            .map(|(pt, a)| max_abs_diff(a, ops.at(*pt)))
            .fold(0.0, f64::max);
        if residual < MATCH_TOL {
            return NetSearchOutcome::Match { assignment, residual };
        }
    }

    NetSearchOutcome::Mismatch {
        best_residual: worst,
        per_line,
        diagnostics: diagnose(target, d),
    }
}

/// Structural checks on an operator set that failed to match: Schmidt norm
/// and, for the qubit family, the missing σx component.
fn diagnose(target: &[(PhasePoint, CMat)], d: usize) -> Vec<String> {
    let mut out = Vec::new();
    let df = d as f64;
    let norm_dev = target
        .iter()
        .map(|(_, a)| (trace(&a.dot(a)).re - df).abs())
        .fold(0.0, f64::max);
    if norm_dev > 1e-9 {
        out.push(format!(
            "target operators violate Tr(A²) = d by up to {norm_dev:.3e}; not a valid phase-point set"
        ));
    }
    if d == 2 {
        let sx = crate::states::pauli_x();
        let max_x = target
            .iter()
            .map(|(_, a)| trace(&a.dot(&sx)).re.abs())
            .fold(0.0, f64::max);
        if max_x < 1e-12 {
            out.push(
                "every target operator has zero σx component: the closed form carries no a₁ dependence"
                    .into(),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::implied_operators;
    use crate::geometry::PhaseSpace;
    use crate::mub::mub_set;
    use crate::net::Assignment;

    #[test]
    fn qutrit_closed_form_matches_paper_assignment() {
        let space = PhaseSpace::new(3).unwrap();
        let mubs = mub_set(3).unwrap();
        let target = implied_operators(3).unwrap();
        match find_matching_net(&space, &mubs, &target) {
            NetSearchOutcome::Match { assignment, residual } => {
                assert_eq!(assignment, Assignment::paper(3).unwrap());
                assert!(residual < 1e-12);
            }
            other => panic!("expected match, got {other:?}"),
        }
    }

    #[test]
    fn two_qubit_closed_form_matches_paper_assignment() {
        let space = PhaseSpace::new(4).unwrap();
        let mubs = mub_set(4).unwrap();
        let target = implied_operators(4).unwrap();
        match find_matching_net(&space, &mubs, &target) {
            NetSearchOutcome::Match { assignment, residual } => {
                assert_eq!(assignment, Assignment::paper(4).unwrap());
                assert!(residual < 1e-12);
            }
            other => panic!("expected match, got {other:?}"),
        }
    }

    #[test]
    fn qubit_closed_form_reports_a1_deficiency() {
        let space = PhaseSpace::new(2).unwrap();
        let mubs = mub_set(2).unwrap();
        let target = implied_operators(2).unwrap();
        match find_matching_net(&space, &mubs, &target) {
            NetSearchOutcome::Mismatch { best_residual, diagnostics, .. } => {
                assert!(best_residual > 0.1, "residual {best_residual}");
                assert!(diagnostics.iter().any(|d| d.contains("a₁")));
                assert!(diagnostics.iter().any(|d| d.contains("Tr(A²)")));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }
}
