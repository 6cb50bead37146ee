//! Consolidated self-check report: geometry axioms, MUB structure, operator
//! invariants, round-trips, Kraus completeness, closed-form reconciliation
//! and the documented source-table defects (reported as warnings, not
//! failures).

use crate::channels::{
    apply_channel, kraus_ad, kraus_rtn, lift_two_qubit, AdParams, RtnParams,
};
use crate::closed_form::implied_operators;
use crate::geometry::PhaseSpace;
use crate::linalg::{cr, identity, max_abs_diff, CMat};
use crate::mub::{check_unbiased, completeness_deviation, mub_set, MubSet};
use crate::net::default_net;
use crate::net_search::{find_matching_net, NetSearchOutcome};
use crate::ops::{operator_invariants, phase_point_operators, PhasePointOperatorSet};
use crate::wigner::{dwf_of_hermitian, line_sum_check, reconstruct};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Warn => write!(f, "WARN"),
            CheckStatus::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckLine {
    fn new(name: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), status, detail: detail.into() }
    }

    fn gate(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckLine::new(name, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub lines: Vec<CheckLine>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.status == CheckStatus::Fail).count()
    }

    pub fn warnings(&self) -> usize {
        self.lines.iter().filter(|l| l.status == CheckStatus::Warn).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!("[{}] {}: {}\n", l.status, l.name, l.detail));
        }
        out.push_str(&format!(
            "{} checks, {} warnings, {} failures\n",
            self.lines.len(),
            self.warnings(),
            self.failures()
        ));
        out
    }
}

/// Deterministic pseudo-random trace-1 Hermitian matrix (not necessarily
/// positive).
pub fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> CMat {
    let mut m = CMat::zeros((d, d));
    for i in 0..d {
        for j in 0..d {
            m[[i, j]] = crate::linalg::c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    let mut h = (&m + &crate::linalg::dagger(&m)).mapv(|z| z * cr(0.5));
    let t = crate::linalg::trace(&h).re;
    let shift = (1.0 - t) / d as f64;
    for i in 0..d {
        h[[i, i]] += cr(shift);
    }
    h
}

/// Deterministic pseudo-random density matrix (Ginibre-style G·G†/Tr).
pub fn random_density(rng: &mut ChaCha8Rng, d: usize) -> CMat {
    let mut g = CMat::zeros((d, d));
    for i in 0..d {
        for j in 0..d {
            g[[i, j]] = crate::linalg::c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    let m = g.dot(&crate::linalg::dagger(&g));
    let t = crate::linalg::trace(&m).re;
    m.mapv(|z| z / cr(t))
}

pub fn field_checks() -> Vec<CheckLine> {
    let mut out = Vec::new();
    for (p, n) in [(2usize, 1usize), (3, 1), (2, 2)] {
        match crate::field::build_field(p, n) {
            Ok(f) => {
                let violations = f.axiom_violations();
                out.push(CheckLine::gate(
                    format!("field GF({}^{})", p, n),
                    violations.is_empty(),
                    if violations.is_empty() {
                        "all field axioms hold exhaustively".to_string()
                    } else {
                        violations.join("; ")
                    },
                ));
            }
            Err(e) => out.push(CheckLine::new(
                format!("field GF({}^{})", p, n),
                CheckStatus::Fail,
                e.to_string(),
            )),
        }
    }
    out
}

pub fn geometry_checks() -> Vec<CheckLine> {
    let mut out = Vec::new();
    let mut counts = Vec::new();
    for d in [2usize, 3, 4] {
        match PhaseSpace::new(d) {
            Ok(space) => {
                let lines = crate::geometry::enumerate_lines(&space.field);
                let report = crate::geometry::verify_geometry(&space.striations);
                let ok = report.pass()
                    && space.striations.len() == d + 1
                    && lines.len() == d * (d + 1);
                counts.push(space.striations.len());
                out.push(CheckLine::gate(
                    format!("geometry d={d}"),
                    ok,
                    format!(
                        "{} striations, {} distinct lines, axioms {}",
                        space.striations.len(),
                        lines.len(),
                        if report.pass() { "pass" } else { "violated" }
                    ),
                ));
            }
            Err(e) => out.push(CheckLine::new(
                format!("geometry d={d}"),
                CheckStatus::Fail,
                e.to_string(),
            )),
        }
    }
    out.push(CheckLine::new(
        "geometry striation counts",
        CheckStatus::Pass,
        format!(
            "{} striations validated",
            counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+")
        ),
    ));
    out
}

/// MUB structure lines for one set; suitable for fault injection in tests.
pub fn mub_checks(mubs: &MubSet) -> Vec<CheckLine> {
    let mut out = Vec::new();
    let report = check_unbiased(mubs);
    out.push(CheckLine::gate(
        format!("mub unbiasedness d={}", mubs.dim),
        report.pass(),
        format!(
            "max orthonormality dev {:.3e}, max unbiasedness dev {:.3e}",
            report.max_orthonormality_dev, report.max_unbiasedness_dev
        ),
    ));
    let comp = mubs
        .bases
        .iter()
        .map(completeness_deviation)
        .fold(0.0, f64::max);
    out.push(CheckLine::gate(
        format!("mub completeness d={}", mubs.dim),
        comp < 1e-12,
        format!("max |Σ P − I| = {comp:.3e}"),
    ));
    if let Some(sub) = &mubs.substitution {
        out.push(CheckLine::new(
            format!("mub table d={} basis {} vector {}", mubs.dim, sub.basis, sub.vector),
            CheckStatus::Warn,
            format!(
                "printed vector violates orthogonality by {:.4}; substituted the unique completion (1, -i, -1, -i)/2",
                sub.printed_violation
            ),
        ));
    }
    out
}

pub fn operator_checks(ops: &PhasePointOperatorSet) -> Vec<CheckLine> {
    let rep = operator_invariants(ops);
    vec![CheckLine::gate(
        format!("phase-point operators d={}", ops.dim),
        rep.pass(),
        format!(
            "herm {:.1e}, trace {:.1e}, Tr(AA)-d·δ {:.1e}, line sums {:.1e}",
            rep.hermiticity_dev, rep.trace_dev, rep.orthogonality_dev, rep.line_sum_dev
        ),
    )]
}

pub fn roundtrip_checks(ops: &PhasePointOperatorSet, samples: usize) -> Vec<CheckLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + ops.dim as u64);
    let mut worst_rt: f64 = 0.0;
    let mut worst_line: f64 = 0.0;
    for _ in 0..samples {
        let h = random_hermitian(&mut rng, ops.dim);
        let table = dwf_of_hermitian(&h, ops);
        let back = reconstruct(&table, ops).unwrap();
        worst_rt = worst_rt.max(max_abs_diff(&h, &back));

        let rho = random_density(&mut rng, ops.dim);
        let table = dwf_of_hermitian(&rho, ops);
        let report = line_sum_check(&table, ops, &rho).unwrap();
        worst_line = worst_line.max(report.max_deviation);
    }
    vec![
        CheckLine::gate(
            format!("dwf↔reconstruct round-trip d={}", ops.dim),
            worst_rt < 1e-10,
            format!("max deviation {worst_rt:.3e} over {samples} Hermitian samples"),
        ),
        CheckLine::gate(
            format!("line sums vs projector probabilities d={}", ops.dim),
            worst_line < 1e-10,
            format!("max deviation {worst_line:.3e} over {samples} random states"),
        ),
    ]
}

pub fn channel_checks() -> Vec<CheckLine> {
    let mut out = Vec::new();
    let rtn = RtnParams::new(0.001, 0.05).unwrap();
    let ad = AdParams::new(50.0, 0.01).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc4a7);
    let times: Vec<f64> = (0..25).map(|i| i as f64 * 2.3).collect();

    let mut worst_comp: f64 = 0.0;
    for &t in &times {
        for d in [2usize, 3] {
            worst_comp = worst_comp.max(kraus_rtn(d, t, &rtn).unwrap().completeness_deviation());
            worst_comp = worst_comp.max(kraus_ad(d, t, &ad).unwrap().completeness_deviation());
        }
        worst_comp = worst_comp
            .max(lift_two_qubit(&kraus_rtn(2, t, &rtn).unwrap()).unwrap().completeness_deviation());
        worst_comp = worst_comp
            .max(lift_two_qubit(&kraus_ad(2, t, &ad).unwrap()).unwrap().completeness_deviation());
    }
    out.push(CheckLine::gate(
        "kraus completeness",
        worst_comp < 1e-10,
        format!("max |ΣK†K − I| = {worst_comp:.3e} over {} times, 4 families + lifts", times.len()),
    ));

    let mut worst_id: f64 = 0.0;
    for d in [2usize, 3] {
        let rho = random_density(&mut rng, d);
        let k0 = kraus_rtn(d, 0.0, &rtn).unwrap();
        worst_id = worst_id.max(max_abs_diff(&apply_channel(&rho, &k0).unwrap(), &rho));
        let k0 = kraus_ad(d, 0.0, &ad).unwrap();
        worst_id = worst_id.max(max_abs_diff(&apply_channel(&rho, &k0).unwrap(), &rho));
    }
    out.push(CheckLine::gate(
        "t=0 identity channel",
        worst_id < 1e-12,
        format!("max deviation {worst_id:.3e}"),
    ));

    let mut worst_cptp: f64 = 0.0;
    let mut worst_psd: f64 = 0.0;
    for _ in 0..20 {
        for d in [2usize, 3] {
            let rho = random_density(&mut rng, d);
            for &t in &[0.7, 5.0, 40.0] {
                for ks in [kraus_rtn(d, t, &rtn).unwrap(), kraus_ad(d, t, &ad).unwrap()] {
                    let outp = apply_channel(&rho, &ks).unwrap();
                    worst_cptp = worst_cptp.max((crate::linalg::trace(&outp).re - 1.0).abs());
                    let eig = crate::eigen::eigh(&outp).unwrap();
                    worst_psd = worst_psd.min(eig.values[0]).min(0.0);
                }
            }
        }
    }
    out.push(CheckLine::gate(
        "cptp outputs",
        worst_cptp < 1e-10 && worst_psd > -1e-10,
        format!("max trace dev {worst_cptp:.3e}, min eigenvalue {worst_psd:.3e}"),
    ));

    let mut worst_unital: f64 = 0.0;
    for d in [2usize, 3] {
        let mixed = identity(d).mapv(|z| z / cr(d as f64));
        for &t in &[1.0, 17.0] {
            let outp = apply_channel(&mixed, &kraus_rtn(d, t, &rtn).unwrap()).unwrap();
            worst_unital = worst_unital.max(max_abs_diff(&outp, &mixed));
        }
    }
    out.push(CheckLine::gate(
        "rtn unitality",
        worst_unital < 1e-14,
        format!("max |ε(I/d) − I/d| = {worst_unital:.3e}"),
    ));
    out
}

pub fn closed_form_checks() -> Vec<CheckLine> {
    let mut out = Vec::new();

    for d in [3usize, 4] {
        let space = PhaseSpace::new(d).unwrap();
        let mubs = mub_set(d).unwrap();
        let target = implied_operators(d).unwrap();
        match find_matching_net(&space, &mubs, &target) {
            NetSearchOutcome::Match { assignment, residual } => {
                let is_default = assignment == crate::net::Assignment::paper(d).unwrap();
                out.push(CheckLine::gate(
                    format!("net search d={d}"),
                    is_default,
                    format!(
                        "closed form matched with residual {residual:.3e}; assignment {} the default net",
                        if is_default { "equals" } else { "differs from" }
                    ),
                ));
            }
            NetSearchOutcome::Mismatch { best_residual, .. } => {
                out.push(CheckLine::new(
                    format!("net search d={d}"),
                    CheckStatus::Fail,
                    format!("no matching assignment; best residual {best_residual:.3e}"),
                ));
            }
        }
    }

    // The printed qubit closed form carries no a1 term; report, don't fail.
    let space = PhaseSpace::new(2).unwrap();
    let mubs = mub_set(2).unwrap();
    match find_matching_net(&space, &mubs, &implied_operators(2).unwrap()) {
        NetSearchOutcome::Mismatch { best_residual, diagnostics, .. } => {
            out.push(CheckLine::new(
                "qubit closed form",
                CheckStatus::Warn,
                format!(
                    "no net reproduces the printed table (best residual {best_residual:.3});  {}",
                    diagnostics.join("; ")
                ),
            ));
        }
        NetSearchOutcome::Match { .. } => {
            out.push(CheckLine::new(
                "qubit closed form",
                CheckStatus::Fail,
                "unexpectedly matched a net despite the missing a₁ dependence".to_string(),
            ));
        }
    }

    // printed correlation-extraction formulas vs the reconstruction path
    let ops = phase_point_operators(&default_net(4).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e1e);
    let rho = random_density(&mut rng, 4);
    let table = dwf_of_hermitian(&rho, &ops);
    let cmp = crate::measures::correlation_from_dwf(&table, &ops).unwrap();
    let mut flipped = Vec::new();
    let mut matched = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let name = format!("t{}{}", i + 1, j + 1);
            if (cmp.secondary[i][j] + cmp.primary[i][j]).abs() < 1e-9 {
                flipped.push(name);
            } else if cmp.deviation[i][j].abs() < 1e-9 {
                matched.push(name);
            }
        }
    }
    out.push(CheckLine::new(
        "correlation extraction formulas",
        CheckStatus::Warn,
        format!(
            "printed formulas return −t for [{}] and +t for [{}]; production path uses reconstruction",
            flipped.join(","),
            matched.join(",")
        ),
    ));

    out
}

pub fn conjugation_probe() -> Vec<CheckLine> {
    let ops = phase_point_operators(&default_net(3).unwrap());
    let mut details = Vec::new();
    for rank in [1usize, 2] {
        match crate::negstate::negative_state(&ops, rank) {
            Ok(ns) => {
                let passing = crate::unitary::conjugating_gates(&ns.state).unwrap_or_default();
                details.push(format!(
                    "NS{rank}: {}",
                    if passing.is_empty() {
                        "no candidate phase gate conjugates the state".to_string()
                    } else {
                        format!("conjugated by {}", passing.join(", "))
                    }
                ));
            }
            Err(e) => details.push(format!("NS{rank}: {e}")),
        }
    }
    vec![CheckLine::new(
        "qutrit phase-gate conjugation probe",
        CheckStatus::Pass,
        details.join("; "),
    )]
}

/// Run every suite and collect the report. Known source-table defects come
/// back as warnings; a failure indicates a genuine broken invariant.
pub fn verify_all() -> VerifyReport {
    let mut lines = Vec::new();
    lines.extend(field_checks());
    lines.extend(geometry_checks());
    for d in [2usize, 3, 4] {
        lines.extend(mub_checks(&mub_set(d).unwrap()));
    }
    for d in [2usize, 3, 4] {
        let ops = phase_point_operators(&default_net(d).unwrap());
        lines.extend(operator_checks(&ops));
        lines.extend(roundtrip_checks(&ops, 40));
    }
    lines.extend(channel_checks());
    lines.extend(closed_form_checks());
    lines.extend(conjugation_probe());
    VerifyReport { lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_build_has_no_failures() {
        let report = verify_all();
        assert!(report.passed(), "{}", report.render());
        assert!(report.warnings() >= 3, "expected the documented warnings");
        // the three documented defects are present as warnings
        let text = report.render();
        assert!(text.contains("qubit closed form"));
        assert!(text.contains("correlation extraction formulas"));
        assert!(text.contains("basis 5 vector 3"));
        assert!(text.contains("3+4+5 striations validated"));
    }

    #[test]
    fn corrupted_mub_table_fails_named_check() {
        let mut mubs = mub_set(3).unwrap();
        mubs.bases[2].vectors[1][0] = crate::linalg::cr(0.9);
        let lines = mub_checks(&mubs);
        let fail = lines.iter().find(|l| l.status == CheckStatus::Fail);
        assert!(fail.is_some());
        assert!(fail.unwrap().name.contains("mub"));
    }
}
