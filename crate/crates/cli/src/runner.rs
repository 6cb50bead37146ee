//! Time-sweep execution: one exact channel map per grid point applied to the
//! initial state (the maps are closed-form in t, so nothing is composed
//! across grid points), Wigner table plus requested measures per row.

use crate::config::{ChannelSpec, Measure, StateSpec, SweepConfig, System};
use dwf_core::linalg::CMat;
use dwf_core::states::{QubitBloch, QutritBloch, TwoQubitBloch};
use dwf_core::*;
use rayon::prelude::*;
use serde::Serialize;
use std::result::Result;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("state resolution failed: {0}")]
    State(String),

    #[error("kernel violation at t = {t}: {detail}")]
    Kernel { t: f64, detail: String },

    #[error(transparent)]
    Core(#[from] dwf_core::Error),
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub t: f64,
    /// Flattened table in printed row-major order (W_1_1 … W_d_d).
    pub w: Vec<f64>,
    /// One value per requested scalar measure, in config order.
    pub measures: Vec<f64>,
    pub regime: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepOutput {
    pub config: SweepConfig,
    /// Column names for the scalar measures (after the W columns).
    pub measure_columns: Vec<String>,
    pub rows: Vec<SweepRow>,
}

/// Resolve a state spec to a density matrix of the system's dimension.
pub fn resolve_state(system: System, spec: &StateSpec) -> Result<CMat, RunError> {
    let d = system.dim();
    let rho = match spec {
        StateSpec::Mixed => dwf_core::linalg::identity(d)
            .mapv(|z| z / dwf_core::linalg::cr(d as f64)),
        StateSpec::Preset(name) => {
            let p = preset(name).map_err(|e| RunError::State(e.to_string()))?;
            if p.state.nrows() != d {
                return Err(RunError::State(format!(
                    "preset {name:?} has dimension {}, system needs {d}",
                    p.state.nrows()
                )));
            }
            p.state
        }
        StateSpec::NsRank(k) => {
            let ops = phase_point_operators(&net::default_net(d).map_err(RunError::Core)?);
            negative_state(&ops, *k).map_err(RunError::Core)?.state
        }
        StateSpec::Bell(label) => bell_state(*label),
        StateSpec::Bloch(values) => match system {
            System::Qubit => qubit_from_bloch(&QubitBloch {
                a1: values[0],
                a2: values[1],
                a3: values[2],
            })
            .map_err(RunError::Core)?,
            System::Qutrit => {
                let mut n = [0.0; 8];
                n.copy_from_slice(values);
                qutrit_from_bloch(&QutritBloch { n }).map_err(RunError::Core)?
            }
            System::TwoQubit => {
                let mut a = [0.0; 3];
                let mut s = [0.0; 3];
                let mut t = [[0.0; 3]; 3];
                a.copy_from_slice(&values[0..3]);
                s.copy_from_slice(&values[3..6]);
                for i in 0..3 {
                    for j in 0..3 {
                        t[i][j] = values[6 + 3 * i + j];
                    }
                }
                two_qubit_from_bloch(&TwoQubitBloch { a, s, t }).map_err(RunError::Core)?
            }
        },
    };
    Ok(rho)
}

/// Kraus set for the configured channel at one time.
pub fn kraus_at(system: System, channel: &ChannelSpec, t: f64) -> Result<KrausSet, RunError> {
    let base_dim = match system {
        System::TwoQubit => 2,
        other => other.dim(),
    };
    let ks = match channel {
        ChannelSpec::Rtn { gamma, b } => kraus_rtn(
            base_dim,
            t,
            &RtnParams { gamma: *gamma, b: *b },
        ),
        ChannelSpec::Ad { gamma, g } => kraus_ad(
            base_dim,
            t,
            &AdParams { gamma: *gamma, g: *g },
        ),
    };
    let ks = ks.map_err(|e| match e {
        dwf_core::Error::KernelViolation { t, detail } => RunError::Kernel { t, detail },
        other => RunError::Core(other),
    })?;
    if system == System::TwoQubit {
        lift_two_qubit(&ks).map_err(RunError::Core)
    } else {
        Ok(ks)
    }
}

/// Fill a [`MeasureRecord`] with the requested measures of one evolved state.
fn record_at(
    t: f64,
    requested: &[Measure],
    rho: &CMat,
    table: &wigner::DwfTable,
    ops: &PhasePointOperatorSet,
) -> Result<MeasureRecord, RunError> {
    let mut rec = MeasureRecord { t, ..Default::default() };
    for m in requested {
        match m {
            Measure::Dwf => {} // emitted as the W columns
            Measure::Negativity => {
                rec.negativity = Some(negativity(rho, ops).map_err(RunError::Core)?)
            }
            Measure::Mana => rec.mana = Some(mana(table)),
            Measure::Coherence => rec.coherence = Some(coherence_l1(rho)),
            Measure::Concurrence => {
                rec.concurrence = Some(concurrence(rho).map_err(RunError::Core)?)
            }
            Measure::Fidelity => {
                let (n_f, f) = teleportation_fidelity(rho).map_err(RunError::Core)?;
                rec.n_f = Some(n_f);
                rec.fidelity = Some(f);
            }
        }
    }
    Ok(rec)
}

fn record_column(rec: &MeasureRecord, m: Measure) -> f64 {
    match m {
        Measure::Dwf => unreachable!("dwf is emitted as the W columns"),
        Measure::Negativity => rec.negativity.expect("requested"),
        Measure::Mana => rec.mana.expect("requested"),
        Measure::Coherence => rec.coherence.expect("requested"),
        Measure::Concurrence => rec.concurrence.expect("requested"),
        Measure::Fidelity => rec.fidelity.expect("requested"),
    }
}

/// Run the sweep: rows ordered by t, byte-identical whether or not the rows
/// are computed in parallel.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutput, RunError> {
    let rho0 = resolve_state(cfg.system, &cfg.state)?;
    let ops = phase_point_operators(&net::default_net(cfg.system.dim()).map_err(RunError::Core)?);
    let regime = cfg.channel.regime().to_string();
    let scalar_measures: Vec<Measure> = cfg
        .measures
        .iter()
        .copied()
        .filter(|m| *m != Measure::Dwf)
        .collect();

    let grid = cfg.time_grid();
    let row_of = |&t: &f64| -> Result<SweepRow, RunError> {
        let ks = kraus_at(cfg.system, &cfg.channel, t)?;
        let rho = apply_channel(&rho0, &ks).map_err(RunError::Core)?;
        let table = wigner::dwf_of_hermitian(&rho, &ops);
        let rec = record_at(t, &scalar_measures, &rho, &table, &ops)?;
        if let (Some(n_f), Some(f)) = (rec.n_f, rec.fidelity) {
            debug_assert!((f - 0.5 * (1.0 + n_f / 3.0)).abs() < 1e-12);
        }
        let measures = scalar_measures.iter().map(|&m| record_column(&rec, m)).collect();
        Ok(SweepRow {
            t,
            w: table.values.clone(),
            measures,
            regime: regime.clone(),
        })
    };

    let rows: Result<Vec<SweepRow>, RunError> = if cfg.parallel {
        grid.par_iter().map(row_of).collect()
    } else {
        grid.iter().map(row_of).collect()
    };

    Ok(SweepOutput {
        config: cfg.clone(),
        measure_columns: scalar_measures.iter().map(|m| m.name().to_string()).collect(),
        rows: rows?,
    })
}
