//! Sweep configuration: a flat JSON object with strict schema validation.
//!
//! ```json
//! {
//!   "system": "qubit",
//!   "state": "qubit_ns1",
//!   "channel": "rtn",
//!   "gamma": 0.001,
//!   "b": 0.05,
//!   "t_stop": 250.0,
//!   "measures": ["negativity"]
//! }
//! ```
//!
//! Unknown keys are rejected; defaults: `t_start` 0, `steps` 500 (grid
//! points), `format` csv, `measures` ["dwf"], `parallel` true.

use dwf_core::states::BellLabel;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid config: {0}")]
    Invalid(String),

    #[error("incompatible measure {measure} for system {system}: {reason}")]
    IncompatibleMeasure {
        measure: String,
        system: String,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum System {
    Qubit,
    Qutrit,
    TwoQubit,
}

impl System {
    pub fn dim(&self) -> usize {
        match self {
            System::Qubit => 2,
            System::Qutrit => 3,
            System::TwoQubit => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            System::Qubit => "qubit",
            System::Qutrit => "qutrit",
            System::TwoQubit => "twoqubit",
        }
    }
}

impl std::str::FromStr for System {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "qubit" => Ok(System::Qubit),
            "qutrit" => Ok(System::Qutrit),
            "twoqubit" => Ok(System::TwoQubit),
            other => Err(ConfigError::Invalid(format!(
                "unknown system {other:?} (expected qubit, qutrit or twoqubit)"
            ))),
        }
    }
}

/// What to evolve: a named caption/Bell preset, an exact negative state by
/// rank, a Bell label, raw Bloch parameters, or the maximally mixed state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum StateSpec {
    Preset(String),
    NsRank(usize),
    Bell(BellLabel),
    Bloch(Vec<f64>),
    Mixed,
}

impl std::fmt::Display for StateSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StateSpec::Preset(name) => write!(f, "{name}"),
            StateSpec::NsRank(k) => write!(f, "ns{k}"),
            StateSpec::Bell(label) => write!(f, "bell:{label:?}"),
            StateSpec::Bloch(v) => write!(f, "bloch:{} values", v.len()),
            StateSpec::Mixed => write!(f, "mixed"),
        }
    }
}

/// Parse a state spec string: `ns<k>`, `bell:<label>`,
/// `bloch:<v1,v2,...>`, `mixed`, or a preset name.
pub fn parse_state_spec(s: &str) -> Result<StateSpec, ConfigError> {
    if s == "mixed" {
        return Ok(StateSpec::Mixed);
    }
    if let Some(rest) = s.strip_prefix("ns") {
        if let Ok(k) = rest.parse::<usize>() {
            if k == 0 {
                return Err(ConfigError::Invalid("ns rank is 1-based".into()));
            }
            return Ok(StateSpec::NsRank(k));
        }
    }
    if let Some(rest) = s.strip_prefix("bell:") {
        let label: BellLabel = rest
            .parse()
            .map_err(|e| ConfigError::Invalid(format!("{e}")))?;
        return Ok(StateSpec::Bell(label));
    }
    if let Some(rest) = s.strip_prefix("bloch:") {
        let values: Result<Vec<f64>, _> = rest.split(',').map(|x| x.trim().parse::<f64>()).collect();
        let values =
            values.map_err(|e| ConfigError::Invalid(format!("bad bloch component: {e}")))?;
        if !matches!(values.len(), 3 | 8 | 15) {
            return Err(ConfigError::Invalid(format!(
                "bloch spec has {} values (expected 3, 8 or 15)",
                values.len()
            )));
        }
        return Ok(StateSpec::Bloch(values));
    }
    if dwf_core::states::PRESET_NAMES.contains(&s) {
        return Ok(StateSpec::Preset(s.to_string()));
    }
    Err(ConfigError::Invalid(format!(
        "unknown state spec {s:?} (expected ns<k>, bell:<label>, bloch:<values>, mixed or one of {:?})",
        dwf_core::states::PRESET_NAMES
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelSpec {
    Rtn { gamma: f64, b: f64 },
    Ad { gamma: f64, g: f64 },
}

impl ChannelSpec {
    pub fn family(&self) -> &'static str {
        match self {
            ChannelSpec::Rtn { .. } => "rtn",
            ChannelSpec::Ad { .. } => "ad",
        }
    }

    pub fn regime(&self) -> dwf_core::Regime {
        match self {
            ChannelSpec::Rtn { gamma, b } => {
                dwf_core::classify_rtn(&dwf_core::RtnParams { gamma: *gamma, b: *b })
            }
            ChannelSpec::Ad { gamma, g } => {
                dwf_core::classify_ad(&dwf_core::AdParams { gamma: *gamma, g: *g })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Dwf,
    Negativity,
    Mana,
    Coherence,
    Concurrence,
    Fidelity,
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Dwf => "dwf",
            Measure::Negativity => "negativity",
            Measure::Mana => "mana",
            Measure::Coherence => "coherence",
            Measure::Concurrence => "concurrence",
            Measure::Fidelity => "fidelity",
        }
    }
}

impl std::str::FromStr for Measure {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "dwf" => Ok(Measure::Dwf),
            "negativity" => Ok(Measure::Negativity),
            "mana" => Ok(Measure::Mana),
            "coherence" => Ok(Measure::Coherence),
            "concurrence" => Ok(Measure::Concurrence),
            "fidelity" => Ok(Measure::Fidelity),
            other => Err(ConfigError::Invalid(format!("unknown measure {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(ConfigError::Invalid(format!(
                "unknown format {other:?} (expected csv or json)"
            ))),
        }
    }
}

/// A validated sweep request.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepConfig {
    pub system: System,
    pub state: StateSpec,
    pub channel: ChannelSpec,
    pub t_start: f64,
    pub t_stop: f64,
    /// Number of grid points (inclusive endpoints).
    pub steps: usize,
    pub measures: Vec<Measure>,
    pub out: Option<String>,
    pub format: OutputFormat,
    pub parallel: bool,
}

impl SweepConfig {
    pub fn time_grid(&self) -> Vec<f64> {
        let n = self.steps;
        (0..n)
            .map(|i| {
                self.t_start + (self.t_stop - self.t_start) * i as f64 / (n - 1) as f64
            })
            .collect()
    }
}

/// The raw flat schema; unknown keys are rejected here by serde.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    system: String,
    state: String,
    channel: String,
    gamma: f64,
    #[serde(default)]
    b: Option<f64>,
    #[serde(default)]
    g: Option<f64>,
    #[serde(default)]
    t_start: Option<f64>,
    t_stop: f64,
    #[serde(default)]
    steps: Option<usize>,
    #[serde(default)]
    measures: Option<Vec<String>>,
    #[serde(default)]
    out: Option<String>,
    #[serde(default)]
    format: Option<String>,
    #[serde(default)]
    parallel: Option<bool>,
}

/// Parse and validate a config document.
pub fn parse_config(text: &str) -> Result<SweepConfig, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text)?;
    let system: System = raw.system.parse()?;
    let state = parse_state_spec(&raw.state)?;
    validate_state_system(&state, system)?;

    let channel = match raw.channel.as_str() {
        "rtn" => {
            if raw.g.is_some() {
                return Err(ConfigError::Invalid(
                    "key \"g\" is not valid for the rtn channel (use \"b\")".into(),
                ));
            }
            let b = raw.b.ok_or_else(|| {
                ConfigError::Invalid("rtn channel requires key \"b\"".into())
            })?;
            dwf_core::RtnParams::new(raw.gamma, b)
                .map_err(|e| ConfigError::Invalid(e.to_string()))?;
            ChannelSpec::Rtn { gamma: raw.gamma, b }
        }
        "ad" => {
            if raw.b.is_some() {
                return Err(ConfigError::Invalid(
                    "key \"b\" is not valid for the ad channel (use \"g\")".into(),
                ));
            }
            let g = raw.g.ok_or_else(|| {
                ConfigError::Invalid("ad channel requires key \"g\"".into())
            })?;
            dwf_core::AdParams::new(raw.gamma, g)
                .map_err(|e| ConfigError::Invalid(e.to_string()))?;
            ChannelSpec::Ad { gamma: raw.gamma, g }
        }
        other => {
            return Err(ConfigError::Invalid(format!(
                "unknown channel {other:?} (expected rtn or ad)"
            )))
        }
    };

    let t_start = raw.t_start.unwrap_or(0.0);
    if t_start < 0.0 {
        return Err(ConfigError::Invalid(format!("t_start {t_start} < 0")));
    }
    if raw.t_stop.is_nan() || raw.t_stop <= t_start {
        return Err(ConfigError::Invalid(format!(
            "t_stop {} must exceed t_start {t_start}",
            raw.t_stop
        )));
    }
    let steps = raw.steps.unwrap_or(500);
    if steps < 2 {
        return Err(ConfigError::Invalid(format!("steps {steps} < 2")));
    }

    let mut measures = Vec::new();
    for name in raw.measures.unwrap_or_else(|| vec!["dwf".into()]) {
        let m: Measure = name.parse()?;
        check_measure(m, system)?;
        if !measures.contains(&m) {
            measures.push(m);
        }
    }

    let format = match raw.format {
        Some(f) => f.parse()?,
        None => OutputFormat::Csv,
    };

    Ok(SweepConfig {
        system,
        state,
        channel,
        t_start,
        t_stop: raw.t_stop,
        steps,
        measures,
        out: raw.out,
        format,
        parallel: raw.parallel.unwrap_or(true),
    })
}

pub fn check_measure(m: Measure, system: System) -> Result<(), ConfigError> {
    match m {
        Measure::Concurrence | Measure::Fidelity if system != System::TwoQubit => {
            Err(ConfigError::IncompatibleMeasure {
                measure: m.name().into(),
                system: system.name().into(),
                reason: "requires the twoqubit system".into(),
            })
        }
        _ => Ok(()),
    }
}

fn validate_state_system(state: &StateSpec, system: System) -> Result<(), ConfigError> {
    match state {
        StateSpec::Bell(_) if system != System::TwoQubit => Err(ConfigError::Invalid(
            "bell states require the twoqubit system".into(),
        )),
        StateSpec::Bloch(values) => {
            let expect = match system {
                System::Qubit => 3,
                System::Qutrit => 8,
                System::TwoQubit => 15,
            };
            if values.len() != expect {
                return Err(ConfigError::Invalid(format!(
                    "bloch spec has {} values but system {} needs {expect}",
                    values.len(),
                    system.name()
                )));
            }
            Ok(())
        }
        StateSpec::Preset(name) => {
            let expect = match name.as_str() {
                "qubit_ns1" => System::Qubit,
                "qutrit_ns1" => System::Qutrit,
                _ => System::TwoQubit,
            };
            if expect != system {
                return Err(ConfigError::Invalid(format!(
                    "preset {name:?} belongs to system {}, not {}",
                    expect.name(),
                    system.name()
                )));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_config_parses_with_defaults() {
        let cfg = parse_config(
            r#"{"system":"qubit","state":"qubit_ns1","channel":"rtn","gamma":0.001,"b":0.05,"t_stop":250}"#,
        )
        .unwrap();
        assert_eq!(cfg.system, System::Qubit);
        assert_eq!(cfg.steps, 500);
        assert_eq!(cfg.format, OutputFormat::Csv);
        assert_eq!(cfg.measures, vec![Measure::Dwf]);
        assert!(cfg.parallel);
        assert_eq!(cfg.time_grid().len(), 500);
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = parse_config(
            r#"{"system":"qubit","state":"ns1","channel":"rtn","gamma":1,"b":0.1,"t_stop":10,"bogus":1}"#,
        );
        assert!(matches!(err, Err(ConfigError::Json(_))));
        assert!(format!("{}", err.unwrap_err()).contains("bogus"));
    }

    #[test]
    fn incompatible_measure_rejected() {
        let err = parse_config(
            r#"{"system":"qutrit","state":"ns1","channel":"rtn","gamma":1,"b":0.1,"t_stop":10,"measures":["concurrence"]}"#,
        );
        assert!(matches!(err, Err(ConfigError::IncompatibleMeasure { .. })));
    }

    #[test]
    fn grid_rules_enforced() {
        let err = parse_config(
            r#"{"system":"qubit","state":"ns1","channel":"rtn","gamma":1,"b":0.1,"t_stop":10,"steps":1}"#,
        );
        assert!(err.is_err());
        let err = parse_config(
            r#"{"system":"qubit","state":"ns1","channel":"rtn","gamma":1,"b":0.1,"t_stop":0}"#,
        );
        assert!(err.is_err());
    }

    #[test]
    fn channel_key_mixups_rejected() {
        let err = parse_config(
            r#"{"system":"qubit","state":"ns1","channel":"rtn","gamma":1,"g":0.1,"t_stop":10}"#,
        );
        assert!(err.is_err());
        let err = parse_config(
            r#"{"system":"qubit","state":"ns1","channel":"ad","gamma":1,"b":0.1,"t_stop":10}"#,
        );
        assert!(err.is_err());
    }

    #[test]
    fn state_specs_parse() {
        assert_eq!(parse_state_spec("ns2").unwrap(), StateSpec::NsRank(2));
        assert_eq!(
            parse_state_spec("bell:phi+").unwrap(),
            StateSpec::Bell(BellLabel::PhiPlus)
        );
        assert!(matches!(
            parse_state_spec("bloch:0.1,0.2,0.3").unwrap(),
            StateSpec::Bloch(ref v) if v.len() == 3
        ));
        assert_eq!(parse_state_spec("mixed").unwrap(), StateSpec::Mixed);
        assert!(parse_state_spec("ns0").is_err());
        assert!(parse_state_spec("bloch:1,2").is_err());
        assert!(parse_state_spec("whatever").is_err());
    }

    #[test]
    fn preset_system_mismatch_rejected() {
        let err = parse_config(
            r#"{"system":"qubit","state":"qutrit_ns1","channel":"rtn","gamma":1,"b":0.1,"t_stop":10}"#,
        );
        assert!(err.is_err());
    }
}
