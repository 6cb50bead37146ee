//! Experiment harness behind the `dwf` binary: sweep configs, figure presets,
//! the time-sweep runner and the CSV/JSON writers.

pub mod config;
pub mod output;
pub mod presets;
pub mod runner;

pub use config::{
    parse_config, parse_state_spec, ChannelSpec, ConfigError, Measure, OutputFormat, StateSpec,
    SweepConfig, System,
};
pub use output::{render_csv, render_json, write_atomic};
pub use presets::{figure_preset, preset_names, Series};
pub use runner::{resolve_state, run_sweep, RunError, SweepOutput, SweepRow};
