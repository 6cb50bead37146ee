//! Discrete Wigner functions on finite-field phase spaces for dimensions 2, 3
//! and 4, with open-system dynamics under random-telegraph and
//! amplitude-damping channels.
//!
//! The crate is organized bottom-up:
//!
//! - [`field`] / [`geometry`]: small Galois fields, affine lines over the
//!   `d × d` grid and their partition into `d + 1` striations.
//! - [`mub`]: the fixed sets of `d + 1` mutually unbiased bases.
//! - [`net`] / [`ops`]: the quantum net tying striations to bases and the
//!   phase-point operators `A_α` it generates.
//! - [`wigner`] / [`negstate`]: Wigner tables, reconstruction, negativity,
//!   sum negativity, mana and the maximally negative eigenvector states.
//! - [`closed_form`] / [`net_search`]: tabulated closed-form Wigner
//!   expressions and the search reconciling them with constructed nets.
//! - [`states`] / [`channels`] / [`measures`]: Bloch-parametrized states,
//!   time-dependent Kraus families and the quantumness measures.
//! - [`verify`]: the consolidated self-check report behind `dwf verify`.

pub mod channels;
pub mod closed_form;
pub mod eigen;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod measures;
pub mod mub;
pub mod negstate;
pub mod net;
pub mod net_search;
pub mod ops;
pub mod states;
pub mod unitary;
pub mod verify;
pub mod wigner;

pub use channels::{
    ad_decay, apply_channel, classify_ad, classify_rtn, kraus_ad, kraus_rtn, lift_two_qubit,
    rtn_kernel, AdParams, KrausSet, Regime, RtnParams,
};
pub use closed_form::{closed_form_qubit_dwf, closed_form_qutrit_dwf, closed_form_two_qubit_dwf};
pub use eigen::{eigh, HermitianEigen};
pub use error::Error;
pub use field::{build_field, GaloisField};
pub use geometry::{build_striations, enumerate_lines, verify_geometry, Line, PhasePoint, PhaseSpace, Striation};
pub use linalg::{CMat, C64};
pub use measures::{
    coherence_l1, concurrence, correlation_direct, correlation_from_dwf, spin_flip,
    teleportation_fidelity, MeasureRecord,
};
pub use mub::{check_unbiased, mub_set, Basis, MubSet};
pub use negstate::{negative_state, NegativeStateResult};
pub use net::{build_quantum_net, Assignment, QuantumNet};
pub use net_search::{find_matching_net, NetSearchOutcome};
pub use ops::{phase_point_operators, PhasePointOperatorSet};
pub use states::{
    bell_state, bloch_from_density, preset, qubit_from_bloch, qutrit_from_bloch,
    two_qubit_from_bloch, BellLabel, BlochParams, Preset, QubitBloch, QutritBloch, TwoQubitBloch,
};
pub use unitary::{apply_unitary, is_conjugate};
pub use verify::{verify_all, CheckLine, CheckStatus, VerifyReport};
pub use wigner::{dwf, line_sum_check, mana, negativity, reconstruct, robustness, sum_negativity, DwfTable};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
