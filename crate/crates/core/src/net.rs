//! The quantum net: which basis goes with which striation and which basis
//! vector with which line.
//!
//! Striation i is always paired with basis i (both orderings follow the
//! printed tables); the per-striation line→vector permutations default to the
//! assignment recovered from the closed-form Wigner expressions by
//! [`crate::net_search::find_matching_net`], frozen here as constants. The
//! identity assignment is also available; it generates a valid operator set
//! but labels the grid differently from the printed tables.

use crate::error::Error;
use crate::geometry::{PhasePoint, PhaseSpace};
use crate::linalg::{projector, CMat};
use crate::mub::MubSet;
use crate::Result;

/// Per-striation line→vector permutations: line j of striation i is assigned
/// basis vector `per_striation[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub per_striation: Vec<Vec<usize>>,
}

impl Assignment {
    pub fn identity(d: usize) -> Self {
        Assignment {
            per_striation: vec![(0..d).collect(); d + 1],
        }
    }

    /// The assignment under which the constructed Wigner function matches the
    /// printed closed forms (net search result; see `net_search`).
    pub fn paper(d: usize) -> Result<Self> {
        let rev = |d: usize| (0..d).rev().collect::<Vec<_>>();
        let id = |d: usize| (0..d).collect::<Vec<_>>();
        match d {
            2 => Ok(Assignment {
                per_striation: vec![rev(2), rev(2), rev(2)],
            }),
            3 => Ok(Assignment {
                per_striation: vec![id(3), rev(3), rev(3), rev(3)],
            }),
            4 => Ok(Assignment {
                per_striation: vec![id(4), rev(4), rev(4), rev(4), rev(4)],
            }),
            _ => Err(Error::UnsupportedDimension(d)),
        }
    }

    pub fn is_bijective(&self, d: usize) -> bool {
        self.per_striation.len() == d + 1
            && self.per_striation.iter().all(|sigma| {
                let mut seen = vec![false; d];
                sigma.len() == d
                    && sigma.iter().all(|&v| {
                        if v < d && !seen[v] {
                            seen[v] = true;
                            true
                        } else {
                            false
                        }
                    })
            })
    }
}

/// A validated striation↔basis / line↔vector association.
#[derive(Debug, Clone)]
pub struct QuantumNet {
    pub space: PhaseSpace,
    pub mubs: MubSet,
    pub assignment: Assignment,
}

impl QuantumNet {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis-vector index assigned to line j of striation i.
    pub fn vector_index(&self, striation: usize, line: usize) -> usize {
        self.assignment.per_striation[striation][line]
    }

    /// Projector P_{i,j} assigned to line j of striation i.
    pub fn line_projector(&self, striation: usize, line: usize) -> CMat {
        projector(self.mubs.vector(striation, self.vector_index(striation, line)))
    }

    /// Indices (striation, line) of the d+1 lines through a point.
    pub fn lines_through(&self, pt: PhasePoint) -> Vec<(usize, usize)> {
        (0..self.space.striations.len())
            .map(|i| (i, self.space.line_through(i, pt)))
            .collect()
    }
}

/// Validate and assemble a net. The default (paper-matched) net for a
/// dimension is [`default_net`].
pub fn build_quantum_net(
    space: PhaseSpace,
    mubs: MubSet,
    assignment: Assignment,
) -> Result<QuantumNet> {
    let d = space.dim();
    if mubs.dim != d {
        return Err(Error::DimensionMismatch(format!(
            "phase space d={} vs MUB set d={}",
            d, mubs.dim
        )));
    }
    if !assignment.is_bijective(d) {
        return Err(Error::NonBijectiveAssignment(format!(
            "expected {} permutations of 0..{}",
            d + 1,
            d
        )));
    }
    Ok(QuantumNet { space, mubs, assignment })
}

/// The default net for a dimension: printed tables + paper-matched assignment.
pub fn default_net(d: usize) -> Result<QuantumNet> {
    build_quantum_net(PhaseSpace::new(d)?, crate::mub::mub_set(d)?, Assignment::paper(d)?)
}
