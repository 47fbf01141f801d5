//! The alternating-operator protocol, its observables and parameter sources.
//!
//! `run_qaoa` prepares the mixer's invariant state and then, for each round,
//! applies `e^{−iα_i H_A}` followed by the mixer with angle `β_i`.

mod optimizer;
mod paper;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::problems::DiagonalHamiltonian;
use crate::simulator::{prepare_initial_state, StateVector};
use crate::{Error, Result};

pub use optimizer::{optimize_parameters, OptimizationResult, OptimizerConfig};
pub use paper::{listed_combinations, paper_parameters, PaperVariant};

/// Largest round count the optimizer accepts.
pub const MAX_OPTIMIZER_ROUNDS: usize = 4;

/// Angles of a `p`-round protocol.
#[derive(Debug, Clone, PartialEq)]
pub struct QaoaParams {
    alphas: Vec<f64>,
    betas: Vec<f64>,
}

impl QaoaParams {
    pub fn new(alphas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if alphas.len() != betas.len() {
            return Err(Error::InvalidParams(format!("{} alphas but {} betas", alphas.len(), betas.len())));
        }
        if alphas.is_empty() {
            return Err(Error::InvalidParams("at least one round is required".into()));
        }
        if alphas.iter().chain(&betas).any(|a| !a.is_finite()) {
            return Err(Error::InvalidParams("angles must be finite".into()));
        }
        Ok(Self { alphas, betas })
    }

    /// Interleaved `[α_1, β_1, α_2, β_2, …]`.
    pub fn from_interleaved(angles: &[f64]) -> Result<Self> {
        if !angles.len().is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("odd number of angles ({})", angles.len())));
        }
        Self::new(angles.iter().step_by(2).copied().collect(), angles.iter().skip(1).step_by(2).copied().collect())
    }

    pub fn interleaved(&self) -> Vec<f64> {
        self.alphas.iter().zip(&self.betas).flat_map(|(&a, &b)| [a, b]).collect()
    }

    pub fn rounds(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// Same protocol with extra rounds of zero angles appended.
    pub fn padded(&self, rounds: usize) -> Self {
        let mut out = self.clone();
        out.alphas.resize(rounds.max(self.rounds()), 0.0);
        out.betas.resize(rounds.max(self.rounds()), 0.0);
        out
    }

    pub fn negated(&self) -> Self {
        Self { alphas: self.alphas.iter().map(|a| -a).collect(), betas: self.betas.iter().map(|b| -b).collect() }
    }
}

/// The mixing operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MixerSpec {
    /// `e^{−iβ Σ σˣ}`, started from `|+⟩^⊗n`.
    Transverse,
    /// `e^{−iβ|G⟩⟨G|}`, started from `|G⟩`.
    Grover { q: f64 },
}

impl MixerSpec {
    pub fn grover(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange { name: "q", value: q, range: "the open interval (0, 1)" });
        }
        Ok(Self::Grover { q })
    }

    pub fn name(&self) -> &'static str {
        match self {
            MixerSpec::Transverse => "transverse",
            MixerSpec::Grover { .. } => "grover",
        }
    }

    /// Mixer angle that realises a published angle `beta`.
    ///
    /// Transverse angles are used as printed. Grover angles are negated, which is
    /// the same as reading the mixer Hamiltonian as `−|G⟩⟨G|`.
    pub fn published_beta(&self, beta: f64) -> f64 {
        match self {
            MixerSpec::Transverse => beta,
            MixerSpec::Grover { .. } => -beta,
        }
    }

    /// Applies [`MixerSpec::published_beta`] to every round.
    pub fn from_published(&self, params: &QaoaParams) -> QaoaParams {
        QaoaParams {
            alphas: params.alphas.clone(),
            betas: params.betas.iter().map(|&b| self.published_beta(b)).collect(),
        }
    }

    fn initial_state(&self, n: usize) -> Result<StateVector> {
        match *self {
            MixerSpec::Transverse => prepare_initial_state(n, 0.5),
            MixerSpec::Grover { q } => prepare_initial_state(n, q),
        }
    }

    fn apply(&self, s: &mut StateVector, beta: f64) -> Result<()> {
        match *self {
            MixerSpec::Transverse => {
                s.apply_transverse_mixer(beta);
                Ok(())
            }
            MixerSpec::Grover { q } => s.apply_grover_mixer(q, beta),
        }
    }
}

impl fmt::Display for MixerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixerSpec::Transverse => f.write_str("transverse"),
            MixerSpec::Grover { q } => write!(f, "grover(q={q})"),
        }
    }
}

/// Final state of the protocol.
pub fn run_qaoa(h: &DiagonalHamiltonian, mixer: &MixerSpec, params: &QaoaParams) -> Result<StateVector> {
    let mut s = mixer.initial_state(h.num_qubits())?;
    for (&alpha, &beta) in params.alphas.iter().zip(&params.betas) {
        s.apply_phase_separator(h, alpha)?;
        mixer.apply(&mut s, beta)?;
    }
    Ok(s)
}

fn check_dims(s: &StateVector, h: &DiagonalHamiltonian) -> Result<()> {
    if s.dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: s.dim() });
    }
    Ok(())
}

/// `⟨s|H|s⟩`.
pub fn expectation_energy(s: &StateVector, h: &DiagonalHamiltonian) -> Result<f64> {
    check_dims(s, h)?;
    Ok(s.amplitudes().iter().zip(h.energies()).map(|(a, e)| a.norm_sqr() * e).sum())
}

/// Probability of measuring a ground state of `h`.
pub fn ground_state_probability(s: &StateVector, h: &DiagonalHamiltonian) -> Result<f64> {
    check_dims(s, h)?;
    let amplitudes = s.amplitudes();
    Ok(h.ground_set().iter().map(|&x| amplitudes[x].norm_sqr()).sum())
}
