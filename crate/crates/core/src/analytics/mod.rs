//! Sampling and fair-sampling statistics.
//!
//! - [`sample`] / [`postselect_ground`]: seeded measurement records.
//! - [`draws`]: how many draws it takes to see `n_g` distinct ground states.
//! - [`chisq`]: Pearson goodness of fit with an exact upper-tail p-value.
//! - [`fairness`]: "shots to reject", KL divergence and the amplitude-ratio check.

pub mod chisq;
pub mod draws;
pub mod fairness;

use alloc::format;
use alloc::vec::Vec;

use crate::rng;
use crate::{Error, Result};

pub use chisq::{chi2_pvalue, chi2_survival, regularized_gamma_q, ChiSquareTest};
pub use draws::{expected_draws_exact, expected_draws_mc, DrawEstimate};
pub use fairness::{
    fairness_deviation, kl_divergence, shots_to_reject, synthetic_fairness, FairnessConfig, FairnessDeviation,
    FairnessReport, MeanError, ShotsToRejectConfig,
};

/// Tolerance on the total probability of a distribution.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Probabilities over labelled outcomes (basis indices).
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    labels: Vec<usize>,
    probabilities: Vec<f64>,
}

impl Distribution {
    /// Labels must be distinct, probabilities non-negative and summing to 1.
    pub fn new(labels: Vec<usize>, probabilities: Vec<f64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidDistribution("no outcomes".into()));
        }
        if labels.len() != probabilities.len() {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: probabilities.len() });
        }
        if let Some(p) = probabilities.iter().find(|p| p.is_nan() || **p < 0.0 || !p.is_finite()) {
            return Err(Error::InvalidDistribution(format!("probability {p} is not a finite non-negative number")));
        }
        let total: f64 = probabilities.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDistribution("duplicate outcome label".into()));
        }
        Ok(Self { labels, probabilities })
    }

    /// Outcomes labelled `0..probabilities.len()`.
    pub fn from_probabilities(probabilities: Vec<f64>) -> Result<Self> {
        Self::new((0..probabilities.len()).collect(), probabilities)
    }

    /// Normalises non-negative weights over the given labels.
    pub fn from_weights(labels: Vec<usize>, weights: &[f64]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if total.is_nan() || total <= 0.0 || !total.is_finite() {
            return Err(Error::InvalidDistribution("weights have no positive mass".into()));
        }
        Self::new(labels, weights.iter().map(|w| w / total).collect())
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Probability of `label`, zero when it is not an outcome.
    pub fn probability_of(&self, label: usize) -> f64 {
        self.labels.iter().position(|&l| l == label).map_or(0.0, |k| self.probabilities[k])
    }

    /// Total probability of the given labels.
    pub fn mass_of(&self, labels: &[usize]) -> f64 {
        labels.iter().map(|&l| self.probability_of(l)).sum()
    }

    /// This distribution conditioned on `labels` (in the order given).
    pub fn conditioned_on(&self, labels: &[usize]) -> Result<Self> {
        let weights: Vec<f64> = labels.iter().map(|&l| self.probability_of(l)).collect();
        Self::from_weights(labels.to_vec(), &weights)
    }

    /// Cumulative table for inverse-CDF draws.
    fn cumulative(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.probabilities
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }
}

/// Inverse-CDF categorical sampler over outcome positions.
pub(crate) struct CategoricalSampler {
    cumulative: Vec<f64>,
}

impl CategoricalSampler {
    pub(crate) fn new(d: &Distribution) -> Self {
        Self { cumulative: d.cumulative() }
    }

    /// Position of the drawn outcome.
    pub(crate) fn draw<R: rand_core::RngCore>(&self, rng: &mut R) -> usize {
        let u = rng::unit_f64(rng) * self.cumulative[self.cumulative.len() - 1];
        let k = self.cumulative.partition_point(|&c| c <= u);
        // rounding can leave u at the very top; fall back to the last outcome with mass
        k.min(self.cumulative.len() - 1)
    }
}

/// Seeded measurement counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet {
    pub seed: u64,
    pub shots: u64,
    labels: Vec<usize>,
    counts: Vec<u64>,
}

impl SampleSet {
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count_of(&self, label: usize) -> u64 {
        self.labels.iter().position(|&l| l == label).map_or(0, |k| self.counts[k])
    }
}

/// `shots` independent categorical draws from `d`, stream `(seed, SAMPLE)`.
pub fn sample(d: &Distribution, shots: u64, seed: u64) -> Result<SampleSet> {
    if shots == 0 {
        return Err(Error::InvalidParams("at least one shot is required".into()));
    }
    let sampler = CategoricalSampler::new(d);
    let mut rng = rng::stream(seed, &[rng::purpose::SAMPLE]);
    let mut counts = alloc::vec![0u64; d.len()];
    for _ in 0..shots {
        counts[sampler.draw(&mut rng)] += 1;
    }
    Ok(SampleSet { seed, shots, labels: d.labels().to_vec(), counts })
}

/// Empirical distribution of the ground outcomes in `s`, in the order of `ground`.
pub fn postselect_ground(s: &SampleSet, ground: &[usize]) -> Result<Distribution> {
    let counts: Vec<f64> = ground.iter().map(|&g| s.count_of(g) as f64).collect();
    if counts.iter().all(|&c| c == 0.0) {
        return Err(Error::NoGroundCounts { shots: s.shots });
    }
    Distribution::from_weights(ground.to_vec(), &counts)
}
