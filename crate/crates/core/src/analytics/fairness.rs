//! Fair-sampling statistics: shots to reject, KL divergence and amplitude ratios.

use alloc::format;
use alloc::vec::Vec;

use rand_distr::{Binomial, Distribution as _};

use crate::analytics::chisq::chi2_pvalue;
use crate::analytics::draws::{expected_draws_mc, DrawEstimate};
use crate::analytics::{postselect_ground, sample, Distribution};
use crate::problems::{DiagonalHamiltonian, WeightTable};
use crate::rng;
use crate::simulator::StateVector;
use crate::{Error, Result};

/// Settings of the shots-to-reject search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShotsToRejectConfig {
    pub significance: f64,
    /// Resampled test sets per sample size.
    pub sets: usize,
    /// Largest sample size tried before giving up.
    pub max_shots: u64,
}

impl Default for ShotsToRejectConfig {
    fn default() -> Self {
        Self { significance: 0.05, sets: 1000, max_shots: 1 << 26 }
    }
}

/// `q1`'s probabilities laid out in `q2`'s outcome order.
fn align(q1: &Distribution, q2: &Distribution) -> Result<Vec<f64>> {
    if let Some(&l) =
        q1.labels().iter().zip(q1.probabilities()).find(|(l, &p)| p > 0.0 && !q2.labels().contains(l)).map(|(l, _)| l)
    {
        return Err(Error::SupportMismatch(format!("outcome {l} is missing from the reference distribution")));
    }
    Ok(q2.labels().iter().map(|&l| q1.probability_of(l)).collect())
}

/// Multinomial counts of `m` draws by sequential conditional binomials.
fn multinomial<R: rand_core::RngCore>(rng: &mut R, probs: &[f64], m: u64, counts: &mut [u64]) {
    let mut remaining = m;
    let mut mass = 1.0;
    let last = probs.len() - 1;
    for (k, &p) in probs.iter().enumerate() {
        if k == last || remaining == 0 {
            counts[k] = if k == last { remaining } else { 0 };
            remaining -= counts[k];
            continue;
        }
        let conditional = if mass > 0.0 { (p / mass).clamp(0.0, 1.0) } else { 0.0 };
        let drawn = Binomial::new(remaining, conditional).expect("probability in [0, 1]").sample(rng);
        counts[k] = drawn;
        remaining -= drawn;
        mass -= p;
    }
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_unstable_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Median chi-squared p-value of `sets` samples of size `m` drawn from `q1`.
fn median_p_value(q1: &[f64], q2: &Distribution, m: u64, config: &ShotsToRejectConfig, seed: u64) -> Result<f64> {
    let mut counts = alloc::vec![0u64; q1.len()];
    let mut p_values = Vec::with_capacity(config.sets);
    for set in 0..config.sets {
        let mut rng = rng::stream(seed, &[rng::purpose::SHOTS_TO_REJECT, m, set as u64]);
        multinomial(&mut rng, q1, m, &mut counts);
        p_values.push(chi2_pvalue(&counts, q2)?.p_value);
    }
    Ok(median(&mut p_values))
}

/// Smallest sample size `N*` at which samples from `q1` reject "drawn from `q2`".
///
/// Sample sizes double from 2 until the median p-value over `config.sets`
/// resampled sets drops below the significance level, then bisection between
/// the last accepting and the first rejecting size locates `N*`. Each tested
/// size and set has its own random stream.
pub fn shots_to_reject(q1: &Distribution, q2: &Distribution, config: &ShotsToRejectConfig, seed: u64) -> Result<u64> {
    if q2.probabilities().iter().any(|&p| p <= 0.0) {
        return Err(Error::InvalidDistribution("reference distribution must be strictly positive".into()));
    }
    if config.sets == 0 || !(config.significance > 0.0 && config.significance < 1.0) {
        return Err(Error::InvalidParams("need at least one test set and a significance in (0, 1)".into()));
    }
    let q1 = align(q1, q2)?;
    let rejects = |m: u64| -> Result<bool> { Ok(median_p_value(&q1, q2, m, config, seed)? < config.significance) };

    let mut m = 2u64;
    while !rejects(m)? {
        m *= 2;
        if m > config.max_shots {
            return Err(Error::CapReached { cap: config.max_shots });
        }
    }
    if m == 2 {
        return Ok(2);
    }
    let (mut accepting, mut rejecting) = (m / 2, m);
    while rejecting - accepting > 1 {
        let mid = accepting + (rejecting - accepting) / 2;
        if rejects(mid)? {
            rejecting = mid;
        } else {
            accepting = mid;
        }
    }
    Ok(rejecting)
}

/// `Σ q1 ln(q1/q2)` in nats, with `0 ln 0 = 0`.
pub fn kl_divergence(q1: &Distribution, q2: &Distribution) -> Result<f64> {
    let mut kl = 0.0;
    for (&label, &p) in q1.labels().iter().zip(q1.probabilities()) {
        if p == 0.0 {
            continue;
        }
        let r = q2.probability_of(label);
        if r <= 0.0 {
            return Err(Error::SupportMismatch(format!("outcome {label} has zero reference probability")));
        }
        kl += p * libm::log(p / r);
    }
    // rounding can leave a tiny negative value for equal inputs
    Ok(kl.max(0.0))
}

/// Largest relative departure of ground-state probability ratios from the
/// target weight ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FairnessDeviation {
    /// `max_{x,y} |(P(x)/P(y)) / (w(x)/w(y)) − 1|`; infinite when some ground
    /// state has zero probability.
    pub value: f64,
    pub zero_ground_probability: bool,
}

pub fn fairness_deviation(s: &StateVector, h: &DiagonalHamiltonian, w: &WeightTable) -> Result<FairnessDeviation> {
    if s.dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: s.dim() });
    }
    if w.weights().len() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: w.weights().len() });
    }
    if h.ground_set().is_empty() {
        return Err(Error::InvalidParams("empty ground set".into()));
    }
    let amplitudes = s.amplitudes();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for &x in h.ground_set() {
        let p = amplitudes[x].norm_sqr();
        if p == 0.0 {
            return Ok(FairnessDeviation { value: f64::INFINITY, zero_ground_probability: true });
        }
        let ratio = p / w.weight(x);
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    // the extreme pair dominates every other pair
    Ok(FairnessDeviation { value: hi / lo - 1.0, zero_ground_probability: false })
}

/// Mean and sample standard deviation of repeated estimates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanError {
    pub mean: f64,
    pub std_dev: f64,
    pub count: usize,
}

impl MeanError {
    pub fn from_values(values: &[f64]) -> Option<Self> {
        let n = values.len();
        if n == 0 {
            return None;
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let std_dev = if n > 1 {
            libm::sqrt(values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64)
        } else {
            0.0
        };
        Some(Self { mean, std_dev, count: n })
    }
}

/// Settings of a full fairness analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FairnessConfig {
    /// Shots per synthetic dataset.
    pub shots: u64,
    /// Independent shots-to-reject repetitions.
    pub repeats: usize,
    /// Synthetic datasets behind the KL error bar.
    pub kl_resamples: usize,
    /// Monte Carlo episodes per `n_g` in the draws table.
    pub draws_trials: u64,
    pub test: ShotsToRejectConfig,
    /// Use the ideal distribution itself instead of finite-shot synthetic data.
    pub exact_data: bool,
}

impl Default for FairnessConfig {
    fn default() -> Self {
        Self {
            shots: 4000,
            repeats: 10,
            kl_resamples: 300,
            draws_trials: 100_000,
            test: ShotsToRejectConfig::default(),
            exact_data: false,
        }
    }
}

/// Result of [`synthetic_fairness`].
#[derive(Debug, Clone, PartialEq)]
pub struct FairnessReport {
    /// Ideal ground-state distribution (the null hypothesis).
    pub ideal: Distribution,
    /// `N*` per repetition; `None` where the sample-size cap was hit.
    pub n_star_runs: Vec<Option<u64>>,
    pub n_star: Option<MeanError>,
    pub kl_runs: Vec<f64>,
    pub kl: MeanError,
    /// `(n_g, estimate)` rows.
    pub draws_table: Vec<(usize, DrawEstimate)>,
}

impl FairnessReport {
    pub fn cap_reached(&self) -> bool {
        self.n_star_runs.iter().any(Option::is_none)
    }
}

/// Shots-to-reject, KL and draw counts for data drawn from the ideal
/// distribution `full` (over all outcomes), post-selected on `ground`.
///
/// Repetition `r` draws its dataset from stream `(seed, SYNTHETIC_DATA, r)` and
/// tests it with stream `(seed, SHOTS_TO_REJECT, r)`; KL dataset `r` uses
/// `(seed, KL_RESAMPLE, r)`.
pub fn synthetic_fairness(
    full: &Distribution,
    ground: &[usize],
    config: &FairnessConfig,
    seed: u64,
) -> Result<FairnessReport> {
    let ideal = full.conditioned_on(ground)?;
    let dataset = |purpose: u64, r: usize| -> Result<Distribution> {
        if config.exact_data {
            return Ok(ideal.clone());
        }
        let data = sample(full, config.shots, rng::stream_key(seed, &[purpose, r as u64]))?;
        postselect_ground(&data, ground)
    };

    let mut n_star_runs = Vec::with_capacity(config.repeats);
    for r in 0..config.repeats {
        let q1 = dataset(rng::purpose::SYNTHETIC_DATA, r)?;
        let test_seed = rng::stream_key(seed, &[rng::purpose::SHOTS_TO_REJECT, r as u64]);
        match shots_to_reject(&q1, &ideal, &config.test, test_seed) {
            Ok(n) => n_star_runs.push(Some(n)),
            Err(Error::CapReached { .. }) => n_star_runs.push(None),
            Err(e) => return Err(e),
        }
    }
    let found: Vec<f64> = n_star_runs.iter().flatten().map(|&n| n as f64).collect();

    let kl_runs = (0..config.kl_resamples.max(1))
        .map(|r| kl_divergence(&dataset(rng::purpose::KL_RESAMPLE, r)?, &ideal))
        .collect::<Result<Vec<f64>>>()?;

    let first = if ground.len() > 1 { 2 } else { 1 };
    let draws_table = (first..=ground.len())
        .map(|n_g| Ok((n_g, expected_draws_mc(full, ground, n_g, config.draws_trials, seed)?)))
        .collect::<Result<Vec<_>>>()?;

    Ok(FairnessReport {
        ideal,
        n_star: MeanError::from_values(&found),
        n_star_runs,
        kl: MeanError::from_values(&kl_runs).expect("at least one KL run"),
        kl_runs,
        draws_table,
    })
}
