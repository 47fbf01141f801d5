//! Expected number of draws until `n_g` distinct ground states have been seen.
//!
//! Draws come from the full outcome distribution; draws that land outside the
//! ground set still count.

use alloc::vec;
use alloc::vec::Vec;

use crate::analytics::{CategoricalSampler, Distribution};
use crate::rng;
use crate::{Error, Result};

/// Largest ground set the exact subset-chain evaluation accepts.
pub const MAX_EXACT_GROUND: usize = 16;

/// Monte Carlo mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrawEstimate {
    pub mean: f64,
    pub std_error: f64,
}

fn ground_probabilities(d: &Distribution, ground: &[usize], n_g: usize) -> Result<Vec<f64>> {
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParams("ground set contains duplicates".into()));
    }
    if n_g == 0 {
        return Err(Error::InvalidParams("n_g must be at least 1".into()));
    }
    let probs: Vec<f64> = ground.iter().map(|&g| d.probability_of(g)).collect();
    let reachable = probs.iter().filter(|&&p| p > 0.0).count();
    if n_g > ground.len() {
        return Err(Error::TooManyGroundStates { requested: n_g, available: ground.len() });
    }
    if n_g > reachable {
        return Err(Error::TooManyGroundStates { requested: n_g, available: reachable });
    }
    Ok(probs)
}

/// Monte Carlo over `trials` independent episodes; episode `t` uses stream
/// `(seed, DRAWS, t)`.
pub fn expected_draws_mc(
    d: &Distribution,
    ground: &[usize],
    n_g: usize,
    trials: u64,
    seed: u64,
) -> Result<DrawEstimate> {
    ground_probabilities(d, ground, n_g)?;
    if trials < 2 {
        return Err(Error::InvalidParams("at least two trials are needed for an error bar".into()));
    }
    let sampler = CategoricalSampler::new(d);
    // outcome position -> index in the ground set
    let ground_index: Vec<Option<usize>> = d.labels().iter().map(|l| ground.iter().position(|g| g == l)).collect();
    let mut seen = vec![false; ground.len()];
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    for t in 0..trials {
        let mut rng = rng::stream(seed, &[rng::purpose::DRAWS, t]);
        seen.iter_mut().for_each(|s| *s = false);
        let (mut distinct, mut draws) = (0usize, 0u64);
        while distinct < n_g {
            draws += 1;
            if let Some(k) = ground_index[sampler.draw(&mut rng)] {
                if !seen[k] {
                    seen[k] = true;
                    distinct += 1;
                }
            }
        }
        let x = draws as f64;
        sum += x;
        sum_sq += x * x;
    }
    let n = trials as f64;
    let mean = sum / n;
    let variance = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(DrawEstimate { mean, std_error: libm::sqrt(variance / n) })
}

/// Exact expectation from the absorbing chain on collected subsets.
///
/// A subset `S` of seen ground states is reached with probability `P(S)` and, once
/// reached, occupied for `1 / leave(S)` draws on average, where `leave(S)` is the
/// mass of unseen ground states. The expectation is the occupancy summed over all
/// `|S| < n_g`.
pub fn expected_draws_exact(d: &Distribution, ground: &[usize], n_g: usize) -> Result<f64> {
    if ground.len() > MAX_EXACT_GROUND {
        return Err(Error::InvalidParams(alloc::format!(
            "exact draw count supports at most {MAX_EXACT_GROUND} ground states, got {}",
            ground.len()
        )));
    }
    let probs = ground_probabilities(d, ground, n_g)?;
    let k = ground.len();
    let mut reach = vec![0.0f64; 1 << k];
    reach[0] = 1.0;
    let mut expected = 0.0;
    // every superset has a larger index, so index order is a topological order
    for s in 0..1usize << k {
        if (s.count_ones() as usize) >= n_g || reach[s] == 0.0 {
            continue;
        }
        let leave: f64 = (0..k).filter(|&g| s >> g & 1 == 0).map(|g| probs[g]).sum();
        expected += reach[s] / leave;
        for g in (0..k).filter(|&g| s >> g & 1 == 0) {
            reach[s | 1 << g] += reach[s] * probs[g] / leave;
        }
    }
    Ok(expected)
}
