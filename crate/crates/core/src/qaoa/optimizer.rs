//! Multi-start Nelder–Mead on the energy expectation.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{expectation_energy, ground_state_probability, run_qaoa, MixerSpec, QaoaParams, MAX_OPTIMIZER_ROUNDS};
use crate::problems::DiagonalHamiltonian;
use crate::rng;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    /// Random starting points drawn uniformly from `[−π, π]^{2p}`.
    pub starts: usize,
    /// Stop once every simplex vertex is this close to the best one.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Edge length of the initial simplex.
    pub initial_step: f64,
    /// Extra start after the random ones, padded with zero rounds up to `p`.
    pub warm_start: Option<QaoaParams>,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { starts: 50, tolerance: 1e-6, max_iterations: 2000, initial_step: 0.5, warm_start: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub params: QaoaParams,
    pub energy: f64,
    pub ground_probability: f64,
    /// Index of the winning start; the warm start, if any, is `starts`.
    pub start_index: usize,
}

/// Lowest-energy parameters over all starts; ties go to the lowest start index.
pub fn optimize_parameters(
    h: &DiagonalHamiltonian,
    mixer: &MixerSpec,
    p: usize,
    config: &OptimizerConfig,
    seed: u64,
) -> Result<OptimizationResult> {
    if p == 0 || p > MAX_OPTIMIZER_ROUNDS {
        return Err(Error::OutOfRange { name: "p", value: p as f64, range: "1 to 4" });
    }
    if config.starts == 0 && config.warm_start.is_none() {
        return Err(Error::InvalidParams("the optimizer needs at least one start".into()));
    }
    if let Some(w) = &config.warm_start {
        if w.rounds() > p {
            return Err(Error::InvalidParams("warm start has more rounds than requested".into()));
        }
    }
    // surfaces simulator errors once, so the objective below cannot fail
    run_qaoa(h, mixer, &QaoaParams::new(vec![0.0; p], vec![0.0; p])?)?;
    let objective = |x: &[f64]| -> f64 {
        let params = QaoaParams::from_interleaved(x).expect("finite angles");
        let s = run_qaoa(h, mixer, &params).expect("validated problem");
        let e = expectation_energy(&s, h).expect("matching dimensions");
        assert!(e.is_finite(), "non-finite objective at {x:?}");
        e
    };

    let mut starts: Vec<Vec<f64>> = (0..config.starts)
        .map(|i| {
            let mut r = rng::stream(seed, &[rng::purpose::OPTIMIZER_START, i as u64]);
            (0..2 * p).map(|_| -PI + 2.0 * PI * rng::unit_f64(&mut r)).collect()
        })
        .collect();
    if let Some(w) = &config.warm_start {
        starts.push(w.padded(p).interleaved());
    }

    let mut best: Option<(usize, Vec<f64>, f64)> = None;
    for (i, x0) in starts.into_iter().enumerate() {
        let (x, e) = nelder_mead(&objective, x0, config);
        if best.as_ref().is_none_or(|(_, _, b)| e < *b) {
            best = Some((i, x, e));
        }
    }
    let (start_index, x, energy) = best.expect("at least one start");
    let params = QaoaParams::from_interleaved(&x)?;
    let ground_probability = ground_state_probability(&run_qaoa(h, mixer, &params)?, h)?;
    Ok(OptimizationResult { params, energy, ground_probability, start_index })
}

fn nelder_mead(f: &impl Fn(&[f64]) -> f64, x0: Vec<f64>, config: &OptimizerConfig) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((x0.clone(), f(&x0)));
    for k in 0..n {
        let mut x = x0.clone();
        x[k] += config.initial_step;
        let v = f(&x);
        simplex.push((x, v));
    }
    let along =
        |from: &[f64], to: &[f64], t: f64| -> Vec<f64> { from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect() };

    for _ in 0..config.max_iterations {
        // stable sort keeps the earlier vertex first on ties
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| libm::sqrt(x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b) * (a - b)).sum()))
            .fold(0.0, f64::max);
        if diameter < config.tolerance {
            break;
        }
        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            centroid.iter_mut().zip(x).for_each(|(c, v)| *c += v / n as f64);
        }
        let (worst, f_worst) = simplex[n].clone();
        let f_best = simplex[0].1;
        let f_second = simplex[n - 1].1;

        let xr = along(&centroid, &worst, -1.0);
        let fr = f(&xr);
        if fr < f_best {
            let xe = along(&centroid, &worst, -2.0);
            let fe = f(&xe);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < f_second {
            simplex[n] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < f_worst {
            let xc = along(&centroid, &worst, -0.5);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = along(&centroid, &worst, 0.5);
            let fc = f(&xc);
            (xc, fc)
        };
        if fc < fr.min(f_worst) {
            simplex[n] = (xc, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let x = along(&best, &vertex.0, 0.5);
            *vertex = (x.clone(), f(&x));
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex.swap_remove(0)
}
