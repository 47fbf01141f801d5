//! Acceptance criteria 1–8. Prints one PASS/FAIL line per criterion, with
//! indented detail lines, and exits non-zero if any criterion fails.
//!
//! Every random choice uses the fixed seed below.

mod support;

use std::process::Command;

use gqaoa_core::analytics::{
    chi2_survival, expected_draws_exact, expected_draws_mc, fairness_deviation, synthetic_fairness, Distribution,
    FairnessConfig,
};
use gqaoa_core::compiler::{
    compile_grover_mixer, compile_phase_separator, grover_mixer_unitary, phase_separator_unitary,
    sequence_unitary_deviation, GateSequence,
};
use gqaoa_core::graphs::{enumerate_edge_covers, enumerate_max_cuts, Graph, Preset};
use gqaoa_core::problems::{build_edge_cover_hamiltonian, DiagonalHamiltonian, ProblemKind, WeightTable};
use gqaoa_core::qaoa::{ground_state_probability, paper_parameters, run_qaoa, MixerSpec, PaperVariant, QaoaParams};
use gqaoa_core::rng::{stream, unit_f64};
use gqaoa_core::simulator::{prepare_initial_state, NativeGate, StateVector};
use gqaoa_core::Complex;

use support::oracle;

const SEED: u64 = 2021;
const PI: f64 = std::f64::consts::PI;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

fn angle(unit: &mut impl FnMut() -> f64) -> f64 {
    -PI + 2.0 * PI * unit()
}

/// Uniform draws from the stream `(SEED, path...)`.
fn rng(path: &[u64]) -> impl FnMut() -> f64 {
    let mut r = stream(SEED, path);
    move || unit_f64(&mut r)
}

fn edge_cover(preset: Preset) -> DiagonalHamiltonian {
    build_edge_cover_hamiltonian(&preset.graph()).unwrap()
}

// ---------------------------------------------------------------------------

struct TableRow {
    preset: Preset,
    variant: PaperVariant,
    p: usize,
    expected: f64,
}

const fn row(preset: Preset, variant: PaperVariant, p: usize, expected: f64) -> TableRow {
    TableRow { preset, variant, p, expected }
}

const PUBLISHED_ROWS: [TableRow; 17] = [
    row(Preset::Triangle, PaperVariant::Standard, 1, 0.968),
    row(Preset::Triangle, PaperVariant::Standard, 2, 1.0),
    row(Preset::Square, PaperVariant::Standard, 1, 0.966),
    row(Preset::Square, PaperVariant::Standard, 2, 1.0),
    row(Preset::Paw, PaperVariant::Standard, 1, 0.871),
    row(Preset::Paw, PaperVariant::Standard, 2, 0.958),
    row(Preset::Paw, PaperVariant::Standard, 3, 0.985),
    row(Preset::Triangle, PaperVariant::Grover, 1, 0.781),
    row(Preset::Triangle, PaperVariant::Grover, 2, 0.999),
    row(Preset::Square, PaperVariant::Grover, 1, 0.770),
    row(Preset::Square, PaperVariant::Grover, 2, 0.801),
    row(Preset::Paw, PaperVariant::Grover, 1, 0.645),
    row(Preset::Paw, PaperVariant::Grover, 2, 0.867),
    row(Preset::Paw, PaperVariant::WeightedGrover, 1, 0.105),
    row(Preset::Paw, PaperVariant::WeightedGrover, 2, 0.835),
    row(Preset::Square, PaperVariant::WeightedGrover, 1, 0.310),
    row(Preset::Square, PaperVariant::WeightedGrover, 2, 0.758),
];

const ROW_TOLERANCE: f64 = 0.01;

fn signed(params: &QaoaParams, sa: f64, sb: f64) -> QaoaParams {
    QaoaParams::new(params.alphas().iter().map(|a| sa * a).collect(), params.betas().iter().map(|b| sb * b).collect())
        .unwrap()
}

fn dense_ground_probability(h: &DiagonalHamiltonian, mixer: &MixerSpec, params: &QaoaParams) -> f64 {
    let n = h.num_qubits();
    let (h_b, initial) = match *mixer {
        MixerSpec::Transverse => (oracle::transverse_hamiltonian(n), oracle::product_state(n, 0.5)),
        MixerSpec::Grover { q } => (oracle::grover_hamiltonian(n, q), oracle::product_state(n, q)),
    };
    let psi = oracle::dense_qaoa(h.energies(), &h_b, &initial, params.alphas(), params.betas());
    h.ground_set().iter().map(|&x| psi[x].norm_sqr()).sum()
}

fn criterion_1() -> Outcome {
    let mut details = Vec::new();
    let conventions = [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)];
    let mut global_hits = [0usize; 4];
    let mut adopted_hits = 0;
    let mut oracle_gap = 0.0f64;
    for r in &PUBLISHED_ROWS {
        let h = edge_cover(r.preset);
        let mixer = r.variant.mixer(r.preset);
        let published = paper_parameters(r.preset, ProblemKind::EdgeCover, r.variant, r.p).unwrap();
        for (k, &(sa, sb)) in conventions.iter().enumerate() {
            let s = run_qaoa(&h, &mixer, &signed(&published, sa, sb)).unwrap();
            if (ground_state_probability(&s, &h).unwrap() - r.expected).abs() <= ROW_TOLERANCE {
                global_hits[k] += 1;
            }
        }
        let applied = mixer.from_published(&published);
        let got = ground_state_probability(&run_qaoa(&h, &mixer, &applied).unwrap(), &h).unwrap();
        oracle_gap = oracle_gap.max((got - dense_ground_probability(&h, &mixer, &applied)).abs());
        let ok = (got - r.expected).abs() <= ROW_TOLERANCE;
        adopted_hits += usize::from(ok);
        details.push(format!(
            "{} {:<8} {:<15} p={}  expected {:.3}  got {:.3}",
            if ok { "ok  " } else { "MISS" },
            r.preset.name(),
            r.variant.name(),
            r.p,
            r.expected,
            got
        ));
    }
    let (best, best_hits) = global_hits.iter().copied().enumerate().max_by_key(|&(k, h)| (h, usize::MAX - k)).unwrap();
    let (sa, sb) = conventions[best];
    details.push(format!(
        "single global convention: best is ({}α, {}β) with {best_hits}/{} rows; all four: {global_hits:?} for (+,+), (+,−), (−,+), (−,−)",
        if sa > 0.0 { "+" } else { "−" },
        if sb > 0.0 { "+" } else { "−" },
        PUBLISHED_ROWS.len()
    ));
    details.push(format!(
        "adopted per-mixer convention (transverse verbatim, Grover β negated): {adopted_hits}/{} rows",
        PUBLISHED_ROWS.len()
    ));
    details.push(format!("statevector vs dense-exponentiation oracle: max |Δp| = {oracle_gap:.1e}"));
    Outcome {
        pass: best_hits == PUBLISHED_ROWS.len() && oracle_gap < 1e-10,
        summary: format!(
            "published ground-state probabilities at the published angles, within ±{ROW_TOLERANCE}: {best_hits}/{} under the best global sign convention",
            PUBLISHED_ROWS.len()
        ),
        details,
    }
}

// ---------------------------------------------------------------------------

fn criterion_2() -> Outcome {
    let qs = [0.5, 0.7, 0.75];
    let mut worst = 0.0f64;
    let mut zero = 0;
    for k in 0..200u64 {
        let preset = Preset::ALL[(k % 3) as usize];
        let q = qs[(k / 3 % 3) as usize];
        let p = 1 + (k / 9 % 3) as usize;
        let mut r = rng(&[100, k]);
        let angles: Vec<f64> = (0..2 * p).map(|_| angle(&mut r)).collect();
        let h = edge_cover(preset);
        let s = run_qaoa(&h, &MixerSpec::Grover { q }, &QaoaParams::from_interleaved(&angles).unwrap()).unwrap();
        let dev = fairness_deviation(&s, &h, &WeightTable::new(h.num_qubits(), q).unwrap()).unwrap();
        if dev.zero_ground_probability {
            zero += 1;
        } else {
            worst = worst.max(dev.value);
        }
    }
    let h = edge_cover(Preset::Triangle);
    let published = paper_parameters(Preset::Triangle, ProblemKind::EdgeCover, PaperVariant::Standard, 1).unwrap();
    let s = run_qaoa(&h, &MixerSpec::Transverse, &published).unwrap();
    let witness = fairness_deviation(&s, &h, &WeightTable::new(3, 0.5).unwrap()).unwrap().value;
    let mut r = rng(&[101]);
    let random = QaoaParams::new(vec![angle(&mut r)], vec![angle(&mut r)]).unwrap();
    let s = run_qaoa(&h, &MixerSpec::Transverse, &random).unwrap();
    let witness_random = fairness_deviation(&s, &h, &WeightTable::new(3, 0.5).unwrap()).unwrap().value;
    Outcome {
        pass: worst < 1e-9 && zero == 0 && witness > 0.1,
        summary: format!(
            "fair sampling: max G-QAOA deviation {worst:.1e} over 200 sets (< 1e-9); standard p=1 triangle deviation {witness:.3} (> 0.1)"
        ),
        details: vec![
            format!("sets with zero ground probability: {zero}"),
            format!("standard p=1 triangle at random angles {:?}: deviation {witness_random:.3}", random.interleaved()),
        ],
    }
}

// ---------------------------------------------------------------------------

fn harmonic(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

fn uniform(dim: usize) -> Distribution {
    Distribution::from_probabilities(vec![1.0 / dim as f64; dim]).unwrap()
}

fn criterion_3() -> Outcome {
    let mut pass = true;
    let mut details = Vec::new();
    // (preset, published mean, quoted σ)
    for (preset, published, sigma) in
        [(Preset::Triangle, 16.64, 0.03), (Preset::Paw, 36.58, 0.06), (Preset::Square, 41.40, 0.04)]
    {
        let h = edge_cover(preset);
        let k = h.ground_set().len();
        let d = uniform(h.dim());
        let mc = expected_draws_mc(&d, h.ground_set(), k, 100_000, SEED).unwrap();
        let exact = expected_draws_exact(&d, h.ground_set(), k).unwrap();
        let closed = h.dim() as f64 * harmonic(k);
        let ok_mc = (mc.mean - published).abs() <= 3.0 * sigma;
        let ok_closed = (exact - closed).abs() < 5e-5;
        pass &= ok_mc && ok_closed;
        details.push(format!(
            "{} {:<8} K={k}: MC {:.3} ± {:.3} vs {published} ± 3·{sigma}; exact {exact:.4} vs 2^n·H_K {closed:.4}",
            if ok_mc && ok_closed { "ok  " } else { "MISS" },
            preset.name(),
            mc.mean,
            mc.std_error
        ));
    }
    let mut worst_z = 0.0f64;
    let mut comparisons = 0;
    for preset in Preset::ALL {
        let h = edge_cover(preset);
        let grover = PaperVariant::Grover.mixer(preset);
        let published = paper_parameters(preset, ProblemKind::EdgeCover, PaperVariant::Grover, 1).unwrap();
        let qaoa = run_qaoa(&h, &grover, &grover.from_published(&published)).unwrap().measure_distribution();
        for (which, d) in [(0u64, uniform(h.dim())), (1, qaoa)] {
            for n_g in 1..=h.ground_set().len() {
                let mc = expected_draws_mc(&d, h.ground_set(), n_g, 100_000, SEED + 1 + which).unwrap();
                let exact = expected_draws_exact(&d, h.ground_set(), n_g).unwrap();
                worst_z = worst_z.max((mc.mean - exact).abs() / mc.std_error);
                comparisons += 1;
            }
        }
    }
    pass &= worst_z <= 4.0;
    details.push(format!(
        "exact vs MC over {comparisons} (preset, distribution, n_g) cases: worst |Δ| = {worst_z:.2} standard errors (≤ 4)"
    ));
    Outcome { pass, summary: "random-guessing draw counts and exact draw-count oracle".into(), details }
}

// ---------------------------------------------------------------------------

/// Dense unitary of a gate sequence from the oracle's own gate matrices.
fn dense_sequence(seq: &GateSequence) -> oracle::Matrix {
    let n = seq.num_qubits();
    let mut u = oracle::identity(1 << n);
    for g in seq.gates() {
        let m = match *g {
            NativeGate::R { phi, theta, qubit } => oracle::r_gate(phi, theta, qubit, n),
            NativeGate::Rz { theta, qubit } => oracle::rz_gate(theta, qubit, n),
            NativeGate::XX { theta, a, b } => {
                let xx =
                    oracle::matmul(&oracle::embed(&oracle::pauli_x(), a, n), &oracle::embed(&oracle::pauli_x(), b, n));
                oracle::add(
                    &oracle::scale(&oracle::identity(1 << n), Complex::new(theta.cos(), 0.0)),
                    &oracle::scale(&xx, Complex::new(0.0, theta.sin())),
                )
            }
        };
        u = oracle::matmul(&m, &u);
    }
    match seq.ancilla() {
        None => u,
        Some(a) => {
            let keep: Vec<usize> = (0..1usize << n).filter(|x| x >> a & 1 == 0).collect();
            keep.iter().map(|&r| keep.iter().map(|&c| u[r][c]).collect()).collect()
        }
    }
}

fn criterion_4() -> Outcome {
    let mut details = Vec::new();
    let counts: Vec<(Preset, usize, usize)> = [(Preset::Paw, 7), (Preset::Triangle, 3), (Preset::Square, 4)]
        .into_iter()
        .map(|(p, want)| {
            let got = compile_phase_separator(&p.graph(), ProblemKind::EdgeCover, 0.37).unwrap().two_qubit_count();
            (p, want, got)
        })
        .collect();
    let counts_ok = counts.iter().all(|(_, want, got)| want == got);
    details.push(format!(
        "edge-cover two-qubit counts: {}",
        counts.iter().map(|(p, want, got)| format!("{p} {got} (want {want})")).collect::<Vec<_>>().join(", ")
    ));

    let mut worst_lib = 0.0f64;
    let mut worst_dense = 0.0f64;
    let mut cases = 0;
    for preset in Preset::ALL {
        for kind in [ProblemKind::MaxCut, ProblemKind::EdgeCover] {
            let g = preset.graph();
            let h = DiagonalHamiltonian::build(&g, kind).unwrap();
            for k in 0..20u64 {
                let alpha = angle(&mut rng(&[400, preset as u64, kind as u64, k]));
                let seq = compile_phase_separator(&g, kind, alpha).unwrap();
                worst_lib =
                    worst_lib.max(sequence_unitary_deviation(&seq, &phase_separator_unitary(&h, alpha)).unwrap());
                let exact = oracle::evolve(&oracle::diagonal(h.energies()), alpha);
                worst_dense = worst_dense.max(oracle::phase_invariant_distance(&dense_sequence(&seq), &exact));
                cases += 1;
            }
        }
    }
    for n in 1..=4usize {
        for (qi, q) in [0.5, 0.7, 0.75].into_iter().enumerate() {
            for k in 0..20u64 {
                let beta = angle(&mut rng(&[401, n as u64, qi as u64, k]));
                let seq = compile_grover_mixer(n, q, beta, n == 4).unwrap();
                worst_lib = worst_lib
                    .max(sequence_unitary_deviation(&seq, &grover_mixer_unitary(n, q, beta).unwrap()).unwrap());
                let exact = oracle::evolve(&oracle::grover_hamiltonian(n, q), beta);
                worst_dense = worst_dense.max(oracle::phase_invariant_distance(&dense_sequence(&seq), &exact));
                cases += 1;
            }
        }
    }
    details.push(format!(
        "{cases} compiled sequences: worst deviation {worst_lib:.1e} (library check), {worst_dense:.1e} (dense oracle)"
    ));
    Outcome {
        pass: counts_ok && worst_lib < 1e-9 && worst_dense < 1e-9,
        summary:
            "compiler: paw 7 / triangle 3 / square 4 two-qubit gates; all separators and Grover mixers exact to 1e-9"
                .into(),
        details,
    }
}

// ---------------------------------------------------------------------------

fn random_graph(k: u64) -> Graph {
    for attempt in 0u64.. {
        let mut r = rng(&[500, k, attempt]);
        let n = 2 + (r() * 4.0) as usize;
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| r() < 0.5).collect();
        if let Ok(g) = Graph::with_numbered_vertices(n, &edges, None) {
            if g.num_edges() > 0 && g.isolated_vertex().is_none() {
                return g;
            }
        }
    }
    unreachable!()
}

/// Independent brute force over assignments and edge subsets.
fn brute_force_ground_sets(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let (n, m) = (g.num_vertices(), g.num_edges());
    let cut = |x: usize| g.edges().iter().filter(|&&(i, j)| (x >> i & 1) != (x >> j & 1)).count();
    let best = (0..1usize << n).map(cut).max().unwrap();
    let cuts = (0..1usize << n).filter(|&x| cut(x) == best).collect();
    let covers = (0..1usize << m)
        .filter(|&x| {
            (0..n).all(|v| g.edges().iter().enumerate().any(|(e, &(i, j))| (i == v || j == v) && x >> e & 1 == 0))
        })
        .collect();
    (cuts, covers)
}

fn criterion_5() -> Outcome {
    let graphs: Vec<(String, Graph)> = Preset::ALL
        .iter()
        .map(|p| (p.name().to_string(), p.graph()))
        .chain((0..50).map(|k| (format!("random #{k}"), random_graph(k))))
        .collect();
    let mut mismatches = Vec::new();
    for (name, g) in &graphs {
        let (cuts, covers) = brute_force_ground_sets(g);
        let maxcut = DiagonalHamiltonian::build(g, ProblemKind::MaxCut).unwrap();
        let cover = DiagonalHamiltonian::build(g, ProblemKind::EdgeCover).unwrap();
        let enumerated_cuts = enumerate_max_cuts(g).unwrap();
        let enumerated_covers: Vec<usize> = enumerate_edge_covers(g).unwrap().into_iter().map(|m| m.0).collect();
        let sorted = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v
        };
        if sorted(maxcut.ground_set()) != cuts || sorted(&enumerated_cuts) != cuts {
            mismatches.push(format!("{name}: Max-Cut"));
        }
        if sorted(cover.ground_set()) != covers || sorted(&enumerated_covers) != covers {
            mismatches.push(format!("{name}: edge cover"));
        }
    }
    Outcome {
        pass: mismatches.is_empty(),
        summary: format!("oracle equivalence of both builders on {} graphs (3 presets + 50 random)", graphs.len()),
        details: if mismatches.is_empty() { vec!["no mismatches".into()] } else { mismatches },
    }
}

// ---------------------------------------------------------------------------

fn criterion_6() -> Outcome {
    let config = FairnessConfig::default();
    let run = |preset: Preset, variant: PaperVariant| {
        let h = edge_cover(preset);
        let mixer = variant.mixer(preset);
        let published = paper_parameters(preset, ProblemKind::EdgeCover, variant, 1).unwrap();
        let s = run_qaoa(&h, &mixer, &mixer.from_published(&published)).unwrap();
        synthetic_fairness(&s.measure_distribution(), h.ground_set(), &config, SEED).unwrap()
    };
    let triangle = run(Preset::Triangle, PaperVariant::Grover);
    let square = run(Preset::Square, PaperVariant::WeightedGrover);

    let kl_ok = (triangle.kl.mean - 0.0004).abs() <= 3.0 * 0.0002;
    let n_star = |r: &gqaoa_core::analytics::FairnessReport| r.n_star.map_or(f64::INFINITY, |m| m.mean);
    let tri_ok = !triangle.cap_reached() && (n_star(&triangle) - 6526.0).abs() <= 2.0 * 3259.0;
    let sq_ok = !square.cap_reached() && (n_star(&square) - 674.0).abs() <= 2.0 * 82.0;
    let line = |ok: bool, what: String| format!("{} {what}", if ok { "ok  " } else { "MISS" });
    let std = |r: &gqaoa_core::analytics::FairnessReport| r.n_star.map_or(f64::NAN, |m| m.std_dev);
    Outcome {
        pass: kl_ok && tri_ok && sq_ok,
        summary: "fairness statistics on synthetic 4000-shot data (KL, shots to reject)".into(),
        details: vec![
            line(
                kl_ok,
                format!(
                    "triangle G-QAOA p=1 KL: {:.5} ± {:.5} nats over {} resamples; published 0.0004(2), window ±0.0006",
                    triangle.kl.mean, triangle.kl.std_dev, triangle.kl.count
                ),
            ),
            line(
                tri_ok,
                format!(
                    "triangle G-QAOA p=1 N*: {:.0} ± {:.0} over runs {:?}; published 6526(3259), window ±6518",
                    n_star(&triangle),
                    std(&triangle),
                    triangle.n_star_runs
                ),
            ),
            line(
                sq_ok,
                format!(
                    "weighted square (q=0.75) G-QAOA p=1 N*: {:.0} ± {:.0} over runs {:?}; published 674(82), window ±164",
                    n_star(&square),
                    std(&square),
                    square.n_star_runs
                ),
            ),
            format!("weighted square KL: {:.5} ± {:.5} nats (published 0.0025(9))", square.kl.mean, square.kl.std_dev),
        ],
    }
}

// ---------------------------------------------------------------------------

fn random_state(n: usize, path: &[u64]) -> StateVector {
    let mut r = rng(path);
    let mut amps: Vec<Complex> = (0..1usize << n).map(|_| Complex::new(r() - 0.5, r() - 0.5)).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    StateVector::from_amplitudes(n, amps).unwrap()
}

type SimOp = Box<dyn Fn(&mut StateVector)>;

fn criterion_7() -> Outcome {
    let p = chi2_survival(3.841, 1);
    let integrated = oracle::chi2_tail_by_integration(3.841, 1);
    let chi_ok = (p - 0.05).abs() <= 1e-3 && (p - integrated).abs() <= 1e-10;

    let mut worst_norm = 0.0f64;
    for n in 1..=5usize {
        let h =
            DiagonalHamiltonian::from_energies(n, (0..1usize << n).map(|x| (x.count_ones() as f64) - 1.5).collect())
                .unwrap();
        for k in 0..10u64 {
            let mut r = rng(&[700, n as u64, k]);
            let (a, b, c) = (angle(&mut r), angle(&mut r), angle(&mut r));
            let q1 = (k as usize) % n;
            let q2 = (q1 + 1) % n;
            let h = h.clone();
            let mut ops: Vec<SimOp> = vec![
                Box::new(move |s: &mut StateVector| s.apply_phase_separator(&h, a).unwrap()),
                Box::new(move |s: &mut StateVector| s.apply_transverse_mixer(b)),
                Box::new(move |s: &mut StateVector| s.apply_grover_mixer(0.7, c).unwrap()),
                Box::new(move |s: &mut StateVector| {
                    s.apply_native_gate(&NativeGate::R { phi: a, theta: b, qubit: q1 }).unwrap()
                }),
                Box::new(move |s: &mut StateVector| {
                    s.apply_native_gate(&NativeGate::Rz { theta: c, qubit: q1 }).unwrap()
                }),
            ];
            if n > 1 {
                ops.push(Box::new(move |s: &mut StateVector| {
                    s.apply_native_gate(&NativeGate::XX { theta: a, a: q1, b: q2 }).unwrap()
                }));
            }
            for op in &ops {
                let mut s = random_state(n, &[701, n as u64, k]);
                op(&mut s);
                worst_norm = worst_norm.max((s.norm_sqr() - 1.0).abs());
            }
        }
    }

    let mut worst_grover = 0.0f64;
    for n in 1..=4usize {
        for (qi, q) in [0.3, 0.5, 0.7, 0.75].into_iter().enumerate() {
            let beta = angle(&mut rng(&[702, n as u64, qi as u64]));
            let exact = oracle::evolve(&oracle::grover_hamiltonian(n, q), beta);
            for col in 0..1usize << n {
                let mut s = StateVector::basis(n, col).unwrap();
                s.apply_grover_mixer(q, beta).unwrap();
                for (a, row) in s.amplitudes().iter().zip(&exact) {
                    worst_grover = worst_grover.max((a - row[col]).norm());
                }
            }
        }
    }
    let g = prepare_initial_state(3, 0.7).unwrap();
    let proj = oracle::apply(&oracle::grover_hamiltonian(3, 0.7), g.amplitudes());
    let eig = proj.iter().zip(g.amplitudes()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);

    Outcome {
        pass: chi_ok && worst_norm <= 1e-10 && worst_grover <= 1e-10 && eig <= 1e-12,
        summary: "numerical kernels: chi-squared tail, norm preservation, rank-1 Grover mixer vs dense exponentiation"
            .into(),
        details: vec![
            format!(
                "chi2_survival(3.841, 1) = {p:.10}; integration oracle {integrated:.10}; |Δ| = {:.1e}",
                (p - integrated).abs()
            ),
            format!("worst norm drift over all simulator operations: {worst_norm:.1e}"),
            format!("rank-1 Grover mixer vs dense e^(−iβ H_B), n ≤ 4: max |Δ| = {worst_grover:.1e}"),
            format!("|G⟩ eigenvector residual of H_B: {eig:.1e}"),
        ],
    }
}

// ---------------------------------------------------------------------------

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_gqaoa");
    let commands: [&[&str]; 6] = [
        &[
            "solve", "--graph", "paw", "--mixer", "grover", "--q", "0.7", "--p", "2", "--params", "paper", "--shots",
            "4000", "--seed", "7",
        ],
        &["optimize", "--graph", "square", "--mixer", "grover", "--p", "1", "--starts", "8", "--seed", "7"],
        &[
            "fairness",
            "--graph",
            "triangle",
            "--mixer",
            "grover",
            "--params",
            "paper",
            "--repeats",
            "3",
            "--kl-resamples",
            "30",
            "--trials",
            "2000",
            "--seed",
            "7",
        ],
        &["draws", "--graph", "square", "--baseline", "--trials", "5000", "--seed", "7"],
        &["draws", "--graph", "paw", "--mixer", "grover", "--params", "paper", "--trials", "5000", "--seed", "7"],
        &["compile", "--graph", "paw", "--target", "separator", "--alpha", "0.88"],
    ];
    let dir = tempfile::tempdir().unwrap();
    let mut details = Vec::new();
    let mut pass = true;
    for (k, args) in commands.iter().enumerate() {
        let out_path = dir.path().join(format!("run{k}.json"));
        let runs: Vec<(Vec<u8>, i32)> = (0..2)
            .map(|_| {
                let o = Command::new(bin).args(*args).arg("--out").arg(&out_path).output().expect("binary runs");
                (o.stdout, o.status.code().unwrap_or(-1))
            })
            .collect();
        let first = std::fs::read(&out_path).unwrap_or_default();
        let second = std::fs::read(dir.path().join(format!("run{k}.1.json"))).unwrap_or_default();
        let ok = runs[0] == runs[1] && runs[0].1 == 0 && !first.is_empty() && first == second;
        pass &= ok;
        details.push(format!("{} {} ({} bytes)", if ok { "ok  " } else { "MISS" }, args.join(" "), runs[0].0.len()));
    }
    Outcome {
        pass,
        summary: "determinism: seeded commands reproduce byte-identical stdout and records".into(),
        details,
    }
}

fn main() {
    let criteria: [(u8, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut passed = 0;
    for (id, check) in criteria {
        let outcome = check();
        println!("criterion {id}: {} - {}", if outcome.pass { "PASS" } else { "FAIL" }, outcome.summary);
        for d in &outcome.details {
            println!("    {d}");
        }
        passed += usize::from(outcome.pass);
    }
    println!("acceptance: {passed}/{} criteria passed (seed {SEED})", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
