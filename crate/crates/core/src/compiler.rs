//! Lowering of phase separators and Grover mixers to the native gate set.
//!
//! Every two-qubit interaction is a single `XX(θ) = e^{iθσˣσˣ}`:
//!
//! - `e^{−iφ ZZ}` is `XX(−φ)` conjugated by `Ry(±π/2)` on both qubits;
//! - CNOT is a controlled-Z (one `ZZ` rotation plus `Rz`s) conjugated by `Ry` on
//!   the target;
//! - any diagonal phase on up to three qubits is expanded into Z-parity terms and
//!   realised with the parity network `[b, bt] · CNOT(a,b) · [ab, abt] · CNOT(a,b) ·
//!   [a, t, at]`, i.e. at most three `ZZ` rotations and two CNOTs (5 `XX`).
//!
//! Edge-cover separators are compiled vertex by vertex as multi-controlled phases,
//! so the two-qubit cost is 0, 1 and 5 for degree 1, 2 and 3. Max-Cut separators
//! cost one `XX` per edge. A Grover mixer is the all-zeros phase conjugated by the
//! per-qubit state preparation; on four qubits the phase is routed through one
//! ancilla that is computed and uncomputed with relative-phase Toffolis.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::graphs::Graph;
use crate::problems::{DiagonalHamiltonian, ProblemKind};
use crate::simulator::{NativeGate, StateVector};
use crate::{Complex, Error, Result};

/// Largest register (ancilla included) the compiler and verifier handle.
pub const MAX_COMPILE_QUBITS: usize = 10;

/// Largest Grover mixer the compiler lowers.
pub const MAX_GROVER_QUBITS: usize = 4;

/// An ordered list of native gates on a declared register.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSequence {
    gates: Vec<NativeGate>,
    num_qubits: usize,
    ancilla: Option<usize>,
}

impl GateSequence {
    pub fn new(num_qubits: usize, ancilla: Option<usize>) -> Result<Self> {
        if num_qubits > MAX_COMPILE_QUBITS {
            return Err(Error::TooManyQubits { qubits: num_qubits, max: MAX_COMPILE_QUBITS });
        }
        if let Some(a) = ancilla {
            if a >= num_qubits {
                return Err(Error::QubitOutOfRange { index: a, num_qubits });
            }
        }
        Ok(Self { gates: Vec::new(), num_qubits, ancilla })
    }

    /// Appends a gate after checking its targets.
    pub fn push(&mut self, gate: NativeGate) -> Result<()> {
        gate.check(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn gates(&self) -> &[NativeGate] {
        &self.gates
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ancilla(&self) -> Option<usize> {
        self.ancilla
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn two_qubit_count(&self) -> usize {
        two_qubit_gate_count(self)
    }

    /// Applies every gate, in order, to `state`.
    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        if state.num_qubits() != self.num_qubits {
            return Err(Error::DimensionMismatch { expected: self.num_qubits, found: state.num_qubits() });
        }
        self.gates.iter().try_for_each(|g| state.apply_native_gate(g))
    }

    /// Dense unitary of the whole register.
    pub fn unitary(&self) -> Result<Unitary> {
        let dim = 1usize << self.num_qubits;
        let mut u = Unitary::zeros(dim);
        for col in 0..dim {
            let mut s = StateVector::basis(self.num_qubits, col)?;
            self.apply_to(&mut s)?;
            for (row, &a) in s.amplitudes().iter().enumerate() {
                u.data[row * dim + col] = a;
            }
        }
        Ok(u)
    }
}

/// Number of `XX` gates in `seq`.
pub fn two_qubit_gate_count(seq: &GateSequence) -> usize {
    seq.gates.iter().filter(|g| g.is_two_qubit()).count()
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitary {
    dim: usize,
    data: Vec<Complex>,
}

impl Unitary {
    fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![Complex::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut u = Self::zeros(dim);
        (0..dim).for_each(|i| u.data[i * dim + i] = Complex::new(1.0, 0.0));
        u
    }

    pub fn from_diagonal(diag: &[Complex]) -> Self {
        let dim = diag.len();
        let mut u = Self::zeros(dim);
        diag.iter().enumerate().for_each(|(i, &d)| u.data[i * dim + i] = d);
        u
    }

    /// Row-major entries; length must be a perfect square.
    pub fn from_row_major(data: Vec<Complex>) -> Result<Self> {
        let dim = libm::round(libm::sqrt(data.len() as f64)) as usize;
        if dim * dim != data.len() {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: data.len() });
        }
        Ok(Self { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.data[row * self.dim + col]
    }

    /// Same matrix times `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let f = Complex::from_polar(1.0, phi);
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * f).collect() }
    }
}

/// Exact `e^{−iαH}` for a diagonal `H`.
pub fn phase_separator_unitary(h: &DiagonalHamiltonian, alpha: f64) -> Unitary {
    let diag: Vec<Complex> = h.energies().iter().map(|&e| Complex::from_polar(1.0, -alpha * e)).collect();
    Unitary::from_diagonal(&diag)
}

/// Exact `e^{−iβ|G⟩⟨G|} = I + (e^{−iβ} − 1)|G⟩⟨G|` on `n` qubits.
pub fn grover_mixer_unitary(n: usize, q: f64, beta: f64) -> Result<Unitary> {
    let g = crate::simulator::prepare_initial_state(n, q)?;
    let g = g.amplitudes();
    let dim = g.len();
    let factor = Complex::from_polar(1.0, -beta) - 1.0;
    let mut u = Unitary::identity(dim);
    for r in 0..dim {
        for c in 0..dim {
            u.data[r * dim + c] += factor * g[r] * g[c].conj();
        }
    }
    Ok(u)
}

/// Inserts a zero bit at position `bit` of `x`.
fn insert_zero_bit(x: usize, bit: usize) -> usize {
    let low = x & ((1 << bit) - 1);
    (x >> bit) << (bit + 1) | low
}

/// `min_φ max_{r,c} |e^{iφ} S_{rc} − R_{rc}|` between the sequence's unitary `S`
/// and `reference`.
///
/// With an ancilla, `S` is restricted to the block where the ancilla enters and
/// leaves in `|0⟩`. The phase is first aligned in the least-squares sense, then
/// refined by golden-section search on the max-norm.
pub fn sequence_unitary_deviation(seq: &GateSequence, reference: &Unitary) -> Result<f64> {
    let full = seq.unitary()?;
    let block_qubits = seq.num_qubits - usize::from(seq.ancilla.is_some());
    let dim = 1usize << block_qubits;
    if reference.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: reference.dim() });
    }
    let index = |x: usize| seq.ancilla.map_or(x, |a| insert_zero_bit(x, a));
    let mut block = Vec::with_capacity(dim * dim);
    for r in 0..dim {
        for c in 0..dim {
            block.push(full.get(index(r), index(c)));
        }
    }
    let overlap = block.iter().zip(&reference.data).fold(Complex::new(0.0, 0.0), |acc, (&s, &r)| acc + s.conj() * r);
    let aligned = if overlap.norm() > 0.0 { overlap.arg() } else { 0.0 };
    let max_dev = |phi: f64| {
        let f = Complex::from_polar(1.0, phi);
        block.iter().zip(&reference.data).map(|(&s, &r)| (s * f - r).norm()).fold(0.0, f64::max)
    };
    let best = golden_section_min(max_dev, aligned - 0.5, aligned + 0.5, 60);
    Ok(best.min(max_dev(aligned)))
}

fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iterations: usize) -> f64 {
    let ratio = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iterations {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Gate emitter with adjacent single-qubit rotation merging.
struct Emitter {
    seq: GateSequence,
}

impl Emitter {
    fn new(num_qubits: usize, ancilla: Option<usize>) -> Result<Self> {
        Ok(Self { seq: GateSequence::new(num_qubits, ancilla)? })
    }

    /// Appends `gate`, folding it into the previous gate on the same qubit when
    /// both rotate about the same axis. Rotations that cancel exactly vanish.
    fn emit(&mut self, gate: NativeGate) {
        let gates = &mut self.seq.gates;
        if let Some((qubit, _)) = gate.single_qubit_matrix() {
            let last = gates.iter().rposition(|g| {
                let (qs, n) = g.qubits();
                qs[..n].contains(&qubit)
            });
            if let Some(k) = last {
                let merged = match (gates[k], gate) {
                    (NativeGate::Rz { theta: a, qubit }, NativeGate::Rz { theta: b, .. }) => {
                        Some(NativeGate::Rz { theta: a + b, qubit })
                    }
                    (NativeGate::R { phi, theta: a, qubit }, NativeGate::R { phi: p2, theta: b, .. }) if phi == p2 => {
                        Some(NativeGate::R { phi, theta: a + b, qubit })
                    }
                    _ => None,
                };
                if let Some(m) = merged {
                    let zero = matches!(m, NativeGate::Rz { theta, .. } | NativeGate::R { theta, .. } if theta == 0.0);
                    if zero {
                        gates.remove(k);
                    } else {
                        gates[k] = m;
                    }
                    return;
                }
            }
        }
        gates.push(gate);
    }

    fn ry(&mut self, qubit: usize, theta: f64) {
        self.emit(NativeGate::R { phi: FRAC_PI_2, theta, qubit });
    }

    fn x(&mut self, qubit: usize) {
        self.emit(NativeGate::R { phi: 0.0, theta: PI, qubit });
    }

    /// `e^{−ic σᶻ}`.
    fn z_rotation(&mut self, qubit: usize, c: f64) {
        if c != 0.0 {
            self.emit(NativeGate::Rz { theta: 2.0 * c, qubit });
        }
    }

    /// `e^{−ic σᶻ_a σᶻ_b}`: `Ry(π/2)` maps `σᶻ` to `σˣ`.
    fn zz_rotation(&mut self, a: usize, b: usize, c: f64) {
        if c == 0.0 {
            return;
        }
        self.ry(a, -FRAC_PI_2);
        self.ry(b, -FRAC_PI_2);
        self.emit(NativeGate::XX { theta: -c, a, b });
        self.ry(a, FRAC_PI_2);
        self.ry(b, FRAC_PI_2);
    }

    /// CNOT up to global phase: CZ conjugated by a target basis change.
    fn cnot(&mut self, control: usize, target: usize) {
        self.ry(target, FRAC_PI_2);
        // CZ = e^{−iπ|11⟩⟨11|}: coefficients π/4 · (1 − Z_c − Z_t + Z_c Z_t)
        self.z_rotation(control, -FRAC_PI_4);
        self.z_rotation(target, -FRAC_PI_4);
        self.zz_rotation(control, target, FRAC_PI_4);
        self.ry(target, -FRAC_PI_2);
    }

    /// `e^{−i f(x)}` where `x` packs the bits of `qubits` (qubits[0] lowest).
    fn diagonal_phase(&mut self, qubits: &[usize], f: impl Fn(usize) -> f64) {
        let k = qubits.len();
        assert!((1..=3).contains(&k), "diagonal phases on 1 to 3 qubits");
        // Walsh–Hadamard coefficients: f(x) = Σ_S c_S (−1)^{|S ∧ x|}
        let coeff = |s: usize| -> f64 {
            (0..1usize << k).map(|x| if (s & x).count_ones().is_multiple_of(2) { f(x) } else { -f(x) }).sum::<f64>()
                / (1usize << k) as f64
        };
        match *qubits {
            [a] => self.z_rotation(a, coeff(0b1)),
            [a, b] => {
                self.z_rotation(a, coeff(0b01));
                self.z_rotation(b, coeff(0b10));
                self.zz_rotation(a, b, coeff(0b11));
            }
            [a, b, t] => {
                self.z_rotation(b, coeff(0b010));
                self.zz_rotation(b, t, coeff(0b110));
                self.cnot(a, b);
                // b now holds a ⊕ b
                self.z_rotation(b, coeff(0b011));
                self.zz_rotation(b, t, coeff(0b111));
                self.cnot(a, b);
                self.z_rotation(a, coeff(0b001));
                self.z_rotation(t, coeff(0b100));
                self.zz_rotation(a, t, coeff(0b101));
            }
            _ => unreachable!(),
        }
    }

    /// Toffoli up to a diagonal phase on the control/target register (Margolus).
    fn relative_phase_toffoli(&mut self, a: usize, b: usize, target: usize) {
        for gate in margolus(a, b, target) {
            self.emit_composite(gate);
        }
    }

    fn relative_phase_toffoli_inverse(&mut self, a: usize, b: usize, target: usize) {
        for gate in margolus(a, b, target).into_iter().rev() {
            self.emit_composite(gate.inverse());
        }
    }

    fn emit_composite(&mut self, step: Step) {
        match step {
            Step::Ry(q, theta) => self.ry(q, theta),
            Step::Cnot(c, t) => self.cnot(c, t),
            Step::CnotInverse(c, t) => self.cnot_inverse(c, t),
        }
    }

    fn cnot_inverse(&mut self, control: usize, target: usize) {
        self.ry(target, FRAC_PI_2);
        self.zz_rotation(control, target, -FRAC_PI_4);
        self.z_rotation(target, FRAC_PI_4);
        self.z_rotation(control, FRAC_PI_4);
        self.ry(target, -FRAC_PI_2);
    }

    fn finish(self) -> GateSequence {
        self.seq
    }
}

#[derive(Clone, Copy)]
enum Step {
    Ry(usize, f64),
    Cnot(usize, usize),
    CnotInverse(usize, usize),
}

impl Step {
    fn inverse(self) -> Step {
        match self {
            Step::Ry(q, theta) => Step::Ry(q, -theta),
            Step::Cnot(c, t) => Step::CnotInverse(c, t),
            Step::CnotInverse(c, t) => Step::Cnot(c, t),
        }
    }
}

fn margolus(a: usize, b: usize, t: usize) -> [Step; 7] {
    [
        Step::Ry(t, FRAC_PI_4),
        Step::Cnot(b, t),
        Step::Ry(t, FRAC_PI_4),
        Step::Cnot(a, t),
        Step::Ry(t, -FRAC_PI_4),
        Step::Cnot(b, t),
        Step::Ry(t, -FRAC_PI_4),
    ]
}

/// `e^{−iαH}` for the Max-Cut or edge-cover Hamiltonian of `g`, in native gates.
pub fn compile_phase_separator(g: &Graph, kind: ProblemKind, alpha: f64) -> Result<GateSequence> {
    let n = kind.num_qubits(g);
    let mut out = Emitter::new(n, None)?;
    if alpha == 0.0 {
        return Ok(out.finish());
    }
    match kind {
        ProblemKind::MaxCut => {
            if g.num_edges() == 0 {
                return Err(Error::NoEdges);
            }
            // all ZZ terms commute: rotate every qubit to the x basis once
            for q in 0..n {
                out.ry(q, -FRAC_PI_2);
            }
            for &(i, j) in g.edges() {
                out.emit(NativeGate::XX { theta: -alpha, a: i, b: j });
            }
            for q in 0..n {
                out.ry(q, FRAC_PI_2);
            }
        }
        ProblemKind::EdgeCover => {
            if let Some(v) = g.isolated_vertex() {
                return Err(Error::IsolatedVertex { vertex: g.vertices()[v].clone() });
            }
            for v in 0..g.num_vertices() {
                let incident = g.incident_edges(v);
                if incident.len() > 3 {
                    return Err(Error::UnsupportedDegree { vertex: g.vertices()[v].clone(), degree: incident.len() });
                }
                let all = (1usize << incident.len()) - 1;
                // penalty α when every incident edge is excluded (all bits 1)
                out.diagonal_phase(&incident, |x| if x == all { alpha } else { 0.0 });
            }
        }
    }
    Ok(out.finish())
}

/// `e^{−iβ|G⟩⟨G|}` on `n ≤ 4` qubits in native gates.
///
/// Four qubits need an ancilla (qubit index 4), which enters and leaves in `|0⟩`.
pub fn compile_grover_mixer(n: usize, q: f64, beta: f64, use_ancilla: bool) -> Result<GateSequence> {
    if n == 0 || n > MAX_GROVER_QUBITS {
        return Err(Error::TooManyQubits { qubits: n, max: MAX_GROVER_QUBITS });
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::OutOfRange { name: "q", value: q, range: "the open interval (0, 1)" });
    }
    let needs_ancilla = n == MAX_GROVER_QUBITS;
    if needs_ancilla && !use_ancilla {
        return Err(Error::AncillaRequired { qubits: n });
    }
    let (width, ancilla) = if needs_ancilla { (n + 1, Some(n)) } else { (n, None) };
    let mut out = Emitter::new(width, ancilla)?;
    if beta == 0.0 {
        return Ok(out.finish());
    }
    let prep = 2.0 * libm::asin(libm::sqrt(q));
    for k in 0..n {
        out.ry(k, -prep);
    }
    match ancilla {
        None => {
            let qubits: Vec<usize> = (0..n).collect();
            out.diagonal_phase(&qubits, |x| if x == 0 { beta } else { 0.0 });
        }
        Some(anc) => {
            // ancilla ← [q0 = 0 ∧ q1 = 0], phase on (ancilla = 1, q2 = 0, q3 = 0), undo
            out.x(0);
            out.x(1);
            out.relative_phase_toffoli(0, 1, anc);
            out.x(0);
            out.x(1);
            out.diagonal_phase(&[anc, 2, 3], |x| if x == 0b001 { beta } else { 0.0 });
            out.x(0);
            out.x(1);
            out.relative_phase_toffoli_inverse(0, 1, anc);
            out.x(0);
            out.x(1);
        }
    }
    for k in 0..n {
        out.ry(k, prep);
    }
    Ok(out.finish())
}
