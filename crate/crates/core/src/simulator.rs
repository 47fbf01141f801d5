//! Exact statevector evolution.
//!
//! Memory is `16 · 2ⁿ` bytes; `n` is capped at [`MAX_QUBITS`]. Global phases are
//! kept as they fall out of each operation. Inner products accumulate in index
//! order so results are bitwise reproducible.

use alloc::vec;
use alloc::vec::Vec;

use crate::analytics::Distribution;
use crate::problems::DiagonalHamiltonian;
use crate::{Complex, Error, Result, MAX_QUBITS};

const I: Complex = Complex::new(0.0, 1.0);

/// Normalised amplitudes over `2ⁿ` basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex>,
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        Err(Error::TooManyQubits { qubits: n, max: MAX_QUBITS })
    } else {
        Ok(())
    }
}

impl StateVector {
    /// The computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_qubit_count(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: index });
        }
        let mut amplitudes = vec![Complex::new(0.0, 0.0); dim];
        amplitudes[index] = Complex::new(1.0, 0.0);
        Ok(Self { num_qubits, amplitudes })
    }

    /// Wraps explicit amplitudes; they must have length `2ⁿ` and unit norm.
    pub fn from_amplitudes(num_qubits: usize, amplitudes: Vec<Complex>) -> Result<Self> {
        check_qubit_count(num_qubits)?;
        if amplitudes.len() != 1 << num_qubits {
            return Err(Error::DimensionMismatch { expected: 1 << num_qubits, found: amplitudes.len() });
        }
        let state = Self { num_qubits, amplitudes };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::OutOfRange { name: "norm", value: norm, range: "1 ± 1e-10" });
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex {
        self.amplitudes.iter().zip(&other.amplitudes).fold(Complex::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
    }

    /// `|amplitude_x|²` for every basis state.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `amplitude_x ← e^{−iα·E(x)} amplitude_x`.
    pub fn apply_phase_separator(&mut self, h: &DiagonalHamiltonian, alpha: f64) -> Result<()> {
        if h.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: h.dim() });
        }
        for (a, &e) in self.amplitudes.iter_mut().zip(h.energies()) {
            *a *= Complex::from_polar(1.0, -alpha * e);
        }
        Ok(())
    }

    /// `e^{−iβ Σσˣ}`, applied as `e^{−iβσˣ}` on each qubit.
    pub fn apply_transverse_mixer(&mut self, beta: f64) {
        let c = Complex::new(libm::cos(beta), 0.0);
        let s = Complex::new(0.0, -libm::sin(beta));
        let m = [[c, s], [s, c]];
        for q in 0..self.num_qubits {
            self.apply_single_qubit(q, &m);
        }
    }

    /// `e^{−iβ|G⟩⟨G|}` with `|G⟩` the product state of [`prepare_initial_state`],
    /// as the rank-one update `s ← s + (e^{−iβ} − 1)⟨G|s⟩|G⟩`.
    pub fn apply_grover_mixer(&mut self, q: f64, beta: f64) -> Result<()> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange { name: "q", value: q, range: "the open interval (0, 1)" });
        }
        let g = product_amplitudes(self.num_qubits, q);
        let overlap = g.iter().zip(&self.amplitudes).fold(Complex::new(0.0, 0.0), |acc, (&gx, &sx)| acc + sx * gx);
        let factor = (Complex::from_polar(1.0, -beta) - 1.0) * overlap;
        for (a, &gx) in self.amplitudes.iter_mut().zip(&g) {
            *a += factor * gx;
        }
        Ok(())
    }

    /// Applies one native gate.
    pub fn apply_native_gate(&mut self, gate: &NativeGate) -> Result<()> {
        gate.check(self.num_qubits)?;
        match *gate {
            NativeGate::R { .. } | NativeGate::Rz { .. } => {
                let (q, m) = gate.single_qubit_matrix().expect("single-qubit gate");
                self.apply_single_qubit(q, &m);
            }
            NativeGate::XX { theta, a, b } => {
                let c = libm::cos(theta);
                let s = I * libm::sin(theta);
                let flip = 1usize << a | 1usize << b;
                for x in 0..self.dim() {
                    // visit each {x, x^flip} pair once, from the member with bit a clear
                    if x >> a & 1 == 0 {
                        let y = x ^ flip;
                        let (u, v) = (self.amplitudes[x], self.amplitudes[y]);
                        self.amplitudes[x] = u * c + v * s;
                        self.amplitudes[y] = v * c + u * s;
                    }
                }
            }
        }
        Ok(())
    }

    /// Applies a 2×2 unitary `m` (row-major, basis |0⟩,|1⟩) to qubit `q`.
    pub fn apply_single_qubit(&mut self, q: usize, m: &[[Complex; 2]; 2]) {
        let bit = 1usize << q;
        for x in 0..self.dim() {
            if x & bit == 0 {
                let (u, v) = (self.amplitudes[x], self.amplitudes[x | bit]);
                self.amplitudes[x] = m[0][0] * u + m[0][1] * v;
                self.amplitudes[x | bit] = m[1][0] * u + m[1][1] * v;
            }
        }
    }

    /// Outcome probabilities of a computational-basis measurement.
    pub fn measure_distribution(&self) -> Distribution {
        Distribution::from_probabilities(self.probabilities()).expect("a normalised state yields a valid distribution")
    }
}

/// Amplitudes of `(√(1−q)|0⟩ + √q|1⟩)^{⊗n}`.
fn product_amplitudes(n: usize, q: f64) -> Vec<f64> {
    let (a0, a1) = (libm::sqrt(1.0 - q), libm::sqrt(q));
    let mut amps = Vec::with_capacity(1 << n);
    amps.push(1.0);
    for _ in 0..n {
        let len = amps.len();
        for x in 0..len {
            let v = amps[x];
            amps[x] = v * a0;
            amps.push(v * a1);
        }
    }
    amps
}

/// `(e^{−iσʸ arcsin√q}|0⟩)^{⊗n}`; `q = 0.5` gives `|+⟩^{⊗n}`.
pub fn prepare_initial_state(n: usize, q: f64) -> Result<StateVector> {
    check_qubit_count(n)?;
    if n == 0 {
        return Err(Error::InvalidParams("at least one qubit is required".into()));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::OutOfRange { name: "q", value: q, range: "[0, 1]" });
    }
    let amplitudes = product_amplitudes(n, q).into_iter().map(|a| Complex::new(a, 0.0)).collect();
    Ok(StateVector { num_qubits: n, amplitudes })
}

/// Native trapped-ion gates. Angles are radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NativeGate {
    /// `e^{−i(cosφ σˣ + sinφ σʸ)θ/2}`: rotation by `theta` about an axis at
    /// azimuth `phi` in the x–y plane.
    R { phi: f64, theta: f64, qubit: usize },
    /// `e^{−iσᶻθ/2}`.
    Rz { theta: f64, qubit: usize },
    /// `e^{iθ σˣ_a σˣ_b}`.
    XX { theta: f64, a: usize, b: usize },
}

impl NativeGate {
    pub fn is_two_qubit(&self) -> bool {
        matches!(self, NativeGate::XX { .. })
    }

    /// Qubits acted on.
    pub fn qubits(&self) -> ([usize; 2], usize) {
        match *self {
            NativeGate::R { qubit, .. } | NativeGate::Rz { qubit, .. } => ([qubit, qubit], 1),
            NativeGate::XX { a, b, .. } => ([a, b], 2),
        }
    }

    pub fn inverse(&self) -> NativeGate {
        match *self {
            NativeGate::R { phi, theta, qubit } => NativeGate::R { phi, theta: -theta, qubit },
            NativeGate::Rz { theta, qubit } => NativeGate::Rz { theta: -theta, qubit },
            NativeGate::XX { theta, a, b } => NativeGate::XX { theta: -theta, a, b },
        }
    }

    /// Target qubits valid for an `n`-qubit register.
    pub fn check(&self, num_qubits: usize) -> Result<()> {
        let (qs, count) = self.qubits();
        for &q in &qs[..count] {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange { index: q, num_qubits });
            }
        }
        if count == 2 && qs[0] == qs[1] {
            return Err(Error::RepeatedQubit(qs[0]));
        }
        Ok(())
    }

    /// `(qubit, matrix)` for single-qubit gates.
    pub fn single_qubit_matrix(&self) -> Option<(usize, [[Complex; 2]; 2])> {
        match *self {
            NativeGate::R { phi, theta, qubit } => {
                let c = Complex::new(libm::cos(theta / 2.0), 0.0);
                let s = libm::sin(theta / 2.0);
                let off = |sign: f64| -I * s * Complex::from_polar(1.0, sign * phi);
                Some((qubit, [[c, off(-1.0)], [off(1.0), c]]))
            }
            NativeGate::Rz { theta, qubit } => {
                let zero = Complex::new(0.0, 0.0);
                Some((
                    qubit,
                    [[Complex::from_polar(1.0, -theta / 2.0), zero], [zero, Complex::from_polar(1.0, theta / 2.0)]],
                ))
            }
            NativeGate::XX { .. } => None,
        }
    }
}
