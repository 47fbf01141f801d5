//! Dense-matrix reference implementations, independent of the statevector
//! simulator: operators are built from Pauli matrices and Kronecker products and
//! exponentiated with a scaled Taylor series.

use gqaoa_core::Complex;

pub type Matrix = Vec<Vec<Complex>>;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn zeros(dim: usize) -> Matrix {
    vec![vec![c(0.0, 0.0); dim]; dim]
}

pub fn identity(dim: usize) -> Matrix {
    let mut m = zeros(dim);
    (0..dim).for_each(|i| m[i][i] = c(1.0, 0.0));
    m
}

pub fn pauli_x() -> Matrix {
    vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]]
}

pub fn pauli_y() -> Matrix {
    vec![vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]]
}

pub fn pauli_z() -> Matrix {
    vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]]
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == c(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn scale(a: &Matrix, f: Complex) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * f).collect()).collect()
}

/// `a ⊗ b`, with `a` acting on the more significant bits.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Single-qubit operator `op` on qubit `q` (bit `q` of the index) of `n` qubits.
pub fn embed(op: &Matrix, q: usize, n: usize) -> Matrix {
    let mut out = identity(1);
    for k in (0..n).rev() {
        let id = identity(2);
        out = kron(&out, if k == q { op } else { &id });
    }
    out
}

fn max_abs(a: &Matrix) -> f64 {
    a.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max)
}

/// `e^{A}` by scaling, a 30-term Taylor series and repeated squaring.
pub fn expm(a: &Matrix) -> Matrix {
    let n = a.len();
    let norm: f64 = a.iter().map(|r| r.iter().map(|x| x.norm()).sum::<f64>()).fold(0.0, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = scale(a, c(1.0 / f64::from(1u32 << squarings), 0.0));
    let mut result = identity(n);
    let mut term = identity(n);
    for k in 1..=30 {
        term = scale(&matmul(&term, &scaled), c(1.0 / k as f64, 0.0));
        result = add(&result, &term);
        if max_abs(&term) < 1e-300 {
            break;
        }
    }
    for _ in 0..squarings {
        result = matmul(&result, &result);
    }
    result
}

/// `e^{−iθ H}` for Hermitian `H`.
pub fn evolve(h: &Matrix, theta: f64) -> Matrix {
    expm(&scale(h, c(0.0, -theta)))
}

/// Grover mixer Hamiltonian as the product of per-qubit factors
/// `(1 + (1−2q)σᶻ + 2√(q(1−q))σˣ) / 2`.
pub fn grover_hamiltonian(n: usize, q: f64) -> Matrix {
    let factor = scale(
        &add(
            &add(&identity(2), &scale(&pauli_z(), c(1.0 - 2.0 * q, 0.0))),
            &scale(&pauli_x(), c(2.0 * (q * (1.0 - q)).sqrt(), 0.0)),
        ),
        c(0.5, 0.0),
    );
    let mut h = identity(1);
    for _ in 0..n {
        h = kron(&h, &factor);
    }
    h
}

/// `Σ_i σˣ_i`.
pub fn transverse_hamiltonian(n: usize) -> Matrix {
    (0..n).fold(zeros(1 << n), |acc, i| add(&acc, &embed(&pauli_x(), i, n)))
}

pub fn diagonal(values: &[f64]) -> Matrix {
    let mut m = zeros(values.len());
    values.iter().enumerate().for_each(|(i, &v)| m[i][i] = c(v, 0.0));
    m
}

pub fn apply(m: &Matrix, v: &[Complex]) -> Vec<Complex> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// `R(φ, θ) = e^{−i(cos φ σˣ + sin φ σʸ)θ/2}` on qubit `q`.
pub fn r_gate(phi: f64, theta: f64, q: usize, n: usize) -> Matrix {
    let axis = add(&scale(&pauli_x(), c(phi.cos(), 0.0)), &scale(&pauli_y(), c(phi.sin(), 0.0)));
    embed(&evolve(&axis, theta / 2.0), q, n)
}

pub fn rz_gate(theta: f64, q: usize, n: usize) -> Matrix {
    embed(&evolve(&pauli_z(), theta / 2.0), q, n)
}

/// `XX(θ) = e^{iθ σˣ_a σˣ_b}`.
pub fn xx_gate(theta: f64, a: usize, b: usize, n: usize) -> Matrix {
    evolve(&matmul(&embed(&pauli_x(), a, n), &embed(&pauli_x(), b, n)), -theta)
}

/// Largest elementwise difference after the best global phase, searched on a
/// fine grid around the least-squares phase.
pub fn phase_invariant_distance(a: &Matrix, b: &Matrix) -> f64 {
    let overlap: Complex = a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| x.conj() * y).sum();
    let phi0 = overlap.arg();
    (-200..=200)
        .map(|k| {
            let f = Complex::from_polar(1.0, phi0 + k as f64 * 1e-5);
            a.iter().flatten().zip(b.iter().flatten()).map(|(x, y)| (x * f - y).norm()).fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// The alternating protocol with dense operators: `|ψ⟩ ← e^{−iβ H_B} e^{−iα H_A} |ψ⟩`.
pub fn dense_qaoa(energies: &[f64], h_b: &Matrix, initial: &[Complex], alphas: &[f64], betas: &[f64]) -> Vec<Complex> {
    let h_a = diagonal(energies);
    let mut psi = initial.to_vec();
    for (&a, &b) in alphas.iter().zip(betas) {
        psi = apply(&evolve(&h_a, a), &psi);
        psi = apply(&evolve(h_b, b), &psi);
    }
    psi
}

/// `(√(1−q)|0⟩ + √q|1⟩)^{⊗n}` by Kronecker products.
pub fn product_state(n: usize, q: f64) -> Vec<Complex> {
    let mut psi = vec![c(1.0, 0.0)];
    for _ in 0..n {
        psi = psi.iter().flat_map(|&a| [a * (1.0 - q).sqrt(), a * q.sqrt()]).collect();
    }
    psi
}

/// Upper tail of the chi-squared density by composite Simpson quadrature.
pub fn chi2_tail_by_integration(x0: f64, dof: usize) -> f64 {
    let k = dof as f64 / 2.0;
    // Γ(k) for half-integers and integers, by recursion
    let mut gamma = if dof.is_multiple_of(2) { 1.0 } else { std::f64::consts::PI.sqrt() };
    let mut g = if dof.is_multiple_of(2) { 1.0 } else { 0.5 };
    while g < k {
        gamma *= g;
        g += 1.0;
    }
    let norm = 2f64.powf(k) * gamma;
    let pdf = |x: f64| x.powf(k - 1.0) * (-x / 2.0).exp() / norm;
    let upper = x0 + 200.0;
    let n = 400_000;
    let h = (upper - x0) / n as f64;
    let mut sum = pdf(x0) + pdf(upper);
    for i in 1..n {
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * pdf(x0 + i as f64 * h);
    }
    sum * h / 3.0
}
