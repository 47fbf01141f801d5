//! Exact-simulation QAOA and Grover-mixer QAOA.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure computation:
//!
//! - [`graphs`]: graph model, preset graphs and brute-force combinatorial oracles.
//! - [`problems`]: diagonal Max-Cut and edge-cover Hamiltonians, subgraph weights.
//! - [`simulator`]: statevector evolution, both mixers and the native trapped-ion gate set.
//! - [`compiler`]: lowering of phase separators and Grover mixers to native gates.
//! - [`qaoa`]: the alternating protocol, observables, multi-start optimisation and
//!   published parameter sets.
//! - [`analytics`]: seeded sampling, draw counts, chi-squared "shots to reject" and
//!   KL divergence.
//!
//! # Conventions
//!
//! Qubit `i` is bit `i` of a basis-state index, qubit 0 being the least significant
//! bit. For edge-encoded problems qubit `i` is edge `i` of the graph and bit value 0
//! means the edge is *included*. For vertex-encoded problems qubit `i` is vertex `i`.
//!
//! All file formats, IO and the command-line driver live in the companion `gqaoa`
//! crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod analytics;
pub mod compiler;
mod error;
pub mod graphs;
pub mod problems;
pub mod qaoa;
pub mod rng;
pub mod simulator;

pub use error::{Error, Result};

/// Largest qubit count accepted anywhere in the crate (brute force and statevectors).
pub const MAX_QUBITS: usize = 24;

/// Complex amplitude type used throughout.
pub type Complex = num_complex::Complex64;
