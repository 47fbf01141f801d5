//! Diagonal problem Hamiltonians and subgraph weights.
//!
//! Energies are stored densely, one real per basis state. Max-Cut keeps the raw
//! `Σ σᶻσᶻ` form (+1 for an uncut edge, −1 for a cut edge, no offset). The edge
//! cover Hamiltonian counts uncovered vertices: a vertex contributes 1 when every
//! edge incident on it in the original graph is excluded.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::graphs::{Graph, SubgraphMask};
use crate::{Error, Result, MAX_QUBITS};

/// Which cost function a graph is encoded with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    /// One qubit per vertex.
    MaxCut,
    /// One qubit per edge, bit 0 = edge included.
    EdgeCover,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::MaxCut => "maxcut",
            ProblemKind::EdgeCover => "edgecover",
        }
    }

    pub fn num_qubits(self, g: &Graph) -> usize {
        match self {
            ProblemKind::MaxCut => g.num_vertices(),
            ProblemKind::EdgeCover => g.num_edges(),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxcut" => Ok(ProblemKind::MaxCut),
            "edgecover" => Ok(ProblemKind::EdgeCover),
            other => {
                Err(Error::InvalidParams(alloc::format!("unknown problem `{other}` (expected maxcut or edgecover)")))
            }
        }
    }
}

/// A Hamiltonian diagonal in the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalHamiltonian {
    num_qubits: usize,
    energies: Vec<f64>,
    ground_energy: f64,
    ground_set: Vec<usize>,
}

impl DiagonalHamiltonian {
    /// Wraps a dense energy table. The ground set is the exact argmin.
    pub fn from_energies(num_qubits: usize, energies: Vec<f64>) -> Result<Self> {
        if num_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits { qubits: num_qubits, max: MAX_QUBITS });
        }
        if energies.len() != 1 << num_qubits {
            return Err(Error::DimensionMismatch { expected: 1 << num_qubits, found: energies.len() });
        }
        if energies.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidParams("energies must be finite".into()));
        }
        let ground_energy = energies.iter().copied().fold(f64::INFINITY, f64::min);
        let ground_set = energies.iter().enumerate().filter(|&(_, &e)| e == ground_energy).map(|(x, _)| x).collect();
        Ok(Self { num_qubits, energies, ground_energy, ground_set })
    }

    pub fn build(g: &Graph, kind: ProblemKind) -> Result<Self> {
        match kind {
            ProblemKind::MaxCut => build_maxcut_hamiltonian(g),
            ProblemKind::EdgeCover => build_edge_cover_hamiltonian(g),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn energy(&self, x: usize) -> f64 {
        self.energies[x]
    }

    pub fn ground_energy(&self) -> f64 {
        self.ground_energy
    }

    /// Basis indices attaining the minimum energy, ascending.
    pub fn ground_set(&self) -> &[usize] {
        &self.ground_set
    }

    pub fn max_energy(&self) -> f64 {
        self.energies.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        Err(Error::TooManyQubits { qubits: n, max: MAX_QUBITS })
    } else {
        Ok(())
    }
}

/// `H = Σ_{(i,j)∈E} σᶻ_i σᶻ_j` with one qubit per vertex.
pub fn build_maxcut_hamiltonian(g: &Graph) -> Result<DiagonalHamiltonian> {
    let n = g.num_vertices();
    check_qubits(n)?;
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let energies = (0..1usize << n)
        .map(|x| g.edges().iter().map(|&(i, j)| if (x >> i ^ x >> j) & 1 == 0 { 1.0 } else { -1.0 }).sum())
        .collect();
    DiagonalHamiltonian::from_energies(n, energies)
}

/// `H = Σ_v Π_{e∋v} (1 − σᶻ_e)/2` with one qubit per edge.
pub fn build_edge_cover_hamiltonian(g: &Graph) -> Result<DiagonalHamiltonian> {
    let n = g.num_edges();
    check_qubits(n)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: g.vertices()[v].clone() });
    }
    let incidence: Vec<usize> =
        (0..g.num_vertices()).map(|v| g.incident_edges(v).iter().fold(0usize, |m, &e| m | 1 << e)).collect();
    let energies = (0..1usize << n).map(|x| incidence.iter().filter(|&&m| x & m == m).count() as f64).collect();
    DiagonalHamiltonian::from_energies(n, energies)
}

/// `(1−q)^{n′} q^{n−n′}` where `n′` is the number of included edges in `mask`.
pub fn subgraph_weight(g: &Graph, mask: SubgraphMask) -> Result<f64> {
    let q = g.weight_q().ok_or(Error::MissingWeight)?;
    Ok(weight(g.num_edges(), q, mask))
}

fn weight(n: usize, q: f64, mask: SubgraphMask) -> f64 {
    let included = mask.num_included(n) as i32;
    libm::pow(1.0 - q, included as f64) * libm::pow(q, (n as i32 - included) as f64)
}

/// Target sampling weight of every basis state.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    weights: Vec<f64>,
}

impl WeightTable {
    /// Weights for `n` qubits with per-qubit parameter `q` in (0, 1).
    pub fn new(n: usize, q: f64) -> Result<Self> {
        check_qubits(n)?;
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange { name: "q", value: q, range: "the open interval (0, 1)" });
        }
        let weights = (0..1usize << n).map(|x| weight(n, q, SubgraphMask(x))).collect();
        Ok(Self { weights })
    }

    /// Weights of a weighted graph's edge subsets.
    pub fn for_graph(g: &Graph) -> Result<Self> {
        let q = g.weight_q().ok_or(Error::MissingWeight)?;
        Self::new(g.num_edges(), q)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, x: usize) -> f64 {
        self.weights[x]
    }
}
