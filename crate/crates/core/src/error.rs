use alloc::string::String;

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unknown preset graph `{name}` (available presets: triangle, square, paw)")]
    UnknownPreset { name: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex `{vertex}` is isolated, so no edge cover exists")]
    IsolatedVertex { vertex: String },

    #[error("problem needs {qubits} qubits, more than the supported maximum of {max}")]
    TooManyQubits { qubits: usize, max: usize },

    #[error("graph has no edges; the problem is degenerate")]
    NoEdges,

    #[error("graph carries no weight parameter q; use the unweighted path (q = 0.5)")]
    MissingWeight,

    #[error("parameter `{name}` = {value} is outside {range}")]
    OutOfRange { name: &'static str, value: f64, range: &'static str },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("two-qubit gate needs distinct qubits, got {0} twice")]
    RepeatedQubit(usize),

    #[error("vertex `{vertex}` has degree {degree}; the compiler supports degree <= 3")]
    UnsupportedDegree { vertex: String, degree: usize },

    #[error("Grover mixer on {qubits} qubits needs an ancilla, but ancillas are disabled")]
    AncillaRequired { qubits: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no published parameters for {0}")]
    UnlistedParameters(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("no ground-state outcome among {shots} shots")]
    NoGroundCounts { shots: u64 },

    #[error("outcome {label} was observed but has zero expected probability")]
    ZeroExpected { label: usize },

    #[error("distributions disagree on support: {0}")]
    SupportMismatch(String),

    #[error("requested {requested} distinct ground states but only {available} exist")]
    TooManyGroundStates { requested: usize, available: usize },

    #[error("sample size cap of {cap} reached without rejecting the null hypothesis")]
    CapReached { cap: u64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
