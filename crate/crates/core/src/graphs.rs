//! Graph model, preset graphs and brute-force combinatorial oracles.
//!
//! The brute-force routines here deliberately avoid the Hamiltonian machinery in
//! [`crate::problems`]; they are the reference every encoding is checked against.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result, MAX_QUBITS};

/// An undirected simple graph with ordered vertices and edges.
///
/// Vertex order fixes qubit indices for vertex-encoded problems, edge order fixes
/// them for edge-encoded problems. `weight_q` is the per-edge weight parameter of
/// weighted sampling problems; `None` means unweighted.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    weight_q: Option<f64>,
}

impl Graph {
    /// Builds a graph from labels and edges given as vertex indices.
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>, weight_q: Option<f64>) -> Result<Self> {
        for (i, label) in vertices.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidGraph(format!("vertex {i} has an empty label")));
            }
            if vertices[..i].contains(label) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{label}`")));
            }
        }
        for (k, &(u, v)) in edges.iter().enumerate() {
            let n = vertices.len();
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {k} refers to vertex index {} but only {n} vertices exist",
                    u.max(v)
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex `{}`", vertices[u])));
            }
            let duplicate = edges[..k].iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u));
            if duplicate {
                return Err(Error::InvalidGraph(format!("duplicate edge `{}`-`{}`", vertices[u], vertices[v])));
            }
        }
        if let Some(q) = weight_q {
            check_weight(q)?;
        }
        Ok(Self { vertices, edges, weight_q })
    }

    /// Builds a graph whose vertex labels are `0..n`.
    pub fn with_numbered_vertices(n: usize, edges: &[(usize, usize)], weight_q: Option<f64>) -> Result<Self> {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        Self::new(vertices, edges.to_vec(), weight_q)
    }

    /// Same graph with a different weight parameter.
    pub fn with_weight(mut self, weight_q: Option<f64>) -> Result<Self> {
        if let Some(q) = weight_q {
            check_weight(q)?;
        }
        self.weight_q = weight_q;
        Ok(self)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight_q(&self) -> Option<f64> {
        self.weight_q
    }

    /// The weight parameter, with unweighted graphs treated as q = 0.5.
    pub fn q_or_unweighted(&self) -> f64 {
        self.weight_q.unwrap_or(0.5)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Indices of the edges incident on vertex `v`, in edge order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        self.edges.iter().enumerate().filter(|(_, &(a, b))| a == v || b == v).map(|(k, _)| k).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Vertex degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.num_vertices()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| self.degree(v) == 0)
    }
}

fn check_weight(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "q", value: q, range: "the open interval (0, 1)" })
    }
}

/// Preset graphs used in the experiments.
///
/// The bridge graph is intentionally absent; supply it through a graph file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    Triangle,
    Square,
    Paw,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Triangle, Preset::Square, Preset::Paw];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Triangle => "triangle",
            Preset::Square => "square",
            Preset::Paw => "paw",
        }
    }

    pub fn graph(self) -> Graph {
        let edges: &[(usize, usize)] = match self {
            Preset::Triangle => &[(0, 1), (1, 2), (0, 2)],
            Preset::Square => &[(0, 1), (1, 2), (2, 3), (3, 0)],
            // triangle 0-1-2 with vertex 3 hanging off vertex 2
            Preset::Paw => &[(0, 1), (1, 2), (0, 2), (2, 3)],
        };
        let n = if self == Preset::Triangle { 3 } else { 4 };
        Graph::with_numbered_vertices(n, edges, None).expect("preset graphs are valid")
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::UnknownPreset { name: s.to_owned() })
    }
}

/// Looks up a preset graph by name (`triangle`, `square` or `paw`).
pub fn preset_graph(name: &str) -> Result<Graph> {
    Ok(name.parse::<Preset>()?.graph())
}

/// A subgraph of an edge-encoded problem, stored as a basis-state index.
///
/// Bit `e` clear means edge `e` is included in the subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphMask(pub usize);

impl SubgraphMask {
    pub fn includes(self, edge: usize) -> bool {
        self.0 >> edge & 1 == 0
    }

    /// Number of included edges among the first `num_edges`.
    pub fn num_included(self, num_edges: usize) -> usize {
        num_edges - (self.0 & low_bits(num_edges)).count_ones() as usize
    }

    /// The mask with `edge` additionally included.
    pub fn including(self, edge: usize) -> Self {
        SubgraphMask(self.0 & !(1 << edge))
    }
}

fn low_bits(n: usize) -> usize {
    if n >= usize::BITS as usize {
        usize::MAX
    } else {
        (1usize << n) - 1
    }
}

fn check_brute_force(qubits: usize) -> Result<()> {
    if qubits > MAX_QUBITS {
        Err(Error::TooManyQubits { qubits, max: MAX_QUBITS })
    } else {
        Ok(())
    }
}

/// All edge covers of `g`, in increasing mask order.
pub fn enumerate_edge_covers(g: &Graph) -> Result<Vec<SubgraphMask>> {
    check_brute_force(g.num_edges())?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex { vertex: g.vertices()[v].clone() });
    }
    let all_vertices = low_bits(g.num_vertices());
    let covers = (0..1usize << g.num_edges())
        .map(SubgraphMask)
        .filter(|&mask| {
            let touched = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask.includes(k))
                .fold(0usize, |acc, (_, &(u, v))| acc | 1 << u | 1 << v);
            touched == all_vertices
        })
        .collect();
    Ok(covers)
}

/// Number of edges whose endpoints fall on different sides of `assignment`.
pub fn cut_size(g: &Graph, assignment: usize) -> usize {
    g.edges().iter().filter(|&&(u, v)| (assignment >> u & 1) != (assignment >> v & 1)).count()
}

/// All vertex assignments attaining the maximum cut, in increasing order.
pub fn enumerate_max_cuts(g: &Graph) -> Result<Vec<usize>> {
    check_brute_force(g.num_vertices())?;
    let sizes: Vec<usize> = (0..1usize << g.num_vertices()).map(|x| cut_size(g, x)).collect();
    let best = sizes.iter().copied().max().unwrap_or(0);
    Ok(sizes.iter().enumerate().filter(|&(_, &s)| s == best).map(|(x, _)| x).collect())
}
