//! Published angles, stored at the printed two-decimal precision.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{MixerSpec, QaoaParams};
use crate::graphs::Preset;
use crate::problems::ProblemKind;
use crate::{Error, Result};

/// Which published table an entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PaperVariant {
    /// Transverse-field mixer.
    Standard,
    /// Grover mixer on the unweighted problem (`q = 0.5`).
    Grover,
    /// Grover mixer on the weighted problem (paw `q = 0.7`, square `q = 0.75`).
    WeightedGrover,
}

impl PaperVariant {
    pub const ALL: [PaperVariant; 3] = [PaperVariant::Standard, PaperVariant::Grover, PaperVariant::WeightedGrover];

    pub fn name(self) -> &'static str {
        match self {
            PaperVariant::Standard => "standard",
            PaperVariant::Grover => "grover",
            PaperVariant::WeightedGrover => "weighted-grover",
        }
    }

    /// The mixer the entry was published for. Weighted entries exist for the
    /// square and paw only; the triangle falls back to `q = 0.5`.
    pub fn mixer(self, preset: Preset) -> MixerSpec {
        match (self, preset) {
            (PaperVariant::Standard, _) => MixerSpec::Transverse,
            (PaperVariant::WeightedGrover, Preset::Paw) => MixerSpec::Grover { q: 0.7 },
            (PaperVariant::WeightedGrover, Preset::Square) => MixerSpec::Grover { q: 0.75 },
            _ => MixerSpec::Grover { q: 0.5 },
        }
    }
}

type Entry = (Preset, PaperVariant, &'static [f64], &'static [f64]);

#[rustfmt::skip]
#[allow(clippy::approx_constant)]
const TABLE: &[Entry] = &[
    (Preset::Triangle, PaperVariant::Standard, &[-0.95], &[1.00]),
    (Preset::Triangle, PaperVariant::Standard, &[-0.83, 0.85], &[3.14, -1.66]),
    (Preset::Square, PaperVariant::Standard, &[-0.87], &[-2.60]),
    (Preset::Square, PaperVariant::Standard, &[0.80, -0.82], &[-1.58, -2.28]),
    (Preset::Paw, PaperVariant::Standard, &[1.04], &[-0.61]),
    (Preset::Paw, PaperVariant::Standard, &[0.62, 0.88], &[0.75, -1.04]),
    (Preset::Paw, PaperVariant::Standard, &[0.5, -0.5, -0.5], &[1.6, 0.5, 0.3]),

    (Preset::Triangle, PaperVariant::Grover, &[2.48], &[1.37]),
    (Preset::Triangle, PaperVariant::Grover, &[0.69, 1.22], &[1.32, 0.92]),
    (Preset::Square, PaperVariant::Grover, &[0.65], &[1.46]),
    (Preset::Square, PaperVariant::Grover, &[0.48, 0.91], &[1.52, 0.92]),
    (Preset::Paw, PaperVariant::Grover, &[0.79], &[1.60]),
    (Preset::Paw, PaperVariant::Grover, &[0.56, 0.98], &[1.47, 1.17]),

    (Preset::Square, PaperVariant::WeightedGrover, &[2.67], &[-2.30]),
    (Preset::Square, PaperVariant::WeightedGrover, &[0.68, 1.05], &[2.20, 1.95]),
    (Preset::Paw, PaperVariant::WeightedGrover, &[-2.85], &[2.81]),
    (Preset::Paw, PaperVariant::WeightedGrover, &[2.05, 1.98], &[2.80, 2.98]),
];

/// Every listed `(graph, variant, p)` combination, all edge cover.
pub fn listed_combinations() -> Vec<(Preset, PaperVariant, usize)> {
    TABLE.iter().map(|&(g, v, a, _)| (g, v, a.len())).collect()
}

/// Published angles for edge cover on `preset`, verbatim.
///
/// The angles follow the publication's sign conventions; pass them through
/// [`MixerSpec::from_published`] before running the protocol.
pub fn paper_parameters(preset: Preset, kind: ProblemKind, variant: PaperVariant, p: usize) -> Result<QaoaParams> {
    let found = (kind == ProblemKind::EdgeCover)
        .then(|| TABLE.iter().find(|&&(g, v, a, _)| g == preset && v == variant && a.len() == p))
        .flatten();
    match found {
        Some(&(_, _, alphas, betas)) => QaoaParams::new(alphas.to_vec(), betas.to_vec()),
        None => {
            let available: Vec<String> =
                listed_combinations().into_iter().map(|(g, v, p)| format!("{g}/{}/p={p}", v.name())).collect();
            Err(Error::UnlistedParameters(format!(
                "{preset}/{kind}/{}/p={p}; available (edgecover): {}",
                variant.name(),
                available.join(", ")
            )))
        }
    }
}
