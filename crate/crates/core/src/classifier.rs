//! Green–Lazarsfeld `N_p` classification of toric edge ideals of bipartite
//! graphs, decided combinatorially and returned with a checkable
//! certificate.
//!
//! Classification runs on the 2-core of the input. Removing a vertex of
//! degree at most one only adds a free variable to the edge ring, so the
//! Betti numbers of `I_G` are unchanged. Normality (`N_0`) holds for every
//! bipartite graph and is not re-checked.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog;
use crate::field::FieldSpec;
use crate::graph::{BipartiteGraph, CycleWitness, InducedEmbedding};

/// Highest Green–Lazarsfeld level attained, totally ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    /// Some chordless cycle of length ≥ 6: not generated by quadrics.
    #[serde(rename = "Fails_N1")]
    FailsN1,
    /// Quadratic but not linearly presented.
    N1,
    /// Linearly presented, fails `N_3`.
    N2,
    /// Satisfies `N_3`, fails `N_4`.
    N3,
    /// Linear resolution: `N_p` for every `p`.
    #[serde(rename = "N_inf")]
    NInf,
}

impl Level {
    /// Whether `N_p` holds at this level.
    pub fn satisfies(self, p: usize) -> bool {
        match self {
            Level::FailsN1 => p == 0,
            Level::N1 => p <= 1,
            Level::N2 => p <= 2,
            Level::N3 => p <= 3,
            Level::NInf => true,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Level::FailsN1 => "Fails_N1",
            Level::N1 => "N1",
            Level::N2 => "N2",
            Level::N3 => "N3",
            Level::NInf => "N_inf",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    ChordlessCycle {
        cycle: CycleWitness,
    },
    /// An induced copy of `H^(index)`; `mapping` pairs pattern labels with
    /// host labels.
    Obstruction {
        index: usize,
        mapping: Vec<(String, String)>,
        sides_swapped: bool,
    },
    /// The bipartite complement, which is essentially a tree of diameter at
    /// most 3.
    ComplementTree {
        edges: Vec<(String, String)>,
        diameter: usize,
    },
    /// `K_{m,n}` with `min(m, n) ≥ 5` over characteristic 3: linearly
    /// presented, but `β_{2,5} ≠ 0`.
    CharThreeException {
        m: usize,
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `K_{2,n}` (sides in either order).
    K2n {
        n: usize,
    },
}

/// Record of the 2-core reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionNote {
    /// Labels removed while peeling vertices of degree < 2, in order.
    pub removed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpVerdict {
    pub level: Level,
    pub certificate: Certificate,
    pub reduction: Option<ReductionNote>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// The 2-core is empty: the graph is a forest and `I_G = 0`.
    #[error("ideal is zero after reduction (the graph has no cycle)")]
    ZeroIdeal { removed: Vec<String> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Would contradict the obstruction theorem; signals a bug.
    #[error("no induced obstruction found although the complement is not essentially a tree of diameter ≤ 3")]
    MissingObstruction,
}

/// An induced copy of one of the catalog graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub index: usize,
    pub embedding: InducedEmbedding,
}

/// Scans `H^(1)..H^(8)` in index order and returns the first induced copy.
///
/// Requires minimum degree ≥ 2 and chordal bipartiteness.
pub fn find_n2_obstruction(g: &BipartiteGraph) -> Result<Option<Obstruction>, ClassifyError> {
    if g.min_degree().is_some_and(|d| d < 2) {
        return Err(ClassifyError::Precondition("minimum degree must be at least 2".into()));
    }
    if let Some(c) = g.chordless_cycle() {
        return Err(ClassifyError::Precondition(format!(
            "graph has a chordless cycle of length {}",
            c.len()
        )));
    }
    Ok(catalog::obstructions().iter().enumerate().find_map(|(i, h)| {
        g.find_induced_copy(h).map(|embedding| Obstruction { index: i + 1, embedding })
    }))
}

/// Classifies `I_G` by the highest `N_p` it satisfies over `field`.
pub fn classify_np(g: &BipartiteGraph, field: FieldSpec) -> Result<NpVerdict, ClassifyError> {
    let (core, removed) = g.degree_k_subgraph_with_removed(2);
    if core.num_edges() == 0 {
        return Err(ClassifyError::ZeroIdeal { removed });
    }
    let reduction = (!removed.is_empty()).then_some(ReductionNote { removed });
    let (level, certificate) = classify_core(&core, field)?;
    Ok(NpVerdict { level, certificate, reduction })
}

fn classify_core(g: &BipartiteGraph, field: FieldSpec) -> Result<(Level, Certificate), ClassifyError> {
    if let Some((m, n)) = g.is_complete_bipartite() {
        // a 2-core has min degree 2, so both sides have at least 2 vertices
        if m == 2 || n == 2 {
            return Ok((Level::NInf, Certificate::K2n { n: m.max(n) }));
        }
        if field.characteristic() == 3 && m.min(n) >= 5 {
            return Ok((Level::N2, Certificate::CharThreeException { m, n }));
        }
        return Ok((Level::N3, Certificate::CompleteBipartite { m, n }));
    }
    if let Some(cycle) = g.chordless_cycle() {
        return Ok((Level::FailsN1, Certificate::ChordlessCycle { cycle }));
    }
    let complement = g.bipartite_complement();
    if complement.is_essentially_tree_diameter_le3() {
        let diameter = complement.degree_k_subgraph(1).diameter().unwrap_or(0);
        return Ok((Level::N2, Certificate::ComplementTree { edges: complement.edge_labels(), diameter }));
    }
    let found = find_n2_obstruction(g)?.ok_or(ClassifyError::MissingObstruction)?;
    let pattern = catalog::obstruction(found.index);
    Ok((
        Level::N1,
        Certificate::Obstruction {
            index: found.index,
            mapping: found.embedding.label_pairs(pattern, g),
            sides_swapped: found.embedding.sides_swapped,
        },
    ))
}

impl NpVerdict {
    /// Re-checks the certificate against the graph it was issued for.
    pub fn verify(&self, g: &BipartiteGraph, field: FieldSpec) -> bool {
        let core = g.degree_k_subgraph(2);
        match (&self.level, &self.certificate) {
            (Level::FailsN1, Certificate::ChordlessCycle { cycle }) => cycle.verify(&core),
            (Level::N1, Certificate::Obstruction { index, mapping, sides_swapped }) => {
                if !(1..=8).contains(index) {
                    return false;
                }
                let pattern = catalog::obstruction(*index);
                let image: Option<Vec<usize>> =
                    mapping.iter().map(|(_, h)| core.vertex_by_label(h)).collect();
                image.is_some_and(|image| {
                    InducedEmbedding { image, sides_swapped: *sides_swapped }.verify(pattern, &core)
                })
            }
            (Level::N2, Certificate::ComplementTree { edges, .. }) => {
                let c = core.bipartite_complement();
                &c.edge_labels() == edges && c.is_essentially_tree_diameter_le3() && core.is_chordal_bipartite()
            }
            (Level::N2, Certificate::CharThreeException { m, n }) => {
                field.characteristic() == 3 && (*m).min(*n) >= 5 && core.is_complete_bipartite() == Some((*m, *n))
            }
            (Level::N3, Certificate::CompleteBipartite { m, n }) => {
                (*m).min(*n) >= 3
                    && !(field.characteristic() == 3 && (*m).min(*n) >= 5)
                    && core.is_complete_bipartite() == Some((*m, *n))
            }
            (Level::NInf, Certificate::K2n { n }) => {
                matches!(core.is_complete_bipartite(), Some((2, k)) | Some((k, 2)) if k == *n)
            }
            _ => false,
        }
    }
}
