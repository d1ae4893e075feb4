//! Graded Betti numbers of toric edge ideals from first principles.
//!
//! `β_{i,α}(I_G) = dim H̃_i(Γ(α); k)` where `Γ(α)` is the squarefree divisor
//! complex of the fiber `C_α`, and `β_{i,j}` sums this over `|α| = 2j`.
//! Indices always refer to `I_G`, so `i = 0` counts minimal generators.

mod canon;
mod complex;
mod fiber;
mod homology;
mod multidegree;
mod rank;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_key, Key};
pub use complex::{divisor_complex, ComplexError, DivisorComplex, MAX_COMPLEX_VERTICES};
pub use fiber::{fiber, EdgeMultiset};
pub use homology::{reduced_homology_dims, reduced_homology_dims_capped};
pub use multidegree::{relevant_multidegrees, Multidegree};
pub use rank::{rank, SparseColumn};

use crate::field::FieldSpec;
use crate::graph::BipartiteGraph;

pub const DEFAULT_FACE_CAP: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("Γ(α) for α = {multidegree} would have about {predicted} faces, above the cap of {cap}")]
    FaceCap { multidegree: String, predicted: u128, cap: u64 },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    /// Largest predicted face count allowed for a single `Γ(α)`.
    pub face_cap: u64,
    /// Worker threads for the sum over multidegrees; `None` uses rayon's
    /// global pool.
    pub threads: Option<usize>,
}

impl Default for BettiOptions {
    fn default() -> Self {
        Self { face_cap: DEFAULT_FACE_CAP, threads: None }
    }
}

/// `β_{i,α}(I_G)` for `i = 0..=i_max`.
pub fn multigraded_betti(g: &BipartiteGraph, alpha: &Multidegree, field: FieldSpec, i_max: usize) -> Result<Vec<usize>, BettiError> {
    let c = divisor_complex(g, alpha)?;
    Ok(reduced_homology_dims(&c, field, i_max))
}

/// `β_{i,j}(I_G)` with no face cap.
pub fn betti_graded(g: &BipartiteGraph, i: usize, j: usize, field: FieldSpec) -> u64 {
    let opts = BettiOptions { face_cap: u64::MAX, threads: None };
    betti_graded_with(g, i, j, field, &opts).expect("uncapped computation on at most 128 edges")
}

pub fn betti_graded_with(
    g: &BipartiteGraph,
    i: usize,
    j: usize,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<u64, BettiError> {
    if j < i + 2 {
        return Ok(0);
    }
    Ok(degree_column(g, j, i, field, opts)?[i])
}

/// `[β_{0,j}, …, β_{i_max,j}]`, computed with one pass over the
/// multidegrees of total `2j`. Entries with `j < i + 2` are zero.
fn degree_column(g: &BipartiteGraph, j: usize, i_max: usize, field: FieldSpec, opts: &BettiOptions) -> Result<Vec<u64>, BettiError> {
    let mut column = vec![0u64; i_max + 1];
    if j < 2 {
        return Ok(column);
    }
    let top = i_max.min(j - 2);
    let alphas = relevant_multidegrees(g, j as u32);
    let mut classes: BTreeMap<Key, (u64, Multidegree)> = BTreeMap::new();
    for alpha in alphas {
        let key = canonical_key(g, &alpha);
        classes.entry(key).or_insert((0, alpha)).0 += 1;
    }
    let work: Vec<(u64, Multidegree)> = classes.into_values().collect();
    let compute = |(count, alpha): &(u64, Multidegree)| -> Result<(u64, Vec<usize>), BettiError> {
        let c = divisor_complex(g, alpha)?;
        let dims = reduced_homology_dims_capped(&c, field, top, opts.face_cap as u128).map_err(|predicted| {
            BettiError::FaceCap { multidegree: alpha.describe(g), predicted, cap: opts.face_cap }
        })?;
        Ok((*count, dims))
    };
    let results: Vec<Result<(u64, Vec<usize>), BettiError>> = match opts.threads {
        None => work.par_iter().map(compute).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| BettiError::ThreadPool(e.to_string()))?
            .install(|| work.par_iter().map(compute).collect()),
    };
    for r in results {
        let (count, dims) = r?;
        for (i, d) in dims.into_iter().enumerate() {
            column[i] += count * d as u64;
        }
    }
    Ok(column)
}

/// Windowed Betti table of `I_G` over `field`, default options.
pub fn betti_table(g: &BipartiteGraph, i_max: usize, j_max: usize, field: FieldSpec) -> Result<BettiTable, BettiError> {
    betti_table_with(g, i_max, j_max, field, &BettiOptions::default())
}

pub fn betti_table_with(
    g: &BipartiteGraph,
    i_max: usize,
    j_max: usize,
    field: FieldSpec,
    opts: &BettiOptions,
) -> Result<BettiTable, BettiError> {
    let mut entries = vec![vec![0u64; j_max + 1]; i_max + 1];
    for j in 2..=j_max {
        let col = degree_column(g, j, i_max, field, opts)?;
        for (i, v) in col.into_iter().enumerate() {
            entries[i][j] = v;
        }
    }
    Ok(BettiTable::from_entries(g, field, entries))
}

/// One nonzero `β_{i,j}(I_G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// `β_{i,j}(I_G)` for `0 ≤ i ≤ i_max`, `0 ≤ j ≤ j_max`.
///
/// Completeness uses two facts about the 2-core `H` of the graph (which has
/// the same Betti numbers): `reg(S/I) ≤ r`, the smaller side of `H`, and
/// `pd(S/I) = |E(H)| − |V(H)| + c(H)` by Cohen–Macaulayness. Hence
/// `β_{i,j}(I) ≠ 0` forces `j ≤ i + 1 + r` and `i ≤ pd(S/I) − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub i_max: usize,
    pub j_max: usize,
    pub field: FieldSpec,
    /// Nonzero entries in `(i, j)` order.
    pub entries: Vec<BettiEntry>,
    /// `max{j − i : β_{i,j} ≠ 0}` inside the window.
    pub window_regularity: Option<usize>,
    /// `max{i : β_{i,j} ≠ 0}` inside the window.
    pub window_pd: Option<usize>,
    /// Upper bound on `reg(I_G)`; `None` for the zero ideal.
    pub regularity_bound: Option<usize>,
    /// `pd(I_G)`; `None` for the zero ideal.
    pub projective_dimension: Option<usize>,
    /// Column `i` holds every nonzero `β_{i,j}`.
    pub column_complete: Vec<bool>,
    /// Whether the window contains the whole table.
    pub complete: bool,
}

impl BettiTable {
    fn from_entries(g: &BipartiteGraph, field: FieldSpec, dense: Vec<Vec<u64>>) -> Self {
        let i_max = dense.len() - 1;
        let j_max = dense[0].len() - 1;
        let mut entries = Vec::new();
        for (i, row) in dense.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                if value != 0 {
                    entries.push(BettiEntry { i, j, value });
                }
            }
        }
        let core = g.degree_k_subgraph(2);
        let (regularity_bound, projective_dimension) = if core.num_edges() == 0 {
            (None, None)
        } else {
            let r = core.num_x().min(core.num_y());
            let height = core.num_edges() + core.num_components() - core.num_vertices();
            (Some(r + 1), Some(height - 1))
        };
        let column_complete = (0..=i_max)
            .map(|i| match (regularity_bound, projective_dimension) {
                (Some(reg), Some(pd)) => i > pd || j_max >= i + reg,
                _ => true,
            })
            .collect::<Vec<_>>();
        let complete = match projective_dimension {
            Some(pd) => i_max >= pd && column_complete.iter().all(|&c| c),
            None => true,
        };
        Self {
            i_max,
            j_max,
            field,
            window_regularity: entries.iter().map(|e| e.j - e.i).max(),
            window_pd: entries.iter().map(|e| e.i).max(),
            entries,
            regularity_bound,
            projective_dimension,
            column_complete,
            complete,
        }
    }

    /// `β_{i,j}(I_G)`; `None` outside the window.
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        if i > self.i_max || j > self.j_max {
            return None;
        }
        Some(self.entries.iter().find(|e| e.i == i && e.j == j).map_or(0, |e| e.value))
    }

    /// `β_{i,j}(S/I_G) = β_{i−1,j}(I_G)`, with `β_{0,0}(S/I_G) = 1`.
    pub fn quotient_betti(&self, i: usize, j: usize) -> Option<u64> {
        match i {
            0 => Some(u64::from(j == 0)),
            _ => self.get(i - 1, j),
        }
    }

    /// Row `r` of the printed table: `β_{i,i+r}` for `i = 0..=i_max`, with
    /// `None` where `i + r` leaves the window.
    pub fn row(&self, r: usize) -> Vec<Option<u64>> {
        (0..=self.i_max).map(|i| self.get(i, i + r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows `2..` up to the last nonzero one, as `"r: v v -"` with zeros
    /// as `-` and entries outside the window as `?`. Empty for the zero
    /// table.
    pub fn render_text(&self) -> String {
        let Some(last) = self.window_regularity else {
            return String::new();
        };
        let mut out = String::new();
        for r in 2..=last.max(2) {
            let cells: Vec<String> = self
                .row(r)
                .into_iter()
                .map(|v| match v {
                    None => "?".to_string(),
                    Some(0) => "-".to_string(),
                    Some(v) => v.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{r}: {}", cells.join(" "));
        }
        out
    }
}
