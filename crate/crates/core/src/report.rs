//! Machine-readable results of the CLI commands.

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::classifier::{Level, NpVerdict};
use crate::field::FieldSpec;
use crate::io::GraphDoc;
use crate::polyomino::{Cell, PolyVerdict};

pub const ENGINE: &str = "toric-np";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub engine: String,
    pub version: String,
    pub command: String,
    /// 0 for ℚ, otherwise the prime.
    pub characteristic: FieldSpec,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polyomino: Option<PolyVerdict>,
    /// Associated bipartite graph (`poly --graph-out` without a path).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    /// Wall-clock time of the computation; the only nondeterministic field.
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &str, field: FieldSpec, input: InputEcho) -> Self {
        Self {
            engine: ENGINE.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            characteristic: field,
            input,
            classification: None,
            polyomino: None,
            graph: None,
            betti: None,
            verification: None,
            timing_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Canonicalized echo of what was read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputEcho {
    Graph {
        #[serde(flatten)]
        graph: GraphDoc,
    },
    Polyomino { cells: Vec<Cell> },
}

/// Outcome of the graph classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Classification {
    Classified { verdict: NpVerdict },
    /// The graph is a forest after all; its toric ideal is zero.
    ZeroIdeal { removed: Vec<String> },
}

impl Classification {
    pub fn level(&self) -> Option<Level> {
        match self {
            Classification::Classified { verdict } => Some(verdict.level),
            Classification::ZeroIdeal { .. } => None,
        }
    }
}

/// A run of `β_{i,j}` for fixed `i` and consecutive `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowCheck {
    pub i: usize,
    pub j_from: usize,
    pub j_to: usize,
    pub values: Vec<u64>,
}

impl WindowCheck {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Agreement {
    Agree,
    Disagree,
}

/// Classifier verdict compared with windowed Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    /// `β_{0,j}` for degrees a nonquadratic generator could have.
    pub n1_window: WindowCheck,
    /// `β_{1,j}` for `j ≥ 4` up to the regularity bound.
    pub n2_window: WindowCheck,
    /// What the windows say: `Fails_N1`, `N1`, or `N2` meaning "at least N2".
    pub homology_bound: Option<Level>,
    pub classifier_level: Option<Level>,
    pub result: Agreement,
}
