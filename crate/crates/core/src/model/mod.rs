//! The complete multipartite graph, spanning forests inside it, and the
//! component bookkeeping needed to contract a forest away.

mod contract;
mod forest;
mod profile;

use std::ops::Range;

use thiserror::Error;

pub use contract::{contract, direct_multiplicities, multiplicity_formula, structural_laplacian, ContractedGraph};
pub use forest::{count_components_after, validate_forest, DisjointSet, SpanningForest};
pub use profile::{decompose, ComponentProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a complete multipartite graph needs at least 2 parts, got {parts}")]
    TooFewParts { parts: usize },
    #[error("part {index} is empty; every part needs at least one vertex")]
    EmptyPart { index: usize },
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge [{u}, {v}] joins two vertices of the same part")]
    IntraPartEdge { u: usize, v: usize },
    #[error("edge [{u}, {v}] closes a cycle")]
    CycleDetected { u: usize, v: usize },
    #[error("edge [{u}, {v}] appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("contracted Laplacian entry ({row}, {col}) is {combinatorial} from multiplicities but {structural} from the rank-s form")]
    StructuralMismatch {
        row: usize,
        col: usize,
        combinatorial: String,
        structural: String,
    },
    #[error("not a permutation of the {expected} components")]
    InvalidPermutation { expected: usize },
}

/// Part sizes `n_1, …, n_s` of `K_{n_1,…,n_s}`.
///
/// Vertices carry global indices `0..n`; part `i` owns the contiguous block
/// starting at `n_1 + … + n_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    offsets: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ModelError> {
        if parts.len() < 2 {
            return Err(ModelError::TooFewParts { parts: parts.len() });
        }
        if let Some(index) = parts.iter().position(|&k| k == 0) {
            return Err(ModelError::EmptyPart { index });
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        offsets.push(0);
        for &k in &parts {
            offsets.push(offsets.last().unwrap() + k);
        }
        Ok(Self { parts, offsets })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `s`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Number of vertices `n`.
    pub fn order(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn block(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        if v >= self.order() {
            return None;
        }
        Some(self.offsets.partition_point(|&o| o <= v) - 1)
    }

    /// Every edge of the graph as `(u, v)` with `u < v`, in lexicographic order.
    pub fn cross_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            let pu = self.part_of(u);
            for v in u + 1..n {
                if self.part_of(v) != pu {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `(n² - Σ n_i²) / 2`.
    pub fn edge_count(&self) -> usize {
        let n = self.order();
        (n * n - self.parts.iter().map(|k| k * k).sum::<usize>()) / 2
    }
}
