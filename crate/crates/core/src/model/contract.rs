use super::{ComponentProfile, ModelError};
use crate::{BigInt, IntMatrix};

/// The multigraph `K/F`: one vertex per forest component, `w[p][q]` parallel
/// edges between components `p` and `q`, loops dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedGraph {
    multiplicity: Vec<Vec<u64>>,
    laplacian: IntMatrix,
}

/// Contracts the forest behind `profile`.
///
/// Multiplicities come from counting cross-part vertex pairs directly; the
/// resulting Laplacian is checked entrywise against
/// `diag(α) + Nᵀ(I_s − J_s)N` before it is returned.
pub fn contract(profile: &ComponentProfile) -> Result<ContractedGraph, ModelError> {
    ContractedGraph::from_multiplicities(profile, direct_multiplicities(profile))
}

/// Counts, for every pair of components, the graph edges running between them.
pub fn direct_multiplicities(profile: &ComponentProfile) -> Vec<Vec<u64>> {
    let c = profile.num_components();
    let partition = profile.partition();
    let s = partition.num_parts();
    let mut w = vec![vec![0u64; c]; c];
    for i in 0..s {
        for j in i + 1..s {
            for u in partition.block(i) {
                let p = profile.component_of(u);
                for v in partition.block(j) {
                    let q = profile.component_of(v);
                    if p != q {
                        w[p][q] += 1;
                        w[q][p] += 1;
                    }
                }
            }
        }
    }
    w
}

/// `w_{pq} = m_p m_q − Σ_i n_{ip} n_{iq}` for `p ≠ q`.
pub fn multiplicity_formula(profile: &ComponentProfile, p: usize, q: usize) -> u64 {
    let m = profile.sizes();
    let same_part: u64 = profile.counts().iter().map(|row| row[p] * row[q]).sum();
    m[p] * m[q] - same_part
}

/// `diag(α_1, …, α_c) + Nᵀ(I_s − J_s)N`.
pub fn structural_laplacian(profile: &ComponentProfile) -> IntMatrix {
    let s = profile.partition().num_parts();
    let n = profile.counts_matrix();
    let middle = IntMatrix::identity(s).checked_sub(&IntMatrix::ones(s)).expect("square");
    let alpha: Vec<BigInt> = profile.alpha().iter().map(|&a| a.into()).collect();
    IntMatrix::diagonal(&alpha)
        .checked_add(&(&(&n.transpose() * &middle) * &n))
        .expect("c × c")
}

impl ContractedGraph {
    /// Builds the contracted graph from given multiplicities, failing with
    /// [`ModelError::StructuralMismatch`] if its Laplacian disagrees with the
    /// rank-`s` form derived from `profile`.
    pub fn from_multiplicities(profile: &ComponentProfile, multiplicity: Vec<Vec<u64>>) -> Result<Self, ModelError> {
        let c = profile.num_components();
        let laplacian = IntMatrix::from_fn(c, c, |p, q| {
            if p == q {
                (0..c)
                    .filter(|&r| r != p)
                    .map(|r| multiplicity[p][r])
                    .sum::<u64>()
                    .into()
            } else {
                -BigInt::from(multiplicity[p][q])
            }
        });
        let structural = structural_laplacian(profile);
        for p in 0..c {
            for q in 0..c {
                if laplacian[(p, q)] != structural[(p, q)] {
                    return Err(ModelError::StructuralMismatch {
                        row: p,
                        col: q,
                        combinatorial: laplacian[(p, q)].to_string(),
                        structural: structural[(p, q)].to_string(),
                    });
                }
            }
        }
        Ok(Self {
            multiplicity,
            laplacian,
        })
    }

    /// Number of vertices `c`.
    pub fn order(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn multiplicity(&self, p: usize, q: usize) -> u64 {
        self.multiplicity[p][q]
    }

    pub fn multiplicities(&self) -> &[Vec<u64>] {
        &self.multiplicity
    }

    pub fn laplacian(&self) -> &IntMatrix {
        &self.laplacian
    }

    /// Vertex pairs `p < q` joined by at least one edge, with their multiplicity.
    pub fn support_edges(&self) -> Vec<(usize, usize, u64)> {
        let c = self.order();
        let mut out = Vec::new();
        for p in 0..c {
            for q in p + 1..c {
                let w = self.multiplicity[p][q];
                if w > 0 {
                    out.push((p, q, w));
                }
            }
        }
        out
    }

    /// Total number of edges, counting parallel copies.
    pub fn total_multiplicity(&self) -> u64 {
        self.support_edges().iter().map(|e| e.2).sum()
    }
}
