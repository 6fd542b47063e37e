use super::{DisjointSet, ModelError, Partition, SpanningForest};
use crate::IntMatrix;

/// How the components `T_1, …, T_c` of a forest meet the parts.
///
/// Components are numbered by ascending smallest vertex. `counts[i][p]` is the
/// number of vertices of part `i` lying in component `p`, `sizes[p]` the
/// order of component `p`, and `alpha[p] = n·m_p − Σ_i n_i·n_{ip}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentProfile {
    partition: Partition,
    component_of: Vec<usize>,
    sizes: Vec<u64>,
    counts: Vec<Vec<u64>>,
    alpha: Vec<u64>,
}

/// Splits the vertex set into the forest's components and tallies them by part.
pub fn decompose(partition: &Partition, forest: &SpanningForest) -> ComponentProfile {
    let n = partition.order();
    debug_assert_eq!(forest.order(), n);
    let mut ds = DisjointSet::new(n);
    for &(u, v) in forest.edges() {
        ds.union(u, v);
    }
    let mut label = vec![usize::MAX; n];
    let mut component_of = Vec::with_capacity(n);
    let mut next = 0;
    for v in 0..n {
        let root = ds.find(v);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        component_of.push(label[root]);
    }
    let c = next;
    let s = partition.num_parts();
    let mut counts = vec![vec![0u64; c]; s];
    for (i, row) in counts.iter_mut().enumerate() {
        for v in partition.block(i) {
            row[component_of[v]] += 1;
        }
    }
    ComponentProfile::assemble(partition.clone(), component_of, counts)
}

impl ComponentProfile {
    fn assemble(partition: Partition, component_of: Vec<usize>, counts: Vec<Vec<u64>>) -> Self {
        let c = counts.first().map_or(0, Vec::len);
        let n = partition.order() as u64;
        let sizes: Vec<u64> = (0..c).map(|p| counts.iter().map(|row| row[p]).sum()).collect();
        let alpha = (0..c)
            .map(|p| {
                let weighted: u64 = partition
                    .parts()
                    .iter()
                    .zip(&counts)
                    .map(|(&ni, row)| ni as u64 * row[p])
                    .sum();
                n * sizes[p] - weighted
            })
            .collect();
        Self {
            partition,
            component_of,
            sizes,
            counts,
            alpha,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Number of components `c`.
    pub fn num_components(&self) -> usize {
        self.sizes.len()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Component orders `m_p`.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// `n_{ip}`: vertices of part `i` in component `p`.
    pub fn count(&self, i: usize, p: usize) -> u64 {
        self.counts[i][p]
    }

    /// The `s × c` matrix `N`, one row per part.
    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn counts_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.counts.len(), self.num_components(), |i, p| {
            self.counts[i][p].into()
        })
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    /// `Σ_i n_i (m_p − n_{ip})`.
    pub fn alpha_by_parts(&self, p: usize) -> u64 {
        self.part_sizes()
            .zip(&self.counts)
            .map(|(ni, row)| ni * (self.sizes[p] - row[p]))
            .sum()
    }

    /// `Σ_i (n − n_i) n_{ip}`.
    pub fn alpha_by_complements(&self, p: usize) -> u64 {
        let n = self.partition.order() as u64;
        self.part_sizes()
            .zip(&self.counts)
            .map(|(ni, row)| (n - ni) * row[p])
            .sum()
    }

    fn part_sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.partition.parts().iter().map(|&k| k as u64)
    }

    /// Relabels components so that new component `k` is old component
    /// `perm[k]`.
    pub fn permute_components(&self, perm: &[usize]) -> Result<Self, ModelError> {
        let c = self.num_components();
        let mut inverse = vec![usize::MAX; c];
        for (k, &old) in perm.iter().enumerate() {
            if old >= c || inverse[old] != usize::MAX {
                return Err(ModelError::InvalidPermutation { expected: c });
            }
            inverse[old] = k;
        }
        if perm.len() != c {
            return Err(ModelError::InvalidPermutation { expected: c });
        }
        let counts = self
            .counts
            .iter()
            .map(|row| perm.iter().map(|&old| row[old]).collect())
            .collect();
        let component_of = self.component_of.iter().map(|&old| inverse[old]).collect();
        Ok(Self::assemble(self.partition.clone(), component_of, counts))
    }
}
