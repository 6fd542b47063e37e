use std::collections::HashSet;

use super::{ModelError, Partition};

/// Union-find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn num_sets(&self) -> usize {
        self.sets
    }
}

/// Number of connected components of the graph on `n` vertices with the given edges.
pub fn count_components_after(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut ds = DisjointSet::new(n);
    for &(u, v) in edges {
        ds.union(u, v);
    }
    ds.num_sets()
}

/// An acyclic set of cross-part edges of `K_{n_1,…,n_s}`. Vertices not
/// touched by an edge are singleton components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningForest {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl SpanningForest {
    pub fn empty(partition: &Partition) -> Self {
        Self {
            order: partition.order(),
            edges: Vec::new(),
        }
    }

    /// Adds candidate edges in the given order, skipping any that would close
    /// a cycle or join two vertices of one part, until `target` edges are in.
    pub fn greedy(partition: &Partition, candidates: impl IntoIterator<Item = (usize, usize)>, target: usize) -> Self {
        let n = partition.order();
        let mut ds = DisjointSet::new(n);
        let mut edges = Vec::new();
        for (u, v) in candidates {
            if edges.len() >= target {
                break;
            }
            if u >= n || v >= n || partition.part_of(u) == partition.part_of(v) {
                continue;
            }
            if ds.union(u, v) {
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges.sort_unstable();
        Self { order: n, edges }
    }

    pub(crate) fn from_sorted_unchecked(order: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { order, edges }
    }

    /// Number of vertices of the host graph.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of components, isolated vertices included.
    pub fn num_components(&self) -> usize {
        self.order - self.edges.len()
    }
}

/// Checks that `edges` is a forest of cross-part edges in `partition`.
pub fn validate_forest(partition: &Partition, edges: &[(usize, usize)]) -> Result<SpanningForest, ModelError> {
    let n = partition.order();
    let mut ds = DisjointSet::new(n);
    let mut seen = HashSet::with_capacity(edges.len());
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        for vertex in [a, b] {
            if vertex >= n {
                return Err(ModelError::VertexOutOfRange { vertex, order: n });
            }
        }
        if partition.part_of(a) == partition.part_of(b) {
            return Err(ModelError::IntraPartEdge { u: a, v: b });
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(ModelError::DuplicateEdge { u: a, v: b });
        }
        if !ds.union(a, b) {
            return Err(ModelError::CycleDetected { u: a, v: b });
        }
        out.push(key);
    }
    out.sort_unstable();
    Ok(SpanningForest { order: n, edges: out })
}
