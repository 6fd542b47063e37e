//! Independent ways of counting `τ_F`, used to check the closed forms.
//!
//! Two algebraic routes work on the contracted Laplacian (a cofactor, and
//! the linear coefficient of the characteristic polynomial). Two
//! enumerators walk edge subsets, one over the contracted multigraph and one
//! over the original graph with the forest preset. The enumerators refuse
//! instances above fixed size limits rather than sampling.

use num_traits::{Signed, Zero};

use crate::model::{ContractedGraph, DisjointSet, Partition, SpanningForest};
use crate::{BigInt, BigNat, BigRat, Error, IntMatrix, Result};

/// Largest contracted order accepted by [`brute_force_contracted`].
pub const MAX_CONTRACTED_ORDER: usize = 10;
/// Largest graph order accepted by [`brute_force_original`] and [`all_forests`].
pub const MAX_ORIGINAL_ORDER: usize = 8;

/// Checks symmetry, zero row sums and nonpositive off-diagonal entries.
pub fn validate_laplacian(l: &IntMatrix) -> Result<()> {
    let c = l.order()?;
    if !l.is_symmetric() {
        return Err(Error::MalformedLaplacian("not symmetric".into()));
    }
    for p in 0..c {
        if let Some(q) = (0..c).find(|&q| q != p && l[(p, q)].is_positive()) {
            return Err(Error::MalformedLaplacian(format!(
                "positive off-diagonal entry at ({p}, {q})"
            )));
        }
        let sum: BigInt = l.row(p).iter().sum();
        if !sum.is_zero() {
            return Err(Error::MalformedLaplacian(format!("row {p} sums to {sum}")));
        }
    }
    Ok(())
}

/// The `(1, 1)` cofactor of a Laplacian. With `check_adjugate`, the whole
/// adjugate is formed and required to equal `τ·J`.
pub fn matrix_tree_count(l: &IntMatrix, check_adjugate: bool) -> Result<BigNat> {
    validate_laplacian(l)?;
    let c = l.order()?;
    if c == 0 {
        return Err(Error::MalformedLaplacian("empty matrix".into()));
    }
    let tau = l.cofactor_bareiss(0, 0)?;
    if check_adjugate {
        let expected = IntMatrix::ones(c).scale(&tau).to_rational();
        if l.to_rational().adjugate()? != expected {
            return Err(Error::InvariantViolation(format!(
                "adjugate of the Laplacian is not {tau}·J"
            )));
        }
    }
    tau.to_biguint()
        .filter(|t| !t.is_zero())
        .ok_or(Error::NonPositiveResult {
            what: "Matrix-Tree count",
            value: tau.to_string(),
        })
}

/// `((−1)^{c−1} / c) · a_1`, where `a_1` is the linear coefficient of
/// `det(xI − L)`.
pub fn charpoly_derivative_count(l: &IntMatrix, c: usize) -> Result<BigNat> {
    if l.order()? != c {
        return Err(Error::InvalidArgument(format!(
            "Laplacian has order {}, expected {c}",
            l.rows()
        )));
    }
    if c == 0 {
        return Err(Error::MalformedLaplacian("empty matrix".into()));
    }
    let a1 = l.char_poly()?.coefficient(1);
    let signed = if c % 2 == 1 { a1 } else { -a1 };
    let value = BigRat::new(signed, BigInt::from(c));
    if !value.is_integer() {
        return Err(Error::NonIntegerResult {
            what: "characteristic-polynomial count",
            value: value.to_string(),
        });
    }
    let tau = value
        .to_integer()
        .to_biguint()
        .filter(|t| !t.is_zero())
        .ok_or(Error::NonPositiveResult {
            what: "characteristic-polynomial count",
            value: value.to_string(),
        })?;
    let cofactor = l.cofactor_bareiss(0, 0)?;
    if BigInt::from(tau.clone()) != cofactor {
        return Err(Error::InvariantViolation(format!(
            "linear coefficient gives {tau}, the (1,1) cofactor gives {cofactor}"
        )));
    }
    Ok(tau)
}

/// Sum over all spanning trees of the multigraph of the product of edge
/// multiplicities. `ds` holds components already joined; `needed` edges
/// remain to be chosen from `edges[start..]`.
fn weighted_tree_sum(edges: &[(usize, usize, u64)], start: usize, needed: usize, ds: &DisjointSet) -> u128 {
    if needed == 0 {
        return 1;
    }
    let mut total = 0u128;
    for k in start..edges.len() {
        if edges.len() - k < needed {
            break;
        }
        let (u, v, w) = edges[k];
        let mut next = ds.clone();
        if next.union(u, v) {
            total += u128::from(w) * weighted_tree_sum(edges, k + 1, needed - 1, &next);
        }
    }
    total
}

/// Enumerates `(c − 1)`-subsets of the contracted graph's support edges and
/// sums the multiplicity products over those forming a spanning tree.
pub fn brute_force_contracted(g: &ContractedGraph) -> Result<BigNat> {
    let c = g.order();
    if c > MAX_CONTRACTED_ORDER {
        return Err(Error::TooLarge {
            what: "contracted order",
            limit: MAX_CONTRACTED_ORDER,
            actual: c,
        });
    }
    let edges = g.support_edges();
    Ok(BigNat::from(weighted_tree_sum(
        &edges,
        0,
        c.saturating_sub(1),
        &DisjointSet::new(c),
    )))
}

/// Counts spanning trees of `K_{n_1,…,n_s}` containing `forest` by enumerating
/// completions among the remaining graph edges.
pub fn brute_force_original(partition: &Partition, forest: &SpanningForest) -> Result<BigNat> {
    let n = partition.order();
    if n > MAX_ORIGINAL_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            limit: MAX_ORIGINAL_ORDER,
            actual: n,
        });
    }
    let mut ds = DisjointSet::new(n);
    for &(u, v) in forest.edges() {
        ds.union(u, v);
    }
    let rest: Vec<(usize, usize, u64)> = partition
        .cross_edges()
        .into_iter()
        .filter(|e| forest.edges().binary_search(e).is_err())
        .map(|(u, v)| (u, v, 1))
        .collect();
    let needed = n - 1 - forest.len();
    Ok(BigNat::from(weighted_tree_sum(&rest, 0, needed, &ds)))
}

/// Every spanning forest of `K_{n_1,…,n_s}` (every acyclic set of graph
/// edges), in lexicographic order of sorted edge lists.
pub fn all_forests(partition: &Partition) -> Result<Forests> {
    let n = partition.order();
    if n > MAX_ORIGINAL_ORDER {
        return Err(Error::TooLarge {
            what: "graph order",
            limit: MAX_ORIGINAL_ORDER,
            actual: n,
        });
    }
    Ok(Forests {
        order: n,
        edges: partition.cross_edges(),
        stack: Vec::new(),
        current: Vec::new(),
        started: false,
    })
}

/// Iterator returned by [`all_forests`].
pub struct Forests {
    order: usize,
    edges: Vec<(usize, usize)>,
    stack: Vec<(usize, DisjointSet)>,
    current: Vec<(usize, usize)>,
    started: bool,
}

impl Iterator for Forests {
    type Item = SpanningForest;

    fn next(&mut self) -> Option<SpanningForest> {
        if !self.started {
            self.started = true;
            self.stack.push((0, DisjointSet::new(self.order)));
            return Some(SpanningForest::from_sorted_unchecked(self.order, Vec::new()));
        }
        loop {
            let (next, ds) = self.stack.last_mut()?;
            while *next < self.edges.len() {
                let k = *next;
                *next += 1;
                let (u, v) = self.edges[k];
                let mut joined = ds.clone();
                if joined.union(u, v) {
                    self.current.push((u, v));
                    self.stack.push((k + 1, joined));
                    return Some(SpanningForest::from_sorted_unchecked(self.order, self.current.clone()));
                }
            }
            self.stack.pop();
            self.current.pop();
        }
    }
}

/// Sum of `main_count({e})` over every single graph edge `e` must equal
/// `(n − 1) τ(K)`: each spanning tree contains `n − 1` edges.
pub fn single_edge_sum(partition: &Partition) -> Result<BigNat> {
    let mut total = BigNat::zero();
    for e in partition.cross_edges() {
        let forest = crate::model::validate_forest(partition, &[e])?;
        let profile = crate::model::decompose(partition, &forest);
        total += crate::closed_forms::main_count(&profile, None)?.value;
    }
    Ok(total)
}
