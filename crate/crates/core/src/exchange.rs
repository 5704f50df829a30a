//! Breadth-first enumeration of the exchange quiver of support τ-tilting
//! pairs, starting from `(A, 0)` and following left mutations.
//!
//! Every pair other than the top has a right mutation, so following those
//! upwards ends at `(A, 0)`; reading the chain backwards shows every pair and
//! every Hasse arrow is reached by left mutations alone.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modules::regular;
use crate::mutation::left_mutation;
use crate::pair::{PairKey, SttPair};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: PairKey,
    pub target: PairKey,
    /// Summand position in the source pair that was exchanged.
    pub position: usize,
}

#[derive(Debug, Clone)]
pub struct ExchangeQuiver {
    pub nodes: BTreeMap<PairKey, SttPair>,
    /// Left mutations, sorted.
    pub edges: Vec<Edge>,
    pub root: PairKey,
    pub sink: PairKey,
}

impl ExchangeQuiver {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out_degree(&self, key: &PairKey) -> usize {
        self.edges.iter().filter(|e| &e.source == key).count()
    }

    pub fn in_degree(&self, key: &PairKey) -> usize {
        self.edges.iter().filter(|e| &e.target == key).count()
    }

    /// Pairs whose module part is tilting.
    pub fn tilting_nodes(&self) -> Vec<&SttPair> {
        self.nodes.values().filter(|p| p.is_tilting()).collect()
    }
}

#[derive(Debug, Clone)]
pub struct ExchangeOptions {
    pub budget: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for ExchangeOptions {
    fn default() -> Self {
        ExchangeOptions {
            budget: DEFAULT_BUDGET,
            threads: None,
        }
    }
}

pub fn top_pair(algebra: &Arc<Algebra>) -> Result<SttPair> {
    let summands = crate::decompose::basic_summands(&regular(algebra))?;
    Ok(SttPair::from_parts(algebra.clone(), summands, BTreeSet::new()))
}

fn bottom_key(algebra: &Algebra) -> PairKey {
    PairKey {
        g_vectors: vec![],
        killed: algebra.vertex_ids().to_vec(),
    }
}

/// Left mutations of one node, tagged with the mutated position.
pub type Expansion = Vec<(usize, SttPair)>;

fn expand(pair: &SttPair) -> Result<Expansion> {
    let mut out = Vec::new();
    for k in 0..pair.summands().len() {
        if let Some(next) = left_mutation(pair, k)? {
            out.push((k, next));
        }
    }
    Ok(out)
}

pub fn expand_frontier_sequential(frontier: &[SttPair]) -> Result<Vec<Expansion>> {
    frontier.iter().map(expand).collect()
}

#[cfg(feature = "parallel")]
pub fn expand_frontier_parallel(frontier: &[SttPair]) -> Result<Vec<Expansion>> {
    use rayon::prelude::*;
    frontier.par_iter().map(expand).collect()
}

/// Expands every node of a frontier, in input order.
pub fn expand_frontier(frontier: &[SttPair]) -> Result<Vec<Expansion>> {
    #[cfg(feature = "parallel")]
    return expand_frontier_parallel(frontier);
    #[cfg(not(feature = "parallel"))]
    return expand_frontier_sequential(frontier);
}

/// Level-synchronous BFS: each frontier is expanded (in parallel when the
/// `parallel` feature is on) and merged sequentially in frontier order, so
/// the result does not depend on the number of threads.
fn bfs(algebra: &Arc<Algebra>, budget: usize) -> Result<ExchangeQuiver> {
    let top = top_pair(algebra)?;
    let root = top.key();
    let mut nodes = BTreeMap::new();
    let mut seen: HashSet<PairKey> = HashSet::new();
    let mut edges = Vec::new();
    seen.insert(root.clone());
    nodes.insert(root.clone(), top.clone());
    if nodes.len() > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut frontier = vec![top];
    while !frontier.is_empty() {
        let expansions = expand_frontier(&frontier)?;
        let mut next = Vec::new();
        for (pair, children) in frontier.iter().zip(expansions) {
            let source = pair.key();
            for (position, child) in children {
                let target = child.key();
                edges.push(Edge {
                    source: source.clone(),
                    target: target.clone(),
                    position,
                });
                if seen.insert(target.clone()) {
                    nodes.insert(target, child.clone());
                    if nodes.len() > budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    edges.sort();
    Ok(ExchangeQuiver {
        nodes,
        edges,
        root,
        sink: bottom_key(algebra),
    })
}

pub fn exchange_quiver(algebra: &Arc<Algebra>, budget: usize) -> Result<ExchangeQuiver> {
    bfs(algebra, budget)
}

pub fn exchange_quiver_with(
    algebra: &Arc<Algebra>,
    options: &ExchangeOptions,
) -> Result<ExchangeQuiver> {
    #[cfg(feature = "parallel")]
    if let Some(t) = options.threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::GuardRail(e.to_string()))?;
        return pool.install(|| bfs(algebra, options.budget));
    }
    bfs(algebra, options.budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn converging_a3_quiver() {
        let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)]).unwrap();
        let a = Arc::new(Algebra::build(q, vec![], 32003).unwrap());
        let eq = exchange_quiver(&a, DEFAULT_BUDGET).unwrap();
        assert_eq!(eq.node_count(), 14);
        assert_eq!(eq.edge_count(), 21);
        assert_eq!(eq.in_degree(&eq.root), 0);
        assert_eq!(eq.out_degree(&eq.sink), 0);
        for k in eq.nodes.keys() {
            assert_eq!(eq.in_degree(k) + eq.out_degree(k), 3);
        }
    }

    #[test]
    fn semisimple_and_budget() {
        let a = Arc::new(Algebra::semisimple(3, 32003).unwrap());
        assert_eq!(exchange_quiver(&a, 100).unwrap().node_count(), 8);
        assert_eq!(exchange_quiver(&a, 5).unwrap_err(), Error::BudgetExceeded(5));
    }

    #[test]
    fn kronecker_exceeds_budget() {
        let q = Quiver::from_arrows(&[1, 2], &[("a", 1, 2), ("b", 1, 2)]).unwrap();
        let a = Arc::new(Algebra::build_with(q, vec![], 32003, Default::default()).unwrap());
        assert_eq!(exchange_quiver(&a, 30).unwrap_err(), Error::BudgetExceeded(30));
    }
}
