#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use tautilt::counting::{pair_profile, parse_profile, Profile};
use tautilt::decompose::is_isomorphic;
use tautilt::exchange::ExchangeQuiver;
use tautilt::mutation::mutate;
use tautilt::pair::{revalidate, SttPair};
use tautilt::quiver::Quiver;
use tautilt::Algebra;

pub fn alg(vertices: &[u32], arrows: &[(&str, u32, u32)], p: u32) -> Arc<Algebra> {
    let q = Quiver::from_arrows(vertices, arrows).unwrap();
    Arc::new(Algebra::build(q, vec![], p).unwrap())
}

pub fn kronecker(p: u32) -> Arc<Algebra> {
    alg(&[1, 2], &[("a", 1, 2), ("b", 1, 2)], p)
}

/// Nodes of the drawn exchange quiver of `4 -> 3 <- 5`, numbered from the
/// top, as summand profiles.
pub const EXPECTED_NODES: [(usize, &str); 14] = [
    (1, "3 + 4/3 + 5/3"),
    (2, "4,5/3 + 4/3 + 5/3"),
    (3, "3 + 5/3"),
    (4, "3 + 4/3"),
    (5, "4,5/3 + 5 + 5/3"),
    (6, "4,5/3 + 4/3 + 4"),
    (7, "4,5/3 + 5 + 4"),
    (8, "5 + 4"),
    (9, "5 + 5/3"),
    (10, "4/3 + 4"),
    (11, "5"),
    (12, "3"),
    (13, "4"),
    (14, "0"),
];

pub const EXPECTED_EDGES: [(usize, usize); 21] = [
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (5, 7), (5, 9), (6, 7), (6, 10), (3, 9), (3, 12),
    (4, 10), (4, 12), (7, 8), (9, 11), (10, 13), (8, 11), (8, 13), (11, 14), (12, 14), (13, 14),
];

/// Checks the enumerated quiver against the drawing; returns a description
/// of the first difference.
pub fn matches_expected_quiver(eq: &ExchangeQuiver) -> Result<(), String> {
    let by_profile: BTreeMap<Profile, usize> = EXPECTED_NODES
        .iter()
        .map(|&(i, s)| (parse_profile(s, 3).unwrap(), i))
        .collect();
    let mut label = BTreeMap::new();
    for (key, pair) in &eq.nodes {
        let prof = pair_profile(pair);
        let i = by_profile
            .get(&prof)
            .ok_or_else(|| format!("node {key} has no drawn counterpart"))?;
        if label.insert(key.clone(), *i).is_some() {
            return Err(format!("duplicate node {key}"));
        }
    }
    if label.len() != EXPECTED_NODES.len() {
        return Err(format!("{} nodes, drawing has {}", label.len(), EXPECTED_NODES.len()));
    }
    let found: BTreeSet<(usize, usize)> = eq
        .edges
        .iter()
        .map(|e| (label[&e.source], label[&e.target]))
        .collect();
    let drawn: BTreeSet<(usize, usize)> = EXPECTED_EDGES.iter().copied().collect();
    if found != drawn || eq.edges.len() != drawn.len() {
        return Err(format!("edges differ: found {found:?}"));
    }
    if label[&eq.root] != 1 || label[&eq.sink] != 14 {
        return Err("root or sink misplaced".into());
    }
    Ok(())
}

fn new_position(from: &SttPair, to: &SttPair) -> usize {
    for (i, g) in to.g_vectors().iter().enumerate() {
        if !from.g_vectors().contains(g) {
            return i;
        }
    }
    let k = to
        .killed()
        .iter()
        .find(|k| !from.killed().contains(k))
        .expect("mutation changes one position");
    to.summands().len() + to.killed().iter().position(|x| x == k).unwrap()
}

fn same_pair(a: &SttPair, b: &SttPair) -> bool {
    a.killed() == b.killed() && is_isomorphic(&a.module(), &b.module()).unwrap()
}

/// Revalidation, mutation involution at every position, key injectivity and
/// the degree count of every node.
pub fn check_properties(eq: &ExchangeQuiver) -> Result<(), String> {
    for (key, pair) in &eq.nodes {
        let n = pair.algebra().num_vertices();
        let again = revalidate(pair).map_err(|e| format!("{key}: {e}"))?;
        if again.key() != *key {
            return Err(format!("{key}: key changes on revalidation"));
        }
        for pos in 0..n {
            let next = mutate(pair, pos).map_err(|e| format!("{key} at {pos}: {e}"))?;
            let known = eq
                .nodes
                .get(&next.key())
                .ok_or_else(|| format!("{key} at {pos}: result outside the quiver"))?;
            if !same_pair(known, &next) {
                return Err(format!("{key} at {pos}: key collision"));
            }
            let back = mutate(&next, new_position(pair, &next)).map_err(|e| e.to_string())?;
            if back.key() != *key {
                return Err(format!("{key} at {pos}: mutation is not an involution"));
            }
        }
        if eq.in_degree(key) + eq.out_degree(key) != n {
            return Err(format!("{key}: degree differs from {n}"));
        }
    }
    if eq.in_degree(&eq.root) != 0 || eq.out_degree(&eq.sink) != 0 {
        return Err("root has incoming or sink has outgoing edges".into());
    }
    Ok(())
}
