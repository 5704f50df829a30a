//! JSON and DOT rendering of exchange quivers and count reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use tautilt::exchange::ExchangeQuiver;
use tautilt::pair::{PairKey, SttPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Labels {
    /// Sorted g-vectors and killed vertices.
    Gvec,
    /// Summand dimension vectors.
    Dims,
}

fn dims_label(pair: &SttPair) -> String {
    let ids = pair.algebra().vertex_ids();
    let mut parts: Vec<String> = pair
        .summands()
        .iter()
        .map(|s| {
            let v: Vec<String> = s
                .dims()
                .iter()
                .zip(ids)
                .filter(|(d, _)| **d > 0)
                .map(|(d, id)| if *d == 1 { id.to_string() } else { format!("{id}^{d}") })
                .collect();
            v.join(",")
        })
        .collect();
    parts.sort();
    let killed: Vec<String> = pair.killed().iter().map(|k| k.to_string()).collect();
    format!("[{}] | {{{}}}", parts.join(" ; "), killed.join(","))
}

pub fn label(pair: &SttPair, labels: Labels) -> String {
    match labels {
        Labels::Gvec => pair.key().to_string(),
        Labels::Dims => dims_label(pair),
    }
}

fn ids(eq: &ExchangeQuiver) -> BTreeMap<&PairKey, usize> {
    eq.nodes.keys().enumerate().map(|(i, k)| (k, i)).collect()
}

/// Graphviz digraph with nodes in canonical key order.
pub fn to_dot(eq: &ExchangeQuiver, labels: Labels) -> String {
    let ids = ids(eq);
    let mut out = String::from("digraph exchange {\n  node [shape=box];\n");
    for (key, pair) in &eq.nodes {
        let text = label(pair, labels).replace('"', "\\\"");
        out.push_str(&format!("  n{} [label=\"{}\"];\n", ids[key], text));
    }
    for e in &eq.edges {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            ids[&e.source], ids[&e.target], e.position
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    g_vectors: Vec<Vec<i64>>,
    killed: Vec<u32>,
    summand_dims: Vec<Vec<usize>>,
    tilting: bool,
    label: String,
}

pub fn node_list(eq: &ExchangeQuiver, labels: Labels) -> Value {
    let ids = ids(eq);
    let nodes: Vec<NodeJson> = eq
        .nodes
        .iter()
        .map(|(key, pair)| NodeJson {
            id: ids[key],
            g_vectors: key.g_vectors.clone(),
            killed: key.killed.clone(),
            summand_dims: pair.summand_dims(),
            tilting: pair.is_tilting(),
            label: label(pair, labels),
        })
        .collect();
    serde_json::to_value(nodes).expect("plain data")
}

pub fn edge_list(eq: &ExchangeQuiver) -> Value {
    let ids = ids(eq);
    Value::Array(
        eq.edges
            .iter()
            .map(|e| json!({"source": ids[&e.source], "target": ids[&e.target], "position": e.position}))
            .collect(),
    )
}
