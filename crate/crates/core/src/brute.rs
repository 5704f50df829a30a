//! Exhaustive oracle for small algebras: enumerate representations with
//! entries in {0, 1} up to a dimension cap, keep indecomposables up to
//! isomorphism, and assemble every support τ-tilting pair from them.
//!
//! For algebras whose indecomposables are all realised by 0/1 matrices
//! (thin modules, the Dynkin cases used here) the enumeration is complete.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::{indecomposable_summands, isomorphic_indecomposables};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pair::SttPair;
use crate::presentation::is_tau_rigid;
use crate::rep::Representation;

pub const MAX_VERTICES: usize = 4;
/// Largest number of 0/1 arrow entries tried for a single dimension vector.
pub const MAX_ENTRIES: usize = 20;

fn dims_up_to(cap: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &c in cap {
        out = out
            .into_iter()
            .flat_map(|d| {
                (0..=c).map(move |x| {
                    let mut e = d.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out.retain(|d| d.iter().any(|&x| x > 0));
    out
}

fn guard(algebra: &Algebra, cap: &[usize]) -> Result<()> {
    let n = algebra.num_vertices();
    if n > MAX_VERTICES {
        return Err(Error::GuardRail(format!(
            "brute force limited to {MAX_VERTICES} vertices, got {n}"
        )));
    }
    if cap.len() != n {
        return Err(Error::GuardRail(format!(
            "dimension cap has {} entries for {n} vertices",
            cap.len()
        )));
    }
    let q = algebra.quiver();
    let entries: usize = (0..q.arrows().len())
        .map(|a| {
            let (s, t) = q.arrow_ends(a);
            cap[s] * cap[t]
        })
        .sum();
    if entries > MAX_ENTRIES {
        return Err(Error::GuardRail(format!(
            "{entries} matrix entries exceed the limit of {MAX_ENTRIES}"
        )));
    }
    Ok(())
}

/// All indecomposable representations with dimension vector bounded by
/// `cap`, one per isomorphism class, among those with 0/1 entries.
pub fn indecomposables(algebra: &Arc<Algebra>, cap: &[usize]) -> Result<Vec<Representation>> {
    guard(algebra, cap)?;
    let f = algebra.field();
    let q = algebra.quiver();
    let mut found: Vec<Representation> = Vec::new();
    for dims in dims_up_to(cap) {
        let shapes: Vec<(usize, usize)> = (0..q.arrows().len())
            .map(|a| {
                let (s, t) = q.arrow_ends(a);
                (dims[t], dims[s])
            })
            .collect();
        let total: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let first_new = found.len();
        for bits in 0u64..(1u64 << total) {
            let mut offset = 0;
            let mats: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let data = (0..r * c)
                        .map(|i| ((bits >> (offset + i)) & 1) as u32)
                        .collect();
                    offset += r * c;
                    Matrix::from_rows(f, r, c, data)
                })
                .collect();
            let Ok(m) = Representation::new(algebra.clone(), dims.clone(), mats) else {
                continue;
            };
            if indecomposable_summands(&m)?.len() != 1 {
                continue;
            }
            let mut known = false;
            for x in &found[first_new..] {
                if isomorphic_indecomposables(x, &m)? {
                    known = true;
                    break;
                }
            }
            if !known {
                found.push(m);
            }
        }
    }
    Ok(found)
}

/// Every support τ-tilting pair whose summands have dimension vectors
/// bounded by `cap`.
pub fn brute_force_stt(algebra: &Arc<Algebra>, cap: &[usize]) -> Result<Vec<SttPair>> {
    let rigid: Vec<Representation> = indecomposables(algebra, cap)?
        .into_iter()
        .filter(is_tau_rigid)
        .collect();
    let r = rigid.len();
    let mut compatible = vec![vec![false; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let ok = is_tau_rigid(&rigid[i].direct_sum(&rigid[j])?);
            compatible[i][j] = ok;
            compatible[j][i] = ok;
        }
    }
    let n = algebra.num_vertices();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cliques(&compatible, 0, n, &mut chosen, &mut |set| {
        let support: BTreeSet<usize> = (0..n)
            .filter(|&v| set.iter().any(|&i| rigid[i].dim_at(v) > 0))
            .collect();
        let free: Vec<usize> = (0..n).filter(|v| !support.contains(v)).collect();
        let need = n - set.len();
        if free.len() < need {
            return;
        }
        for killed in subsets(&free, need) {
            let ids = killed.iter().map(|&v| algebra.vertex_ids()[v]).collect();
            let summands = set.iter().map(|&i| rigid[i].clone()).collect();
            out.push(SttPair::from_parts(algebra.clone(), summands, ids));
        }
    });
    out.sort_by_key(|p| p.key());
    Ok(out)
}

fn cliques(
    adj: &[Vec<bool>],
    start: usize,
    max: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    visit(chosen);
    if chosen.len() == max {
        return;
    }
    for i in start..adj.len() {
        if chosen.iter().all(|&j| adj[i][j]) {
            chosen.push(i);
            cliques(adj, i + 1, max, chosen, visit);
            chosen.pop();
        }
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}
