//! Mutation of support τ-tilting pairs. Left mutation replaces a summand `X`
//! by the cokernel of its minimal left `add U`-approximation; right mutation
//! is left mutation transported through the duality
//! `(M, P) -> (Tr M_np + P*, M_pr*)` with the opposite algebra.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::{basic_summands, isomorphic_indecomposables, semisimple_quotient_dim};
use crate::error::{Error, Result};
use crate::hom::{flatten, hom};
use crate::matrix::Matrix;
use crate::modules::projective;
use crate::pair::{Slot, SttPair};
use crate::presentation::{g_vector, is_projective, transpose_onto};
use crate::rep::{compose, Morphism, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The result is smaller: `Fac` shrinks.
    Left,
    Right,
}

/// Whether `X` is a quotient of a module in `add(us)`.
pub fn in_fac(x: &Representation, us: &[&Representation]) -> Result<bool> {
    let f = x.algebra().field();
    let n = x.dims().len();
    let mut cols: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    for u in us {
        for phi in hom(u, x)?.basis {
            for (v, m) in phi.into_iter().enumerate() {
                cols[v].push(m);
            }
        }
    }
    for v in 0..n {
        let d = x.dim_at(v);
        if d == 0 {
            continue;
        }
        let mut acc = Matrix::zeros(f, d, 0);
        for m in &cols[v] {
            acc = acc.hstack(m);
        }
        if acc.rank() < d {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the radical morphisms `U_k -> U_j` between indecomposables.
fn radical_morphisms(uk: &Representation, uj: &Representation, same: bool) -> Result<Vec<Morphism>> {
    let basis = hom(uk, uj)?.basis;
    if !same || basis.is_empty() {
        return Ok(basis);
    }
    // rad End(U) is the kernel of the trace form.
    let f = uk.algebra().field();
    let d = basis.len();
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let t = compose(&basis[i], &basis[j])
                .iter()
                .filter(|m| m.rows() > 0)
                .fold(0, |acc, m| f.add(acc, m.trace()));
            g.set(i, j, t);
        }
    }
    debug_assert_eq!(semisimple_quotient_dim(&basis), g.rank());
    let ns = g.nullspace();
    Ok((0..ns.cols())
        .map(|c| {
            let coeffs = ns.column(c);
            let mut acc: Morphism = basis[0]
                .iter()
                .map(|m| Matrix::zeros(f, m.rows(), m.cols()))
                .collect();
            for (b, &k) in basis.iter().zip(&coeffs) {
                if k != 0 {
                    for (a, m) in acc.iter_mut().zip(b) {
                        a.add_scaled(k, m);
                    }
                }
            }
            acc
        })
        .collect())
}

/// Minimal left `add(us)`-approximation of `X` as a list of
/// `(target index, map)` components.
pub fn minimal_left_approximation(
    x: &Representation,
    us: &[&Representation],
) -> Result<Vec<(usize, Morphism)>> {
    let f = x.algebra().field();
    let homs: Vec<Vec<Morphism>> = us
        .iter()
        .map(|u| hom(x, u).map(|h| h.basis))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for j in 0..us.len() {
        if homs[j].is_empty() {
            continue;
        }
        let width = flatten(&homs[j][0]).len();
        let mut span: Vec<Vec<u32>> = Vec::new();
        for k in 0..us.len() {
            if homs[k].is_empty() {
                continue;
            }
            for psi in radical_morphisms(us[k], us[j], k == j)? {
                for phi in &homs[k] {
                    span.push(flatten(&compose(&psi, phi)));
                }
            }
        }
        let mut rank = if span.is_empty() {
            0
        } else {
            Matrix::from_columns(f, width, &span).rank()
        };
        for phi in &homs[j] {
            span.push(flatten(phi));
            let r = Matrix::from_columns(f, width, &span).rank();
            if r > rank {
                rank = r;
                out.push((j, phi.clone()));
            } else {
                span.pop();
            }
        }
    }
    Ok(out)
}

/// Left mutation at summand `k`, or `None` when `X` lies in `Fac U` and only
/// the right mutation exists.
pub fn left_mutation(pair: &SttPair, k: usize) -> Result<Option<SttPair>> {
    let summands = pair.summands();
    if k >= summands.len() {
        return Err(Error::InvalidPosition(k));
    }
    let alg = pair.algebra();
    let x = &summands[k];
    let us: Vec<&Representation> = summands
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, s)| s)
        .collect();
    if in_fac(x, &us)? {
        return Ok(None);
    }
    let approx = minimal_left_approximation(x, &us)?;
    let target = Representation::direct_sum_all(alg, approx.iter().map(|(j, _)| us[*j]))?;
    let f = alg.field();
    // Stack the components into X -> U'.
    let image: Vec<Matrix> = (0..x.dims().len())
        .map(|v| {
            let mut m = Matrix::zeros(f, 0, x.dim_at(v));
            for (_, phi) in &approx {
                m = m.vstack(&phi[v]);
            }
            if m.cols() == 0 {
                Matrix::zeros(f, target.dim_at(v), 0)
            } else {
                m.column_basis()
            }
        })
        .collect();
    let (y, _) = target.quotient(&image);
    let mut fresh = Vec::new();
    for s in basic_summands(&y)? {
        let mut old = false;
        for u in &us {
            if isomorphic_indecomposables(u, &s)? {
                old = true;
                break;
            }
        }
        if !old {
            fresh.push(s);
        }
    }
    let rest: Vec<Representation> = us.iter().map(|u| (*u).clone()).collect();
    match fresh.len() {
        1 => {
            let mut new = rest;
            new.push(fresh.pop().unwrap());
            Ok(Some(SttPair::from_parts(alg.clone(), new, pair.killed().clone())))
        }
        0 => {
            let vertex = free_vertex(alg, &rest, pair.killed())?;
            let mut killed = pair.killed().clone();
            killed.insert(vertex);
            Ok(Some(SttPair::from_parts(alg.clone(), rest, killed)))
        }
        n => Err(Error::NonUniqueCompletion(format!(
            "cokernel has {n} new indecomposable summands"
        ))),
    }
}

/// The unique vertex outside the support of `rest` and outside `killed`.
fn free_vertex(alg: &Algebra, rest: &[Representation], killed: &BTreeSet<u32>) -> Result<u32> {
    let candidates: Vec<u32> = (0..alg.num_vertices())
        .filter(|&v| rest.iter().all(|r| r.dim_at(v) == 0))
        .map(|v| alg.vertex_ids()[v])
        .filter(|id| !killed.contains(id))
        .collect();
    match candidates.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::NonUniqueCompletion(format!(
            "expected one vertex to kill, found {candidates:?}"
        ))),
    }
}

/// Top vertex (position) of an indecomposable projective.
fn projective_top(m: &Representation) -> usize {
    m.top_dims()
        .iter()
        .position(|&d| d == 1)
        .expect("nonzero projective has a top")
}

/// The duality to pairs over `target`, which must be the opposite algebra.
/// Returns the new pair and, for each old slot position, the new slot.
pub fn dagger(pair: &SttPair, target: &Arc<Algebra>) -> Result<(SttPair, Vec<Slot>)> {
    let src = pair.algebra();
    enum Item {
        Module(Vec<i64>),
        Killed(u32),
    }
    let mut items = Vec::new();
    let mut modules = Vec::new();
    let mut killed = BTreeSet::new();
    for s in pair.summands() {
        if is_projective(s) {
            let id = src.vertex_ids()[projective_top(s)];
            killed.insert(id);
            items.push(Item::Killed(id));
        } else {
            let t = transpose_onto(s, target)?;
            items.push(Item::Module(g_vector(&t)));
            modules.push(t);
        }
    }
    for &k in pair.killed() {
        let p = projective(target, target.vertex_index(k)?);
        items.push(Item::Module(g_vector(&p)));
        modules.push(p);
    }
    let new = SttPair::from_parts(target.clone(), modules, killed);
    let map = items
        .into_iter()
        .map(|it| match it {
            Item::Killed(id) => Slot::Killed(id),
            Item::Module(g) => Slot::Summand(
                new.g_vectors()
                    .iter()
                    .position(|h| *h == g)
                    .expect("transposed summand present"),
            ),
        })
        .collect();
    Ok((new, map))
}

fn right_mutation(pair: &SttPair, position: usize) -> Result<SttPair> {
    let alg = pair.algebra();
    let op = alg.opposite();
    let (dual, map) = dagger(pair, &op)?;
    let k = match map[position] {
        Slot::Summand(k) => k,
        Slot::Killed(_) => {
            return Err(Error::NonUniqueCompletion(
                "dual position is a killed vertex".into(),
            ))
        }
    };
    let mutated = left_mutation(&dual, k)?.ok_or_else(|| {
        Error::NonUniqueCompletion("neither left nor right mutation applies".into())
    })?;
    Ok(dagger(&mutated, alg)?.0)
}

/// Mutation at a flat position (see [`SttPair::slots`]); also reports
/// whether it went down (left) or up (right).
pub fn mutate_with_direction(pair: &SttPair, position: usize) -> Result<(SttPair, Direction)> {
    match pair.slot(position)? {
        Slot::Summand(k) => match left_mutation(pair, k)? {
            Some(p) => Ok((p, Direction::Left)),
            None => Ok((right_mutation(pair, position)?, Direction::Right)),
        },
        Slot::Killed(_) => Ok((right_mutation(pair, position)?, Direction::Right)),
    }
}

pub fn mutate(pair: &SttPair, position: usize) -> Result<SttPair> {
    Ok(mutate_with_direction(pair, position)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{regular, simple};
    use crate::pair::validate_pair;
    use crate::quiver::Quiver;

    fn converging() -> Arc<Algebra> {
        let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)]).unwrap();
        Arc::new(Algebra::build(q, vec![], 32003).unwrap())
    }

    #[test]
    fn top_node_at_simple_gives_injective() {
        let a = converging();
        let top = validate_pair(&regular(&a), &BTreeSet::new()).unwrap();
        let pos = top
            .summands()
            .iter()
            .position(|s| s.dims() == [1, 0, 0])
            .unwrap();
        let (next, dir) = mutate_with_direction(&top, pos).unwrap();
        assert_eq!(dir, Direction::Left);
        let mut dims = next.summand_dims();
        dims.sort();
        assert_eq!(dims, vec![vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 1]]);
        let back_pos = next
            .summands()
            .iter()
            .position(|s| s.dims() == [1, 1, 1])
            .unwrap();
        let (back, dir) = mutate_with_direction(&next, back_pos).unwrap();
        assert_eq!(dir, Direction::Right);
        assert_eq!(back.key(), top.key());
    }

    #[test]
    fn one_vertex_algebra() {
        let q = Quiver::new(vec![1], vec![]).unwrap();
        let k = Arc::new(Algebra::build(q, vec![], 32003).unwrap());
        let top = validate_pair(&simple(&k, 0), &BTreeSet::new()).unwrap();
        let bottom = mutate(&top, 0).unwrap();
        assert!(bottom.summands().is_empty());
        assert_eq!(bottom.killed(), &BTreeSet::from([1]));
        assert_eq!(mutate(&bottom, 0).unwrap().key(), top.key());
        assert_eq!(mutate(&top, 1).unwrap_err(), Error::InvalidPosition(1));
    }
}
