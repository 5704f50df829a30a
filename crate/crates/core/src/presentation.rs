//! Minimal projective presentations `P1 -> P0 -> M -> 0` and everything read
//! off them: the tau-rigidity test through surjectivity of
//! `Hom(P0, M) -> Hom(P1, M)`, Ext^1, projective dimension at most one,
//! g-vectors, and the Auslander-Reiten transpose.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::hom::hom_dim;
use crate::matrix::Matrix;
use crate::modules::{simple, ProjectiveMap, ProjectiveSum};
use crate::rep::{Morphism, Representation};

#[derive(Debug, Clone)]
pub struct ProjPresentation {
    pub p0: ProjectiveSum,
    pub p1: ProjectiveSum,
    /// `P0 -> M`
    pub d0: Morphism,
    /// `P1 -> P0`, by generator images
    pub d1: ProjectiveMap,
    /// `ker d0`, with its embedding into `P0` at each vertex
    pub syzygy: Representation,
    pub syzygy_basis: Vec<Matrix>,
}

impl ProjPresentation {
    /// Multiplicity of each `P(v)` in `P0`.
    pub fn p0_multiplicities(&self) -> Vec<usize> {
        multiplicities(&self.p0.tops, self.syzygy.dims().len())
    }

    pub fn p1_multiplicities(&self) -> Vec<usize> {
        multiplicities(&self.p1.tops, self.syzygy.dims().len())
    }

    /// `[P0] - [P1]`, indexed by vertex position.
    pub fn g_vector(&self) -> Vec<i64> {
        self.p0_multiplicities()
            .iter()
            .zip(self.p1_multiplicities())
            .map(|(&a, b)| a as i64 - b as i64)
            .collect()
    }
}

fn multiplicities(tops: &[usize], n: usize) -> Vec<usize> {
    let mut m = vec![0; n];
    for &t in tops {
        m[t] += 1;
    }
    m
}

/// Generators of `top M`: at each vertex, standard basis vectors completing
/// the radical, in index order.
fn top_generators(m: &Representation) -> Vec<(usize, usize)> {
    let mut gens = Vec::new();
    for (v, rad) in m.radical_basis().iter().enumerate() {
        for k in rad.complement_columns() {
            gens.push((v, k));
        }
    }
    gens
}

/// Projective cover `P -> M` sending the `g`-th generator to the chosen top vector.
fn projective_cover(m: &Representation) -> (ProjectiveSum, Morphism, Vec<(usize, usize)>) {
    let alg = m.algebra();
    let f = alg.field();
    let gens = top_generators(m);
    let p = ProjectiveSum::new(alg, gens.iter().map(|&(v, _)| v).collect());
    let n = alg.num_vertices();
    let d: Morphism = (0..n)
        .map(|w| {
            let mut mat = Matrix::zeros(f, m.dim_at(w), p.rep.dim_at(w));
            for (col, &(g, b)) in p.index[w].iter().enumerate() {
                let act = m.basis_matrix(b);
                let k = gens[g].1;
                for r in 0..m.dim_at(w) {
                    mat.set(r, col, act.get(r, k));
                }
            }
            mat
        })
        .collect();
    (p, d, gens)
}

pub fn min_proj_presentation(m: &Representation) -> ProjPresentation {
    let alg = m.algebra();
    let n = alg.num_vertices();
    let (p0, d0, _) = projective_cover(m);
    let syzygy_basis: Vec<Matrix> = (0..n)
        .map(|w| {
            if p0.rep.dim_at(w) == 0 {
                Matrix::zeros(alg.field(), 0, 0)
            } else {
                d0[w].nullspace()
            }
        })
        .collect();
    let syzygy = p0.rep.subrepresentation(&syzygy_basis);
    let kgens = top_generators(&syzygy);
    let p1 = ProjectiveSum::new(alg, kgens.iter().map(|&(v, _)| v).collect());
    let images = kgens
        .iter()
        .map(|&(w, k)| {
            let y = syzygy_basis[w].column(k);
            p0.split_vector(w, &y)
        })
        .collect();
    let d1 = ProjectiveMap {
        src: p1.tops.clone(),
        tgt: p0.tops.clone(),
        images,
    };
    ProjPresentation {
        p0,
        p1,
        d0,
        d1,
        syzygy,
        syzygy_basis,
    }
}

/// Matrix of `Hom(d1, X): Hom(P0, X) -> Hom(P1, X)` in the coordinates
/// `Hom(P(v), X) = X_v`.
pub fn d1_star(pres: &ProjPresentation, x: &Representation) -> Matrix {
    let alg = x.algebra();
    let f = alg.field();
    let col_off: Vec<usize> = pres
        .p0
        .tops
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += x.dim_at(v);
            Some(o)
        })
        .collect();
    let ncols: usize = pres.p0.tops.iter().map(|&v| x.dim_at(v)).sum();
    let nrows: usize = pres.p1.tops.iter().map(|&v| x.dim_at(v)).sum();
    let mut mat = Matrix::zeros(f, nrows, ncols);
    let mut row_off = 0;
    for (g, &vg) in pres.p1.tops.iter().enumerate() {
        for (c, elem) in pres.d1.images[g].iter().enumerate() {
            for &(b, coef) in elem {
                let act = x.basis_matrix(b).scale(coef);
                let cur = mat.block(row_off, col_off[c], act.rows(), act.cols());
                mat.set_block(row_off, col_off[c], &cur.add(&act));
            }
        }
        row_off += x.dim_at(vg);
    }
    mat
}

/// tau-rigidity through surjectivity of `Hom(d1, M)`.
pub fn is_tau_rigid(m: &Representation) -> bool {
    if m.is_zero() {
        return true;
    }
    let pres = min_proj_presentation(m);
    let mat = d1_star(&pres, m);
    mat.rank() == mat.rows()
}

/// `dim Ext^1(M, N) = dim Hom(K, N) - dim Hom(P0, N) + dim Hom(M, N)` from
/// `0 -> K -> P0 -> M -> 0`.
pub fn ext1(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same(n)?;
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    let pres = min_proj_presentation(m);
    ext1_with(&pres, m, n)
}

pub(crate) fn ext1_with(pres: &ProjPresentation, m: &Representation, n: &Representation) -> Result<usize> {
    let hom_p0: usize = pres.p0.tops.iter().map(|&v| n.dim_at(v)).sum();
    let k = hom_dim(&pres.syzygy, n)?;
    let h = hom_dim(m, n)?;
    Ok(k + h - hom_p0)
}

/// `pd M <= 1` iff `d1` is injective, i.e. `P1 -> K` is an isomorphism.
pub fn pd_le_1(m: &Representation) -> bool {
    if m.is_zero() {
        return true;
    }
    let pres = min_proj_presentation(m);
    pres.p1.rep.total_dim() == pres.syzygy.total_dim()
}

/// Classical tilting: every summand has `pd <= 1`, `Ext^1(T, T) = 0`, and
/// `T` has as many non-isomorphic indecomposable summands as vertices.
pub fn is_tilting(t: &Representation) -> Result<bool> {
    let summands = crate::decompose::basic_summands(t)?;
    if summands.len() != t.algebra().num_vertices() {
        return Ok(false);
    }
    if !summands.iter().all(pd_le_1) {
        return Ok(false);
    }
    Ok(ext1(t, t)? == 0)
}

pub fn is_projective(m: &Representation) -> bool {
    if m.is_zero() {
        return true;
    }
    min_proj_presentation(m).syzygy.is_zero()
}

/// `Ext^1(S(i), M) = 0` for every vertex.
pub fn is_injective(m: &Representation) -> bool {
    let alg = m.algebra();
    (0..alg.num_vertices()).all(|i| ext1(&simple(alg, i), m).expect("same algebra") == 0)
}

pub fn g_vector(m: &Representation) -> Vec<i64> {
    if m.is_zero() {
        return vec![0; m.dims().len()];
    }
    min_proj_presentation(m).g_vector()
}

/// Auslander-Reiten transpose `Tr M = coker Hom(d1, A)`, a module over the
/// opposite algebra.
pub fn transpose(m: &Representation) -> Representation {
    let op = m.algebra().opposite();
    if m.is_zero() {
        return Representation::zero(op);
    }
    let pres = min_proj_presentation(m);
    transpose_of(&pres, &op)
}

fn transpose_of(pres: &ProjPresentation, op: &Arc<Algebra>) -> Representation {
    let t = pres.d1.transpose();
    let from = ProjectiveSum::new(op, t.src.clone());
    let to = ProjectiveSum::new(op, t.tgt.clone());
    let phi = t.to_morphism(&from, &to);
    let image: Vec<Matrix> = phi
        .iter()
        .zip(to.rep.dims())
        .map(|(m, &d)| {
            if m.cols() == 0 {
                Matrix::zeros(op.field(), d, 0)
            } else {
                m.column_basis()
            }
        })
        .collect();
    to.rep.quotient(&image).0
}

/// Transpose of a module over `target`'s opposite, landing over `target`.
pub fn transpose_onto(m: &Representation, target: &Arc<Algebra>) -> Result<Representation> {
    transpose(m).rebind(target)
}

/// `tau M = D Tr M`.
pub fn auslander_reiten_translate(m: &Representation) -> Representation {
    transpose(m)
        .dual_onto(m.algebra())
        .expect("opposite of opposite")
}
