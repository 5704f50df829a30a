//! Projective, simple and injective modules, and direct sums of projectives
//! with morphisms given by generator images.

use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::rep::{Morphism, Representation};

/// `P = P(v_0) + ... + P(v_k)` with an explicit basis: at each vertex `w` the
/// basis is the list of `(summand, basis path)` with the path running from
/// `v_summand` to `w`.
#[derive(Debug, Clone)]
pub struct ProjectiveSum {
    pub tops: Vec<usize>,
    pub rep: Representation,
    pub index: Vec<Vec<(usize, usize)>>,
}

impl ProjectiveSum {
    pub fn new(algebra: &Arc<Algebra>, tops: Vec<usize>) -> Self {
        let f = algebra.field();
        let q = algebra.quiver();
        let n = q.num_vertices();
        let mut index: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (c, &v) in tops.iter().enumerate() {
            for b in algebra.paths_from(v) {
                index[algebra.basis()[b].target].push((c, b));
            }
        }
        let pos: Vec<std::collections::HashMap<(usize, usize), usize>> = index
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, &k)| (k, i)).collect())
            .collect();
        let dims: Vec<usize> = index.iter().map(|l| l.len()).collect();
        let mats = (0..q.arrows().len())
            .map(|a| {
                let (s, t) = q.arrow_ends(a);
                let ab = algebra.arrow_basis(a);
                let mut m = Matrix::zeros(f, dims[t], dims[s]);
                for (col, &(c, b)) in index[s].iter().enumerate() {
                    for &(nb, coef) in algebra.mul_basis(b, ab) {
                        m.set(pos[t][&(c, nb)], col, coef);
                    }
                }
                m
            })
            .collect();
        let rep = Representation::new_unchecked(algebra.clone(), dims, mats);
        ProjectiveSum { tops, rep, index }
    }

    /// Position of `(summand, basis path)` in the basis at the path's target.
    pub fn position(&self, summand: usize, b: usize) -> usize {
        let w = self.rep.algebra().basis()[b].target;
        self.index[w]
            .iter()
            .position(|&k| k == (summand, b))
            .expect("path not in projective")
    }

    /// Coordinates of an element of `P` at vertex `w` as `(summand, element)` pairs.
    pub fn split_vector(&self, w: usize, v: &[u32]) -> Vec<Element> {
        let mut out = vec![Vec::new(); self.tops.len()];
        for (i, &(c, b)) in self.index[w].iter().enumerate() {
            if v[i] != 0 {
                out[c].push((b, v[i]));
            }
        }
        for e in &mut out {
            e.sort_unstable();
        }
        out
    }
}

/// A morphism `P(src_0) + ... -> P(tgt_0) + ...` between sums of projectives.
/// `images[g][c]` lies in `e_{tgt_c} A e_{src_g}`: the `c`-component of the
/// image of the `g`-th generator.
#[derive(Debug, Clone)]
pub struct ProjectiveMap {
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub images: Vec<Vec<Element>>,
}

impl ProjectiveMap {
    /// The induced module homomorphism between the two projective sums.
    pub fn to_morphism(&self, from: &ProjectiveSum, to: &ProjectiveSum) -> Morphism {
        let alg = from.rep.algebra();
        let f = alg.field();
        let n = alg.num_vertices();
        let mut phi: Morphism = (0..n)
            .map(|w| Matrix::zeros(f, to.rep.dim_at(w), from.rep.dim_at(w)))
            .collect();
        for w in 0..n {
            for (col, &(g, b)) in from.index[w].iter().enumerate() {
                for (c, x) in self.images[g].iter().enumerate() {
                    for &(xb, xc) in x {
                        for &(pb, pc) in alg.mul_basis(xb, b) {
                            let row = to.position(c, pb);
                            let cur = phi[w].get(row, col);
                            phi[w].set(row, col, f.add(cur, f.mul(xc, pc)));
                        }
                    }
                }
            }
        }
        phi
    }

    /// The transposed map between projectives of the opposite algebra:
    /// `Hom(-, A)` applied to `self`.
    pub fn transpose(&self) -> ProjectiveMap {
        let images = (0..self.tgt.len())
            .map(|c| (0..self.src.len()).map(|g| self.images[g][c].clone()).collect())
            .collect();
        ProjectiveMap {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            images,
        }
    }
}

pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Representation {
    ProjectiveSum::new(algebra, vec![v]).rep
}

pub fn regular(algebra: &Arc<Algebra>) -> Representation {
    ProjectiveSum::new(algebra, (0..algebra.num_vertices()).collect()).rep
}

pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Representation {
    let f = algebra.field();
    let q = algebra.quiver();
    let mut dims = vec![0; q.num_vertices()];
    dims[v] = 1;
    let mats = (0..q.arrows().len())
        .map(|a| {
            let (s, t) = q.arrow_ends(a);
            Matrix::zeros(f, dims[t], dims[s])
        })
        .collect();
    Representation::new_unchecked(algebra.clone(), dims, mats)
}

/// `I(v) = D(e_v A^op)`.
pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Representation {
    let op = algebra.opposite();
    projective(&op, v)
        .dual_onto(algebra)
        .expect("opposite of opposite")
}

/// Vertex-id keyed constructors.
pub fn projective_at(algebra: &Arc<Algebra>, id: u32) -> Result<Representation> {
    Ok(projective(algebra, algebra.vertex_index(id)?))
}
pub fn simple_at(algebra: &Arc<Algebra>, id: u32) -> Result<Representation> {
    Ok(simple(algebra, algebra.vertex_index(id)?))
}
pub fn injective_at(algebra: &Arc<Algebra>, id: u32) -> Result<Representation> {
    Ok(injective(algebra, algebra.vertex_index(id)?))
}
