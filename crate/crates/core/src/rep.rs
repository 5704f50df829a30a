//! Representations (right modules) of a bound quiver algebra.
//!
//! An arrow `a: i -> j` acts by a `dims[j] x dims[i]` matrix; a path in travel
//! order `x1 x2 ... xk` acts by `M[xk] ... M[x2] M[x1]`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims_by_id())
            .field("mats", &self.mats)
            .finish()
    }
}

/// A module homomorphism: one matrix per vertex, `dims_target[v] x dims_source[v]`.
pub type Morphism = Vec<Matrix>;

impl Representation {
    /// Validated constructor: shapes must match the quiver and every relation
    /// must evaluate to zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || mats.len() != q.arrows().len() {
            return Err(Error::ShapeMismatch);
        }
        for (a, m) in mats.iter().enumerate() {
            let (s, t) = q.arrow_ends(a);
            if m.rows() != dims[t] || m.cols() != dims[s] || m.field() != algebra.field() {
                return Err(Error::ShapeMismatch);
            }
        }
        let rep = Representation {
            algebra,
            dims,
            mats,
        };
        if !rep.satisfies_relations() {
            return Err(Error::RelationViolated);
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Self {
        let rep = Representation {
            algebra,
            dims,
            mats,
        };
        debug_assert!(rep.satisfies_relations());
        rep
    }

    /// Builds a representation from signed entries per arrow (row-major),
    /// dimensions keyed by vertex position.
    pub fn from_entries(algebra: Arc<Algebra>, dims: Vec<usize>, entries: &[Vec<i64>]) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || entries.len() != q.arrows().len() {
            return Err(Error::ShapeMismatch);
        }
        let f = algebra.field();
        let mut mats = Vec::new();
        for (a, e) in entries.iter().enumerate() {
            let (s, t) = q.arrow_ends(a);
            if e.len() != dims[s] * dims[t] {
                return Err(Error::ShapeMismatch);
            }
            mats.push(Matrix::from_i64(f, dims[t], dims[s], e));
        }
        Self::new(algebra, dims, mats)
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let q = algebra.quiver();
        let mats = (0..q.arrows().len())
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        let n = q.num_vertices();
        Representation {
            algebra,
            dims: vec![0; n],
            mats,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }
    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.mats[a]
    }

    /// `(vertex id, dimension)` pairs for the support.
    pub fn dims_by_id(&self) -> Vec<(u32, usize)> {
        self.algebra
            .vertex_ids()
            .iter()
            .zip(&self.dims)
            .filter(|(_, &d)| d > 0)
            .map(|(&v, &d)| (v, d))
            .collect()
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.fingerprint() == other.algebra.fingerprint()
    }

    pub(crate) fn check_same(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Reattaches to a structurally identical algebra handle.
    pub fn rebind(&self, algebra: &Arc<Algebra>) -> Result<Self> {
        if algebra.fingerprint() != self.algebra.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            mats: self.mats.clone(),
        })
    }

    /// Matrix by which a travel-order walk starting at vertex `start` acts.
    pub fn walk_matrix(&self, start: usize, walk: &[usize]) -> Matrix {
        let f = self.algebra.field();
        let mut m = Matrix::identity(f, self.dims[start]);
        for &a in walk {
            m = self.mats[a].mul(&m);
        }
        m
    }

    /// Matrix of basis element `b` acting from `dims[source] ` to `dims[target]`.
    pub fn basis_matrix(&self, b: usize) -> Matrix {
        let bp = &self.algebra.basis()[b];
        self.walk_matrix(bp.source, &bp.arrows)
    }

    fn satisfies_relations(&self) -> bool {
        let f = self.algebra.field();
        for rel in self.algebra.resolved_relations() {
            let mut acc = Matrix::zeros(f, self.dims[rel.target], self.dims[rel.source]);
            for (c, walk) in &rel.terms {
                acc.add_scaled(f.from_i64(*c), &self.walk_matrix(rel.source, walk));
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Radical `sum of images of arrows` at each vertex, as column-basis matrices.
    pub fn radical_basis(&self) -> Vec<Matrix> {
        let f = self.algebra.field();
        let q = self.algebra.quiver();
        (0..q.num_vertices())
            .map(|v| {
                let mut span = Matrix::zeros(f, self.dims[v], 0);
                for a in 0..q.arrows().len() {
                    if q.arrow_ends(a).1 == v {
                        span = span.hstack(&self.mats[a]);
                    }
                }
                span.column_basis()
            })
            .collect()
    }

    /// Dimension vector of `top M = M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_basis()
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_same(other)?;
        let f = self.algebra.field();
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let q = self.algebra.quiver();
        let mats = (0..q.arrows().len())
            .map(|a| {
                let (s, t) = q.arrow_ends(a);
                let mut m = Matrix::zeros(f, dims[t], dims[s]);
                m.set_block(0, 0, &self.mats[a]);
                m.set_block(self.dims[t], self.dims[s], &other.mats[a]);
                m
            })
            .collect();
        Ok(Representation::new_unchecked(self.algebra.clone(), dims, mats))
    }

    pub fn direct_sum_all<'a>(
        algebra: &Arc<Algebra>,
        parts: impl IntoIterator<Item = &'a Representation>,
    ) -> Result<Representation> {
        let mut acc = Representation::zero(algebra.clone());
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// Subrepresentation spanned by the columns of `basis[v]` at each vertex;
    /// the spans must be closed under the arrows.
    pub fn subrepresentation(&self, basis: &[Matrix]) -> Representation {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let mats = (0..q.arrows().len())
            .map(|a| {
                let (s, t) = q.arrow_ends(a);
                let image = self.mats[a].mul(&basis[s]);
                basis[t].solve(&image).expect("subspace not closed under arrow")
            })
            .collect();
        Representation::new_unchecked(self.algebra.clone(), dims, mats)
    }

    /// Quotient by the subrepresentation spanned by `basis[v]`, together with
    /// the projection `M -> M/N`.
    pub fn quotient(&self, basis: &[Matrix]) -> (Representation, Morphism) {
        let f = self.algebra.field();
        let q = self.algebra.quiver();
        let n = q.num_vertices();
        let mut proj = Vec::with_capacity(n);
        let mut dims = Vec::with_capacity(n);
        for v in 0..n {
            let comp = basis[v].complement_columns();
            let d = self.dims[v];
            let mut full = basis[v].clone();
            for &c in &comp {
                let mut e = Matrix::zeros(f, d, 1);
                e.set(c, 0, 1);
                full = full.hstack(&e);
            }
            let inv = full.inverse().expect("complement spans");
            // rows of inv past the subspace give quotient coordinates
            let k = basis[v].cols();
            proj.push(inv.block(k, 0, comp.len(), d));
            dims.push(comp.len());
        }
        let mats = (0..q.arrows().len())
            .map(|a| {
                let (s, t) = q.arrow_ends(a);
                // lift quotient basis at s: standard vectors not in the subspace
                let comp = basis[s].complement_columns();
                let mut lift = Matrix::zeros(f, self.dims[s], comp.len());
                for (j, &c) in comp.iter().enumerate() {
                    lift.set(c, j, 1);
                }
                proj[t].mul(&self.mats[a]).mul(&lift)
            })
            .collect();
        (
            Representation::new_unchecked(self.algebra.clone(), dims, mats),
            proj,
        )
    }

    /// The dual representation over the opposite algebra: transpose every matrix.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Dual of a representation over `op`, landing over `target` (whose
    /// opposite must be `op`'s algebra).
    pub fn dual_onto(&self, target: &Arc<Algebra>) -> Result<Representation> {
        if target.opposite().fingerprint() != self.algebra.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation {
            algebra: target.clone(),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(|m| m.transpose()).collect(),
        })
    }

    /// Whether `phi` is a module map `self -> target`.
    pub fn is_morphism_to(&self, target: &Representation, phi: &Morphism) -> bool {
        let q = self.algebra.quiver();
        (0..q.arrows().len()).all(|a| {
            let (s, t) = q.arrow_ends(a);
            phi[t].mul(&self.mats[a]) == target.mats[a].mul(&phi[s])
        })
    }

    /// The action of the whole algebra: whether some nonzero element annihilates
    /// `M`. Faithful iff the basis elements act linearly independently.
    pub fn is_faithful(&self) -> bool {
        let alg = &self.algebra;
        let f = alg.field();
        let n = alg.num_vertices();
        // offsets of Hom(M_s, M_t) blocks in a flattened vector
        let mut offset = vec![vec![0usize; n]; n];
        let mut total = 0;
        for s in 0..n {
            for t in 0..n {
                offset[s][t] = total;
                total += self.dims[s] * self.dims[t];
            }
        }
        let mut rows = Vec::with_capacity(alg.dim() * total);
        for b in 0..alg.dim() {
            let bp = &alg.basis()[b];
            let m = self.basis_matrix(b);
            let mut row = vec![0u32; total];
            let o = offset[bp.source][bp.target];
            row[o..o + m.data().len()].copy_from_slice(m.data());
            rows.extend(row);
        }
        Matrix::from_rows(f, alg.dim(), total, rows).rank() == alg.dim()
    }
}

pub fn identity_morphism(m: &Representation) -> Morphism {
    let f = m.algebra().field();
    m.dims().iter().map(|&d| Matrix::identity(f, d)).collect()
}

pub fn compose(outer: &Morphism, inner: &Morphism) -> Morphism {
    outer.iter().zip(inner).map(|(a, b)| a.mul(b)).collect()
}
