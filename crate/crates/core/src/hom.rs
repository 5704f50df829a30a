//! Hom spaces between representations as solution spaces of the intertwiner
//! equations `phi_t M_a = N_a phi_s`.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::rep::{Morphism, Representation};

#[derive(Debug, Clone)]
pub struct HomBasis {
    pub basis: Vec<Morphism>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Column offsets of each vertex block in the flattened unknown vector.
fn layout(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims().len());
    let mut total = 0;
    for v in 0..m.dims().len() {
        off.push(total);
        total += m.dim_at(v) * n.dim_at(v);
    }
    (off, total)
}

/// The linear system whose kernel is `Hom(M, N)`.
fn intertwiner_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let alg = m.algebra();
    let f = alg.field();
    let q = alg.quiver();
    let (off, total) = layout(m, n);
    let mut rows: Vec<u32> = Vec::new();
    let mut nrows = 0;
    for a in 0..q.arrows().len() {
        let (s, t) = q.arrow_ends(a);
        let (ma, na) = (m.arrow_matrix(a), n.arrow_matrix(a));
        let (dms, dnt, dns, dmt) = (m.dim_at(s), n.dim_at(t), n.dim_at(s), m.dim_at(t));
        for r in 0..dnt {
            for c in 0..dms {
                let mut row = vec![0u32; total];
                // (phi_t M_a)[r][c] = sum_k phi_t[r][k] M_a[k][c]
                for k in 0..dmt {
                    let v = ma.get(k, c);
                    if v != 0 {
                        let idx = off[t] + r * dmt + k;
                        row[idx] = f.add(row[idx], v);
                    }
                }
                // - (N_a phi_s)[r][c] = - sum_k N_a[r][k] phi_s[k][c]
                for k in 0..dns {
                    let v = na.get(r, k);
                    if v != 0 {
                        let idx = off[s] + k * dms + c;
                        row[idx] = f.sub(row[idx], v);
                    }
                }
                rows.extend(row);
                nrows += 1;
            }
        }
    }
    (Matrix::from_rows(f, nrows, total, rows), off)
}

fn unpack(m: &Representation, n: &Representation, off: &[usize], v: &[u32]) -> Morphism {
    let f = m.algebra().field();
    (0..m.dims().len())
        .map(|w| {
            let (r, c) = (n.dim_at(w), m.dim_at(w));
            Matrix::from_rows(f, r, c, v[off[w]..off[w] + r * c].to_vec())
        })
        .collect()
}

/// Basis of `Hom(M, N)`.
pub fn hom(m: &Representation, n: &Representation) -> Result<HomBasis> {
    m.check_same(n)?;
    let (off, total) = layout(m, n);
    if total == 0 {
        return Ok(HomBasis { basis: vec![] });
    }
    let (sys, _) = intertwiner_system(m, n);
    let ns = if sys.rows() == 0 {
        Matrix::identity(m.algebra().field(), total)
    } else {
        sys.nullspace()
    };
    let basis = (0..ns.cols())
        .map(|j| unpack(m, n, &off, &ns.column(j)))
        .collect();
    Ok(HomBasis { basis })
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    m.check_same(n)?;
    let (_, total) = layout(m, n);
    if total == 0 {
        return Ok(0);
    }
    let (sys, _) = intertwiner_system(m, n);
    Ok(total - sys.rank())
}

/// Flattens a morphism into the coordinate vector used by the intertwiner system.
pub fn flatten(phi: &Morphism) -> Vec<u32> {
    phi.iter().flat_map(|m| m.data().iter().copied()).collect()
}

pub fn is_zero_morphism(phi: &Morphism) -> bool {
    phi.iter().all(|m| m.is_zero())
}

/// Whether every vertex component is invertible.
pub fn is_isomorphism(phi: &Morphism) -> bool {
    phi.iter().all(|m| m.is_square() && m.rank() == m.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::modules::{injective, projective, simple};
    use crate::quiver::Quiver;
    use std::sync::Arc;

    fn converging() -> Arc<Algebra> {
        let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)]).unwrap();
        Arc::new(Algebra::build(q, vec![], 32003).unwrap())
    }

    #[test]
    fn hom_simple_into_injective() {
        let a = converging();
        let i3 = injective(&a, 0);
        assert_eq!(i3.dims(), &[1, 1, 1]);
        let s3 = simple(&a, 0);
        assert_eq!(hom_dim(&s3, &i3).unwrap(), 1);
        let hb = hom(&s3, &i3).unwrap();
        assert!(s3.is_morphism_to(&i3, &hb.basis[0]));
    }

    #[test]
    fn yoneda_on_projectives() {
        let a = converging();
        let i3 = injective(&a, 0);
        for v in 0..3 {
            assert_eq!(hom_dim(&projective(&a, v), &i3).unwrap(), i3.dim_at(v));
        }
    }

    #[test]
    fn zero_module_homs() {
        let a = converging();
        let z = Representation::zero(a.clone());
        let p = projective(&a, 1);
        assert_eq!(hom_dim(&z, &p).unwrap(), 0);
        assert_eq!(hom_dim(&p, &z).unwrap(), 0);
    }
}
