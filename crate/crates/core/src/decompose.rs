//! Krull-Schmidt decomposition by Fitting splitting, with locality of the
//! endomorphism ring certified through the trace form.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hom::{hom, is_isomorphism, is_zero_morphism};
use crate::matrix::Matrix;
use crate::rep::{compose, identity_morphism, Morphism, Representation};

const RANDOM_TRIES: usize = 16;
const SEED: u64 = 0x5eed_7a75;
/// Eigenvalue search scans the whole field only below this size.
const EIGEN_SCAN_LIMIT: u32 = 1 << 20;

fn power(phi: &Morphism, mut e: usize) -> Morphism {
    let mut base = phi.clone();
    let mut acc: Option<Morphism> = None;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => compose(&a, &base),
            });
        }
        e >>= 1;
        if e > 0 {
            base = compose(&base, &base);
        }
    }
    acc.unwrap_or_else(|| {
        phi.iter()
            .map(|m| Matrix::identity(m.field(), m.rows()))
            .collect()
    })
}

pub fn is_nilpotent(phi: &Morphism) -> bool {
    let n: usize = phi.iter().map(|m| m.rows()).sum();
    is_zero_morphism(&power(phi, n.max(1)))
}

fn trace(phi: &Morphism) -> u32 {
    phi.iter().fold(0, |acc, m| {
        if m.rows() == 0 {
            acc
        } else {
            m.field().add(acc, m.trace())
        }
    })
}

/// `dim End(M) / rad End(M)` via the rank of the trace form
/// `(x, y) -> tr_M(x y)`; valid when `p` exceeds `dim End(M)` and `dim M`.
pub fn semisimple_quotient_dim(basis: &[Morphism]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let f = basis[0].iter().find(|m| m.rows() > 0).map(|m| m.field());
    let Some(f) = f else { return 0 };
    let d = basis.len();
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            g.set(i, j, trace(&compose(&basis[i], &basis[j])));
        }
    }
    g.rank()
}

/// Characteristic polynomial coefficients (constant term first) by
/// Faddeev-LeVerrier; requires `p > n`.
fn charpoly(a: &Matrix) -> Vec<u32> {
    let f = a.field();
    let n = a.rows();
    let mut c = vec![0u32; n + 1];
    c[n] = 1;
    let mut mk = Matrix::zeros(f, n, n);
    for k in 1..=n {
        let mut next = a.mul(&mk);
        next.add_scaled(c[n - k + 1], &Matrix::identity(f, n));
        let t = a.mul(&next).trace();
        c[n - k] = f.neg(f.mul(t, f.inv(k as u32 % f.p())));
        mk = next;
    }
    c
}

fn eval(poly: &[u32], x: u32, f: crate::field::Fp) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| f.mul_add(c, acc, x))
}

/// Eigenvalues in GF(p) of the vertex components of `phi`.
fn eigenvalues(phi: &Morphism) -> Vec<u32> {
    let mut out = Vec::new();
    for m in phi.iter().filter(|m| m.rows() > 0) {
        let f = m.field();
        if f.p() > EIGEN_SCAN_LIMIT {
            break;
        }
        let cp = charpoly(m);
        for lambda in 0..f.p() {
            if eval(&cp, lambda, f) == 0 && !out.contains(&lambda) {
                out.push(lambda);
            }
        }
        if out.len() > 1 {
            break;
        }
    }
    out
}

fn shift(phi: &Morphism, lambda: u32) -> Morphism {
    phi.iter()
        .map(|m| {
            let mut out = m.clone();
            out.add_scaled(m.field().neg(lambda), &Matrix::identity(m.field(), m.rows()));
            out
        })
        .collect()
}

/// Splits `M = ker psi + im psi` for `psi = phi^N` if `phi` is neither
/// nilpotent nor invertible.
fn fitting_split(m: &Representation, phi: &Morphism) -> Option<(Representation, Representation)> {
    let psi = power(phi, m.total_dim().max(1));
    if is_zero_morphism(&psi) || is_isomorphism(&psi) {
        return None;
    }
    let f = m.algebra().field();
    let ker: Vec<Matrix> = psi
        .iter()
        .map(|x| {
            if x.cols() == 0 {
                Matrix::zeros(f, 0, 0)
            } else {
                x.nullspace()
            }
        })
        .collect();
    let im: Vec<Matrix> = psi
        .iter()
        .map(|x| {
            if x.cols() == 0 {
                Matrix::zeros(f, x.rows(), 0)
            } else {
                x.column_basis()
            }
        })
        .collect();
    Some((m.subrepresentation(&ker), m.subrepresentation(&im)))
}

fn random_combination(basis: &[Morphism], rng: &mut ChaCha8Rng) -> Morphism {
    let f = basis[0][0].field();
    let mut acc: Morphism = basis[0].iter().map(|m| Matrix::zeros(f, m.rows(), m.cols())).collect();
    for b in basis {
        let c = rng.gen_range(0..f.p());
        for (a, x) in acc.iter_mut().zip(b) {
            a.add_scaled(c, x);
        }
    }
    acc
}

fn check_field(m: &Representation, end_dim: usize) -> Result<()> {
    let p = m.algebra().p() as usize;
    let bound = end_dim.max(m.total_dim());
    if p <= bound {
        return Err(Error::FieldTooSmall {
            p: m.algebra().p(),
            dim: bound,
        });
    }
    Ok(())
}

fn split_once(m: &Representation) -> Result<Option<(Representation, Representation)>> {
    let end = hom(m, m)?.basis;
    check_field(m, end.len())?;
    if end.len() <= 1 {
        return Ok(None);
    }
    for phi in &end {
        if let Some(s) = fitting_split(m, phi) {
            return Ok(Some(s));
        }
    }
    let local = semisimple_quotient_dim(&end) <= 1;
    if local {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut candidates: Vec<Morphism> = end.clone();
    for _ in 0..RANDOM_TRIES {
        candidates.push(random_combination(&end, &mut rng));
    }
    for phi in &candidates {
        for lambda in eigenvalues(phi) {
            if let Some(s) = fitting_split(m, &shift(phi, lambda)) {
                return Ok(Some(s));
            }
        }
    }
    // No splitting element: End/rad is a proper field extension of GF(p)
    // when it is commutative; anything else is a failure.
    let commutative = end.iter().all(|x| {
        end.iter().all(|y| {
            let c: Morphism = compose(x, y)
                .iter()
                .zip(compose(y, x))
                .map(|(a, b)| a.sub(&b))
                .collect();
            is_nilpotent(&c)
        })
    });
    if commutative {
        Ok(None)
    } else {
        Err(Error::DecompositionFailed)
    }
}

/// Indecomposable summands of `M` in a deterministic order (the zero module
/// has none).
pub fn indecomposable_summands(m: &Representation) -> Result<Vec<Representation>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x)? {
            None => out.push(x),
            Some((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
        }
    }
    Ok(out)
}

/// Isomorphism test for indecomposables: some composite `Y -> X -> Y` is
/// not nilpotent.
pub fn isomorphic_indecomposables(x: &Representation, y: &Representation) -> Result<bool> {
    x.check_same(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x.is_zero() {
        return Ok(true);
    }
    let xy = hom(x, y)?.basis;
    if xy.is_empty() {
        return Ok(false);
    }
    let yx = hom(y, x)?.basis;
    for phi in &xy {
        if is_isomorphism(phi) {
            return Ok(true);
        }
        for psi in &yx {
            if !is_nilpotent(&compose(psi, phi)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Decomposition into indecomposables with multiplicities.
pub fn decompose(m: &Representation) -> Result<Vec<(Representation, usize)>> {
    let mut groups: Vec<(Representation, usize)> = Vec::new();
    for s in indecomposable_summands(m)? {
        let mut found = false;
        for (rep, mult) in groups.iter_mut() {
            if isomorphic_indecomposables(rep, &s)? {
                *mult += 1;
                found = true;
                break;
            }
        }
        if !found {
            groups.push((s, 1));
        }
    }
    Ok(groups)
}

/// Basic version of `M`: one copy of each indecomposable summand.
pub fn basic_summands(m: &Representation) -> Result<Vec<Representation>> {
    Ok(decompose(m)?.into_iter().map(|(r, _)| r).collect())
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    m.check_same(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let a = decompose(m)?;
    let mut b = decompose(n)?;
    for (x, mx) in a {
        let pos = b.iter().position(|(y, my)| {
            *my == mx && isomorphic_indecomposables(&x, y).unwrap_or(false)
        });
        match pos {
            Some(i) => {
                b.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(b.is_empty())
}

/// Whether `End(M)` is local: `End/rad` one-dimensional.
pub fn has_local_endomorphisms(m: &Representation) -> Result<bool> {
    let end = hom(m, m)?.basis;
    check_field(m, end.len())?;
    Ok(!m.is_zero() && semisimple_quotient_dim(&end) == 1)
}

/// The identity of `M` as an endomorphism; handy in tests.
pub fn identity(m: &Representation) -> Morphism {
    identity_morphism(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::modules::{projective, regular, simple};
    use crate::quiver::Quiver;
    use std::sync::Arc;

    fn converging(p: u32) -> Arc<Algebra> {
        let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)]).unwrap();
        Arc::new(Algebra::build(q, vec![], p).unwrap())
    }

    #[test]
    fn projective_squared() {
        let a = converging(32003);
        let p4 = projective(&a, 1);
        let d = decompose(&p4.direct_sum(&p4).unwrap()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(isomorphic_indecomposables(&d[0].0, &p4).unwrap());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = converging(32003);
        let d = decompose(&regular(&a)).unwrap();
        assert_eq!(d.len(), 3);
        for v in 0..3 {
            let p = projective(&a, v);
            assert!(d.iter().any(|(x, m)| *m == 1 && isomorphic_indecomposables(x, &p).unwrap()));
        }
    }

    #[test]
    fn thin_injective_is_indecomposable() {
        let a = converging(32003);
        let m = Representation::from_entries(a, vec![1, 1, 1], &[vec![1], vec![1]]).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 1);
        assert!(has_local_endomorphisms(&m).unwrap());
    }

    #[test]
    fn field_too_small() {
        let a = converging(2);
        let s = simple(&a, 0);
        let m = s.direct_sum(&s).unwrap().direct_sum(&s).unwrap();
        assert!(matches!(decompose(&m), Err(Error::FieldTooSmall { p: 2, .. })));
    }

    #[test]
    fn skewed_basis_still_splits() {
        // P(4) + S(3) with the socle of P(4) glued diagonally into the basis.
        let a = converging(101);
        let m = Representation::from_entries(a.clone(), vec![2, 1, 0], &[vec![1, 1], vec![]]).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().any(|(x, _)| isomorphic_indecomposables(x, &projective(&a, 1)).unwrap()));
        assert!(d.iter().any(|(x, _)| isomorphic_indecomposables(x, &simple(&a, 0)).unwrap()));
    }

    #[test]
    fn kronecker_irreducible_quadratic_is_indecomposable_over_gfp() {
        // b = [[0,1],[1,1]] has characteristic polynomial x^2 - x - 1, which is
        // irreducible modulo 32003.
        let q = Quiver::from_arrows(&[1, 2], &[("a", 1, 2), ("b", 1, 2)]).unwrap();
        let k = Arc::new(Algebra::build(q, vec![], 32003).unwrap());
        let m = Representation::from_entries(
            k,
            vec![2, 2],
            &[vec![1, 0, 0, 1], vec![0, 1, 1, 1]],
        )
        .unwrap();
        assert_eq!(indecomposable_summands(&m).unwrap().len(), 1);
        assert!(!has_local_endomorphisms(&m).unwrap());
    }

    #[test]
    fn isomorphism_respects_summand_order() {
        let a = converging(32003);
        let x = projective(&a, 1).direct_sum(&simple(&a, 2)).unwrap();
        let y = simple(&a, 2).direct_sum(&projective(&a, 1)).unwrap();
        assert!(is_isomorphic(&x, &y).unwrap());
        assert!(!is_isomorphic(&simple(&a, 0), &simple(&a, 1)).unwrap());
    }
}
