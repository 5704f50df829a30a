mod common;

use std::sync::Arc;

use common::{alg, kronecker};
use proptest::prelude::*;
use tautilt::decompose::{decompose, is_isomorphic};
use tautilt::hom::hom_dim;
use tautilt::modules::projective;
use tautilt::presentation::{ext1, g_vector};
use tautilt::quiver::{Quiver, Relation};
use tautilt::{Algebra, Representation};

const P: u32 = 101;

fn algebras() -> Vec<Arc<Algebra>> {
    let q = Quiver::from_arrows(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3)]).unwrap();
    let zero_path = Algebra::build(q, vec![Relation::monomial(&["b", "a"])], P).unwrap();
    vec![
        kronecker(P),
        alg(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)], P),
        alg(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3)], P),
        Arc::new(zero_path),
    ]
}

/// A module over one of the test algebras; `None` when the entries break a
/// relation.
fn build(which: usize, dims: &[usize], entries: &[i64]) -> Option<Representation> {
    let a = algebras().swap_remove(which);
    let q = a.quiver();
    let dims = dims[..a.num_vertices()].to_vec();
    let mut off = 0;
    let mut per_arrow = Vec::new();
    for k in 0..q.arrows().len() {
        let (s, t) = q.arrow_ends(k);
        let n = dims[s] * dims[t];
        per_arrow.push(entries[off..off + n].to_vec());
        off += n;
    }
    Representation::from_entries(a, dims, &per_arrow).ok()
}

fn module() -> impl Strategy<Value = Representation> {
    (0..4usize, prop::collection::vec(0..=2usize, 3), prop::collection::vec(0..P as i64, 16))
        .prop_filter_map("relations", |(w, d, e)| build(w, &d, &e))
}

fn module_pair() -> impl Strategy<Value = (Representation, Representation)> {
    let half = || (prop::collection::vec(0..=2usize, 3), prop::collection::vec(0..P as i64, 16));
    (0..4usize, half(), half()).prop_filter_map("relations", |(w, (d1, e1), (d2, e2))| {
        let m = build(w, &d1, &e1)?;
        let n = build(w, &d2, &e2)?.rebind(m.algebra()).ok()?;
        Some((m, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hom_from_projective_reads_dimension(m in module()) {
        let a = m.algebra().clone();
        for i in 0..a.num_vertices() {
            let pi = projective(&a, i);
            prop_assert_eq!(hom_dim(&pi, &m).unwrap(), m.dims()[i]);
            prop_assert_eq!(ext1(&pi, &m).unwrap(), 0);
        }
    }

    #[test]
    fn g_vector_is_additive((m, n) in module_pair()) {
        let sum = m.direct_sum(&n).unwrap();
        let expected: Vec<i64> = g_vector(&m).iter().zip(g_vector(&n)).map(|(x, y)| x + y).collect();
        prop_assert_eq!(g_vector(&sum), expected);
    }

    #[test]
    fn decomposition_reassembles(m in module()) {
        let parts = decompose(&m).unwrap();
        let mut dims = vec![0; m.dims().len()];
        let mut pieces = Vec::new();
        for (s, k) in &parts {
            for (d, x) in dims.iter_mut().zip(s.dims()) {
                *d += k * x;
            }
            for _ in 0..*k {
                pieces.push(s.clone());
            }
        }
        prop_assert_eq!(&dims[..], m.dims());
        let again = Representation::direct_sum_all(m.algebra(), pieces.iter()).unwrap();
        prop_assert!(is_isomorphic(&again, &m).unwrap());
    }
}
