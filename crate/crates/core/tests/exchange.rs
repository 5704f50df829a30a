mod common;

use std::sync::Arc;

use common::*;
use tautilt::brute::{brute_force_stt, indecomposables};
use tautilt::dynkin::{converging_a3, dynkin_quiver, hereditary_a2, rad_square_zero, reduced_algebra};
use tautilt::exchange::{exchange_quiver, exchange_quiver_with, ExchangeOptions, DEFAULT_BUDGET};
use tautilt::pair::PairKey;
use tautilt::{Algebra, DEFAULT_PRIME};

fn keys(eq: &tautilt::exchange::ExchangeQuiver) -> Vec<PairKey> {
    eq.nodes.keys().cloned().collect()
}

#[test]
fn drawn_quiver_is_reproduced() {
    let a = Arc::new(converging_a3(DEFAULT_PRIME).unwrap());
    let eq = exchange_quiver(&a, DEFAULT_BUDGET).unwrap();
    matches_expected_quiver(&eq).unwrap();
    check_properties(&eq).unwrap();
}

#[test]
fn brute_force_agrees() {
    let cases: Vec<(Arc<Algebra>, Vec<usize>)> = vec![
        (Arc::new(converging_a3(DEFAULT_PRIME).unwrap()), vec![1, 1, 1]),
        (Arc::new(hereditary_a2(DEFAULT_PRIME).unwrap()), vec![1, 1]),
        (Arc::new(Algebra::semisimple(3, DEFAULT_PRIME).unwrap()), vec![1, 1, 1]),
        (alg(&[1, 2, 3], &[("a", 1, 2), ("b", 2, 3)], DEFAULT_PRIME), vec![1, 1, 1]),
        (
            Arc::new(rad_square_zero(dynkin_quiver("A3".parse().unwrap()).unwrap(), DEFAULT_PRIME).unwrap()),
            vec![1, 1, 1],
        ),
        (
            Arc::new(rad_square_zero(dynkin_quiver("D4".parse().unwrap()).unwrap(), DEFAULT_PRIME).unwrap()),
            vec![1, 1, 1, 1],
        ),
    ];
    for (a, cap) in cases {
        let eq = exchange_quiver(&a, DEFAULT_BUDGET).unwrap();
        let brute: Vec<PairKey> = brute_force_stt(&a, &cap).unwrap().iter().map(|p| p.key()).collect();
        assert_eq!(brute, keys(&eq));
        check_properties(&eq).unwrap();
    }
}

#[test]
fn auslander_correspondence_sanity() {
    // Indecomposables of the radical-square-zero algebra match the vertices of
    // its Auslander algebra.
    for (s, n) in [("A1", 1), ("A2", 3), ("A3", 5), ("D4", 8)] {
        let spec = s.parse().unwrap();
        let lam = Arc::new(rad_square_zero(dynkin_quiver(spec).unwrap(), DEFAULT_PRIME).unwrap());
        let cap = vec![2; lam.num_vertices()];
        assert_eq!(indecomposables(&lam, &cap).unwrap().len(), n, "{s}");
    }
}

#[test]
fn thread_and_field_invariance() {
    for s in ["D4", "E6"] {
        let base = Arc::new(reduced_algebra(s.parse().unwrap(), DEFAULT_PRIME).unwrap());
        let one = exchange_quiver_with(&base, &ExchangeOptions { budget: DEFAULT_BUDGET, threads: Some(1) }).unwrap();
        let four = exchange_quiver_with(&base, &ExchangeOptions { budget: DEFAULT_BUDGET, threads: Some(4) }).unwrap();
        assert_eq!(keys(&one), keys(&four));
        assert_eq!(one.edges, four.edges);
        let small = Arc::new(reduced_algebra(s.parse().unwrap(), 101).unwrap());
        let other = exchange_quiver(&small, DEFAULT_BUDGET).unwrap();
        assert_eq!(keys(&one), keys(&other));
        assert_eq!(one.edges, other.edges);
    }
}

#[test]
fn reduced_algebras_satisfy_properties() {
    for s in ["A3", "D4"] {
        let a = Arc::new(reduced_algebra(s.parse().unwrap(), DEFAULT_PRIME).unwrap());
        check_properties(&exchange_quiver(&a, DEFAULT_BUDGET).unwrap()).unwrap();
    }
}
