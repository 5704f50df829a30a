use std::sync::Arc;

use tautilt::counting::{
    closed_formula, count_product, count_tilting_direct, count_tilting_direct_spec,
    count_tilting_via_bijection, count_tilting_via_product, verify_example_lists, Route,
};
use tautilt::dynkin::{auslander_presentation, converging_a3, hereditary_a2, DynkinSpec};
use tautilt::exchange::ExchangeOptions;
use tautilt::modules::{projective_at, regular, simple_at};
use tautilt::{Algebra, Representation, DEFAULT_PRIME};

fn spec(s: &str) -> DynkinSpec {
    s.parse().unwrap()
}

#[test]
fn routes_agree_for_every_series() {
    let opts = ExchangeOptions::default();
    for s in ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6", "E7", "E8"] {
        let formula = closed_formula(spec(s)).unwrap();
        let product = count_tilting_via_product(spec(s), DEFAULT_PRIME, &opts).unwrap();
        assert_eq!(product.count, formula, "{s}");
        assert_eq!(product.route, Route::Product);
    }
    for s in ["A3", "D4", "E6", "E8"] {
        let b = count_tilting_via_bijection(spec(s), DEFAULT_PRIME, &opts).unwrap();
        assert_eq!(b.count, closed_formula(spec(s)).unwrap(), "{s}");
        assert_eq!(b.witness.unwrap().len() as u128, b.count);
    }
}

#[test]
fn known_counts() {
    let opts = ExchangeOptions::default();
    let expected = [("D7", 224u128), ("D8", 448), ("E6", 112), ("E7", 224), ("E8", 448)];
    for (s, n) in expected {
        assert_eq!(count_tilting_via_product(spec(s), DEFAULT_PRIME, &opts).unwrap().count, n);
    }
}

fn sum(a: &Arc<Algebra>, parts: &[Representation]) -> Representation {
    Representation::direct_sum_all(a, parts.iter()).unwrap()
}

#[test]
fn direct_route_on_a3_finds_the_four_listed_modules() {
    let gamma = Arc::new(auslander_presentation(spec("A3"), DEFAULT_PRIME).unwrap());
    let report = count_tilting_direct(&gamma, &ExchangeOptions::default()).unwrap();
    assert_eq!(report.count, 4);
    let p = |i| projective_at(&gamma, i).unwrap();
    let s = |i| simple_at(&gamma, i).unwrap();
    let listed = [
        regular(&gamma),
        sum(&gamma, &[p(5), p(4), s(4), p(2), p(1)]),
        sum(&gamma, &[p(5), p(4), p(3), p(2), s(2)]),
        sum(&gamma, &[p(5), p(4), s(4), p(2), s(2)]),
    ];
    let witnesses = report.witness.unwrap();
    for t in &listed {
        assert!(tautilt::presentation::is_tilting(t).unwrap());
        let found = witnesses
            .iter()
            .filter(|w| tautilt::decompose::is_isomorphic(&w.module(), t).unwrap())
            .count();
        assert_eq!(found, 1);
    }
}

#[test]
fn direct_route_small_algebras() {
    let opts = ExchangeOptions::default();
    let a2 = Arc::new(hereditary_a2(DEFAULT_PRIME).unwrap());
    assert_eq!(count_tilting_direct(&a2, &opts).unwrap().count, 2);
    let ss = Arc::new(Algebra::semisimple(3, DEFAULT_PRIME).unwrap());
    assert_eq!(count_tilting_direct(&ss, &opts).unwrap().count, 1);
    assert_eq!(count_tilting_direct_spec(spec("A2"), DEFAULT_PRIME, &opts).unwrap().count, 2);
}

#[test]
fn product_of_two_blocks() {
    let b = converging_a3(DEFAULT_PRIME).unwrap();
    let both = b.direct_sum(&b).unwrap();
    let opts = ExchangeOptions::default();
    assert_eq!(count_product(&both, &opts).unwrap(), 196);
}

#[test]
fn listed_examples() {
    let opts = ExchangeOptions::default();
    for s in ["D4", "E6"] {
        let check = verify_example_lists(spec(s), DEFAULT_PRIME, &opts).unwrap();
        assert!(check.passed(), "{check:?}");
    }
    assert!(verify_example_lists(spec("D5"), DEFAULT_PRIME, &opts).is_err());
}
